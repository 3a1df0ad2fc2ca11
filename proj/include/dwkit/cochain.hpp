#pragma once

#include <cstdlib>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dwkit/error.hpp"
#include "dwkit/group.hpp"
#include "dwkit/phase.hpp"

namespace dwkit {

inline size_t table_memory_budget() {
  // Dense-table cap; DWKIT_MEM_BUDGET (bytes) overrides the 16 MiB default.
  if (const char* env = std::getenv("DWKIT_MEM_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return size_t(v);
  }
  return size_t(16) * 1024 * 1024;
}

namespace detail {

inline size_t checked_table_size(int order, int degree, const char* what) {
  require(degree >= 0 && degree <= 4, errc::invalid_input,
          std::string(what) + " degree out of supported range 0..4");
  size_t size = 1;
  for (int i = 0; i < degree; ++i) {
    size *= size_t(order);
    require(size * sizeof(PhaseQ) <= table_memory_budget(), errc::invalid_input,
            std::string(what) + " table exceeds the memory budget");
  }
  return size;
}

}  // namespace detail

// A normalized bar-complex cochain G^n -> Q/Z stored as a dense table.
// Group cochains stand in for singular cochains on the classifying space BG
// throughout; the identification is fixed once and for all.
class Cochain {
public:
  Cochain(FiniteGroup group, int degree)
      : group_(std::move(group)),
        degree_(degree),
        table_(detail::checked_table_size(group_.order, degree, "cochain")) {}

  const FiniteGroup& group() const { return group_; }
  int degree() const { return degree_; }
  const std::vector<PhaseQ>& table() const { return table_; }

  size_t index(std::span<const int> args) const {
    size_t idx = 0;
    for (int a : args) idx = idx * size_t(group_.order) + size_t(a);
    return idx;
  }

  PhaseQ at(std::span<const int> args) const { return table_[index(args)]; }
  void set(std::span<const int> args, PhaseQ v) { table_[index(args)] = v; }

  PhaseQ value() const { return table_[0]; }  // degree 0

private:
  FiniteGroup group_;
  int degree_;
  std::vector<PhaseQ> table_;
};

inline Cochain zero_cochain(FiniteGroup group, int degree) {
  return Cochain(std::move(group), degree);
}

// Advances a mixed-radix tuple over [0, base)^n; returns false after the last.
inline bool next_tuple(std::vector<int>& t, int base) {
  for (int i = int(t.size()) - 1; i >= 0; --i) {
    if (++t[size_t(i)] < base) return true;
    t[size_t(i)] = 0;
  }
  return false;
}

// The simplicial coboundary with trivial coefficients, evaluated at one
// (n+1)-tuple: (dc)(g_1..g_{n+1}) = c(g_2..g_{n+1})
//   + sum_i (-1)^i c(g_1,..,g_i g_{i+1},..,g_{n+1}) + (-1)^{n+1} c(g_1..g_n).
inline PhaseQ coboundary_at(const Cochain& c, std::span<const int> args) {
  int n = c.degree();
  require(int(args.size()) == n + 1, errc::invalid_input, "coboundary argument arity mismatch");
  std::vector<int> inner(args.begin() + 1, args.end());
  PhaseQ acc = c.at(inner);  // drop-first term
  for (int i = 1; i <= n; ++i) {
    std::vector<int> merged;
    merged.reserve(size_t(n));
    for (int t = 0; t < i - 1; ++t) merged.push_back(args[size_t(t)]);
    merged.push_back(c.group().mul(args[size_t(i - 1)], args[size_t(i)]));
    for (int t = i + 1; t <= n; ++t) merged.push_back(args[size_t(t)]);
    PhaseQ term = c.at(merged);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  std::vector<int> front(args.begin(), args.end() - 1);
  PhaseQ last = c.at(front);
  acc = ((n + 1) % 2 == 0) ? acc + last : acc - last;
  return acc;
}

inline Cochain coboundary(const Cochain& c) {
  Cochain out(c.group(), c.degree() + 1);
  std::vector<int> args(size_t(c.degree()) + 1, 0);
  do {
    out.set(args, coboundary_at(c, args));
  } while (next_tuple(args, c.group().order));
  return out;
}

struct CocycleCheck {
  bool ok = true;
  std::vector<int> witness;  // violating tuple when !ok
};

// Streaming check; never materializes the degree-(n+1) table.
inline CocycleCheck check_cocycle(const Cochain& c) {
  std::vector<int> args(size_t(c.degree()) + 1, 0);
  do {
    if (!is_zero(coboundary_at(c, args))) return CocycleCheck{false, args};
  } while (next_tuple(args, c.group().order));
  return CocycleCheck{};
}

inline bool is_cocycle(const Cochain& c) { return check_cocycle(c).ok; }

inline bool is_normalized(const Cochain& c) {
  if (c.degree() == 0) return true;
  std::vector<int> args(size_t(c.degree()), 0);
  do {
    for (int a : args)
      if (a == c.group().identity && !is_zero(c.at(args))) return false;
  } while (next_tuple(args, c.group().order));
  return true;
}

inline Cochain operator+(const Cochain& a, const Cochain& b) {
  require(a.group() == b.group() && a.degree() == b.degree(), errc::invalid_input,
          "adding cochains of different shape");
  Cochain out(a.group(), a.degree());
  std::vector<int> args(size_t(a.degree()), 0);
  if (a.degree() == 0) {
    out.set({}, a.value() + b.value());
    return out;
  }
  do {
    out.set(args, a.at(args) + b.at(args));
  } while (next_tuple(args, a.group().order));
  return out;
}

// omega_p(a,b,c) = p*a*floor((b+c)/k) / k on Z_k: the standard generator of
// the degree-3 cohomology of a cyclic group.
inline Cochain cyclic_3cocycle(int k, int p) {
  require(k >= 1, errc::invalid_input, "cyclic cocycle needs k >= 1");
  require(p >= 0 && p < k, errc::invalid_input, "cyclic cocycle parameter out of range");
  Cochain out(make_cyclic(k), 3);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        int args[3] = {a, b, c};
        out.set(args, phase(static_cast<long long>(p) * a * ((b + c) / k), k));
      }
  return out;
}

// (lambda^* c)(h_1..h_n) = c(lambda h_1, .., lambda h_n).
inline Cochain pullback(const Cochain& c, const GroupHom& hom) {
  require(hom.target == c.group(), errc::invalid_input,
          "pullback homomorphism target does not match the cochain group");
  Cochain out(hom.source, c.degree());
  if (c.degree() == 0) {
    out.set({}, c.value());
    return out;
  }
  std::vector<int> args(size_t(c.degree()), 0);
  std::vector<int> mapped(size_t(c.degree()), 0);
  do {
    for (size_t i = 0; i < args.size(); ++i) mapped[i] = hom.apply(args[i]);
    out.set(args, c.at(mapped));
  } while (next_tuple(args, hom.source.order));
  return out;
}

// Deterministic seeded normalized cochain: entries are uniform over fractions
// with denominator dividing max_denominator, identity-argument entries are 0.
inline Cochain random_cochain(const FiniteGroup& g, int degree, unsigned long long seed,
                              long long max_denominator) {
  require(max_denominator >= 1, errc::invalid_input, "max denominator must be positive");
  Cochain out(g, degree);
  std::mt19937_64 rng(seed);
  if (degree == 0) {
    out.set({}, phase(static_cast<long long>(rng() % static_cast<unsigned long long>(max_denominator)),
                      max_denominator));
    return out;
  }
  std::vector<int> args(size_t(degree), 0);
  do {
    long long num = static_cast<long long>(rng() % static_cast<unsigned long long>(max_denominator));
    bool degenerate = false;
    for (int a : args)
      if (a == g.identity) degenerate = true;
    out.set(args, degenerate ? PhaseQ{} : phase(num, max_denominator));
  } while (next_tuple(args, g.order));
  return out;
}

// lcm of the denominators appearing in the table; every phase produced by
// pairing this cochain with chains has denominator dividing this value.
inline long long denominator_lcm(const Cochain& c) {
  long long l = 1;
  for (const PhaseQ& v : c.table()) l = lcm_checked(l, v.den);
  return l;
}

}  // namespace dwkit
