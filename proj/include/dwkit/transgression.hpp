#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dwkit/cochain.hpp"
#include "dwkit/error.hpp"
#include "dwkit/group.hpp"
#include "dwkit/phase.hpp"

namespace dwkit {

// A cochain on the nerve of the conjugation groupoid G//G (objects: group
// elements; morphism (g, h): g -> h^{-1} g h). A composable string of length
// k based at g is just a tuple (g; h_1..h_k), so the table is dense over
// G^{k+1} with the object index most significant.
class GroupoidCochain {
public:
  GroupoidCochain(FiniteGroup group, int degree)
      : group_(std::move(group)),
        degree_(degree),
        table_(detail::checked_table_size(group_.order, degree + 1, "groupoid cochain")) {}

  const FiniteGroup& group() const { return group_; }
  int degree() const { return degree_; }
  const std::vector<PhaseQ>& table() const { return table_; }

  size_t index(int object, std::span<const int> hs) const {
    size_t idx = size_t(object);
    for (int h : hs) idx = idx * size_t(group_.order) + size_t(h);
    return idx;
  }

  PhaseQ at(int object, std::span<const int> hs) const { return table_[index(object, hs)]; }
  void set(int object, std::span<const int> hs, PhaseQ v) { table_[index(object, hs)] = v; }

private:
  FiniteGroup group_;
  int degree_;
  std::vector<PhaseQ> table_;
};

inline long long denominator_lcm(const GroupoidCochain& c) {
  long long l = 1;
  for (const PhaseQ& v : c.table()) l = lcm_checked(l, v.den);
  return l;
}

// Transgression to the loop groupoid, computed by the Eilenberg-Zilber
// shuffle decomposition of Delta^1 x Delta^{n-1}:
//
//   (tau theta)(g; h_1..h_{n-1}) =
//     sum_{i=0..n-1} (-1)^i theta(h_1,..,h_i, g^{(i)}, h_{i+1},..,h_{n-1})
//
// with g^{(i)} = (h_1..h_i)^{-1} g (h_1..h_i). The n = 2 case reads
// theta(g,h) - theta(h, h^{-1}gh); on commuting pairs this is the inverse of
// the classical theta(h,g)/theta(g,h) phase, a pure orientation convention
// that leaves every count unchanged.
inline GroupoidCochain transgress(const Cochain& theta) {
  int n = theta.degree();
  require(n >= 1 && n <= 4, errc::invalid_input, "transgression supported for degrees 1..4");
  require(is_normalized(theta), errc::invalid_input, "transgression input must be normalized");
  const FiniteGroup& g = theta.group();
  GroupoidCochain out(g, n - 1);
  std::vector<int> hs(size_t(n - 1), 0);
  std::vector<int> args(size_t(n), 0);
  for (int base = 0; base < g.order; ++base) {
    std::fill(hs.begin(), hs.end(), 0);
    do {
      PhaseQ acc;
      int prefix = g.identity;  // h_1 .. h_i
      for (int i = 0; i <= n - 1; ++i) {
        if (i > 0) prefix = g.mul(prefix, hs[size_t(i - 1)]);
        int conjugated = g.mul(g.mul(g.inv(prefix), base), prefix);
        for (int t = 0; t < i; ++t) args[size_t(t)] = hs[size_t(t)];
        args[size_t(i)] = conjugated;
        for (int t = i; t < n - 1; ++t) args[size_t(t + 1)] = hs[size_t(t)];
        PhaseQ term = theta.at(args);
        acc = (i % 2 == 0) ? acc + term : acc - term;
      }
      out.set(base, hs, acc);
    } while (next_tuple(hs, g.order));
  }
  return out;
}

// Simplicial coboundary on the nerve of G//G: the drop-first face moves the
// base object along h_1, the rest is the usual alternating sum.
inline PhaseQ groupoid_coboundary_at(const GroupoidCochain& c, int object,
                                     std::span<const int> hs) {
  int k = c.degree();
  require(int(hs.size()) == k + 1, errc::invalid_input, "coboundary argument arity mismatch");
  const FiniteGroup& g = c.group();
  std::vector<int> rest(hs.begin() + 1, hs.end());
  PhaseQ acc = c.at(g.conj(object, hs[0]), rest);
  for (int i = 1; i <= k; ++i) {
    std::vector<int> merged;
    merged.reserve(size_t(k));
    for (int t = 0; t < i - 1; ++t) merged.push_back(hs[size_t(t)]);
    merged.push_back(g.mul(hs[size_t(i - 1)], hs[size_t(i)]));
    for (int t = i + 1; t <= k; ++t) merged.push_back(hs[size_t(t)]);
    PhaseQ term = c.at(object, merged);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  std::vector<int> front(hs.begin(), hs.end() - 1);
  PhaseQ last = c.at(object, front);
  acc = ((k + 1) % 2 == 0) ? acc + last : acc - last;
  return acc;
}

inline GroupoidCochain groupoid_coboundary(const GroupoidCochain& c) {
  GroupoidCochain out(c.group(), c.degree() + 1);
  std::vector<int> hs(size_t(c.degree()) + 1, 0);
  for (int object = 0; object < c.group().order; ++object) {
    std::fill(hs.begin(), hs.end(), 0);
    do {
      out.set(object, hs, groupoid_coboundary_at(c, object, hs));
    } while (next_tuple(hs, c.group().order));
  }
  return out;
}

struct GroupoidCocycleCheck {
  bool ok = true;
  int object = 0;
  std::vector<int> witness;
};

inline GroupoidCocycleCheck check_groupoid_cocycle(const GroupoidCochain& c) {
  std::vector<int> hs(size_t(c.degree()) + 1, 0);
  for (int object = 0; object < c.group().order; ++object) {
    std::fill(hs.begin(), hs.end(), 0);
    do {
      if (!is_zero(groupoid_coboundary_at(c, object, hs)))
        return GroupoidCocycleCheck{false, object, hs};
    } while (next_tuple(hs, c.group().order));
  }
  return GroupoidCocycleCheck{};
}

inline bool is_groupoid_cocycle(const GroupoidCochain& c) {
  return check_groupoid_cocycle(c).ok;
}

inline bool is_normalized(const GroupoidCochain& c) {
  if (c.degree() == 0) return true;
  std::vector<int> hs(size_t(c.degree()), 0);
  for (int object = 0; object < c.group().order; ++object) {
    std::fill(hs.begin(), hs.end(), 0);
    do {
      for (int h : hs)
        if (h == c.group().identity && !is_zero(c.at(object, hs))) return false;
    } while (next_tuple(hs, c.group().order));
  }
  return true;
}

// A finite groupoid whose morphisms are labeled by elements of an ambient
// group, with composition given by multiplying labels. This covers every
// groupoid the theory needs: conjugation groupoids, homotopy fibers and
// kernel sectors all live inside H//H.
struct GroupoidMorphism {
  int src = 0;
  int dst = 0;
  int label = 0;
};

struct FiniteGroupoid {
  FiniteGroup ambient;
  std::vector<int> object_h;    // payload per object: the H//H element underneath
  std::vector<int> object_aux;  // second payload (the chosen morphism for fibers)
  std::vector<GroupoidMorphism> morphisms;

  int object_count() const { return int(object_h.size()); }
};

// G//G itself: every (g, h) is a morphism g -> h^{-1} g h.
inline FiniteGroupoid loop_groupoid(const FiniteGroup& g) {
  FiniteGroupoid out;
  out.ambient = g;
  out.object_h.resize(size_t(g.order));
  std::iota(out.object_h.begin(), out.object_h.end(), 0);
  out.morphisms.reserve(size_t(g.order) * size_t(g.order));
  for (int x = 0; x < g.order; ++x)
    for (int h = 0; h < g.order; ++h) out.morphisms.push_back({x, g.conj(x, h), h});
  return out;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(size_t(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smallest index becomes the representative
    parent[size_t(b)] = a;
  }
};

}  // namespace detail

// object -> component representative (the smallest object index reachable).
inline std::vector<int> components(const FiniteGroupoid& g) {
  detail::UnionFind uf(g.object_count());
  for (const GroupoidMorphism& m : g.morphisms) uf.unite(m.src, m.dst);
  std::vector<int> out(size_t(g.object_count()));
  for (int x = 0; x < g.object_count(); ++x) out[size_t(x)] = uf.find(x);
  return out;
}

inline int component_count(const FiniteGroupoid& g) {
  auto comp = components(g);
  int n = 0;
  for (int x = 0; x < g.object_count(); ++x)
    if (comp[size_t(x)] == x) ++n;
  return n;
}

inline std::vector<int> automorphism_labels(const FiniteGroupoid& g, int object) {
  std::vector<int> out;
  for (const GroupoidMorphism& m : g.morphisms)
    if (m.src == object && m.dst == object) out.push_back(m.label);
  std::sort(out.begin(), out.end());
  return out;
}

// Equivalence-invariant shape data: component count plus the sorted multiset
// of automorphism-group orders.
inline std::pair<int, std::vector<int>> groupoid_signature(const FiniteGroupoid& g) {
  auto comp = components(g);
  std::vector<int> aut_orders;
  for (int x = 0; x < g.object_count(); ++x)
    if (comp[size_t(x)] == x) aut_orders.push_back(int(automorphism_labels(g, x).size()));
  std::sort(aut_orders.begin(), aut_orders.end());
  return {int(aut_orders.size()), aut_orders};
}

// The homotopy fiber of lambda_* : H//H -> J//J over the object j: objects
// are pairs (h, jj) with jj^{-1} lambda(h) jj = j, and k : (h, jj) -> (h', jj')
// whenever k^{-1} h k = h' and jj = lambda(k) jj'. All pairs are materialized
// without quotienting; comparisons with the kernel sector happen up to
// equivalence, which is what the theory asserts.
inline FiniteGroupoid homotopy_fiber(const GroupHom& lambda, int j) {
  const FiniteGroup& h = lambda.source;
  const FiniteGroup& jg = lambda.target;
  require(j >= 0 && j < jg.order, errc::invalid_input, "fiber object out of range");
  FiniteGroupoid out;
  out.ambient = h;
  std::map<std::pair<int, int>, int> object_index;
  for (int x = 0; x < h.order; ++x)
    for (int jj = 0; jj < jg.order; ++jj)
      if (jg.conj(lambda.apply(x), jj) == j) {
        object_index.emplace(std::make_pair(x, jj), out.object_count());
        out.object_h.push_back(x);
        out.object_aux.push_back(jj);
      }
  for (const auto& [key, src] : object_index) {
    auto [x, jj] = key;
    for (int k = 0; k < h.order; ++k) {
      int dst_h = h.conj(x, k);
      int dst_jj = jg.mul(jg.inv(lambda.apply(k)), jj);
      auto it = object_index.find({dst_h, dst_jj});
      require(it != object_index.end(), errc::invalid_input, "homotopy fiber is not closed");
      out.morphisms.push_back({src, it->second, k});
    }
  }
  return out;
}

// For surjective lambda the fiber collapses to lambda^{-1}(j) // ker lambda:
// objects are the preimage elements, morphisms the kernel acting by
// conjugation.
inline FiniteGroupoid kernel_sector(const GroupHom& lambda, int j) {
  require(is_surjective(lambda), errc::invalid_input, "kernel sector requires a surjective map");
  const FiniteGroup& h = lambda.source;
  FiniteGroupoid out;
  out.ambient = h;
  out.object_h = preimage(lambda, j);
  std::vector<int> ker = preimage(lambda, lambda.target.identity);
  std::map<int, int> object_index;
  for (int i = 0; i < out.object_count(); ++i) object_index.emplace(out.object_h[size_t(i)], i);
  for (int i = 0; i < out.object_count(); ++i)
    for (int k : ker) {
      int dst = h.conj(out.object_h[size_t(i)], k);
      auto it = object_index.find(dst);
      require(it != object_index.end(), errc::invalid_input, "kernel sector is not closed");
      out.morphisms.push_back({i, it->second, k});
    }
  return out;
}

// Number of isomorphism classes of irreducible alpha-projective functors:
//
//   sum over components [x] of
//     (1/|Aut(x)|) sum_{a,b in Aut(x), ab=ba} e^{2 pi i (alpha(a,b)-alpha(b,a))}
//
// accumulated exactly; every component sum must certify as a non-negative
// integer multiple of |Aut(x)|. alpha(payload, a, b) supplies the 2-cocycle
// value at a composable loop pair, with payload the object's H//H element.
template <class Alpha>
long long twisted_irrep_count(const FiniteGroupoid& g, Alpha&& alpha, long long modulus) {
  auto comp = components(g);
  long long total = 0;
  for (int x = 0; x < g.object_count(); ++x) {
    if (comp[size_t(x)] != x) continue;
    std::vector<int> aut = automorphism_labels(g, x);
    require(!aut.empty(), errc::invalid_input, "object without identity morphism");
    PhaseSum sum(modulus);
    int payload = g.object_h[size_t(x)];
    for (int a : aut)
      for (int b : aut) {
        if (g.ambient.mul(a, b) != g.ambient.mul(b, a)) continue;
        sum.add(alpha(payload, a, b) - alpha(payload, b, a));
      }
    Rational value = sum.exact_rational();
    require(value.num % (long long)aut.size() == 0, errc::not_rational,
            "component sum is not divisible by the automorphism order");
    long long count = value.num / (long long)aut.size();
    require(count >= 0, errc::negative_count, "negative component count");
    total += count;
  }
  return total;
}

inline long long twisted_irrep_count(const FiniteGroupoid& g, const GroupoidCochain& alpha) {
  require(alpha.degree() == 2, errc::invalid_input, "twisted count needs a degree-2 cocycle");
  require(g.ambient == alpha.group(), errc::invalid_input,
          "groupoid and cocycle live over different groups");
  return twisted_irrep_count(
      g,
      [&](int payload, int a, int b) {
        int hs[2] = {a, b};
        return alpha.at(payload, hs);
      },
      denominator_lcm(alpha));
}

// Per-sector simple-object counts of the pushforward theory: for every j in J
// the twisted count over the homotopy fiber, with the transgressed cocycle
// pulled back along the fiber projection. For surjective lambda the kernel
// sector gives an independent route and the two must agree.
struct SectorCounts {
  std::vector<long long> counts;  // indexed by j
  long long total = 0;
};

inline SectorCounts equivariant_sector_counts(const GroupHom& lambda, const Cochain& theta) {
  require(theta.degree() == 3, errc::invalid_input, "sector counts need a degree-3 cocycle");
  require(theta.group() == lambda.source, errc::invalid_input,
          "cocycle must live on the source group");
  GroupoidCochain tau = transgress(theta);
  long long modulus = denominator_lcm(tau);
  auto alpha = [&](int payload, int a, int b) {
    int hs[2] = {a, b};
    return tau.at(payload, hs);
  };
  bool surjective = is_surjective(lambda);
  SectorCounts out;
  for (int j = 0; j < lambda.target.order; ++j) {
    long long via_fiber = twisted_irrep_count(homotopy_fiber(lambda, j), alpha, modulus);
    if (surjective) {
      long long via_kernel = twisted_irrep_count(kernel_sector(lambda, j), alpha, modulus);
      require(via_fiber == via_kernel, errc::cross_check_mismatch,
              "sector " + std::to_string(j) + ": homotopy fiber count " +
                  std::to_string(via_fiber) + " != kernel sector count " +
                  std::to_string(via_kernel));
    }
    out.counts.push_back(via_fiber);
    out.total += via_fiber;
  }
  return out;
}

}  // namespace dwkit
