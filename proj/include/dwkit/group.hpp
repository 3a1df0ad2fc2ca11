#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dwkit/error.hpp"

namespace dwkit {

// A finite group as a multiplication table over dense indices 0..order-1.
// Immutable after construction; O(1) lookups dominate every inner loop of
// the enumeration formulas, so nothing fancier is wanted here.
struct FiniteGroup {
  int order = 1;
  int identity = 0;
  std::vector<int> mul_table;  // order x order, row-major
  std::vector<int> inv_table;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return mul_table[size_t(a) * size_t(order) + size_t(b)]; }
  int inv(int a) const { return inv_table[size_t(a)]; }
  int conj(int g, int h) const { return mul(mul(inv(h), g), h); }  // h^{-1} g h

  bool is_abelian() const {
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order == b.order && a.identity == b.identity && a.mul_table == b.mul_table;
  }
};

namespace detail {

inline std::vector<std::string> index_labels(int n) {
  std::vector<std::string> out;
  out.reserve(size_t(n));
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline FiniteGroup finish_group(FiniteGroup g) {
  g.inv_table.assign(size_t(g.order), -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inv_table[size_t(a)] = b;
  return g;
}

}  // namespace detail

// Order bound for exhaustive table validation (the associativity check is
// cubic). DWKIT_VALIDATE_CAP raises it for larger desk-scale tables.
inline int validation_order_cap() {
  if (const char* env = std::getenv("DWKIT_VALIDATE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64;
}

// Validates all group axioms and reports the first failure by name.
// The identity is kept where the table puts it; built-in constructors
// always place it at index 0.
inline FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                              std::vector<std::string> labels = {}) {
  int n = int(table.size());
  require(n >= 1, errc::invalid_input, "empty multiplication table");
  require(n <= validation_order_cap(), errc::invalid_input,
          "order " + std::to_string(n) +
              " exceeds the exhaustive validation cap (raise DWKIT_VALIDATE_CAP)");
  FiniteGroup g;
  g.order = n;
  g.mul_table.assign(size_t(n) * size_t(n), 0);
  for (int a = 0; a < n; ++a) {
    require(int(table[size_t(a)].size()) == n, errc::invalid_input,
            "multiplication table is not square at row " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      int v = table[size_t(a)][size_t(b)];
      require(v >= 0 && v < n, errc::invalid_input,
              "table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      g.mul_table[size_t(a) * size_t(n) + size_t(b)] = v;
    }
  }
  // rows and columns must be permutations
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(size_t(n), 0), col(size_t(n), 0);
    for (int b = 0; b < n; ++b) {
      row[size_t(g.mul(a, b))] = 1;
      col[size_t(g.mul(b, a))] = 1;
    }
    for (int b = 0; b < n; ++b)
      require(row[size_t(b)] && col[size_t(b)], errc::invalid_input,
              "row or column " + std::to_string(a) + " is not a permutation");
  }
  g.identity = -1;
  for (int e = 0; e < n && g.identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.identity = e;
  }
  require(g.identity >= 0, errc::invalid_input, "missing identity element");
  for (int x = 0; x < n; ++x) {
    bool has = false;
    for (int y = 0; y < n && !has; ++y)
      has = g.mul(x, y) == g.identity && g.mul(y, x) == g.identity;
    require(has, errc::invalid_input, "missing inverse for element " + std::to_string(x));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), errc::invalid_input,
                "non-associative triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
  g.labels = labels.empty() ? detail::index_labels(n) : std::move(labels);
  require(int(g.labels.size()) == n, errc::invalid_input, "label list does not match order");
  return detail::finish_group(std::move(g));
}

// Z_k with addition mod k; element i labeled "i".
inline FiniteGroup make_cyclic(int k) {
  require(k >= 1, errc::invalid_input, "cyclic group order must be positive");
  FiniteGroup g;
  g.order = k;
  g.identity = 0;
  g.mul_table.assign(size_t(k) * size_t(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) g.mul_table[size_t(a) * size_t(k) + size_t(b)] = (a + b) % k;
  g.labels = detail::index_labels(k);
  return detail::finish_group(std::move(g));
}

// S_k on {0..k-1}; elements are the permutations in lexicographic one-line
// order (identity first), labeled by their one-line word. Composition is
// (a*b)(i) = a(b(i)).
inline FiniteGroup make_symmetric(int k) {
  require(k >= 1 && k <= 5, errc::invalid_input, "symmetric group supported for 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = int(perms.size());
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.mul_table.assign(size_t(n) * size_t(n), 0);
  auto index_of = [&](const std::vector<int>& q) {
    return int(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> c(static_cast<size_t>(k));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) c[size_t(i)] = perms[size_t(a)][size_t(perms[size_t(b)][size_t(i)])];
      g.mul_table[size_t(a) * size_t(n) + size_t(b)] = index_of(c);
    }
  g.labels.reserve(size_t(n));
  for (auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    g.labels.push_back(s);
  }
  return detail::finish_group(std::move(g));
}

// D_k of order 2k: indices 0..k-1 are rotations r^i, k..2k-1 are reflections
// s r^i, with s r s = r^{-1}.
inline FiniteGroup make_dihedral(int k) {
  require(k >= 1, errc::invalid_input, "dihedral parameter must be positive");
  int n = 2 * k;
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.mul_table.assign(size_t(n) * size_t(n), 0);
  auto idx = [&](int flip, int rot) { return flip * k + ((rot % k) + k) % k; };
  for (int b1 = 0; b1 < 2; ++b1)
    for (int a1 = 0; a1 < k; ++a1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int a2 = 0; a2 < k; ++a2) {
          // (s^b1 r^a1)(s^b2 r^a2) = s^{b1+b2} r^{(-1)^{b2} a1 + a2}
          int rot = (b2 ? -a1 : a1) + a2;
          g.mul_table[size_t(idx(b1, a1)) * size_t(n) + size_t(idx(b2, a2))] =
              idx((b1 + b2) % 2, rot);
        }
  g.labels.reserve(size_t(n));
  for (int i = 0; i < k; ++i) g.labels.push_back("r" + std::to_string(i));
  for (int i = 0; i < k; ++i) g.labels.push_back("sr" + std::to_string(i));
  return detail::finish_group(std::move(g));
}

// G x H with index (a, b) -> a*|H| + b (first factor most significant).
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int n = g.order * h.order;
  require(n <= 512, errc::invalid_input, "product order beyond desk scale (max 512)");
  FiniteGroup p;
  p.order = n;
  p.identity = g.identity * h.order + h.identity;
  p.mul_table.assign(size_t(n) * size_t(n), 0);
  for (int a1 = 0; a1 < g.order; ++a1)
    for (int b1 = 0; b1 < h.order; ++b1)
      for (int a2 = 0; a2 < g.order; ++a2)
        for (int b2 = 0; b2 < h.order; ++b2)
          p.mul_table[size_t(a1 * h.order + b1) * size_t(n) + size_t(a2 * h.order + b2)] =
              g.mul(a1, a2) * h.order + h.mul(b1, b2);
  p.labels.reserve(size_t(n));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      p.labels.push_back("(" + g.labels[size_t(a)] + "," + h.labels[size_t(b)] + ")");
  return detail::finish_group(std::move(p));
}

inline std::vector<int> centralizer(const FiniteGroup& g, int x) {
  require(x >= 0 && x < g.order, errc::invalid_input, "element out of range");
  std::vector<int> out;
  for (int h = 0; h < g.order; ++h)
    if (g.mul(h, x) == g.mul(x, h)) out.push_back(h);
  return out;
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(size_t(g.order), 0);
  for (int x = 0; x < g.order; ++x) {
    if (seen[size_t(x)]) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order; ++h) {
      int y = g.conj(x, h);
      if (!seen[size_t(y)]) {
        seen[size_t(y)] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Enumerates the pairwise commuting n-tuples in lexicographic order by
// backtracking over centralizer chains: the candidates for g_{i+1} are the
// intersection of the centralizers of g_1..g_i.
template <class Visit>
void for_each_commuting_tuple(const FiniteGroup& g, int n, Visit&& visit) {
  require(n >= 1, errc::invalid_input, "tuple length must be positive");
  std::vector<std::vector<int>> cent(size_t(g.order));
  for (int x = 0; x < g.order; ++x) cent[size_t(x)] = centralizer(g, x);
  std::vector<int> tuple(static_cast<size_t>(n));
  std::vector<int> all(static_cast<size_t>(g.order));
  std::iota(all.begin(), all.end(), 0);
  std::function<void(int, const std::vector<int>&)> rec = [&](int level,
                                                              const std::vector<int>& cand) {
    if (level == n) {
      visit(std::span<const int>(tuple));
      return;
    }
    for (int x : cand) {
      tuple[size_t(level)] = x;
      if (level + 1 == n) {
        rec(level + 1, cand);
      } else {
        std::vector<int> next;
        std::set_intersection(cand.begin(), cand.end(), cent[size_t(x)].begin(),
                              cent[size_t(x)].end(), std::back_inserter(next));
        rec(level + 1, next);
      }
    }
  };
  rec(0, all);
}

inline long long count_commuting_tuples(const FiniteGroup& g, int n) {
  long long count = 0;
  for_each_commuting_tuple(g, n, [&](std::span<const int>) { ++count; });
  return count;
}

inline std::vector<std::vector<int>> commuting_tuples(const FiniteGroup& g, int n) {
  std::vector<std::vector<int>> out;
  for_each_commuting_tuple(g, n, [&](std::span<const int> t) {
    out.emplace_back(t.begin(), t.end());
  });
  return out;
}

// A homomorphism lambda : source -> target given by its value table.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> image;

  int apply(int h) const { return image[size_t(h)]; }
};

inline GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> image) {
  require(int(image.size()) == source.order, errc::invalid_input,
          "homomorphism table does not match source order");
  for (int v : image)
    require(v >= 0 && v < target.order, errc::invalid_input, "homomorphism value out of range");
  require(image[size_t(source.identity)] == target.identity, errc::invalid_input,
          "homomorphism does not preserve the identity");
  for (int a = 0; a < source.order; ++a)
    for (int b = 0; b < source.order; ++b)
      require(image[size_t(source.mul(a, b))] ==
                  target.mul(image[size_t(a)], image[size_t(b)]),
              errc::invalid_input,
              "not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return GroupHom{std::move(source), std::move(target), std::move(image)};
}

inline std::vector<int> preimage(const GroupHom& hom, int j) {
  require(j >= 0 && j < hom.target.order, errc::invalid_input, "target element out of range");
  std::vector<int> out;
  for (int h = 0; h < hom.source.order; ++h)
    if (hom.apply(h) == j) out.push_back(h);
  return out;
}

inline bool is_surjective(const GroupHom& hom) {
  std::vector<char> hit(size_t(hom.target.order), 0);
  for (int v : hom.image) hit[size_t(v)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// A subgroup presented on its own indices 0..k-1 together with the embedding
// into the parent's element indices.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;
};

inline Subgroup subgroup_from_elements(const FiniteGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<int> pos(size_t(parent.order), -1);
  for (int i = 0; i < int(elements.size()); ++i) pos[size_t(elements[size_t(i)])] = i;
  FiniteGroup g;
  g.order = int(elements.size());
  require(g.order >= 1, errc::invalid_input, "empty subgroup");
  g.identity = pos[size_t(parent.identity)];
  require(g.identity >= 0, errc::invalid_input, "subgroup does not contain the identity");
  g.mul_table.assign(size_t(g.order) * size_t(g.order), 0);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      int prod = parent.mul(elements[size_t(a)], elements[size_t(b)]);
      require(pos[size_t(prod)] >= 0, errc::invalid_input, "element set is not closed under product");
      g.mul_table[size_t(a) * size_t(g.order) + size_t(b)] = pos[size_t(prod)];
    }
  g.labels.reserve(size_t(g.order));
  for (int e : elements) g.labels.push_back(parent.labels[size_t(e)]);
  return Subgroup{detail::finish_group(std::move(g)), std::move(elements)};
}

inline Subgroup kernel(const GroupHom& hom) {
  return subgroup_from_elements(hom.source, preimage(hom, hom.target.identity));
}

// Common homomorphism fixtures.
inline GroupHom hom_identity(const FiniteGroup& g) {
  std::vector<int> image(static_cast<size_t>(g.order));
  std::iota(image.begin(), image.end(), 0);
  return make_hom(g, g, std::move(image));
}

inline GroupHom hom_trivial(const FiniteGroup& g) {
  return make_hom(g, make_cyclic(1), std::vector<int>(size_t(g.order), 0));
}

inline GroupHom hom_mod(int m, int k) {
  require(k >= 1 && m >= 1 && m % k == 0, errc::invalid_input,
          "mod homomorphism needs k dividing m");
  std::vector<int> image(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) image[size_t(i)] = i % k;
  return make_hom(make_cyclic(m), make_cyclic(k), std::move(image));
}

// Sign map S_k -> Z_2.
inline GroupHom hom_sign(int k) {
  FiniteGroup s = make_symmetric(k);
  std::vector<int> image(static_cast<size_t>(s.order));
  for (int i = 0; i < s.order; ++i) {
    const std::string& word = s.labels[size_t(i)];
    int inversions = 0;
    for (size_t a = 0; a < word.size(); ++a)
      for (size_t b = a + 1; b < word.size(); ++b)
        if (word[a] > word[b]) ++inversions;
    image[size_t(i)] = inversions % 2;
  }
  return make_hom(std::move(s), make_cyclic(2), std::move(image));
}

}  // namespace dwkit
