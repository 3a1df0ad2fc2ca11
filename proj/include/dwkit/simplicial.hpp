#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dwkit/cochain.hpp"
#include "dwkit/error.hpp"
#include "dwkit/group.hpp"
#include "dwkit/phase.hpp"
#include "dwkit/rational.hpp"

namespace dwkit {

// Position of the vertex pair (i, j), i < j, among the pairs of {0..m-1}
// in lexicographic order: (0,1),(0,2),..,(0,m-1),(1,2),..
inline int pair_index(int i, int j, int m) {
  return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

// One top simplex: an ordered vertex tuple, one edge id per vertex pair
// (lexicographic pair order), and an orientation sign.
struct Simplex {
  std::vector<int> vertices;  // n+1 entries, repeats allowed
  std::vector<int> edges;     // (n+1 choose 2) edge ids
  int sign = 1;
};

// An ordered triangulation of a closed oriented manifold, presented by its
// signed top simplices. Edges are genuine cells of the complex: distinct
// edges may share endpoints (the one-vertex torus has three distinct loops),
// so each simplex records edge identities for all of its vertex pairs.
// Edges not named explicitly default to the vertex-pair cell "(u,v)";
// a defaulted edge with equal endpoints is degenerate and carries the
// identity label in any gauge field.
struct DeltaComplex {
  int dimension = 0;
  int vertex_count = 0;
  std::vector<std::string> edge_names;            // edge id -> name
  std::vector<std::pair<int, int>> edge_ends;     // edge id -> (u, v)
  std::vector<char> edge_degenerate;              // defaulted self-loops
  std::vector<Simplex> simplices;

  int edge_count() const { return int(edge_names.size()); }
};

// Input form of a simplex: vertices, sign, and optionally one edge name per
// vertex pair in lexicographic pair order.
struct SimplexSpec {
  std::vector<int> vertices;
  int sign = 1;
  std::vector<std::string> edge_names;  // empty: all edges default
};

inline std::string default_edge_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

inline DeltaComplex make_complex(int dimension, int vertex_count,
                                 const std::vector<SimplexSpec>& specs) {
  require(dimension >= 1, errc::invalid_input, "complex dimension must be at least 1");
  DeltaComplex c;
  c.dimension = dimension;
  c.vertex_count = vertex_count;
  std::map<std::string, int> by_name;
  auto edge_id = [&](const std::string& name, int u, int v, bool defaulted) {
    auto it = by_name.find(name);
    if (it != by_name.end()) {
      int id = it->second;
      require(c.edge_ends[size_t(id)] == std::make_pair(u, v), errc::invalid_input,
              "edge '" + name + "' used with inconsistent endpoints");
      return id;
    }
    int id = c.edge_count();
    by_name.emplace(name, id);
    c.edge_names.push_back(name);
    c.edge_ends.emplace_back(u, v);
    c.edge_degenerate.push_back(defaulted && u == v ? 1 : 0);
    return id;
  };
  int m = dimension + 1;
  int pairs = m * (m - 1) / 2;
  for (const SimplexSpec& spec : specs) {
    require(int(spec.vertices.size()) == m, errc::invalid_input,
            "simplex vertex tuple must have dimension+1 entries");
    for (int v : spec.vertices)
      require(v >= 0 && v < vertex_count, errc::invalid_input, "simplex vertex out of range");
    require(spec.sign == 1 || spec.sign == -1, errc::invalid_input, "simplex sign must be +1 or -1");
    require(spec.edge_names.empty() || int(spec.edge_names.size()) == pairs, errc::invalid_input,
            "simplex edge list must name every vertex pair");
    Simplex s;
    s.vertices = spec.vertices;
    s.sign = spec.sign;
    s.edges.resize(size_t(pairs));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        int u = spec.vertices[size_t(i)], v = spec.vertices[size_t(j)];
        int p = pair_index(i, j, m);
        bool defaulted = spec.edge_names.empty();
        const std::string name = defaulted ? default_edge_name(u, v) : spec.edge_names[size_t(p)];
        s.edges[size_t(p)] = edge_id(name, u, v, defaulted);
      }
    c.simplices.push_back(std::move(s));
  }
  return c;
}

namespace detail {

// A codimension-1 face as a cell of the complex: its ordered vertices plus
// the edge identities it inherits. Two face slots are glued exactly when
// these agree.
using FaceKey = std::pair<std::vector<int>, std::vector<int>>;

inline FaceKey face_key(const DeltaComplex& c, const Simplex& s, int drop) {
  int m = c.dimension + 1;
  std::vector<int> verts;
  verts.reserve(size_t(m - 1));
  std::vector<int> keep;
  for (int i = 0; i < m; ++i)
    if (i != drop) {
      verts.push_back(s.vertices[size_t(i)]);
      keep.push_back(i);
    }
  std::vector<int> edges;
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      edges.push_back(s.edges[size_t(pair_index(keep[a], keep[b], m))]);
  return {std::move(verts), std::move(edges)};
}

}  // namespace detail

struct ComplexCheck {
  bool ok = true;
  std::string detail;  // description of an uncancelled face when !ok
};

// The defining property of a fundamental cycle: the signed boundary chain
// cancels face-by-face. Orientation is taken from the input signs.
inline ComplexCheck check_fundamental_cycle(const DeltaComplex& c) {
  std::map<detail::FaceKey, long long> boundary;
  for (const Simplex& s : c.simplices)
    for (int drop = 0; drop <= c.dimension; ++drop) {
      long long coeff = (drop % 2 == 0) ? s.sign : -s.sign;
      boundary[detail::face_key(c, s, drop)] += coeff;
    }
  for (const auto& [key, coeff] : boundary) {
    if (coeff == 0) continue;
    std::string msg = "uncancelled face: vertices (";
    for (size_t i = 0; i < key.first.size(); ++i)
      msg += (i ? "," : "") + std::to_string(key.first[i]);
    msg += "), edges (";
    for (size_t i = 0; i < key.second.size(); ++i)
      msg += (i ? "," : "") + c.edge_names[size_t(key.second[i])];
    msg += "), coefficient " + std::to_string(coeff);
    return ComplexCheck{false, msg};
  }
  return ComplexCheck{};
}

inline void validate_complex(const DeltaComplex& c) {
  ComplexCheck chk = check_fundamental_cycle(c);
  if (!chk.ok) fail(errc::not_a_fundamental_cycle, chk.detail);
}

// The shuffle triangulation of the n-torus as a one-vertex complex: one top
// simplex per permutation pi of the axes, carrying sign sgn(pi). The edge of
// a simplex between chain positions i < j is the cell named by the axis set
// {pi(i+1),..,pi(j)} it traverses in the cube.
inline DeltaComplex torus_complex(int n) {
  require(n >= 1 && n <= 3, errc::invalid_input, "torus complex supported for n in 1..3");
  std::vector<int> axes(static_cast<size_t>(n));
  std::iota(axes.begin(), axes.end(), 1);
  std::vector<SimplexSpec> specs;
  int m = n + 1;
  std::vector<int> perm = axes;
  auto parity = [](const std::vector<int>& p) {
    int inv = 0;
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = a + 1; b < p.size(); ++b)
        if (p[a] > p[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  };
  do {
    SimplexSpec spec;
    spec.vertices.assign(size_t(m), 0);
    spec.sign = parity(perm);
    spec.edge_names.resize(size_t(m * (m - 1) / 2));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::vector<int> subset(perm.begin() + i, perm.begin() + j);
        std::sort(subset.begin(), subset.end());
        std::string name;
        for (int a : subset) name += std::to_string(a);
        spec.edge_names[size_t(pair_index(i, j, m))] = name;
      }
    specs.push_back(std::move(spec));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_complex(n, 1, specs);
}

// Boundary of the (n+1)-simplex: an n-sphere with n+2 vertices, face i
// carrying sign (-1)^i.
inline DeltaComplex simplex_boundary_complex(int n) {
  require(n >= 1, errc::invalid_input, "sphere dimension must be at least 1");
  int m = n + 2;
  std::vector<SimplexSpec> specs;
  for (int drop = 0; drop < m; ++drop) {
    SimplexSpec spec;
    for (int v = 0; v < m; ++v)
      if (v != drop) spec.vertices.push_back(v);
    spec.sign = (drop % 2 == 0) ? 1 : -1;
    specs.push_back(std::move(spec));
  }
  return make_complex(n, m, specs);
}

// Vertex/simplex lists concatenated with reindexing; the second complex's
// edges are renamed where needed to stay distinct from the first's.
inline DeltaComplex disjoint_union(const DeltaComplex& a, const DeltaComplex& b) {
  require(a.dimension == b.dimension, errc::invalid_input,
          "disjoint union requires equal dimensions");
  std::set<std::string> used(a.edge_names.begin(), a.edge_names.end());
  // Fresh names for the second complex: defaults track their shifted
  // endpoints, custom names get a B. prefix (primed until free).
  std::map<int, std::string> renamed;
  for (int e = 0; e < b.edge_count(); ++e) {
    auto [u, v] = b.edge_ends[size_t(e)];
    std::string name;
    if (b.edge_names[size_t(e)] == default_edge_name(u, v)) {
      name = default_edge_name(u + a.vertex_count, v + a.vertex_count);
    } else {
      name = "B." + b.edge_names[size_t(e)];
      while (used.count(name)) name += "'";
    }
    used.insert(name);
    renamed.emplace(e, name);
  }
  std::vector<SimplexSpec> specs;
  auto push = [&](const DeltaComplex& c, int vertex_shift, bool rename) {
    for (const Simplex& s : c.simplices) {
      SimplexSpec spec;
      spec.sign = s.sign;
      for (int v : s.vertices) spec.vertices.push_back(v + vertex_shift);
      spec.edge_names.resize(s.edges.size());
      for (size_t p = 0; p < s.edges.size(); ++p) {
        int e = s.edges[size_t(p)];
        spec.edge_names[size_t(p)] = rename ? renamed.at(e) : c.edge_names[size_t(e)];
      }
      specs.push_back(std::move(spec));
    }
  };
  push(a, 0, false);
  push(b, a.vertex_count, true);
  DeltaComplex out = make_complex(a.dimension, a.vertex_count + b.vertex_count, specs);
  // Defaulted self-loops must keep their degeneracy through the rebuild.
  for (int e = 0; e < out.edge_count(); ++e) {
    auto [u, v] = out.edge_ends[size_t(e)];
    if (u == v && out.edge_names[size_t(e)] == default_edge_name(u, v))
      out.edge_degenerate[size_t(e)] = 1;
  }
  return out;
}

// A flat G-labeling of the edges, indexed by edge id.
struct FlatGaugeField {
  std::vector<int> labels;
};

namespace detail {

// The 2-face composition constraints: labels must satisfy g[a] g[b] = g[c]
// for every triple of edges (a, b, c) = (e_ij, e_jk, e_ik) of any simplex.
inline std::vector<std::array<int, 3>> face_constraints(const DeltaComplex& c) {
  std::vector<std::array<int, 3>> out;
  int m = c.dimension + 1;
  for (const Simplex& s : c.simplices)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
          out.push_back({s.edges[size_t(pair_index(i, j, m))],
                         s.edges[size_t(pair_index(j, k, m))],
                         s.edges[size_t(pair_index(i, k, m))]});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline bool is_flat(const DeltaComplex& c, const FiniteGroup& g, const FlatGaugeField& f) {
  if (int(f.labels.size()) != c.edge_count()) return false;
  for (int v : f.labels)
    if (v < 0 || v >= g.order) return false;
  for (int e = 0; e < c.edge_count(); ++e)
    if (c.edge_degenerate[size_t(e)] && f.labels[size_t(e)] != g.identity) return false;
  for (auto [a, b, cc] : detail::face_constraints(c))
    if (g.mul(f.labels[size_t(a)], f.labels[size_t(b)]) != f.labels[size_t(cc)]) return false;
  return true;
}

// Yields every flat labeling exactly once, in a deterministic order: free
// edges are chosen in ascending id order, candidate labels ascending, and
// each assignment is propagated through the 2-face constraints.
template <class Visit>
void enumerate_flat_fields(const DeltaComplex& c, const FiniteGroup& g, Visit&& visit) {
  validate_complex(c);
  const auto constraints = detail::face_constraints(c);
  int ne = c.edge_count();
  std::vector<int> labels(size_t(ne), -1);
  std::vector<int> trail;  // edges assigned by choice or propagation, in order

  auto propagate = [&]() -> bool {
    // fixpoint over a * b = c with two of three known
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [a, b, cc] : constraints) {
        int va = labels[size_t(a)], vb = labels[size_t(b)], vc = labels[size_t(cc)];
        int known = (va >= 0) + (vb >= 0) + (vc >= 0);
        if (known < 2) continue;
        if (known == 3) {
          if (g.mul(va, vb) != vc) return false;
          continue;
        }
        int e, value;
        if (va < 0) {
          e = a;
          value = g.mul(vc, g.inv(vb));
        } else if (vb < 0) {
          e = b;
          value = g.mul(g.inv(va), vc);
        } else {
          e = cc;
          value = g.mul(va, vb);
        }
        labels[size_t(e)] = value;
        trail.push_back(e);
        changed = true;
      }
    }
    return true;
  };

  FlatGaugeField field;
  auto rec = [&](auto&& self, int from) -> void {
    int e = from;
    while (e < ne && labels[size_t(e)] >= 0) ++e;
    if (e == ne) {
      field.labels = labels;
      visit(const_cast<const FlatGaugeField&>(field));
      return;
    }
    for (int v = 0; v < g.order; ++v) {
      size_t mark = trail.size();
      labels[size_t(e)] = v;
      trail.push_back(e);
      if (propagate()) self(self, e + 1);
      while (trail.size() > mark) {
        labels[size_t(trail.back())] = -1;
        trail.pop_back();
      }
    }
  };

  // Degenerate edges carry the identity; seed them before searching.
  for (int e = 0; e < ne; ++e)
    if (c.edge_degenerate[size_t(e)]) {
      labels[size_t(e)] = g.identity;
      trail.push_back(e);
    }
  if (propagate()) rec(rec, 0);
}

inline long long count_flat_fields(const DeltaComplex& c, const FiniteGroup& g) {
  long long n = 0;
  enumerate_flat_fields(c, g, [&](const FlatGaugeField&) { ++n; });
  return n;
}

inline std::vector<FlatGaugeField> flat_fields(const DeltaComplex& c, const FiniteGroup& g) {
  std::vector<FlatGaugeField> out;
  enumerate_flat_fields(c, g, [&](const FlatGaugeField& f) { out.push_back(f); });
  return out;
}

// <psi^* theta, mu>: the signed sum over top simplices of theta evaluated on
// the spine labels g(e_{01}), g(e_{12}), .., g(e_{n-1,n}).
inline PhaseQ holonomy(const DeltaComplex& c, const FlatGaugeField& f, const Cochain& theta) {
  require(theta.degree() == c.dimension, errc::invalid_input,
          "cocycle degree must match the complex dimension");
  require(int(f.labels.size()) == c.edge_count(), errc::invalid_input,
          "field does not label every edge");
  for (int v : f.labels)
    require(v >= 0 && v < theta.group().order, errc::invalid_input,
            "field label out of range for the cocycle's group");
  int m = c.dimension + 1;
  PhaseQ acc;
  std::vector<int> spine(static_cast<size_t>(c.dimension));
  for (const Simplex& s : c.simplices) {
    for (int t = 0; t + 1 < m; ++t)
      spine[size_t(t)] = f.labels[size_t(s.edges[size_t(pair_index(t, t + 1, m))])];
    PhaseQ v = theta.at(spine);
    acc = (s.sign > 0) ? acc + v : acc - v;
  }
  return acc;
}

// g'_{uv} = h(u)^{-1} g_{uv} h(v); the result is flat again.
inline FlatGaugeField gauge_transform(const DeltaComplex& c, const FiniteGroup& g,
                                      const FlatGaugeField& f, std::span<const int> h) {
  require(int(h.size()) == c.vertex_count, errc::invalid_input,
          "gauge transformation must assign every vertex");
  FlatGaugeField out;
  out.labels.resize(size_t(c.edge_count()));
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [u, v] = c.edge_ends[size_t(e)];
    out.labels[size_t(e)] =
        g.mul(g.mul(g.inv(h[size_t(u)]), f.labels[size_t(e)]), h[size_t(v)]);
  }
  return out;
}

namespace detail {

inline long long pow_checked(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    require(out <= (1LL << 62) / base, errc::invalid_input,
            "state-sum normalization exceeds 64-bit range");
    out *= base;
  }
  return out;
}

}  // namespace detail

// Z = |G|^{-V} sum over flat fields of e^{2 pi i <psi^* theta, mu>},
// accumulated exactly and certified rational. A NotRational failure signals
// a non-cocycle twist.
inline Rational state_sum(const DeltaComplex& c, const Cochain& theta, int threads = 1) {
  validate_complex(c);
  const FiniteGroup& g = theta.group();
  require(threads >= 1, errc::invalid_input, "thread count must be positive");
  long long modulus = denominator_lcm(theta);
  std::vector<FlatGaugeField> fields = flat_fields(c, g);
  size_t nthreads = std::min<size_t>(size_t(threads), std::max<size_t>(fields.size(), 1));
  std::vector<PhaseSum> partial(nthreads, PhaseSum(modulus));
  auto work = [&](size_t t) {
    for (size_t i = t; i < fields.size(); i += nthreads)
      partial[t].add(holonomy(c, fields[i], theta));
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  PhaseSum total = std::move(partial[0]);
  for (size_t t = 1; t < nthreads; ++t) total.merge(partial[t]);
  Rational numerator = total.exact_rational();
  return make_rational(numerator.num, detail::pow_checked(g.order, c.vertex_count));
}

}  // namespace dwkit
