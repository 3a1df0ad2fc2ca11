#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwkit/cochain.hpp"
#include "dwkit/error.hpp"
#include "dwkit/group.hpp"
#include "dwkit/simplicial.hpp"

namespace dwkit {

using json = nlohmann::json;

namespace detail {

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), errc::invalid_input, "cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    require(pos == s.size(), errc::invalid_input, "invalid " + what + " '" + s + "'");
    return v;
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::invalid_input, "invalid " + what + " '" + s + "'");
  }
}

// "(a,b,c)" -> {a, b, c}; "()" -> {}.
inline std::vector<int> parse_tuple_key(const std::string& key) {
  require(key.size() >= 2 && key.front() == '(' && key.back() == ')', errc::invalid_input,
          "tuple key must look like (a,b,..): '" + key + "'");
  std::string body = key.substr(1, key.size() - 2);
  std::vector<int> out;
  if (body.empty()) return out;
  for (const std::string& part : split(body, ','))
    out.push_back(parse_int(part, "tuple entry"));
  return out;
}

inline std::string tuple_key(std::span<const int> args) {
  std::string out = "(";
  for (size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + std::to_string(args[i]);
  return out + ")";
}

}  // namespace detail

// ---- groups -------------------------------------------------------------

inline FiniteGroup group_from_json(const json& j);

inline FiniteGroup group_from_kind(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return make_cyclic(j.at("k").get<int>());
  if (kind == "symmetric") return make_symmetric(j.at("k").get<int>());
  if (kind == "dihedral") return make_dihedral(j.at("k").get<int>());
  if (kind == "product") {
    const json& factors = j.at("factors");
    require(factors.is_array() && !factors.empty(), errc::invalid_input,
            "product needs a non-empty factor list");
    FiniteGroup g = group_from_json(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) g = direct_product(g, group_from_json(factors[i]));
    return g;
  }
  if (kind == "table") {
    std::vector<std::vector<int>> table = j.at("mul").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return from_table(table, std::move(labels));
  }
  fail(errc::invalid_input, "unknown group kind '" + kind + "'");
}

inline FiniteGroup group_from_json(const json& j) {
  try {
    return group_from_kind(j);
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, std::string("malformed group JSON: ") + e.what());
  }
}

inline json group_to_json(const FiniteGroup& g) {
  json j;
  j["kind"] = "table";
  j["order"] = g.order;
  std::vector<std::vector<int>> table(size_t(g.order), std::vector<int>(size_t(g.order)));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) table[size_t(a)][size_t(b)] = g.mul(a, b);
  j["mul"] = table;
  j["labels"] = g.labels;
  return j;
}

// URIs: cyclic:k, symmetric:k, dihedral:k, product:<uri>,<uri>,.. or a file path.
inline FiniteGroup resolve_group(const std::string& spec) {
  auto parts = detail::split(spec, ':');
  if (parts.size() == 2 && parts[0] == "cyclic")
    return make_cyclic(detail::parse_int(parts[1], "cyclic order"));
  if (parts.size() == 2 && parts[0] == "symmetric")
    return make_symmetric(detail::parse_int(parts[1], "symmetric degree"));
  if (parts.size() == 2 && parts[0] == "dihedral")
    return make_dihedral(detail::parse_int(parts[1], "dihedral parameter"));
  if (parts.size() >= 2 && parts[0] == "product") {
    std::string rest = spec.substr(std::string("product:").size());
    FiniteGroup g;
    bool first = true;
    for (const std::string& factor : detail::split(rest, ',')) {
      FiniteGroup f = resolve_group(factor);
      g = first ? std::move(f) : direct_product(g, f);
      first = false;
    }
    require(!first, errc::invalid_input, "product URI needs at least one factor");
    return g;
  }
  return group_from_json(detail::load_json_file(spec));
}

// ---- homomorphisms ------------------------------------------------------

inline GroupHom hom_from_json(const json& j) {
  try {
    return make_hom(group_from_json(j.at("source")), group_from_json(j.at("target")),
                    j.at("image").get<std::vector<int>>());
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, std::string("malformed homomorphism JSON: ") + e.what());
  }
}

inline json hom_to_json(const GroupHom& hom) {
  json j;
  j["source"] = group_to_json(hom.source);
  j["target"] = group_to_json(hom.target);
  j["image"] = hom.image;
  return j;
}

// URIs: mod:m:k, sign:k, trivial:<group-uri>, id:<group-uri>, or a file path.
inline GroupHom resolve_hom(const std::string& spec) {
  auto parts = detail::split(spec, ':');
  if (parts.size() == 3 && parts[0] == "mod")
    return hom_mod(detail::parse_int(parts[1], "mod source"),
                   detail::parse_int(parts[2], "mod target"));
  if (parts.size() == 2 && parts[0] == "sign")
    return hom_sign(detail::parse_int(parts[1], "sign degree"));
  if (parts.size() >= 2 && parts[0] == "trivial")
    return hom_trivial(resolve_group(spec.substr(std::string("trivial:").size())));
  if (parts.size() >= 2 && parts[0] == "id")
    return hom_identity(resolve_group(spec.substr(std::string("id:").size())));
  return hom_from_json(detail::load_json_file(spec));
}

// ---- cochains -----------------------------------------------------------

// {"group":.., "degree":n, "entries":{"(a,b,..)":"p/q",..}, "default":"p/q"};
// unlisted tuples take the default.
inline Cochain cochain_from_json(const json& j) {
  try {
    FiniteGroup g = group_from_json(j.at("group"));
    int degree = j.at("degree").get<int>();
    PhaseQ def;
    if (j.contains("default")) def = parse_phase(j.at("default").get<std::string>());
    Cochain out(std::move(g), degree);
    if (degree == 0) {
      out.set({}, def);
      if (j.contains("entries"))
        for (const auto& [key, value] : j.at("entries").items()) {
          require(detail::parse_tuple_key(key).empty(), errc::invalid_input,
                  "degree-0 entry key must be ()");
          out.set({}, parse_phase(value.get<std::string>()));
        }
      return out;
    }
    std::vector<int> args(size_t(degree), 0);
    if (!is_zero(def)) {
      do {
        out.set(args, def);
      } while (next_tuple(args, out.group().order));
    }
    if (j.contains("entries"))
      for (const auto& [key, value] : j.at("entries").items()) {
        std::vector<int> tuple = detail::parse_tuple_key(key);
        require(int(tuple.size()) == degree, errc::invalid_input,
                "entry key arity mismatch at '" + key + "'");
        for (int a : tuple)
          require(a >= 0 && a < out.group().order, errc::invalid_input,
                  "entry key element out of range at '" + key + "'");
        out.set(tuple, parse_phase(value.get<std::string>()));
      }
    return out;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, std::string("malformed cocycle JSON: ") + e.what());
  }
}

inline json cochain_to_json(const Cochain& c) {
  json j;
  j["group"] = group_to_json(c.group());
  j["degree"] = c.degree();
  j["default"] = "0/1";
  json entries = json::object();
  if (c.degree() == 0) {
    if (!is_zero(c.value())) entries["()"] = to_string(c.value());
  } else {
    std::vector<int> args(size_t(c.degree()), 0);
    do {
      PhaseQ v = c.at(args);
      if (!is_zero(v)) entries[detail::tuple_key(args)] = to_string(v);
    } while (next_tuple(args, c.group().order));
  }
  j["entries"] = std::move(entries);
  return j;
}

// URIs: zero:<degree> (with a group from context), builtin:cyclic3:k:p, or a
// file path.
inline Cochain resolve_cochain(const std::string& spec, const FiniteGroup* context_group) {
  auto parts = detail::split(spec, ':');
  if (parts.size() == 2 && parts[0] == "zero") {
    require(context_group != nullptr, errc::invalid_input,
            "cocycle URI 'zero:<degree>' needs --group");
    return zero_cochain(*context_group, detail::parse_int(parts[1], "cocycle degree"));
  }
  if (parts.size() == 4 && parts[0] == "builtin" && parts[1] == "cyclic3")
    return cyclic_3cocycle(detail::parse_int(parts[2], "cyclic order"),
                           detail::parse_int(parts[3], "cocycle parameter"));
  return cochain_from_json(detail::load_json_file(spec));
}

// ---- complexes and fields -----------------------------------------------

// {"dimension":n, "vertices":v, "simplices":[{"v":[..], "sign":s, "e":[..]?}]}
// The optional "e" lists one edge name per vertex pair in lexicographic pair
// order; without it edges are the vertex-pair cells "(u,v)".
inline DeltaComplex complex_from_json(const json& j) {
  try {
    int dimension = j.at("dimension").get<int>();
    int vertices = j.at("vertices").get<int>();
    std::vector<SimplexSpec> specs;
    for (const json& s : j.at("simplices")) {
      SimplexSpec spec;
      spec.vertices = s.at("v").get<std::vector<int>>();
      spec.sign = s.at("sign").get<int>();
      if (s.contains("e")) spec.edge_names = s.at("e").get<std::vector<std::string>>();
      specs.push_back(std::move(spec));
    }
    return make_complex(dimension, vertices, specs);
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, std::string("malformed complex JSON: ") + e.what());
  }
}

inline json complex_to_json(const DeltaComplex& c) {
  json j;
  j["dimension"] = c.dimension;
  j["vertices"] = c.vertex_count;
  json simplices = json::array();
  for (const Simplex& s : c.simplices) {
    json js;
    js["v"] = s.vertices;
    js["sign"] = s.sign;
    std::vector<std::string> names;
    names.reserve(s.edges.size());
    for (int e : s.edges) names.push_back(c.edge_names[size_t(e)]);
    js["e"] = names;
    simplices.push_back(std::move(js));
  }
  j["simplices"] = std::move(simplices);
  return j;
}

// URIs: torus:n, sphere:n (boundary of the (n+1)-simplex), or a file path.
inline DeltaComplex resolve_complex(const std::string& spec) {
  auto parts = detail::split(spec, ':');
  if (parts.size() == 2 && parts[0] == "torus")
    return torus_complex(detail::parse_int(parts[1], "torus dimension"));
  if (parts.size() == 2 && parts[0] == "sphere")
    return simplex_boundary_complex(detail::parse_int(parts[1], "sphere dimension"));
  return complex_from_json(detail::load_json_file(spec));
}

// {"edges":{"<edge-name>":element,..}}; every edge of the complex must be
// labeled.
inline FlatGaugeField field_from_json(const json& j, const DeltaComplex& c,
                                      const FiniteGroup& g) {
  try {
    FlatGaugeField f;
    f.labels.assign(size_t(c.edge_count()), -1);
    std::map<std::string, int> by_name;
    for (int e = 0; e < c.edge_count(); ++e) by_name.emplace(c.edge_names[size_t(e)], e);
    for (const auto& [key, value] : j.at("edges").items()) {
      auto it = by_name.find(key);
      require(it != by_name.end(), errc::invalid_input, "unknown edge '" + key + "'");
      int v = value.get<int>();
      require(v >= 0 && v < g.order, errc::invalid_input, "edge label out of range at '" + key + "'");
      f.labels[size_t(it->second)] = v;
    }
    for (int e = 0; e < c.edge_count(); ++e)
      require(f.labels[size_t(e)] >= 0, errc::invalid_input,
              "edge '" + c.edge_names[size_t(e)] + "' is not labeled");
    require(is_flat(c, g, f), errc::invalid_input, "edge labeling violates flatness");
    return f;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, std::string("malformed field JSON: ") + e.what());
  }
}

inline json field_to_json(const FlatGaugeField& f, const DeltaComplex& c) {
  json edges = json::object();
  for (int e = 0; e < c.edge_count(); ++e)
    edges[c.edge_names[size_t(e)]] = f.labels[size_t(e)];
  json j;
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace dwkit
