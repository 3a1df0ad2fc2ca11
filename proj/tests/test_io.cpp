#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "dwkit/invariants.hpp"
#include "dwkit/io.hpp"

using namespace dwkit;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("dwkit_test_" + name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("group JSON round trip") {
  for (const FiniteGroup& g : {make_symmetric(3), make_dihedral(4),
                               direct_product(make_cyclic(2), make_cyclic(3))}) {
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back == g);
    CHECK(back.labels == g.labels);
  }
  CHECK(group_from_json(json{{"kind", "cyclic"}, {"k", 4}}) == make_cyclic(4));
  CHECK(group_from_json(json::parse(R"json({"kind":"product","factors":[
      {"kind":"cyclic","k":2},{"kind":"cyclic","k":2}]})json")) ==
        direct_product(make_cyclic(2), make_cyclic(2)));
  CHECK_THROWS_AS(group_from_json(json{{"kind", "frobnicate"}}), error);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "table"}, {"mul", json::array()}}), error);
}

TEST_CASE("group URIs") {
  CHECK(resolve_group("cyclic:6") == make_cyclic(6));
  CHECK(resolve_group("symmetric:3") == make_symmetric(3));
  CHECK(resolve_group("dihedral:4") == make_dihedral(4));
  CHECK(resolve_group("product:cyclic:2,cyclic:2") ==
        direct_product(make_cyclic(2), make_cyclic(2)));
  TempFile f("group.json", group_to_json(make_cyclic(5)).dump());
  CHECK(resolve_group(f.path) == make_cyclic(5));
  CHECK_THROWS_AS(resolve_group("no_such_file.json"), error);
}

TEST_CASE("homomorphism JSON and URIs") {
  GroupHom mod = hom_mod(4, 2);
  GroupHom back = hom_from_json(hom_to_json(mod));
  CHECK(back.image == mod.image);
  CHECK(back.source == mod.source);

  CHECK(resolve_hom("mod:4:2").image == mod.image);
  CHECK(resolve_hom("sign:3").image == hom_sign(3).image);
  CHECK(resolve_hom("trivial:symmetric:3").target.order == 1);
  CHECK(resolve_hom("id:cyclic:4").image == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(hom_from_json(json::parse(
                      R"json({"source":{"kind":"cyclic","k":4},
                          "target":{"kind":"cyclic","k":2},
                          "image":[0,1,1,0]})json")),
                  error);
}

TEST_CASE("cochain JSON round trip with sparse entries") {
  Cochain w = cyclic_3cocycle(4, 3);
  json j = cochain_to_json(w);
  Cochain back = cochain_from_json(j);
  CHECK(back.degree() == 3);
  CHECK(back.group() == w.group());
  CHECK(back.table() == w.table());

  // defaults fill unlisted tuples
  Cochain c = cochain_from_json(json::parse(R"json({
    "group": {"kind":"cyclic","k":2},
    "degree": 2,
    "entries": {"(1,1)": "1/2"},
    "default": "0/1"
  })json"));
  int k11[2] = {1, 1};
  int k01[2] = {0, 1};
  CHECK(c.at(k11) == phase(1, 2));
  CHECK(is_zero(c.at(k01)));

  Cochain filled = cochain_from_json(json::parse(R"json({
    "group": {"kind":"cyclic","k":2},
    "degree": 1,
    "default": "1/3"
  })json"));
  int k0[1] = {0};
  CHECK(filled.at(k0) == phase(1, 3));

  CHECK_THROWS_AS(cochain_from_json(json::parse(R"json({
    "group": {"kind":"cyclic","k":2},
    "degree": 2,
    "entries": {"(1)": "1/2"}
  })json")),
                  error);
  CHECK_THROWS_AS(cochain_from_json(json::parse(R"json({
    "group": {"kind":"cyclic","k":2},
    "degree": 2,
    "entries": {"(1,9)": "1/2"}
  })json")),
                  error);
}

TEST_CASE("random cochains survive the round trip") {
  Cochain r = random_cochain(make_dihedral(3), 2, 99, 12);
  Cochain back = cochain_from_json(cochain_to_json(r));
  CHECK(back.table() == r.table());
  CHECK(is_normalized(back));
}

TEST_CASE("cochain URIs") {
  FiniteGroup z2 = make_cyclic(2);
  Cochain z = resolve_cochain("zero:3", &z2);
  CHECK(z.degree() == 3);
  for (const PhaseQ& v : z.table()) CHECK(is_zero(v));
  CHECK_THROWS_AS(resolve_cochain("zero:3", nullptr), error);
  Cochain w = resolve_cochain("builtin:cyclic3:2:1", nullptr);
  CHECK(w.table() == cyclic_3cocycle(2, 1).table());
}

TEST_CASE("complex JSON with and without edge names") {
  // boundary of a tetrahedron, edges defaulted
  DeltaComplex sphere = complex_from_json(json::parse(R"json({
    "dimension": 2, "vertices": 4,
    "simplices": [
      {"v":[1,2,3], "sign":1},
      {"v":[0,2,3], "sign":-1},
      {"v":[0,1,3], "sign":1},
      {"v":[0,1,2], "sign":-1}
    ]})json"));
  CHECK(check_fundamental_cycle(sphere).ok);
  CHECK(sphere.edge_count() == 6);

  // one-vertex torus with named loops
  DeltaComplex torus = complex_from_json(json::parse(R"json({
    "dimension": 2, "vertices": 1,
    "simplices": [
      {"v":[0,0,0], "sign":1,  "e":["a","c","b"]},
      {"v":[0,0,0], "sign":-1, "e":["b","c","a"]}
    ]})json"));
  CHECK(check_fundamental_cycle(torus).ok);
  CHECK(torus.edge_count() == 3);
  FiniteGroup s3 = make_symmetric(3);
  CHECK(count_flat_fields(torus, s3) == 18);

  // round trip through the emitted form
  DeltaComplex t3 = torus_complex(3);
  DeltaComplex back = complex_from_json(complex_to_json(t3));
  CHECK(check_fundamental_cycle(back).ok);
  CHECK(back.edge_count() == t3.edge_count());
  CHECK(state_sum(back, cyclic_3cocycle(2, 1)) == Rational{4, 1});

  CHECK(resolve_complex("torus:2").edge_count() == 3);
  CHECK(resolve_complex("sphere:2").edge_count() == 6);
}

TEST_CASE("field JSON") {
  DeltaComplex t2 = torus_complex(2);
  FiniteGroup z4 = make_cyclic(4);
  FlatGaugeField f = field_from_json(json::parse(R"json({
    "edges": {"1": 1, "2": 2, "12": 3}
  })json"),
                                     t2, z4);
  CHECK(is_flat(t2, z4, f));
  Cochain theta = random_cochain(z4, 2, 50, 8);
  int k12[2] = {1, 2}, k21[2] = {2, 1};
  CHECK(holonomy(t2, f, theta) == theta.at(k12) - theta.at(k21));

  json round = field_to_json(f, t2);
  FlatGaugeField back = field_from_json(round, t2, z4);
  CHECK(back.labels == f.labels);

  // violating flatness is rejected: diagonal must be the product
  CHECK_THROWS_AS(field_from_json(json::parse(R"json({"edges":{"1":1,"2":2,"12":0}})json"), t2, z4),
                  error);
  // unlabeled edges are rejected
  CHECK_THROWS_AS(field_from_json(json::parse(R"json({"edges":{"1":1}})json"), t2, z4), error);
  // unknown edges are rejected
  CHECK_THROWS_AS(
      field_from_json(json::parse(R"json({"edges":{"1":1,"2":2,"12":3,"zz":0}})json"), t2, z4), error);
}
