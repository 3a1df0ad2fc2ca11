#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "dwkit/transgression.hpp"

using namespace dwkit;

namespace {

std::vector<FiniteGroup> small_groups() {
  return {make_cyclic(2), make_cyclic(3), make_cyclic(4),
          direct_product(make_cyclic(2), make_cyclic(2)),
          make_cyclic(6), make_symmetric(3), make_dihedral(4), make_cyclic(8)};
}

}  // namespace

TEST_CASE("loop groupoid shape") {
  FiniteGroup s3 = make_symmetric(3);
  FiniteGroupoid g = loop_groupoid(s3);
  CHECK(g.object_count() == 6);
  CHECK(g.morphisms.size() == 36);
  CHECK(component_count(g) == 3);  // conjugacy classes

  FiniteGroup z4 = make_cyclic(4);
  FiniteGroupoid a = loop_groupoid(z4);
  for (const GroupoidMorphism& m : a.morphisms) CHECK(m.src == m.dst);  // abelian
  CHECK(component_count(a) == 4);
}

TEST_CASE("transgression shuffle formula in low degree") {
  FiniteGroup s3 = make_symmetric(3);
  Cochain theta2 = random_cochain(s3, 2, 5, 12);
  GroupoidCochain tau2 = transgress(theta2);
  CHECK(tau2.degree() == 1);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      int gh[2] = {g, h};
      int hg[2] = {h, s3.conj(g, h)};
      int hs[1] = {h};
      CHECK(tau2.at(g, hs) == theta2.at(gh) - theta2.at(hg));
    }

  Cochain theta3 = random_cochain(s3, 3, 6, 12);
  GroupoidCochain tau3 = transgress(theta3);
  CHECK(tau3.degree() == 2);
  for (int g = 0; g < 6; ++g)
    for (int h1 = 0; h1 < 6; ++h1)
      for (int h2 = 0; h2 < 6; ++h2) {
        int g1 = s3.conj(g, h1);
        int g2 = s3.conj(g, s3.mul(h1, h2));
        int t0[3] = {g, h1, h2};
        int t1[3] = {h1, g1, h2};
        int t2[3] = {h1, h2, g2};
        int hs[2] = {h1, h2};
        CHECK(tau3.at(g, hs) == theta3.at(t0) - theta3.at(t1) + theta3.at(t2));
      }

  GroupoidCochain tz = transgress(zero_cochain(s3, 3));
  for (const PhaseQ& v : tz.table()) CHECK(is_zero(v));
}

TEST_CASE("transgression of a cocycle is a normalized groupoid cocycle") {
  for (const FiniteGroup& g : small_groups()) {
    for (int degree : {2, 3}) {
      for (unsigned seed : {1u, 2u}) {
        Cochain theta = coboundary(random_cochain(g, degree - 1, seed, 8));
        REQUIRE(is_cocycle(theta));
        GroupoidCochain tau = transgress(theta);
        CHECK(is_groupoid_cocycle(tau));
        CHECK(is_normalized(tau));
      }
    }
  }
  for (int k = 2; k <= 8; ++k)
    for (int p = 0; p < k; ++p) CHECK(is_groupoid_cocycle(transgress(cyclic_3cocycle(k, p))));
}

TEST_CASE("groupoid coboundary") {
  FiniteGroup s3 = make_symmetric(3);

  // degree 0 cochains constant on components are closed
  GroupoidCochain c0(s3, 0);
  auto comp = components(loop_groupoid(s3));
  for (int g = 0; g < 6; ++g) c0.set(g, {}, phase(comp[size_t(g)], 7));
  GroupoidCochain d0 = groupoid_coboundary(c0);
  for (const PhaseQ& v : d0.table()) CHECK(is_zero(v));

  // a degree-0 cochain separating conjugate objects is not closed
  if (component_count(loop_groupoid(s3)) < s3.order) {
    GroupoidCochain sep(s3, 0);
    for (int g = 0; g < 6; ++g) sep.set(g, {}, phase(g, 7));
    CHECK_FALSE(is_groupoid_cocycle(sep));
  }

  // d after d vanishes on random groupoid cochains
  std::mt19937_64 rng(17);
  for (int degree : {1, 2}) {
    GroupoidCochain c(s3, degree);
    std::vector<int> hs(size_t(degree), 0);
    for (int g = 0; g < 6; ++g) {
      std::fill(hs.begin(), hs.end(), 0);
      do {
        c.set(g, hs, phase((long long)(rng() % 12), 12));
      } while (next_tuple(hs, 6));
    }
    GroupoidCochain dc = groupoid_coboundary(c);
    std::vector<int> args(size_t(degree) + 2, 0);
    for (int g = 0; g < 6; ++g) {
      std::fill(args.begin(), args.end(), 0);
      do {
        CHECK(is_zero(groupoid_coboundary_at(dc, g, args)));
      } while (next_tuple(args, 6));
    }
  }
}

TEST_CASE("twisted counts with trivial twist are Burnside counts") {
  FiniteGroup s3 = make_symmetric(3);
  GroupoidCochain zero(s3, 2);
  CHECK(twisted_irrep_count(loop_groupoid(s3), zero) == 8);  // 3 + 2 + 3 per class

  for (const FiniteGroup& g : {make_cyclic(5), make_dihedral(4), make_symmetric(4)}) {
    // one-object groupoid with automorphisms G: count = #conjugacy classes
    FiniteGroupoid one;
    one.ambient = g;
    one.object_h = {g.identity};
    for (int h = 0; h < g.order; ++h) one.morphisms.push_back({0, 0, h});
    long long count =
        twisted_irrep_count(one, [](int, int, int) { return PhaseQ{}; }, 1);
    CHECK(count == (long long)conjugacy_classes(g).size());
  }

  FiniteGroupoid empty;
  empty.ambient = s3;
  CHECK(twisted_irrep_count(empty, [](int, int, int) { return PhaseQ{}; }, 1) == 0);
}

TEST_CASE("homotopy fibers") {
  // identity map, fiber over e: only the identity survives, one component
  FiniteGroup s3 = make_symmetric(3);
  GroupHom id = hom_identity(s3);
  FiniteGroupoid fib = homotopy_fiber(id, s3.identity);
  for (int x = 0; x < fib.object_count(); ++x) CHECK(fib.object_h[size_t(x)] == s3.identity);
  CHECK(fib.object_count() == s3.order);  // one object per chosen path
  CHECK(component_count(fib) == 1);

  // trivial target: the fiber is all of G//G
  GroupHom collapse = hom_trivial(s3);
  FiniteGroupoid whole = homotopy_fiber(collapse, 0);
  CHECK(whole.object_count() == 6);
  CHECK(whole.morphisms.size() == 36);
  CHECK(groupoid_signature(whole) == groupoid_signature(loop_groupoid(s3)));

  // Z_4 -> Z_2: two components with automorphism group Z_2 over each j
  GroupHom mod = hom_mod(4, 2);
  for (int j = 0; j < 2; ++j) {
    FiniteGroupoid f = homotopy_fiber(mod, j);
    auto [ncomp, aut_orders] = groupoid_signature(f);
    CHECK(ncomp == 2);
    CHECK(aut_orders == std::vector<int>{2, 2});
  }
}

TEST_CASE("kernel sectors") {
  GroupHom mod = hom_mod(4, 2);
  FiniteGroupoid sector = kernel_sector(mod, 1);
  CHECK(sector.object_h == std::vector<int>{1, 3});
  auto [ncomp, aut_orders] = groupoid_signature(sector);
  CHECK(ncomp == 2);
  CHECK(aut_orders == std::vector<int>{2, 2});

  // identity map: one object with trivial automorphisms
  FiniteGroup z3 = make_cyclic(3);
  FiniteGroupoid single = kernel_sector(hom_identity(z3), 2);
  CHECK(single.object_h == std::vector<int>{2});
  CHECK(single.morphisms.size() == 1);

  CHECK_THROWS_AS(kernel_sector(make_hom(make_cyclic(2), make_cyclic(4), {0, 2}), 0), error);
}

TEST_CASE("kernel sector is equivalent to the homotopy fiber") {
  std::vector<GroupHom> maps;
  maps.push_back(hom_mod(4, 2));
  maps.push_back(hom_sign(3));
  maps.push_back(hom_mod(6, 3));
  maps.push_back(hom_trivial(make_dihedral(4)));
  for (const GroupHom& lambda : maps) {
    REQUIRE(is_surjective(lambda));
    for (int j = 0; j < lambda.target.order; ++j)
      CHECK(groupoid_signature(homotopy_fiber(lambda, j)) ==
            groupoid_signature(kernel_sector(lambda, j)));
  }
}

TEST_CASE("equivariant sector counts run both routes") {
  // Z_4 -> Z_2 with every cyclic twist; the dual-route check is internal
  GroupHom mod = hom_mod(4, 2);
  for (int p = 0; p < 4; ++p) {
    SectorCounts sc = equivariant_sector_counts(mod, cyclic_3cocycle(4, p));
    REQUIRE(sc.counts.size() == 2);
    CHECK(sc.total == sc.counts[0] + sc.counts[1]);
    CHECK(sc.counts[0] > 0);
  }

  // sign map on S_3, theta = 0: sectors are 9 (kernel classes with Z_3
  // centralizers) and 1 (the connected odd sector with trivial automorphisms)
  GroupHom sign = hom_sign(3);
  SectorCounts sc = equivariant_sector_counts(sign, zero_cochain(sign.source, 3));
  CHECK(sc.counts == std::vector<long long>{9, 1});

  // trivial target: the single sector counts all of G//G
  FiniteGroup z2 = make_cyclic(2);
  SectorCounts whole = equivariant_sector_counts(hom_trivial(z2), cyclic_3cocycle(2, 1));
  CHECK(whole.counts == std::vector<long long>{4});

  // identity map: every sector is a point with trivial automorphisms
  SectorCounts id_counts = equivariant_sector_counts(hom_identity(z2), zero_cochain(z2, 3));
  CHECK(id_counts.counts == std::vector<long long>{1, 1});
}

TEST_CASE("counts are invariant under coboundary shifts of the twist") {
  FiniteGroup z4 = make_cyclic(4);
  FiniteGroupoid gg = loop_groupoid(z4);
  Cochain theta = cyclic_3cocycle(4, 1);
  long long base = twisted_irrep_count(gg, transgress(theta));
  for (unsigned seed : {3u, 4u, 5u}) {
    Cochain shifted = theta + coboundary(random_cochain(z4, 2, seed, 8));
    CHECK(twisted_irrep_count(gg, transgress(shifted)) == base);
  }
}
