#include <catch2/catch_amalgamated.hpp>

#include "dwkit/cochain.hpp"

using namespace dwkit;

TEST_CASE("coboundary of a constant is zero") {
  FiniteGroup g = make_cyclic(5);
  Cochain c(g, 0);
  c.set({}, phase(2, 7));
  Cochain d = coboundary(c);
  for (int x = 0; x < 5; ++x) {
    int args[1] = {x};
    CHECK(is_zero(d.at(args)));
  }
}

TEST_CASE("hand-evaluated coboundary on Z_2") {
  // c(0) = 0, c(1) = 1/2: (dc)(1,1) = c(1) - c(0) + c(1) = 0
  FiniteGroup z2 = make_cyclic(2);
  Cochain c(z2, 1);
  int one[1] = {1};
  c.set(one, phase(1, 2));
  int args[2] = {1, 1};
  CHECK(is_zero(coboundary_at(c, args)));
  int args01[2] = {0, 1};
  CHECK(is_zero(coboundary_at(c, args01)));
}

TEST_CASE("d after d vanishes") {
  FiniteGroup z4 = make_cyclic(4);
  for (int degree : {1, 2, 3}) {
    for (unsigned seed : {1u, 2u, 3u}) {
      Cochain c = random_cochain(z4, degree, seed, 12);
      Cochain dc = coboundary(c);
      std::vector<int> args(size_t(degree) + 2, 0);
      do {
        CHECK(is_zero(coboundary_at(dc, args)));
      } while (next_tuple(args, z4.order));
    }
  }
}

TEST_CASE("cocycle check reports a witness") {
  FiniteGroup z3 = make_cyclic(3);
  CHECK(is_cocycle(zero_cochain(z3, 2)));
  CHECK(is_normalized(zero_cochain(z3, 2)));

  Cochain c(z3, 1);
  int one[1] = {1};
  c.set(one, phase(1, 3));  // not a homomorphism to Q/Z
  auto chk = check_cocycle(c);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.witness.size() == 2);
  CHECK_FALSE(is_zero(coboundary_at(c, chk.witness)));
}

TEST_CASE("cyclic 3-cocycles") {
  for (int k = 1; k <= 8; ++k)
    for (int p = 0; p < k; ++p) {
      Cochain w = cyclic_3cocycle(k, p);
      CHECK(is_cocycle(w));
      CHECK(is_normalized(w));
    }
  // p = 0 gives the zero cochain
  Cochain w0 = cyclic_3cocycle(4, 0);
  for (const PhaseQ& v : w0.table()) CHECK(is_zero(v));

  Cochain w21 = cyclic_3cocycle(2, 1);
  std::vector<int> args(3, 0);
  do {
    bool all_one = args[0] == 1 && args[1] == 1 && args[2] == 1;
    CHECK(w21.at(args) == (all_one ? phase(1, 2) : PhaseQ{}));
  } while (next_tuple(args, 2));

  int a323[3] = {3, 2, 3};
  CHECK(cyclic_3cocycle(4, 1).at(a323) == phase(3, 4));
}

TEST_CASE("pullbacks") {
  Cochain w = cyclic_3cocycle(2, 1);
  Cochain along_id = pullback(w, hom_identity(w.group()));
  CHECK(along_id.table() == w.table());

  // pullback along the trivial map of a normalized cochain is zero
  FiniteGroup z4 = make_cyclic(4);
  Cochain r = random_cochain(z4, 2, 9, 8);
  GroupHom collapse = make_hom(z4, z4, {0, 0, 0, 0});
  Cochain z = pullback(r, collapse);
  for (const PhaseQ& v : z.table()) CHECK(is_zero(v));

  Cochain lifted = pullback(w, hom_mod(4, 2));
  int args[3] = {1, 1, 1};
  CHECK(lifted.at(args) == phase(1, 2));
  CHECK(is_cocycle(lifted));
  CHECK(is_normalized(lifted));

  // degree is preserved, and the map's target must carry the cochain
  CHECK(lifted.degree() == w.degree());
  CHECK_THROWS_AS(pullback(w, hom_identity(z4)), error);
}

TEST_CASE("pullback commutes with the coboundary") {
  GroupHom mod = hom_mod(6, 3);
  for (unsigned seed : {4u, 5u}) {
    Cochain c = random_cochain(mod.target, 2, seed, 6);
    Cochain lhs = coboundary(pullback(c, mod));
    Cochain rhs = pullback(coboundary(c), mod);
    CHECK(lhs.table() == rhs.table());
  }
}

TEST_CASE("random cochains are deterministic and normalized") {
  FiniteGroup d4 = make_dihedral(4);
  Cochain a = random_cochain(d4, 2, 123, 12);
  Cochain b = random_cochain(d4, 2, 123, 12);
  CHECK(a.table() == b.table());
  Cochain c = random_cochain(d4, 2, 124, 12);
  CHECK(a.table() != c.table());
  CHECK(is_normalized(a));

  Cochain trivial = random_cochain(d4, 3, 7, 1);
  for (const PhaseQ& v : trivial.table()) CHECK(is_zero(v));
}

TEST_CASE("coboundary preserves normalization") {
  for (unsigned seed : {10u, 11u}) {
    Cochain c = random_cochain(make_symmetric(3), 2, seed, 8);
    CHECK(is_normalized(coboundary(c)));
  }
}

TEST_CASE("degree and memory caps") {
  FiniteGroup z2 = make_cyclic(2);
  CHECK_THROWS_AS(Cochain(z2, 5), error);
  CHECK_THROWS_AS(Cochain(make_cyclic(512), 3), error);  // 512^3 entries

  // DWKIT_MEM_BUDGET overrides the dense-table cap
  setenv("DWKIT_MEM_BUDGET", "1000", 1);
  CHECK_THROWS_AS(Cochain(make_cyclic(8), 3), error);  // 8^3 entries need 8 KiB
  unsetenv("DWKIT_MEM_BUDGET");
  CHECK(Cochain(make_cyclic(8), 3).table().size() == 512);
}

TEST_CASE("denominator lcm pre-pass") {
  FiniteGroup z2 = make_cyclic(2);
  Cochain c(z2, 1);
  int one[1] = {1};
  c.set(one, phase(1, 6));
  CHECK(denominator_lcm(c) == 6);
  CHECK(denominator_lcm(zero_cochain(z2, 2)) == 1);
}
