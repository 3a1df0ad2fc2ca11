#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dwkit/cochain.hpp"
#include "dwkit/error.hpp"
#include "dwkit/group.hpp"
#include "dwkit/phase.hpp"
#include "dwkit/rational.hpp"
#include "dwkit/simplicial.hpp"
#include "dwkit/transgression.hpp"

namespace dwkit {

// <psi^*_{g_1..g_n} theta, mu_{T^n}> for a pairwise commuting tuple: the
// shuffle decomposition of the torus fundamental class gives
// sum over permutations pi of sgn(pi) * theta(g_{pi(1)},..,g_{pi(n)}).
// Shares its orientation convention with torus_complex, so the closed form
// and the state sum are genuinely independent computations of one number.
inline PhaseQ torus_holonomy(const FiniteGroup& g, std::span<const int> tuple,
                             const Cochain& theta) {
  int n = theta.degree();
  require(int(tuple.size()) == n, errc::invalid_input, "tuple length must match cocycle degree");
  require(theta.group() == g, errc::invalid_input, "cocycle lives on a different group");
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      require(g.mul(tuple[i], tuple[j]) == g.mul(tuple[j], tuple[i]), errc::invalid_input,
              "torus holonomy needs a pairwise commuting tuple");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto parity = [&]() {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
      for (size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    return inv % 2;
  };
  PhaseQ acc;
  std::vector<int> args(static_cast<size_t>(n));
  do {
    for (int i = 0; i < n; ++i) args[size_t(i)] = tuple[size_t(perm[size_t(i)])];
    PhaseQ term = theta.at(args);
    acc = (parity() == 0) ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// #simples of the twisted theory on T^{n-2}:
//   (1/|G|) sum over commuting n-tuples of e^{2 pi i torus_holonomy},
// accumulated exactly and certified to be a non-negative integer.
inline long long torus_invariant(const Cochain& theta, int threads = 1) {
  int n = theta.degree();
  require(n >= 2, errc::invalid_input, "torus invariant needs degree >= 2");
  require(threads >= 1, errc::invalid_input, "thread count must be positive");
  const FiniteGroup& g = theta.group();
  long long modulus = denominator_lcm(theta);
  std::vector<std::vector<int>> tuples = commuting_tuples(g, n);
  size_t nthreads = std::min<size_t>(size_t(threads), std::max<size_t>(tuples.size(), 1));
  std::vector<PhaseSum> partial(nthreads, PhaseSum(modulus));
  auto work = [&](size_t t) {
    for (size_t i = t; i < tuples.size(); i += nthreads)
      partial[t].add(torus_holonomy(g, tuples[i], theta));
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
  Rational value = total.exact_rational();
  require(value.num % g.order == 0, errc::not_rational,
          "torus sum " + std::to_string(value.num) + " is not divisible by the group order");
  long long count = value.num / g.order;
  require(count >= 0, errc::negative_count,
          "torus invariant is negative: " + std::to_string(count));
  return count;
}

// Count of irreducible theta-twisted projective representations; the n = 2
// torus invariant under another name.
inline long long twisted_rep_count(const Cochain& theta, int threads = 1) {
  require(theta.degree() == 2, errc::invalid_input, "twisted representations need a 2-cocycle");
  return torus_invariant(theta, threads);
}

struct CrossCheck {
  std::string channel;
  Rational value;
  bool equal = false;
};

struct InvariantReport {
  Rational value;
  std::string channel;
  std::vector<CrossCheck> cross_checks;
};

// Simple objects of the theta-twisted Drinfeld double, computed along three
// independent routes: the commuting-triple closed form, the T^3 state sum,
// and the transgressed groupoid count over G//G. The routes exercise disjoint
// parts of the theory, so any disagreement falsifies the build and is fatal.
inline InvariantReport drinfeld_double_simples(const Cochain& theta, int threads = 1,
                                               bool check_all = true) {
  require(theta.degree() == 3, errc::invalid_input, "Drinfeld double count needs a 3-cocycle");
  InvariantReport report;
  report.channel = "commuting-tuples";
  report.value = Rational{torus_invariant(theta, threads), 1};
  if (!check_all) return report;

  Rational via_state_sum = state_sum(torus_complex(3), theta, threads);
  report.cross_checks.push_back(
      {"state-sum-T3", via_state_sum, via_state_sum == report.value});

  long long via_transgression =
      twisted_irrep_count(loop_groupoid(theta.group()), transgress(theta));
  Rational tr{via_transgression, 1};
  report.cross_checks.push_back({"transgression-count", tr, tr == report.value});

  for (const CrossCheck& chk : report.cross_checks)
    require(chk.equal, errc::cross_check_mismatch,
            "channel " + chk.channel + " = " + to_string(chk.value) +
                " disagrees with commuting-tuples = " + to_string(report.value));
  return report;
}

}  // namespace dwkit
