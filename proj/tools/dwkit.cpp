// dwkit: exact invariants of twisted Dijkgraaf-Witten theories for finite
// groups. Every command reads JSON (or builtin fixture URIs), validates its
// inputs, and prints a single JSON document; failures print a structured
// error object and exit 1. Counts are emitted as decimal strings.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dwkit/dwkit.hpp"

namespace {

using dwkit::json;

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

json numeric_json(std::complex<double> z) {
  return json{{"re", fixed12(z.real())}, {"im", fixed12(z.imag())}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CocycleInput {
  std::string cocycle_uri;
  std::string group_uri;  // optional context for zero:<degree>

  dwkit::Cochain resolve() const {
    std::optional<dwkit::FiniteGroup> group;
    if (!group_uri.empty()) group = dwkit::resolve_group(group_uri);
    dwkit::Cochain theta =
        dwkit::resolve_cochain(cocycle_uri, group ? &*group : nullptr);
    if (group)
      dwkit::require(theta.group() == *group, dwkit::errc::invalid_input,
                     "--group does not match the group carried by the cocycle");
    return theta;
  }
};

dwkit::Cochain checked_cocycle(const CocycleInput& in) {
  dwkit::Cochain theta = in.resolve();
  dwkit::require(dwkit::is_normalized(theta), dwkit::errc::not_a_cocycle,
                 "cocycle is not normalized");
  auto chk = dwkit::check_cocycle(theta);
  if (!chk.ok) {
    std::string at = "(";
    for (size_t i = 0; i < chk.witness.size(); ++i)
      at += (i ? "," : "") + std::to_string(chk.witness[i]);
    dwkit::fail(dwkit::errc::not_a_cocycle, "coboundary is nonzero at " + at + ")");
  }
  return theta;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twisted Dijkgraaf-Witten invariants for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads / --numeric may follow the subcommand

  int threads = 1;
  bool numeric = false;
  app.add_option("--threads", threads, "worker threads for the big sums")->capture_default_str();
  app.add_flag("--numeric", numeric, "add floating-point diagnostics (12 decimals)");

  std::string group_uri, cocycle_uri, complex_uri, field_path, hom_uri;
  int torus_n = 2, degree = 2;
  unsigned long long seed = 0;
  long long max_den = 12;
  bool check_all = false;

  auto* group_cmd = app.add_subcommand("group", "group utilities");
  group_cmd->require_subcommand(1);
  auto* group_show = group_cmd->add_subcommand("show", "print the multiplication table");
  group_show->add_option("--group", group_uri, "group URI or file")->required();
  auto* group_verify = group_cmd->add_subcommand("verify", "check the group axioms");
  group_verify->add_option("--group", group_uri, "group URI or file")->required();

  auto* cocycle_cmd = app.add_subcommand("cocycle", "cocycle utilities");
  cocycle_cmd->require_subcommand(1);
  std::string cocycle_pos;
  auto* cocycle_verify = cocycle_cmd->add_subcommand("verify", "check cocycle and normalization");
  cocycle_verify->add_option("file", cocycle_pos, "cocycle URI or file");
  cocycle_verify->add_option("--cocycle", cocycle_uri, "cocycle URI or file");
  cocycle_verify->add_option("--group", group_uri, "group context for zero:<degree>");
  auto* cocycle_cobd = cocycle_cmd->add_subcommand("coboundary", "emit the coboundary");
  cocycle_cobd->add_option("file", cocycle_pos, "cochain URI or file");
  cocycle_cobd->add_option("--cocycle", cocycle_uri, "cochain URI or file");
  cocycle_cobd->add_option("--group", group_uri, "group context for zero:<degree>");
  auto* cocycle_random = cocycle_cmd->add_subcommand("random", "emit a seeded random cochain");
  cocycle_random->add_option("--group", group_uri, "group URI or file")->required();
  cocycle_random->add_option("--degree", degree, "cochain degree")->required();
  cocycle_random->add_option("--seed", seed, "RNG seed")->capture_default_str();
  cocycle_random->add_option("--max-den", max_den, "denominator bound")->capture_default_str();

  auto* transgress_cmd = app.add_subcommand("transgress", "transgress to the loop groupoid");
  transgress_cmd->add_option("--cocycle", cocycle_uri, "cocycle URI or file")->required();
  transgress_cmd->add_option("--group", group_uri, "group context for zero:<degree>");

  auto* torus_cmd = app.add_subcommand("torus", "commuting-tuple torus invariant");
  torus_cmd->add_option("--n", torus_n, "torus dimension (= cocycle degree)")->required();
  torus_cmd->add_option("--group", group_uri, "group URI or file");
  torus_cmd->add_option("--cocycle", cocycle_uri, "cocycle URI or file")->required();

  auto* simples_cmd = app.add_subcommand("simples", "twisted Drinfeld double simple count");
  simples_cmd->add_option("--group", group_uri, "group URI or file");
  simples_cmd->add_option("--cocycle", cocycle_uri, "3-cocycle URI or file")->required();
  simples_cmd->add_flag("--check-all", check_all, "run the state-sum and transgression channels");

  auto* statesum_cmd = app.add_subcommand("statesum", "partition function of a complex");
  statesum_cmd->add_option("--complex", complex_uri, "complex URI or file")->required();
  statesum_cmd->add_option("--cocycle", cocycle_uri, "cocycle URI or file")->required();
  statesum_cmd->add_option("--group", group_uri, "group context for zero:<degree>");

  auto* holonomy_cmd = app.add_subcommand("holonomy", "holonomy of one flat field");
  holonomy_cmd->add_option("--complex", complex_uri, "complex URI or file")->required();
  holonomy_cmd->add_option("--cocycle", cocycle_uri, "cocycle URI or file")->required();
  holonomy_cmd->add_option("--field", field_path, "field JSON file")->required();
  holonomy_cmd->add_option("--group", group_uri, "group context for zero:<degree>");

  auto* equivariant_cmd = app.add_subcommand("equivariant", "sector counts of the pushforward");
  equivariant_cmd->add_option("--hom", hom_uri, "homomorphism URI or file")->required();
  equivariant_cmd->add_option("--cocycle", cocycle_uri, "3-cocycle URI or file")->required();
  equivariant_cmd->add_option("--group", group_uri, "group context for zero:<degree>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit(json{{"error", {{"kind", "InvalidInput"}, {"detail", e.what()}}}});
    return 1;
  }

  try {
    if (cocycle_uri.empty()) cocycle_uri = cocycle_pos;
    if ((cocycle_verify->parsed() || cocycle_cobd->parsed()) && cocycle_uri.empty())
      dwkit::fail(dwkit::errc::invalid_input, "a cocycle URI or file is required");
    CocycleInput cin{cocycle_uri, group_uri};

    if (group_show->parsed()) {
      emit(dwkit::group_to_json(dwkit::resolve_group(group_uri)));
    } else if (group_verify->parsed()) {
      dwkit::FiniteGroup g = dwkit::resolve_group(group_uri);
      emit(json{{"ok", true},
                {"order", g.order},
                {"abelian", g.is_abelian()},
                {"classes", dwkit::conjugacy_classes(g).size()}});
    } else if (cocycle_verify->parsed()) {
      dwkit::Cochain theta = checked_cocycle(cin);
      emit(json{{"ok", true},
                {"degree", theta.degree()},
                {"order", theta.group().order},
                {"normalized", true},
                {"cocycle", true}});
    } else if (cocycle_cobd->parsed()) {
      emit(dwkit::cochain_to_json(dwkit::coboundary(cin.resolve())));
    } else if (cocycle_random->parsed()) {
      emit(dwkit::cochain_to_json(
          dwkit::random_cochain(dwkit::resolve_group(group_uri), degree, seed, max_den)));
    } else if (transgress_cmd->parsed()) {
      dwkit::GroupoidCochain tau = dwkit::transgress(checked_cocycle(cin));
      json entries = json::object();
      const dwkit::FiniteGroup& g = tau.group();
      std::vector<int> hs(size_t(tau.degree()), 0);
      for (int object = 0; object < g.order; ++object) {
        std::fill(hs.begin(), hs.end(), 0);
        do {
          dwkit::PhaseQ v = tau.at(object, hs);
          if (!dwkit::is_zero(v)) {
            std::string key = "(" + std::to_string(object) + ";";
            for (size_t i = 0; i < hs.size(); ++i)
              key += (i ? "," : "") + std::to_string(hs[i]);
            entries[key + ")"] = dwkit::to_string(v);
          }
        } while (!hs.empty() && dwkit::next_tuple(hs, g.order));
      }
      emit(json{{"degree", tau.degree()}, {"order", g.order}, {"entries", entries},
                {"default", "0/1"}});
    } else if (torus_cmd->parsed()) {
      dwkit::Cochain theta = checked_cocycle(cin);
      dwkit::require(theta.degree() == torus_n, dwkit::errc::invalid_input,
                     "--n must equal the cocycle degree");
      long long value = dwkit::torus_invariant(theta, threads);
      json out{{"n", torus_n}, {"value", std::to_string(value)}};
      if (numeric) out["numeric"] = fixed12(double(value));
      emit(out);
    } else if (simples_cmd->parsed()) {
      dwkit::Cochain theta = checked_cocycle(cin);
      dwkit::InvariantReport report = dwkit::drinfeld_double_simples(theta, threads, check_all);
      json checks = json::array();
      for (const dwkit::CrossCheck& chk : report.cross_checks)
        checks.push_back(json{{"channel", chk.channel},
                              {"value", dwkit::to_string(chk.value)},
                              {"equal", chk.equal}});
      emit(json{{"value", dwkit::to_string(report.value)},
                {"channel", report.channel},
                {"cross_checks", checks}});
    } else if (statesum_cmd->parsed()) {
      dwkit::DeltaComplex complex = dwkit::resolve_complex(complex_uri);
      dwkit::validate_complex(complex);
      dwkit::Cochain theta = checked_cocycle(cin);
      dwkit::Rational z = dwkit::state_sum(complex, theta, threads);
      json out{{"value", dwkit::to_string(z)}};
      if (numeric) out["numeric"] = fixed12(double(z.num) / double(z.den));
      emit(out);
    } else if (holonomy_cmd->parsed()) {
      dwkit::DeltaComplex complex = dwkit::resolve_complex(complex_uri);
      dwkit::validate_complex(complex);
      dwkit::Cochain theta = checked_cocycle(cin);
      dwkit::FlatGaugeField field = dwkit::field_from_json(
          dwkit::detail::load_json_file(field_path), complex, theta.group());
      dwkit::PhaseQ h = dwkit::holonomy(complex, field, theta);
      json out{{"value", dwkit::to_string(h)}};
      if (numeric) out["numeric"] = numeric_json(dwkit::to_complex(h));
      emit(out);
    } else if (equivariant_cmd->parsed()) {
      dwkit::GroupHom lambda = dwkit::resolve_hom(hom_uri);
      dwkit::Cochain theta = checked_cocycle(cin);
      dwkit::SectorCounts sc = dwkit::equivariant_sector_counts(lambda, theta);
      json sectors = json::object();
      for (int j = 0; j < int(sc.counts.size()); ++j)
        sectors[std::to_string(j)] = std::to_string(sc.counts[size_t(j)]);
      emit(json{{"sectors", sectors}, {"total", std::to_string(sc.total)}});
    }
  } catch (const dwkit::error& e) {
    emit(json{{"error", {{"kind", dwkit::errc_name(e.kind())}, {"detail", e.detail()}}}});
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"error", {{"kind", "InvalidInput"}, {"detail", e.what()}}}});
    return 1;
  }
  return 0;
}
