// Command-line front end: builds groups from spec strings, counts cyclic
// subgroups, and runs the verification campaigns over corpus files.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclo/builtin_corpus.hpp"
#include "cyclo/counting.hpp"
#include "cyclo/group_spec.hpp"
#include "cyclo/harness.hpp"
#include "cyclo/matrix_groups.hpp"
#include "cyclo/structure.hpp"
#include "cyclo/version.hpp"

namespace {

struct GoldenRow {
  std::string quantity;
  std::uint64_t computed;
  std::uint64_t expected;
};

std::vector<GoldenRow> golden_table() {
  using namespace cyclo;
  std::vector<GoldenRow> rows;
  auto c_of = [](const Group& g) { return census(g).total; };
  rows.push_back({"c(A5)", c_of(alternating(5)), 32});
  rows.push_back({"c(PSL(2,4))", c_of(psl2(4)), 32});
  rows.push_back({"c(SL(2,5))", c_of(sl2(5)), 49});
  rows.push_back({"c(PSL(2,7))", c_of(psl2(7)), 79});
  rows.push_back({"c(PSL(2,9))", c_of(psl2(9)), 167});
  rows.push_back({"c(A5 x Z7)", c_of(direct_product(alternating(5), cyclic(7))), 64});
  rows.push_back({"c(Z5 x A4)", c_of(direct_product(cyclic(5), alternating(4))), 16});
  rows.push_back(
      {"c((Z5 x A4) x Z7)",
       c_of(direct_product(direct_product(cyclic(5), alternating(4)), cyclic(7))), 32});
  rows.push_back({"c(A4)", c_of(alternating(4)), 8});
  rows.push_back({"c(SL(2,3))", c_of(sl2(3)), 13});
  rows.push_back({"c(S4)", c_of(symmetric(4)), 17});
  rows.push_back({"c(SmallGroup(36,3))", c_of(named(36, 3)), 12});
  rows.push_back({"c(SmallGroup(56,11))", c_of(named(56, 11)), 16});
  rows.push_back({"c(SmallGroup(108,3))", c_of(named(108, 3)), 16});
  for (std::uint64_t p : {2, 3, 5}) {
    std::uint64_t power = 1;
    for (unsigned n = 1; n <= 4; ++n) {
      power *= p;
      rows.push_back({"c(E" + std::to_string(p) + "^" + std::to_string(n) + ")",
                      c_of(elementary_abelian(p, n)), elementary_abelian_c(p, n)});
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    CyclicCensus c = census(psl2(q));
    rows.push_back({"involutions(PSL(2," + std::to_string(q) + "))", c.involutions,
                    involution_count_formula(q)});
  }
  return rows;
}

void print_census_text(const cyclo::Group& g, const cyclo::CyclicCensus& c) {
  std::cout << "group:  " << g.label() << "\n";
  std::cout << "order:  " << g.order() << "\n";
  std::cout << "c(G):   " << c.total << "\n";
  std::cout << "by order:";
  for (auto [m, count] : c.by_order) std::cout << " " << m << ":" << count;
  std::cout << "\n";
}

nlohmann::ordered_json census_json(const cyclo::Group& g, const cyclo::CyclicCensus& c) {
  nlohmann::ordered_json j;
  j["label"] = g.label();
  j["order"] = g.order();
  j["c_total"] = c.total;
  nlohmann::ordered_json by_order = nlohmann::ordered_json::object();
  for (auto [m, count] : c.by_order) by_order[std::to_string(m)] = count;
  j["c_by_order"] = std::move(by_order);
  j["involutions"] = c.involutions;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group toolkit: cyclic subgroup counting and theorem verification"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --cap after a subcommand
  app.set_version_flag("--version", std::string(cyclo::kToolkitVersion));

  std::size_t cap = cyclo::kDefaultClosureCap;
  app.add_option("--cap", cap, "closure cap (max elements per group)")->capture_default_str();

  std::string spec_text;
  bool as_json = false;

  auto* count_cmd = app.add_subcommand("count", "order, c(G) and the by-order split of a spec");
  count_cmd->add_option("spec", spec_text, "group spec, e.g. \"alternating 5\"")->required();

  auto* census_cmd = app.add_subcommand("census", "full cyclic-subgroup census of a spec");
  census_cmd->add_option("spec", spec_text)->required();
  census_cmd->add_flag("--json", as_json, "emit JSON");

  bool check = false;
  auto* build_cmd = app.add_subcommand("build", "construct a spec and run constructor self-tests");
  build_cmd->add_option("spec", spec_text)->required();
  build_cmd->add_flag("--check", check, "re-close and compare element tables");

  std::string campaign;
  std::string corpus_path;
  std::string format = "json";
  unsigned jobs = 1;
  unsigned timeout_secs = 30;
  std::uint64_t pair_budget = 200;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign over a corpus");
  verify_cmd->add_option("campaign", campaign, "theorem-a | theorem-b | identities")
      ->required()
      ->check(CLI::IsMember({"theorem-a", "theorem-b", "identities"}));
  verify_cmd->add_option("--corpus", corpus_path, "corpus file (default: built-in corpus)");
  verify_cmd->add_flag("--json{json},--tsv{tsv}", format, "output format (default json)");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify_cmd->add_option("--timeout", timeout_secs, "per-entry budget, seconds")
      ->capture_default_str();
  verify_cmd->add_option("--pair-budget", pair_budget, "coprime pairs checked by identities")
      ->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "recompute the paper-anchored golden table");
  table_cmd->add_flag("--json", as_json, "emit JSON");

  app.add_subcommand("corpus", "print the built-in corpus (one JSON entry per line)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count_cmd->parsed()) {
      cyclo::Group g = cyclo::build(spec_text, cap);
      print_census_text(g, cyclo::census(g));
      return 0;
    }

    if (census_cmd->parsed()) {
      cyclo::Group g = cyclo::build(spec_text, cap);
      cyclo::CyclicCensus c = cyclo::census(g);
      if (as_json)
        std::cout << census_json(g, c).dump(2) << "\n";
      else
        print_census_text(g, c);
      return 0;
    }

    if (build_cmd->parsed()) {
      cyclo::GroupSpec spec = cyclo::parse_spec(spec_text);
      cyclo::Group g = cyclo::build(spec, cap);
      std::cout << "built " << g.label() << ": order " << g.order() << ", degree " << g.degree()
                << ", " << g.generators().size() << " generators\n";
      if (check) {
        cyclo::Group again = cyclo::build(spec, cap);
        if (again.order() != g.order() || again.elements() != g.elements()) {
          std::cout << "FAIL: rebuild produced a different element table\n";
          return 1;
        }
        cyclo::MillerReport miller = cyclo::check_miller(g);
        std::cout << "rebuild deterministic: yes\n";
        std::cout << "identity-sum check: " << (miller.ok ? "ok" : "FAIL") << "\n";
        if (!miller.ok) return 1;
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<cyclo::CorpusEntry> corpus =
          corpus_path.empty() ? cyclo::builtin_corpus() : cyclo::load_corpus(corpus_path);
      cyclo::CampaignConfig cfg;
      cfg.jobs = jobs;
      cfg.per_entry_timeout = std::chrono::seconds(timeout_secs);
      cfg.closure_cap = cap;
      cfg.pair_budget = pair_budget;
      if (campaign == "identities") {
        cyclo::IdentityReport rep = cyclo::identity_suite(corpus, cfg);
        std::cout << cyclo::to_json(rep).dump(2) << "\n";
        return rep.exit_code();
      }
      cyclo::CampaignReport rep = campaign == "theorem-a" ? cyclo::verify_theorem_A(corpus, cfg)
                                                          : cyclo::verify_theorem_B(corpus, cfg);
      if (format == "tsv")
        std::cout << cyclo::to_tsv(rep);
      else
        std::cout << cyclo::to_json(rep).dump(2) << "\n";
      return rep.exit_code();
    }

    if (table_cmd->parsed()) {
      std::vector<GoldenRow> rows = golden_table();
      bool all_ok = true;
      if (as_json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const GoldenRow& row : rows) {
          j.push_back({{"quantity", row.quantity},
                       {"computed", row.computed},
                       {"expected", row.expected},
                       {"ok", row.computed == row.expected}});
          all_ok = all_ok && row.computed == row.expected;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("%-28s %10s %10s  %s\n", "quantity", "computed", "expected", "ok");
        for (const GoldenRow& row : rows) {
          bool ok = row.computed == row.expected;
          all_ok = all_ok && ok;
          std::printf("%-28s %10llu %10llu  %s\n", row.quantity.c_str(),
                      static_cast<unsigned long long>(row.computed),
                      static_cast<unsigned long long>(row.expected), ok ? "ok" : "MISMATCH");
        }
      }
      return all_ok ? 0 : 1;
    }

    // corpus
    std::cout << cyclo::builtin_corpus_text();
    return 0;
  } catch (const cyclo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
