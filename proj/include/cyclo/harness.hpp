#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "cyclo/counting.hpp"
#include "cyclo/group_spec.hpp"
#include "cyclo/structure.hpp"
#include "cyclo/version.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// corpus files: one JSON object per line
//   {"label": "A5", "spec": "alternating 5", "expected": {"c_total": 32}}

struct Expected {
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> c_total;
  std::optional<bool> solvable;
  std::optional<bool> supersolvable;
};

struct CorpusEntry {
  std::string label;
  std::string spec_text;
  GroupSpec spec;
  Expected expected;
};

inline std::vector<CorpusEntry> load_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::unordered_set<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank line
    if (line[first] == '#') continue;          // comment
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
    }
    if (!j.is_object() || !j.contains("label") || !j.contains("spec"))
      throw ParseError("corpus entry needs 'label' and 'spec' fields", line_no);
    CorpusEntry entry;
    entry.label = j.at("label").get<std::string>();
    entry.spec_text = j.at("spec").get<std::string>();
    if (!labels.insert(entry.label).second)
      throw DuplicateLabel("label '" + entry.label + "' appears twice (line " +
                           std::to_string(line_no) + ")");
    try {
      entry.spec = parse_spec(entry.spec_text);
    } catch (const ParseError& e) {
      throw ParseError("entry '" + entry.label + "': " + e.what(), line_no);
    }
    if (j.contains("expected")) {
      const auto& e = j.at("expected");
      if (e.contains("order")) entry.expected.order = e.at("order").get<std::uint64_t>();
      if (e.contains("c_total")) entry.expected.c_total = e.at("c_total").get<std::uint64_t>();
      if (e.contains("solvable")) entry.expected.solvable = e.at("solvable").get<bool>();
      if (e.contains("supersolvable"))
        entry.expected.supersolvable = e.at("supersolvable").get<bool>();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'");
  return load_corpus(in);
}

inline std::vector<CorpusEntry> load_corpus_text(const std::string& text) {
  std::istringstream in(text);
  return load_corpus(in);
}

// ---------------------------------------------------------------------------
// campaign rows

struct CampaignConfig {
  unsigned jobs = 1;
  std::chrono::seconds per_entry_timeout{30};
  std::size_t closure_cap = kDefaultClosureCap;
  std::uint64_t pair_budget = 200;          // coprime pairs checked by the identity suite
  std::uint64_t pair_order_limit = 5000;    // skip pairs whose product would exceed this
  std::uint64_t quotient_order_limit = 2000;
};

struct VerdictRow {
  std::string label;
  std::uint64_t order = 0;
  std::uint64_t c_total = 0;
  std::map<std::uint64_t, std::uint64_t> c_by_order;
  bool solvable = false;
  bool supersolvable = false;
  bool perfect = false;
  bool simple = false;
  std::string recognized_as;   // empty when no match
  std::string theorem_A_status;  // consistent | exception_A5 | exception_SL25 | VIOLATION | error | timeout
  std::string theorem_B_status;  // consistent | exception_listed | VIOLATION | not_applicable | error | timeout
  std::string error;             // failure note; empty on success
};

struct CampaignSummary {
  std::uint64_t violations = 0;
  std::uint64_t exceptions = 0;
  std::uint64_t errors = 0;
};

struct CampaignReport {
  std::vector<VerdictRow> rows;
  CampaignSummary summary;
  std::string toolkit_version = kToolkitVersion;

  /// 0 all consistent, 2 violations present, 3 build/parse errors present.
  int exit_code() const {
    if (summary.errors) return 3;
    if (summary.violations) return 2;
    return 0;
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline void check_deadline(Clock::time_point deadline) {
  if (Clock::now() > deadline) throw Timeout("per-entry time budget exhausted");
}

inline bool theorem_b_exception_name(const Recognition& rec) {
  if (rec.status != Recognition::Status::matched) return false;
  if (rec.family_q) return true;  // Z_q x A4 for any prime q
  return rec.name == "A4" || rec.name == "SL(2,3)" || rec.name == "S4" ||
         rec.name == "SmallGroup(36,3)" || rec.name == "SmallGroup(56,11)" ||
         rec.name == "SmallGroup(108,3)";
}

inline VerdictRow evaluate_entry(const CorpusEntry& entry, const CampaignConfig& cfg) {
  VerdictRow row;
  row.label = entry.label;
  const auto deadline = Clock::now() + cfg.per_entry_timeout;
  try {
    Group g = build(entry.spec, cfg.closure_cap);
    row.order = g.order();
    check_deadline(deadline);

    CyclicCensus c = census(g);
    row.c_total = c.total;
    row.c_by_order = c.by_order;
    check_deadline(deadline);

    StructureReport st = structure_report(g);
    row.solvable = st.solvable;
    row.supersolvable = st.supersolvable;
    row.perfect = st.perfect;
    row.simple = st.simple;
    check_deadline(deadline);

    Recognition rec = recognize(g);
    if (rec.status == Recognition::Status::matched) row.recognized_as = rec.name;
    check_deadline(deadline);

    if (entry.expected.order && *entry.expected.order != row.order)
      throw Error("expected order " + std::to_string(*entry.expected.order) + ", got " +
                  std::to_string(row.order));
    if (entry.expected.c_total && *entry.expected.c_total != row.c_total)
      throw Error("expected c_total " + std::to_string(*entry.expected.c_total) + ", got " +
                  std::to_string(row.c_total));
    if (entry.expected.solvable && *entry.expected.solvable != row.solvable)
      throw Error("solvable flag does not match the pinned expectation");
    if (entry.expected.supersolvable && *entry.expected.supersolvable != row.supersolvable)
      throw Error("supersolvable flag does not match the pinned expectation");

    if (!row.solvable && row.c_total < 50) {
      if (row.recognized_as == "A5")
        row.theorem_A_status = "exception_A5";
      else if (row.recognized_as == "SL(2,5)")
        row.theorem_A_status = "exception_SL25";
      else
        row.theorem_A_status = "VIOLATION";
    } else {
      row.theorem_A_status = "consistent";
    }

    if (row.c_total <= 17) {
      if (row.supersolvable)
        row.theorem_B_status = "consistent";
      else if (theorem_b_exception_name(rec))
        row.theorem_B_status = "exception_listed";
      else
        row.theorem_B_status = "VIOLATION";
    } else {
      row.theorem_B_status = "not_applicable";
    }
  } catch (const Timeout& e) {
    row.error = e.what();
    row.theorem_A_status = row.theorem_B_status = "timeout";
  } catch (const Error& e) {
    row.error = e.what();
    row.theorem_A_status = row.theorem_B_status = "error";
  }
  return row;
}

inline std::vector<VerdictRow> evaluate_corpus(const std::vector<CorpusEntry>& corpus,
                                               const CampaignConfig& cfg) {
  std::vector<VerdictRow> rows(corpus.size());
  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) rows[i] = evaluate_entry(corpus[i], cfg);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        rows[i] = evaluate_entry(corpus[i], cfg);
      }
    });
  for (auto& th : pool) th.join();
  return rows;
}

inline CampaignReport summarize(std::vector<VerdictRow> rows, bool theorem_a) {
  CampaignReport rep;
  rep.rows = std::move(rows);
  for (const VerdictRow& row : rep.rows) {
    const std::string& status = theorem_a ? row.theorem_A_status : row.theorem_B_status;
    if (!row.error.empty())
      rep.summary.errors += 1;
    else if (status == "VIOLATION")
      rep.summary.violations += 1;
    else if (status.rfind("exception", 0) == 0)
      rep.summary.exceptions += 1;
  }
  return rep;
}

}  // namespace detail

/// One row per corpus entry; a row is a VIOLATION exactly when the entry is
/// non-solvable with fewer than 50 cyclic subgroups and is not recognized as
/// A5 or SL(2,5). Build errors are annotated per entry, never fatal.
inline CampaignReport verify_theorem_A(const std::vector<CorpusEntry>& corpus,
                                       const CampaignConfig& cfg = {}) {
  return detail::summarize(detail::evaluate_corpus(corpus, cfg), true);
}

/// Rows for the supersolvability window c <= 17: consistent when
/// supersolvable, exception_listed when recognized into the paper's list,
/// not_applicable above the window.
inline CampaignReport verify_theorem_B(const std::vector<CorpusEntry>& corpus,
                                       const CampaignConfig& cfg = {}) {
  return detail::summarize(detail::evaluate_corpus(corpus, cfg), false);
}

// ---------------------------------------------------------------------------
// identity suite: Miller identity, coprime multiplicativity, quotient bounds

struct IdentityRow {
  std::string label;
  std::uint64_t order = 0;
  std::uint64_t c_total = 0;
  bool miller_ok = false;
  bool richards_ok = false;  // bounds and both equality characterizations
  std::string error;
};

struct PairRow {
  std::string label_a, label_b;
  std::uint64_t c_a = 0, c_b = 0, c_product = 0;
  bool ok = false;
};

struct QuotientRow {
  std::string label;
  std::uint64_t normal_subgroups_checked = 0;
  std::uint64_t failures = 0;
};

struct IdentityReport {
  std::vector<IdentityRow> rows;
  std::vector<PairRow> pairs;
  std::vector<QuotientRow> quotients;
  std::uint64_t failures = 0;
  std::uint64_t errors = 0;
  std::string toolkit_version = kToolkitVersion;

  int exit_code() const {
    if (errors) return 3;
    if (failures) return 2;
    return 0;
  }
};

/// Runs the Miller identity and the divisor-count bounds on every entry,
/// coprime-pair multiplicativity over a budgeted pair sweep, and both
/// quotient inequalities over every normal subgroup of every entry within
/// the order limit.
inline IdentityReport identity_suite(const std::vector<CorpusEntry>& corpus,
                                     const CampaignConfig& cfg = {}) {
  IdentityReport rep;
  std::vector<std::optional<Group>> groups(corpus.size());
  std::vector<CyclicCensus> censuses(corpus.size());

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    IdentityRow row;
    row.label = corpus[i].label;
    try {
      groups[i] = build(corpus[i].spec, cfg.closure_cap);
      const Group& g = *groups[i];
      row.order = g.order();
      censuses[i] = census(g);
      row.c_total = censuses[i].total;
      row.miller_ok = check_miller(g, censuses[i]).ok;
      RichardsReport r = check_richards(g, censuses[i]);
      row.richards_ok = r.lower_ok && r.upper_ok && (r.lower_tight == r.cyclic) &&
                        (r.upper_tight == r.elem_abelian_2);
      if (!row.miller_ok || !row.richards_ok) rep.failures += 1;
    } catch (const Error& e) {
      row.error = e.what();
      rep.errors += 1;
    }
    rep.rows.push_back(std::move(row));
  }

  // coprime multiplicativity over the first pair_budget eligible pairs
  std::uint64_t budget = cfg.pair_budget;
  for (std::size_t i = 0; i < corpus.size() && budget; ++i) {
    if (!groups[i]) continue;
    for (std::size_t j = i + 1; j < corpus.size() && budget; ++j) {
      if (!groups[j]) continue;
      const Group& a = *groups[i];
      const Group& b = *groups[j];
      if (std::gcd(a.order(), b.order()) != 1) continue;
      if (a.order() * b.order() > cfg.pair_order_limit) continue;
      PairRow pair;
      pair.label_a = corpus[i].label;
      pair.label_b = corpus[j].label;
      pair.c_a = censuses[i].total;
      pair.c_b = censuses[j].total;
      pair.c_product = census(direct_product(a, b, cfg.closure_cap)).total;
      pair.ok = pair.c_product == pair.c_a * pair.c_b;
      if (!pair.ok) rep.failures += 1;
      rep.pairs.push_back(std::move(pair));
      --budget;
    }
  }

  // quotient inequalities on every normal subgroup of the small entries
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!groups[i] || groups[i]->order() > cfg.quotient_order_limit) continue;
    const Group& g = *groups[i];
    QuotientRow qrow;
    qrow.label = corpus[i].label;
    for (const SubgroupSet& n : normal_subgroups(g)) {
      qrow.normal_subgroups_checked += 1;
      std::uint64_t c_g = censuses[i].total;
      std::uint64_t c_n = census(g, &n).total;
      std::uint64_t c_q = census(quotient(g, n)).total;
      if (!(c_q <= c_g && c_g >= c_q + c_n - 1)) qrow.failures += 1;
    }
    if (qrow.failures) rep.failures += qrow.failures;
    rep.quotients.push_back(std::move(qrow));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::ordered_json to_json(const VerdictRow& row) {
  nlohmann::ordered_json j;
  j["label"] = row.label;
  j["order"] = row.order;
  j["c_total"] = row.c_total;
  nlohmann::ordered_json by_order = nlohmann::ordered_json::object();
  for (auto [m, count] : row.c_by_order) by_order[std::to_string(m)] = count;
  j["c_by_order"] = std::move(by_order);
  j["solvable"] = row.solvable;
  j["supersolvable"] = row.supersolvable;
  j["perfect"] = row.perfect;
  j["simple"] = row.simple;
  if (row.recognized_as.empty())
    j["recognized_as"] = nullptr;
  else
    j["recognized_as"] = row.recognized_as;
  j["theorem_A_status"] = row.theorem_A_status;
  j["theorem_B_status"] = row.theorem_B_status;
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

inline nlohmann::ordered_json to_json(const CampaignReport& rep) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const VerdictRow& row : rep.rows) j["rows"].push_back(to_json(row));
  j["summary"] = {{"violations", rep.summary.violations},
                  {"exceptions", rep.summary.exceptions},
                  {"errors", rep.summary.errors}};
  j["toolkit_version"] = rep.toolkit_version;
  return j;
}

inline std::string to_tsv(const CampaignReport& rep) {
  std::string out =
      "label\torder\tc_total\tsolvable\tsupersolvable\tperfect\tsimple\trecognized_as\t"
      "theorem_A_status\ttheorem_B_status\terror\n";
  for (const VerdictRow& row : rep.rows) {
    out += row.label + "\t" + std::to_string(row.order) + "\t" + std::to_string(row.c_total) +
           "\t" + (row.solvable ? "true" : "false") + "\t" +
           (row.supersolvable ? "true" : "false") + "\t" + (row.perfect ? "true" : "false") +
           "\t" + (row.simple ? "true" : "false") + "\t" +
           (row.recognized_as.empty() ? "-" : row.recognized_as) + "\t" + row.theorem_A_status +
           "\t" + row.theorem_B_status + "\t" + (row.error.empty() ? "-" : row.error) + "\n";
  }
  return out;
}

inline nlohmann::ordered_json to_json(const IdentityReport& rep) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const IdentityRow& row : rep.rows) {
    nlohmann::ordered_json r;
    r["label"] = row.label;
    r["order"] = row.order;
    r["c_total"] = row.c_total;
    r["miller_ok"] = row.miller_ok;
    r["richards_ok"] = row.richards_ok;
    if (!row.error.empty()) r["error"] = row.error;
    j["rows"].push_back(std::move(r));
  }
  j["pairs"] = nlohmann::ordered_json::array();
  for (const PairRow& pair : rep.pairs)
    j["pairs"].push_back({{"a", pair.label_a},
                          {"b", pair.label_b},
                          {"c_a", pair.c_a},
                          {"c_b", pair.c_b},
                          {"c_product", pair.c_product},
                          {"ok", pair.ok}});
  j["quotients"] = nlohmann::ordered_json::array();
  for (const QuotientRow& q : rep.quotients)
    j["quotients"].push_back({{"label", q.label},
                              {"normal_subgroups_checked", q.normal_subgroups_checked},
                              {"failures", q.failures}});
  j["summary"] = {{"failures", rep.failures}, {"errors", rep.errors}};
  j["toolkit_version"] = rep.toolkit_version;
  return j;
}

}  // namespace cyclo
