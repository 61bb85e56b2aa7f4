#pragma once

#include <string>
#include <vector>

#include "cyclo/harness.hpp"

namespace cyclo {

/// The shipped verification corpus, as corpus-file text (one JSON object
/// per line). Covers every group the theorems name as an exception, the
/// PSL(2,q)/SL(2,q) range q <= 9 plus a few larger q, S_n/A_n up to degree
/// 7, and the cyclic, dihedral, quaternion and elementary abelian families.
/// Expected values pinned here are either paper-stated counts or contract
/// orders; derived counts are confirmed by the oracle tests before pinning.
inline const std::string& builtin_corpus_text() {
  static const std::string text = [] {
    std::string out;
    auto add = [&out](const std::string& label, const std::string& spec,
                      const std::string& expected = "") {
      out += "{\"label\": \"" + label + "\", \"spec\": \"" + spec + "\"";
      if (!expected.empty()) out += ", \"expected\": {" + expected + "}";
      out += "}\n";
    };
    auto num = [](std::uint64_t v) { return std::to_string(v); };

    // theorem exceptions and their named constructions
    add("A4", "alternating 4", "\"order\": 12, \"c_total\": 8, \"solvable\": true, \"supersolvable\": false");
    add("S4", "symmetric 4", "\"order\": 24, \"c_total\": 17, \"solvable\": true, \"supersolvable\": false");
    add("A5", "alternating 5", "\"order\": 60, \"c_total\": 32, \"solvable\": false");
    add("SL(2,3)", "sl2 3", "\"order\": 24, \"c_total\": 13, \"solvable\": true, \"supersolvable\": false");
    add("SL(2,5)", "sl2 5", "\"order\": 120, \"c_total\": 49, \"solvable\": false");
    add("SmallGroup(24,3)", "named 24 3", "\"order\": 24, \"c_total\": 13");
    add("SmallGroup(36,3)", "named 36 3", "\"order\": 36, \"c_total\": 12, \"supersolvable\": false");
    add("SmallGroup(56,11)", "named 56 11", "\"order\": 56, \"c_total\": 16, \"supersolvable\": false");
    add("SmallGroup(108,3)", "named 108 3", "\"order\": 108, \"c_total\": 16, \"supersolvable\": false");
    add("SmallGroup(120,5)", "named 120 5", "\"order\": 120, \"c_total\": 49");
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 163})
      add("Z" + num(q) + " x A4", "direct_product (cyclic " + num(q) + ") (alternating 4)",
          "\"order\": " + num(12 * q) + ", \"solvable\": true, \"supersolvable\": false");

    // paper-anchored direct products
    add("A5 x Z7", "direct_product (alternating 5) (cyclic 7)",
        "\"order\": 420, \"c_total\": 64, \"solvable\": false");
    add("(Z5 x A4) x Z7", "direct_product (direct_product (cyclic 5) (alternating 4)) (cyclic 7)",
        "\"order\": 420, \"c_total\": 32, \"solvable\": true");
    add("A5 x Z2", "direct_product (alternating 5) (cyclic 2)",
        "\"order\": 120, \"c_total\": 64, \"solvable\": false");

    // matrix families
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
      std::uint64_t order = q * (q * q - 1) / (q % 2 ? 2 : 1);
      std::string expected = "\"order\": " + num(order);
      if (q == 4) expected += ", \"c_total\": 32, \"solvable\": false";
      if (q == 5) expected += ", \"c_total\": 32, \"solvable\": false";
      if (q == 7) expected += ", \"c_total\": 79, \"solvable\": false";
      if (q == 9) expected += ", \"c_total\": 167, \"solvable\": false";
      add("PSL(2," + num(q) + ")", "psl2 " + num(q), expected);
    }
    for (std::uint64_t q : {2, 4, 7, 8, 9})  // q = 3, 5 are the exception rows above
      add("SL(2," + num(q) + ")", "sl2 " + num(q), "\"order\": " + num(q * (q * q - 1)));

    // symmetric and alternating families (A4, S4, A5 are exception rows above)
    std::uint64_t fact = 1;
    for (unsigned n = 1; n <= 7; ++n) {
      fact *= n;
      if (n != 4) add("S" + num(n), "symmetric " + num(n), "\"order\": " + num(fact));
      if (n >= 3 && n != 4 && n != 5)
        add("A" + num(n), "alternating " + num(n), "\"order\": " + num(fact / 2));
    }

    // cyclic groups: the divisor-bound equality cases
    for (std::uint64_t n = 1; n <= 60; ++n)
      add("Z" + num(n), "cyclic " + num(n),
          "\"order\": " + num(n) + ", \"solvable\": true, \"supersolvable\": true");

    // dihedral (supersolvable throughout) and generalized quaternion
    for (std::uint64_t n = 2; n <= 16; ++n)
      add("D" + num(2 * n), "dihedral " + num(n),
          "\"order\": " + num(2 * n) + ", \"supersolvable\": true");
    for (unsigned k = 3; k <= 6; ++k)
      add("Q" + num(1ull << k), "generalized_quaternion " + num(k),
          "\"order\": " + num(1ull << k) + ", \"supersolvable\": true");

    // elementary abelian blocks
    for (std::uint64_t p : {2, 3, 5}) {
      std::uint64_t power = 1;
      for (unsigned n = 1; n <= 4; ++n) {
        power *= p;
        add("E" + num(p) + "^" + num(n), "elementary_abelian " + num(p) + " " + num(n),
            "\"order\": " + num(power) + ", \"supersolvable\": true");
      }
    }

    // assorted products exercising coprime and non-coprime censuses
    add("Z2 x Z3", "direct_product (cyclic 2) (cyclic 3)", "\"order\": 6, \"c_total\": 4");
    add("Z4 x Z9", "direct_product (cyclic 4) (cyclic 9)", "\"order\": 36");
    add("Z6 x Z35", "direct_product (cyclic 6) (cyclic 35)", "\"order\": 210");
    add("S3 x S3", "direct_product (symmetric 3) (symmetric 3)", "\"order\": 36");
    add("S4 x Z5", "direct_product (symmetric 4) (cyclic 5)", "\"order\": 120");
    add("S4 x Z7", "direct_product (symmetric 4) (cyclic 7)", "\"order\": 168");
    add("Q8 x Z3", "direct_product (generalized_quaternion 3) (cyclic 3)", "\"order\": 24");
    add("Q8 x Z15", "direct_product (generalized_quaternion 3) (cyclic 15)", "\"order\": 120");
    add("D8 x Z3", "direct_product (dihedral 4) (cyclic 3)", "\"order\": 24");
    add("D10 x Z3", "direct_product (dihedral 5) (cyclic 3)", "\"order\": 30");
    add("E2^3 x Z3", "direct_product (elementary_abelian 2 3) (cyclic 3)", "\"order\": 24");
    add("E3^2 x Z2", "direct_product (elementary_abelian 3 2) (cyclic 2)", "\"order\": 18");
    add("A4 x A4", "direct_product (alternating 4) (alternating 4)", "\"order\": 144");
    add("Z9 x Z3", "direct_product (cyclic 9) (cyclic 3)", "\"order\": 27");

    // explicit generator entries
    add("V4 explicit", "explicit (0 1)(2 3), (0 2)(1 3)", "\"order\": 4, \"c_total\": 4");
    add("S3 explicit", "explicit (0 1), (0 1 2)", "\"order\": 6, \"c_total\": 5");
    add("Z6 explicit", "explicit (0 1 2 3 4 5)", "\"order\": 6, \"c_total\": 4");

    // semidirect products through the grammar
    add("F21", "semidirect_product (cyclic 7) (cyclic 3) actions (1 2 4)(3 6 5)",
        "\"order\": 21, \"supersolvable\": true");
    add("D14 as semidirect", "semidirect_product (cyclic 7) (cyclic 2) actions (1 6)(2 5)(3 4)",
        "\"order\": 14, \"supersolvable\": true");
    add("Z7 x Z3 via trivial action", "semidirect_product (cyclic 7) (cyclic 3) actions ()",
        "\"order\": 21, \"c_total\": 4");

    return out;
  }();
  return text;
}

inline const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = load_corpus_text(builtin_corpus_text());
  return corpus;
}

}  // namespace cyclo
