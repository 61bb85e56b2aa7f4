#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cyclo/constructors.hpp"
#include "cyclo/counting.hpp"
#include "cyclo/group_spec.hpp"
#include "cyclo/matrix_groups.hpp"
#include "cyclo/structure.hpp"
#include "oracle.hpp"

using namespace cyclo;

TEST_CASE("derived subgroup matches the all-pairs commutator oracle") {
  for (const std::string spec : {"cyclic 12", "symmetric 3", "symmetric 4", "alternating 4",
                                 "alternating 5", "generalized_quaternion 3", "sl2 3",
                                 "dihedral 6", "named 36 3"}) {
    Group g = build(spec);
    INFO(spec);
    CHECK(derived_subgroup(g).member_list() == oracle::derived_members(g));
  }
}

TEST_CASE("derived subgroup landmarks") {
  CHECK(derived_subgroup(cyclic(20)).size() == 1);
  CHECK(derived_subgroup(symmetric(4)).size() == 12);   // A4
  CHECK(derived_subgroup(alternating(5)).size() == 60); // perfect
  CHECK(derived_subgroup(generalized_quaternion(3)).size() == 2);
  CHECK(derived_subgroup(sl2(3)).size() == 8);          // Q8 inside SL(2,3)
}

TEST_CASE("solvability verdicts") {
  CHECK(is_solvable(cyclic(60)));
  CHECK(is_solvable(symmetric(4)));
  CHECK(is_solvable(generalized_quaternion(5)));
  CHECK(is_solvable(elementary_abelian(3, 3)));
  CHECK(is_solvable(named(36, 3)));
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK_FALSE(is_solvable(sl2(5)));
  CHECK_FALSE(is_solvable(psl2(7)));
  CHECK_FALSE(is_solvable(symmetric(5)));
}

TEST_CASE("derived series length stays within log2 of the order") {
  for (const std::string spec :
       {"cyclic 59", "symmetric 4", "generalized_quaternion 4", "dihedral 12", "sl2 3"}) {
    Group g = build(spec);
    auto series = derived_series(g);
    CHECK(series.size() - 1 <= static_cast<std::size_t>(std::log2(double(g.order()))) + 1);
  }
}

TEST_CASE("perfectness") {
  CHECK(is_perfect(Group::close({})));
  CHECK(is_perfect(alternating(5)));
  CHECK(is_perfect(sl2(5)));
  CHECK_FALSE(is_perfect(symmetric(4)));
  CHECK_FALSE(is_perfect(sl2(3)));
}

TEST_CASE("minimal normal subgroups") {
  Group zp = cyclic(7);
  auto m = minimal_normal_subgroups(zp);
  REQUIRE(m.size() == 1);
  CHECK(m[0].size() == 7);

  Group s4 = symmetric(4);
  m = minimal_normal_subgroups(s4);
  REQUIRE(m.size() == 1);
  CHECK(m[0].size() == 4);  // V4

  Group a5 = alternating(5);
  m = minimal_normal_subgroups(a5);
  REQUIRE(m.size() == 1);
  CHECK(m[0].size() == 60);

  Group z6 = cyclic(6);
  m = minimal_normal_subgroups(z6);
  REQUIRE(m.size() == 2);
  CHECK(m[0].size() == 2);
  CHECK(m[1].size() == 3);

  CHECK_THROWS_AS(minimal_normal_subgroups(Group::close({})), TrivialGroup);
}

TEST_CASE("normal subgroup lattice of S4") {
  Group g = symmetric(4);
  auto all = normal_subgroups(g);
  REQUIRE(all.size() == 4);  // 1, V4, A4, S4
  CHECK(all[0].size() == 1);
  CHECK(all[1].size() == 4);
  CHECK(all[2].size() == 12);
  CHECK(all[3].size() == 24);
  for (const auto& n : all) CHECK(is_normal(g, n));
}

TEST_CASE("normal subgroup lattice of an elementary abelian group") {
  Group g = elementary_abelian(3, 2);
  // subgroups of (Z3)^2: 1 + 4 + 1
  CHECK(normal_subgroups(g).size() == 6);
}

TEST_CASE("chief series factor orders") {
  ChiefSeries z8 = chief_series(cyclic(8));
  CHECK(z8.factor_orders == std::vector<std::uint64_t>{2, 2, 2});

  ChiefSeries s4 = chief_series(symmetric(4));
  CHECK(s4.factor_orders == std::vector<std::uint64_t>{2, 3, 4});
  REQUIRE(s4.terms.size() == 4);
  CHECK(s4.terms[0].size() == 24);
  CHECK(s4.terms[1].size() == 12);
  CHECK(s4.terms[2].size() == 4);
  CHECK(s4.terms[3].size() == 1);

  ChiefSeries a5 = chief_series(alternating(5));
  CHECK(a5.factor_orders == std::vector<std::uint64_t>{60});
}

TEST_CASE("chief series terms are normal in the top group and strictly descend") {
  for (const std::string spec :
       {"symmetric 4", "sl2 3", "named 108 3", "dihedral 10", "cyclic 36",
        "direct_product (cyclic 5) (alternating 4)"}) {
    Group g = build(spec);
    ChiefSeries cs = chief_series(g);
    INFO(spec);
    REQUIRE(!cs.terms.empty());
    CHECK(cs.terms.front().size() == g.order());
    CHECK(cs.terms.back().size() == 1);
    for (std::size_t i = 0; i < cs.terms.size(); ++i) {
      CHECK(is_normal(g, cs.terms[i]));
      if (i) {
        CHECK(cs.terms[i].size() < cs.terms[i - 1].size());
        CHECK(cs.terms[i].members().subset_of(cs.terms[i - 1].members()));
        CHECK(cs.factor_orders[i - 1] == cs.terms[i - 1].size() / cs.terms[i].size());
      }
    }
  }
}

TEST_CASE("chief series is deterministic") {
  Group g = symmetric(4);
  ChiefSeries a = chief_series(g);
  ChiefSeries b = chief_series(g);
  REQUIRE(a.terms.size() == b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) CHECK(a.terms[i] == b.terms[i]);
}

TEST_CASE("supersolvability verdicts") {
  CHECK(is_supersolvable(cyclic(48)));
  for (std::uint64_t n = 2; n <= 12; ++n) CHECK(is_supersolvable(dihedral(n)));
  CHECK(is_supersolvable(generalized_quaternion(3)));
  CHECK(is_supersolvable(build("semidirect_product (cyclic 7) (cyclic 3) actions (1 2 4)(3 6 5)")));
  CHECK_FALSE(is_supersolvable(alternating(4)));
  CHECK_FALSE(is_supersolvable(symmetric(4)));
  CHECK_FALSE(is_supersolvable(named(36, 3)));
  CHECK_FALSE(is_supersolvable(named(56, 11)));
  CHECK_FALSE(is_supersolvable(named(108, 3)));
}

TEST_CASE("SmallGroup(108,3) is non-supersolvable with census inside [13,17]") {
  Group g = named(108, 3);
  CHECK_FALSE(is_supersolvable(g));
  std::uint64_t c = census(g).total;
  CHECK(c >= 13);
  CHECK(c <= 17);
}

TEST_CASE("simplicity verdicts") {
  CHECK(is_simple(cyclic(7)));
  CHECK(is_simple(alternating(5)));
  CHECK(is_simple(psl2(7)));
  CHECK_FALSE(is_simple(symmetric(4)));
  CHECK_FALSE(is_simple(cyclic(6)));
  CHECK_FALSE(is_simple(sl2(5)));
  CHECK_THROWS_AS(is_simple(Group::close({})), TrivialGroup);
}

TEST_CASE("sylow counts") {
  Group ab = direct_product(cyclic(4), cyclic(9));
  CHECK(sylow_count(ab, 2) == 1);
  CHECK(sylow_count(ab, 3) == 1);

  CHECK(sylow_count(alternating(4), 3) == 4);
  CHECK(sylow_count(alternating(5), 5) == 6);
  CHECK(sylow_count(alternating(5), 2) == 5);
  CHECK(sylow_count(alternating(5), 3) == 10);
  CHECK(sylow_count(symmetric(4), 2) == 3);
  CHECK(sylow_count(symmetric(4), 3) == 4);
  CHECK(sylow_count(sl2(3), 3) == 4);
  CHECK_THROWS_AS(sylow_count(alternating(4), 5), PDoesNotDivide);
  CHECK_THROWS_AS(sylow_count(alternating(4), 4), PDoesNotDivide);
}

TEST_CASE("sylow subgroups have full p-power order") {
  for (const std::string spec : {"symmetric 4", "sl2 5", "named 56 11", "dihedral 14"}) {
    Group g = build(spec);
    for (auto [p, e] : factorize(g.order())) {
      SubgroupSet syl = sylow_subgroup(g, p);
      CHECK(syl.size() == ipow(p, e));
      std::uint64_t n_p = sylow_count(g, p);
      CHECK(n_p % p == 1);
      CHECK((g.order() / syl.size()) % n_p == 0);
    }
  }
}

TEST_CASE("isomorphism verdicts") {
  CHECK(isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3))) == IsoResult::yes);
  CHECK(isomorphic(cyclic(4), dihedral(2)) == IsoResult::no);  // Z4 vs V4
  CHECK(isomorphic(symmetric(3), dihedral(3)) == IsoResult::yes);
  CHECK(isomorphic(generalized_quaternion(3), dihedral(4)) == IsoResult::no);
  CHECK(isomorphic(psl2(5), alternating(5)) == IsoResult::yes);
  CHECK(isomorphic(psl2(9), alternating(6)) == IsoResult::yes);
}

TEST_CASE("recognition of the paper's named groups") {
  CHECK(recognize(psl2(4)).name == "A5");
  CHECK(recognize(sl2(5)).name == "SL(2,5)");
  CHECK(recognize(alternating(4)).name == "A4");
  CHECK(recognize(symmetric(4)).name == "S4");
  CHECK(recognize(sl2(3)).name == "SL(2,3)");
  CHECK(recognize(named(36, 3)).name == "SmallGroup(36,3)");
  CHECK(recognize(named(56, 11)).name == "SmallGroup(56,11)");
  CHECK(recognize(named(108, 3)).name == "SmallGroup(108,3)");
  CHECK(recognize(cyclic(60)).status == Recognition::Status::no_match);
  CHECK(recognize(symmetric(5)).status == Recognition::Status::no_match);
}

TEST_CASE("recognition of the Z_q x A4 family") {
  Recognition r2 = recognize(direct_product(cyclic(2), alternating(4)));
  CHECK(r2.status == Recognition::Status::matched);
  REQUIRE(r2.family_q.has_value());
  CHECK(*r2.family_q == 2);

  Recognition r5 = recognize(direct_product(cyclic(5), alternating(4)));
  CHECK(r5.status == Recognition::Status::matched);
  REQUIRE(r5.family_q.has_value());
  CHECK(*r5.family_q == 5);

  Recognition r163 = recognize(direct_product(cyclic(163), alternating(4)));
  CHECK(r163.status == Recognition::Status::matched);
  REQUIRE(r163.family_q.has_value());
  CHECK(*r163.family_q == 163);

  // A5 has order 12*5 but is not in the family
  CHECK(recognize(alternating(5)).name == "A5");
  // Z60 has order 12*5 and a cyclic Hall subgroup, not A4
  CHECK(recognize(cyclic(60)).status == Recognition::Status::no_match);
}

TEST_CASE("structure report invariants over a battery") {
  for (const std::string spec :
       {"cyclic 1", "cyclic 7", "cyclic 30", "dihedral 6", "symmetric 4", "alternating 4",
        "alternating 5", "sl2 3", "sl2 5", "psl2 7", "named 36 3", "named 56 11",
        "generalized_quaternion 4", "elementary_abelian 2 3"}) {
    Group g = build(spec);
    StructureReport rep = structure_report(g);
    INFO(spec);
    if (rep.simple) CHECK(rep.solvable == is_prime(g.order()));
    if (rep.supersolvable) CHECK(rep.solvable);
    if (is_cyclic(g)) CHECK(rep.supersolvable);
    if (rep.solvable) {
      REQUIRE(rep.derived_length.has_value());
      CHECK(*rep.derived_length <= std::log2(double(g.order())) + 1);
    }
    for (auto [p, n_p] : rep.sylow_counts) CHECK(n_p % p == 1);
  }
}
