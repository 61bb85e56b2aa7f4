#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclo/counting.hpp"
#include "cyclo/gf.hpp"
#include "cyclo/matrix_groups.hpp"
#include "cyclo/structure.hpp"
#include "oracle.hpp"

using namespace cyclo;

TEST_CASE("gf(2,1) is the two-element field") {
  auto f = gf(2, 1);
  CHECK(f->q() == 2);
  CHECK(f->add(1, 1) == 0);
  CHECK(f->mul(1, 1) == 1);
}

TEST_CASE("gf(2,2) uses x^2+x+1") {
  auto f = gf(2, 2);
  CHECK(f->modulus() == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("the multiplicative group of gf(3,2) is cyclic of order 8") {
  auto f = gf(3, 2);
  bool found_generator = false;
  for (std::uint64_t x = 1; x < f->q(); ++x) {
    std::uint64_t y = x, ord = 1;
    while (y != 1) {
      y = f->mul(y, x);
      ++ord;
    }
    if (ord == 8) found_generator = true;
  }
  CHECK(found_generator);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    auto f = gf(p, m);
    const std::uint64_t q = f->q();
    for (std::uint64_t a = 0; a < q; ++a) {
      if (a != 0) {
        std::uint64_t inv = f->inv(a);
        REQUIRE(f->mul(a, inv) == 1);
      }
      CHECK(f->add(a, f->neg(a)) == 0);
      for (std::uint64_t b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (std::uint64_t c = 0; c < q; c += (q > 8 ? 3 : 1))
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST_CASE("characteristic 2 means x + x = 0") {
  auto f = gf(2, 4);
  for (std::uint64_t x = 0; x < f->q(); ++x) CHECK(f->add(x, x) == 0);
}

TEST_CASE("field construction validates parameters") {
  CHECK_THROWS_AS(gf(4, 1), NotPrime);
  CHECK_THROWS_AS(gf(6, 2), NotPrime);
  CHECK_THROWS_AS(gf(2, 17), TooLarge);
  CHECK_THROWS_AS(gf_from_order(12), BadParams);  // not a prime power
}

TEST_CASE("determinant is multiplicative") {
  auto f = gf(5, 1);
  std::mt19937 rng{20240811};
  std::uniform_int_distribution<std::uint64_t> pick(0, f->q() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Mat2 a = Mat2::make(*f, pick(rng), pick(rng), pick(rng), pick(rng));
    Mat2 b = Mat2::make(*f, pick(rng), pick(rng), pick(rng), pick(rng));
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("SL(2,q) orders and carriers") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    Group g = sl2(q);
    CHECK(g.order() == q * (q * q - 1));
    CHECK(g.degree() == q * q - 1);
  }
  CHECK_THROWS_AS(sl2(64), TooLarge);
}

TEST_CASE("PSL(2,q) orders and projective carriers") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    Group g = psl2(q);
    CHECK(g.order() == q * (q * q - 1) / (q % 2 ? 2 : 1));
    CHECK(g.degree() == q + 1);
  }
  CHECK_THROWS_AS(psl2(128), TooLarge);
}

TEST_CASE("SL(2,2) is S3") {
  CHECK(sl2(2).order() == 6);
  CHECK(isomorphic(symmetric(3), sl2(2)) == IsoResult::yes);
}

TEST_CASE("golden censuses for the matrix groups") {
  CHECK(oracle::census(sl2(3)).total == 13);
  CHECK(oracle::census(sl2(5)).total == 49);
  CHECK(oracle::census(psl2(4)).total == 32);
  CHECK(oracle::census(psl2(7)).total == 79);
  CHECK(oracle::census(psl2(9)).total == 167);
}

TEST_CASE("involution count formula values from the paper") {
  CHECK(involution_count_formula(4) == 15);
  CHECK(involution_count_formula(8) == 63);
  CHECK(involution_count_formula(7) == 21);
  CHECK(involution_count_formula(5) == 15);
  CHECK(involution_count_formula(2) == 3);
  CHECK(involution_count_formula(9) == 45);
  CHECK_THROWS_AS(involution_count_formula(1), BadParams);
}

TEST_CASE("formula matches enumeration for q <= 9") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    CHECK(oracle::involutions(psl2(q)) == involution_count_formula(q));
}

TEST_CASE("for even q the involutions form a single conjugacy class") {
  for (std::uint64_t q : {2, 4, 8}) {
    Group g = psl2(q);
    std::size_t involution_classes = 0;
    std::size_t involution_count = 0;
    for (const auto& cls : conjugacy_classes(g))
      if (element_order(g, cls[0]) == 2) {
        ++involution_classes;
        involution_count += cls.size();
      }
    CHECK(involution_classes == 1);
    CHECK(involution_count == involution_count_formula(q));
  }
}

TEST_CASE("centralizers of involutions in SL(2,4) have size q = 4") {
  Group g = sl2(4);
  for (Group::index x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == 0) CHECK(centralizer(g, x).size() == 4);
}

TEST_CASE("PSL(2,4) carries the A5 fingerprint") {
  Group p = psl2(4);
  Group a = alternating(5);
  std::map<std::uint64_t, std::uint64_t> orders_p, orders_a;
  for (Group::index x = 0; x < p.order(); ++x) orders_p[element_order(p, x)] += 1;
  for (Group::index x = 0; x < a.order(); ++x) orders_a[element_order(a, x)] += 1;
  CHECK(orders_p == orders_a);
  CHECK(oracle::census(p).by_order == oracle::census(a).by_order);
}
