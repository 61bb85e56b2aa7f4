#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/gf.hpp"
#include "cyclo/group.hpp"

namespace cyclo {

/// 2x2 matrix over a finite field.
struct Mat2 {
  FieldElement a, b, c, d;

  static Mat2 make(const Field& f, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
    return {{a, &f}, {b, &f}, {c, &f}, {d, &f}};
  }

  static Mat2 identity(const Field& f) { return make(f, 1, 0, 0, 1); }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  FieldElement det() const { return a * d - b * c; }

  bool operator==(const Mat2&) const = default;
};

namespace detail {

// A generating set for SL(2,q): the four transvections E12(1), E12(g),
// E21(1), E21(g) with g a multiplicative generator. Conjugation by the
// diagonal matrices they produce reaches E12(t) for every t, so the span is
// all of SL(2,q).
inline std::vector<Mat2> sl2_generating_matrices(const Field& f) {
  std::uint64_t gen = 1;
  if (f.q() > 2) {
    for (std::uint64_t x = 1; x < f.q(); ++x) {
      std::uint64_t y = x, ord = 1;
      while (y != 1) {
        y = f.mul(y, x);
        ++ord;
      }
      if (ord == f.q() - 1) {
        gen = x;
        break;
      }
    }
  }
  std::vector<Mat2> out;
  out.push_back(Mat2::make(f, 1, 1, 0, 1));
  out.push_back(Mat2::make(f, 1, 0, 1, 1));
  if (gen != 1) {
    out.push_back(Mat2::make(f, 1, gen, 0, 1));
    out.push_back(Mat2::make(f, 1, 0, gen, 1));
  }
  return out;
}

// Point ordering for the carrier of SL(2,q): nonzero column vectors (x, y)
// sorted by x*q + y.
inline Permutation vector_action(const Field& f, const Mat2& m) {
  const std::uint64_t q = f.q();
  std::vector<Permutation::point> images(q * q - 1);
  auto point_of = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<Permutation::point>(x * q + y - 1);
  };
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      std::uint64_t nx = f.add(f.mul(m.a.value, x), f.mul(m.b.value, y));
      std::uint64_t ny = f.add(f.mul(m.c.value, x), f.mul(m.d.value, y));
      images[point_of(x, y)] = point_of(nx, ny);
    }
  return Permutation(std::move(images));
}

// Projective line ordering: infinity first, then the field elements in
// coefficient order. Moebius action z -> (az+b)/(cz+d).
inline Permutation projective_action(const Field& f, const Mat2& m) {
  const std::uint64_t q = f.q();
  std::vector<Permutation::point> images(q + 1);
  auto image_of = [&](std::uint64_t num, std::uint64_t den) -> Permutation::point {
    if (den == 0) return 0;  // infinity
    return static_cast<Permutation::point>(1 + f.mul(num, f.inv(den)));
  };
  // infinity = (1 : 0)
  images[0] = image_of(m.a.value, m.c.value);
  for (std::uint64_t z = 0; z < q; ++z)
    images[1 + z] = image_of(f.add(f.mul(m.a.value, z), m.b.value),
                             f.add(f.mul(m.c.value, z), m.d.value));
  return Permutation(std::move(images));
}

}  // namespace detail

/// SL(2,q) acting on the q^2-1 nonzero column vectors. q <= 32.
inline Group sl2(std::uint64_t q) {
  if (q > 32) throw TooLarge("sl2 supports q <= 32");
  auto field = gf_from_order(q);
  const std::uint64_t target = q * (q * q - 1);
  std::vector<Permutation> gens;
  for (const Mat2& m : detail::sl2_generating_matrices(*field)) {
    if (!(m.det() == FieldElement{1, field.get()}))
      throw Error("internal: sl2 generator with det != 1");
    gens.push_back(detail::vector_action(*field, m));
  }
  Group g = Group::close(std::move(gens),
                         {.cap = static_cast<std::size_t>(target), .label = "SL(2," + std::to_string(q) + ")"});
  if (g.order() != target) throw Error("internal: |SL(2,q)| mismatch");
  return g;
}

/// PSL(2,q) acting on the q+1 points of the projective line. q <= 64.
inline Group psl2(std::uint64_t q) {
  if (q > 64) throw TooLarge("psl2 supports q <= 64");
  auto field = gf_from_order(q);
  const std::uint64_t target = q * (q * q - 1) / (q % 2 ? 2 : 1);
  std::vector<Permutation> gens;
  for (const Mat2& m : detail::sl2_generating_matrices(*field))
    gens.push_back(detail::projective_action(*field, m));
  Group g = Group::close(std::move(gens),
                         {.cap = static_cast<std::size_t>(target), .label = "PSL(2," + std::to_string(q) + ")"});
  if (g.order() != target) throw Error("internal: |PSL(2,q)| mismatch");
  return g;
}

/// Closed form for the number of involutions in PSL(2,q):
/// q^2-1 when q is even, q(q+1)/2 when q = 1 mod 4, q(q-1)/2 when q = 3 mod 4.
inline std::uint64_t involution_count_formula(std::uint64_t q) {
  if (q < 2) throw BadParams("involution_count_formula needs q >= 2");
  if (q % 2 == 0) return q * q - 1;
  if (q % 4 == 1) return q * (q + 1) / 2;
  return q * (q - 1) / 2;
}

}  // namespace cyclo
