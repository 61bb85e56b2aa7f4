#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclo/counting.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

/// GF(p^m) with the lexicographically least monic irreducible modulus.
/// Elements are encoded as integers in [0, p^m): the value sum c_i * p^i
/// stands for the polynomial sum c_i * x^i.
class Field {
 public:
  Field(std::uint64_t p, unsigned m) : p_(p), m_(m) {
    if (!is_prime(p)) throw NotPrime("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw BadParams("field extension degree must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) {
      q_ *= p;
      if (q_ > 65536) throw TooLarge("field size above 2^16");
    }
    find_modulus();
  }

  std::uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }

  /// Modulus coefficients c_0..c_m (monic, c_m = 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    // digit-wise addition mod p
    std::uint64_t out = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint64_t neg(std::uint64_t a) const {
    std::uint64_t out = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::vector<std::uint64_t> da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    reduce(prod);
    return undigits(prod);
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw BadParams("field inverse of zero");
    // a^(q-2); the multiplicative group has order q-1
    std::uint64_t result = one(), base = a, e = q_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }

 private:
  std::vector<std::uint64_t> digits(std::uint64_t v) const {
    std::vector<std::uint64_t> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }

  std::uint64_t undigits(const std::vector<std::uint64_t>& d) const {
    std::uint64_t v = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      v += d[i] * place;
      place *= p_;
    }
    return v;
  }

  // Reduce a coefficient vector (any degree) mod the monic modulus, in place;
  // afterwards only the first m_ entries matter.
  void reduce(std::vector<std::uint64_t>& c) const {
    for (std::size_t deg = c.size(); deg-- > m_;) {
      std::uint64_t lead = c[deg] % p_;
      if (!lead) continue;
      c[deg] = 0;
      for (unsigned i = 0; i < m_; ++i)
        c[deg - m_ + i] = (c[deg - m_ + i] + (p_ - modulus_[i]) * lead) % p_;
    }
  }

  // Polynomial arithmetic on raw coefficient vectors, used only while
  // searching for the modulus.
  static std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a,
                                             const std::vector<std::uint64_t>& b,
                                             std::uint64_t p) {
    // b is monic
    while (a.size() >= b.size()) {
      std::uint64_t lead = a.back() % p;
      if (lead) {
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
          a[shift + i] = (a[shift + i] + (p - b[i]) * lead) % p;
      }
      a.pop_back();
      while (!a.empty() && a.back() % p == 0) a.pop_back();
      if (a.empty()) break;
    }
    return a;
  }

  void find_modulus() {
    if (m_ == 1) {
      modulus_ = {0, 1};  // x itself: GF(p)[x]/(x) = Z_p
      return;
    }
    // candidates x^m + low, ordered by the value of the low part
    std::uint64_t low_count = q_;  // p^m low parts
    for (std::uint64_t low = 0; low < low_count; ++low) {
      std::vector<std::uint64_t> cand(m_ + 1, 0);
      std::uint64_t v = low;
      for (unsigned i = 0; i < m_; ++i) {
        cand[i] = v % p_;
        v /= p_;
      }
      cand[m_] = 1;
      if (poly_irreducible(cand)) {
        modulus_ = cand;
        return;
      }
    }
    throw Error("internal: no irreducible polynomial found");
  }

  bool poly_irreducible(const std::vector<std::uint64_t>& cand) const {
    // trial division by every monic polynomial of degree 1..m/2
    for (unsigned d = 1; 2 * d <= m_; ++d) {
      std::uint64_t lows = 1;
      for (unsigned i = 0; i < d; ++i) lows *= p_;
      for (std::uint64_t low = 0; low < lows; ++low) {
        std::vector<std::uint64_t> div(d + 1, 0);
        std::uint64_t v = low;
        for (unsigned i = 0; i < d; ++i) {
          div[i] = v % p_;
          v /= p_;
        }
        div[d] = 1;
        if (poly_mod(cand, div, p_).empty()) return false;
      }
    }
    return true;
  }

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

/// Builds GF(p^m); p prime, p^m <= 2^16.
inline std::shared_ptr<const Field> gf(std::uint64_t p, unsigned m) {
  return std::make_shared<const Field>(p, m);
}

/// GF(q) for q given as a prime power.
inline std::shared_ptr<const Field> gf_from_order(std::uint64_t q) {
  auto fac = factorize(q);
  if (q < 2 || fac.size() != 1) throw BadParams(std::to_string(q) + " is not a prime power");
  return gf(fac[0].first, fac[0].second);
}

/// Value of one field element together with its field. Small convenience
/// wrapper used by the matrix code.
struct FieldElement {
  std::uint64_t value = 0;
  const Field* field = nullptr;

  FieldElement operator+(FieldElement o) const { return {field->add(value, o.value), field}; }
  FieldElement operator-(FieldElement o) const { return {field->sub(value, o.value), field}; }
  FieldElement operator*(FieldElement o) const { return {field->mul(value, o.value), field}; }
  FieldElement inverse() const { return {field->inv(value), field}; }
  bool is_zero() const { return value == 0; }
  bool operator==(const FieldElement&) const = default;
};

}  // namespace cyclo
