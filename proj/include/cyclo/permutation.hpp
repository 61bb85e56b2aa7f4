#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

/// Bijection on {0..degree-1}. Composition follows function notation:
/// (f*g)(x) = f(g(x)).
class Permutation {
 public:
  using point = std::uint16_t;

  Permutation() = default;

  explicit Permutation(std::vector<point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (point p : images_) {
      if (p >= images_.size() || seen[p])
        throw BadParams("permutation images are not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point{0});
    return p;
  }

  /// Parses disjoint-cycle notation, e.g. "(0 1 2)(3 4)". Unmentioned points
  /// are fixed. With degree == 0 the degree is 1 + the largest point named.
  static Permutation from_cycles(const std::string& text, std::size_t degree = 0) {
    std::vector<std::vector<unsigned long>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw ParseError("expected '(' in cycle notation", 0, i + 1);
      ++i;
      std::vector<unsigned long> cycle;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("expected point index in cycle notation", 0, i + 1);
        unsigned long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
        cycle.push_back(v);
        skip_ws();
        if (i < text.size() && text[i] == ',') {  // tolerate comma-separated points
          ++i;
          skip_ws();
        }
      }
      if (i >= text.size()) throw ParseError("unterminated cycle", 0, i);
      ++i;  // ')'
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_ws();
    }

    std::size_t max_point = 0;
    for (const auto& c : cycles)
      for (unsigned long v : c) max_point = std::max<std::size_t>(max_point, v);
    std::size_t deg = degree ? degree : (cycles.empty() ? 1 : max_point + 1);
    if (max_point >= deg && !cycles.empty())
      throw ParseError("cycle names point " + std::to_string(max_point) +
                       " beyond degree " + std::to_string(deg));
    if (deg > 65535) throw TooLarge("permutation degree above 65535");

    std::vector<point> images(deg);
    std::iota(images.begin(), images.end(), point{0});
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        point from = static_cast<point>(c[k]);
        point to = static_cast<point>(c[(k + 1) % c.size()]);
        if (images[from] != from)
          throw ParseError("cycles are not disjoint: point " + std::to_string(from) +
                           " repeated");
        images[from] = to;
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }

  point operator()(point p) const { return images_[p]; }

  Permutation operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
      throw DegreeMismatch("composing permutations of degree " + std::to_string(degree()) +
                           " and " + std::to_string(rhs.degree()));
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<point>(i);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::string cycle_string() const {
    std::string out;
    std::vector<bool> done(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (done[i] || images_[i] == i) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(j);
        done[j] = true;
        j = images_[j];
        first = false;
      } while (j != i);
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

  const std::vector<point>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    // FNV-1a over the image words
    std::uint64_t h = 14695981039346656037ull;
    for (Permutation::point v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cyclo
