#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "wconvex/metric_space.hpp"

namespace wconvex {

/// A point of the Hamming cube {0,1}^n, n <= 64. Character i of the text form
/// is variable x_{i+1}, stored in bit i.
struct BitString {
  std::uint64_t bits = 0;
  unsigned length = 0;

  /// Throws ParseError on characters other than '0'/'1' or length > 64.
  static BitString parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
};

/// Conjunction of literals over x_1..x_n, held as two masks of fixed
/// variables. Its extension is the subcube of points agreeing with every
/// fixed literal; the empty term is constant true.
struct Term {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  unsigned n = 0;

  std::size_t literal_count() const noexcept;
  /// `x1 & !x2 & x3`; the empty term prints as `true`.
  std::string str() const;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Term fixing every variable to x's bits. Throws LengthMismatch when |x| != n
/// or n == 0.
Term term_singleton(const BitString& x, unsigned n);

/// Number of conflicting variables (fixed positive in one term, negative in
/// the other): the minimum Hamming distance between the two extensions.
/// Throws DimensionMismatch.
unsigned term_distance(const Term& lhs, const Term& rhs);

/// Literals common to both terms: the smallest subcube containing both
/// extensions. Throws DimensionMismatch.
Term term_merge(const Term& lhs, const Term& rhs);

/// Throws LengthMismatch.
bool term_member(const Term& term, const BitString& x);

unsigned hamming_distance(const BitString& x, const BitString& y);

/// Representation scheme for ({0,1}^n, Hamming). Blocks are terms.
///
/// Term blocks are exact for theta >= 2, where theta-connected theta-convex
/// sets are subcubes. At theta = 1 every set is theta-convex and its
/// 1-connected components need not be subcubes, so the merged term can be
/// strictly larger than the true block.
///
/// Integral metric: a distance d is within theta iff d <= floor(theta).
/// merge_blocks ignores A since the merged subcube follows from the two terms.
class HammingScheme {
 public:
  using Point = BitString;
  using Block = Term;

  explicit HammingScheme(unsigned n);

  unsigned dimension() const noexcept { return n_; }

  Term singleton(const BitString& x) const { return term_singleton(x, n_); }
  double block_distance(const Term& a, const Term& b) const { return term_distance(a, b); }
  Term merge_blocks(Theta, std::span<const BitString>, const Term& a, const Term& b) const {
    return term_merge(a, b);
  }
  bool member(const Term& t, const BitString& x) const { return term_member(t, x); }
  bool blocks_equal(const Term& a, const Term& b) const { return a == b; }
  double point_distance(const BitString& x, const BitString& y) const;
  bool within(double d, Theta theta) const noexcept { return d <= theta.value(); }

 private:
  unsigned n_;
};

}  // namespace wconvex
