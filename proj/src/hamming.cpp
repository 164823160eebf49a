#include "wconvex/hamming.hpp"

#include <bit>

#include "wconvex/errors.hpp"

namespace wconvex {

namespace {

constexpr std::uint64_t mask(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void same_dimension(const Term& a, const Term& b) {
  if (a.n != b.n)
    throw DimensionMismatch("terms over " + std::to_string(a.n) + " and " + std::to_string(b.n) +
                            " variables");
}

}  // namespace

BitString BitString::parse(std::string_view text) {
  if (text.size() > 64) throw ParseError(0, "bitstring longer than 64 bits");
  BitString out;
  out.length = static_cast<unsigned>(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      out.bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw ParseError(0, "invalid bit '" + std::string(1, text[i]) + "' in '" + std::string(text) + "'");
  }
  return out;
}

std::string BitString::str() const {
  std::string out(length, '0');
  for (unsigned i = 0; i < length; ++i)
    if (bits >> i & 1U) out[i] = '1';
  return out;
}

std::size_t Term::literal_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(positive) + std::popcount(negative));
}

std::string Term::str() const {
  std::string out;
  for (unsigned i = 0; i < n; ++i) {
    const bool pos = positive >> i & 1U;
    const bool neg = negative >> i & 1U;
    if (!pos && !neg) continue;
    if (!out.empty()) out += " & ";
    if (neg) out += '!';
    out += 'x' + std::to_string(i + 1);
  }
  return out.empty() ? "true" : out;
}

Term term_singleton(const BitString& x, unsigned n) {
  if (n == 0 || x.length != n)
    throw LengthMismatch("bitstring of length " + std::to_string(x.length) + ", expected " +
                         std::to_string(n) + " (n >= 1)");
  return Term{x.bits, ~x.bits & mask(n), n};
}

unsigned term_distance(const Term& lhs, const Term& rhs) {
  same_dimension(lhs, rhs);
  return static_cast<unsigned>(std::popcount((lhs.positive & rhs.negative) | (lhs.negative & rhs.positive)));
}

Term term_merge(const Term& lhs, const Term& rhs) {
  same_dimension(lhs, rhs);
  return Term{lhs.positive & rhs.positive, lhs.negative & rhs.negative, lhs.n};
}

bool term_member(const Term& term, const BitString& x) {
  if (x.length != term.n)
    throw LengthMismatch("bitstring of length " + std::to_string(x.length) + " against a term over " +
                         std::to_string(term.n) + " variables");
  return (x.bits & term.negative) == 0 && (~x.bits & term.positive) == 0;
}

unsigned hamming_distance(const BitString& x, const BitString& y) {
  if (x.length != y.length) throw LengthMismatch("bitstrings of different length");
  return static_cast<unsigned>(std::popcount(x.bits ^ y.bits));
}

HammingScheme::HammingScheme(unsigned n) : n_(n) {
  if (n == 0 || n > 64) throw LengthMismatch("Hamming dimension must be in 1..64");
}

double HammingScheme::point_distance(const BitString& x, const BitString& y) const {
  if (x.length != n_ || y.length != n_) throw LengthMismatch("bitstring length differs from scheme dimension");
  return hamming_distance(x, y);
}

}  // namespace wconvex
