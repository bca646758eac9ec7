#ifndef FATPOINT_EXPONENT_VECTOR_HPP
#define FATPOINT_EXPONENT_VECTOR_HPP

#include "fatpoint/errors.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>

namespace fatpoint {

/// Exponents of a monomial over an ordered alphabet x_0, ..., x_{n-1}.
///
/// Ordering is lexicographic on the exponent tuple; this is the canonical
/// order in which ideals store their generators.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t alphabet_size) : exps_(alphabet_size, 0) {}
  ExponentVector(std::initializer_list<value_type> exps) : exps_(exps.begin(), exps.end()) {}
  explicit ExponentVector(std::span<const value_type> exps) : exps_(exps.begin(), exps.end()) {}

  /// x_i^power over an alphabet of the given size.
  static ExponentVector variable(std::size_t alphabet_size, std::size_t i, value_type power = 1) {
    ExponentVector v(alphabet_size);
    v.exps_.at(i) = power;
    return v;
  }

  std::size_t size() const { return exps_.size(); }
  value_type operator[](std::size_t i) const { return exps_[i]; }
  value_type& operator[](std::size_t i) { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }
  std::span<const value_type> view() const { return {exps_.data(), exps_.size()}; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return std::equal(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                  b.exps_.begin(), b.exps_.end());
  }

  /// "(a0,a1,...)"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(exps_[i]);
    }
    return out + ")";
  }

 private:
  boost::container::small_vector<value_type, 8> exps_;
};

inline void require_same_alphabet(std::size_t a, std::size_t b) {
  if (a != b) throw AlphabetMismatch(a, b);
}

/// True iff a <= b componentwise, i.e. x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_alphabet(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Monomial product.
inline ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_alphabet(a.size(), b.size());
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

/// Exact quotient x^a / x^b; requires divides(b, a).
inline ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  if (!divides(b, a)) throw NotAMember("monomial quotient is not a monomial");
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_alphabet(a.size(), b.size());
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

}  // namespace fatpoint

#endif
