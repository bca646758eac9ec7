#ifndef FATPOINT_INVARIANTS_HPP
#define FATPOINT_INVARIANTS_HPP

#include "fatpoint/errors.hpp"
#include "fatpoint/rational.hpp"
#include "fatpoint/scheme.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fatpoint {

inline void require_max_last(unsigned m0, unsigned m1, unsigned m2) {
  if (m2 < std::max(m0, m1))
    throw InvalidOrdering("expected m2 >= max(m0, m1), got (" + std::to_string(m0) + "," +
                          std::to_string(m1) + "," + std::to_string(m2) + ")");
}

/// alpha of I(m0 P0 + m1 P1 + m2 P2) in P^2, closed form. Requires m2 to be
/// the largest multiplicity.
inline std::uint64_t alpha_three_points(unsigned m0, unsigned m1, unsigned m2) {
  require_max_last(m0, m1, m2);
  const std::uint64_t s = std::uint64_t{m0} + m1 + m2;
  if (m2 >= std::uint64_t{m0} + m1) return m2;
  return s % 2 == 0 ? s / 2 : (s + 1) / 2;
}

/// Waldschmidt constant of I(m0 P0 + m1 P1 + m2 P2) in P^2:
/// max(m2, (m0 + m1 + m2) / 2).
inline Rational waldschmidt_three_points(unsigned m0, unsigned m1, unsigned m2) {
  require_max_last(m0, m1, m2);
  const Rational half_sum(std::uint64_t{m0} + m1 + m2, 2);
  return std::max(Rational(m2), half_sum);
}

/// (m, alpha(I^{(m)}) / m) for m = 1..m_max.
inline std::vector<std::pair<unsigned, Rational>> waldschmidt_empirical(const FatPointScheme& z,
                                                                        unsigned m_max) {
  if (m_max < 1) throw PreconditionViolation("m_max must be positive");
  std::vector<std::pair<unsigned, Rational>> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    const auto a = alpha(symbolic_power(z, m));
    out.emplace_back(m, Rational(static_cast<std::uint64_t>(*a), m));
  }
  return out;
}

enum class Classification { collinear, case_a, even_sum, odd_sum };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::collinear: return "collinear";
    case Classification::case_a: return "case_a";
    case Classification::even_sum: return "even_sum";
    case Classification::odd_sum: return "odd_sum";
  }
  return "unknown";
}

struct ClassifyResult {
  Classification kind;
  /// Exact resurgence; absent only for the unit ideal (all multiplicities 0).
  std::optional<Rational> certified_rho;
  /// Multiplicities sorted so that sorted[2] is the largest.
  std::array<unsigned, 3> sorted;
  /// sorted[k] was input position permutation[k].
  std::array<std::size_t, 3> permutation;
};

/// Sorts (m0, m1, m2) ascending, stable in the input order.
inline std::pair<std::array<unsigned, 3>, std::array<std::size_t, 3>> sort_triple(unsigned m0,
                                                                                  unsigned m1,
                                                                                  unsigned m2) {
  const std::array<unsigned, 3> in{m0, m1, m2};
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return in[a] < in[b]; });
  return {{in[perm[0]], in[perm[1]], in[perm[2]]}, perm};
}

/// Resurgence class of m0 P0 + m1 P1 + m2 P2.
///
/// Collinear supports and supports with fewer than three points have
/// rho = 1. Three noncollinear points: m0 + m1 <= m2 or an even sum gives
/// rho = 1, an odd sum gives rho = (s + 1) / s.
inline ClassifyResult classify(unsigned m0, unsigned m1, unsigned m2, bool collinear) {
  auto [sorted, perm] = sort_triple(m0, m1, m2);
  ClassifyResult out{Classification::collinear, Rational(1), sorted, perm};
  const auto positive = std::count_if(sorted.begin(), sorted.end(), [](unsigned m) { return m > 0; });
  if (positive == 0) {
    out.certified_rho.reset();
    return out;
  }
  if (collinear || positive < 3) return out;
  const std::uint64_t s = std::uint64_t{sorted[0]} + sorted[1] + sorted[2];
  if (std::uint64_t{sorted[0]} + sorted[1] <= sorted[2]) {
    out.kind = Classification::case_a;
  } else if (s % 2 == 0) {
    out.kind = Classification::even_sum;
  } else {
    out.kind = Classification::odd_sum;
    out.certified_rho = Rational(s + 1, s);
  }
  return out;
}

}  // namespace fatpoint

#endif
