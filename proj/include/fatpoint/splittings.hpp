#ifndef FATPOINT_SPLITTINGS_HPP
#define FATPOINT_SPLITTINGS_HPP

// Executable checks of the ideal splittings and containments behind the
// three-point resurgence results. Every check decides an exact equality or
// containment of monomial ideals; none of them proves the statement for
// parameters beyond those passed in.

#include "fatpoint/errors.hpp"
#include "fatpoint/invariants.hpp"
#include "fatpoint/monomial_ideal.hpp"
#include "fatpoint/scheme.hpp"

#include <array>
#include <optional>
#include <string>

namespace fatpoint {

namespace detail {

inline std::array<unsigned, 3> ordered_triangle(const FatPointScheme& z) {
  for (const auto& e : z.support())
    if (e.point > 2) throw PreconditionViolation("scheme must be supported at P0, P1, P2");
  const std::array<unsigned, 3> m{z.multiplicity(0), z.multiplicity(1), z.multiplicity(2)};
  require_max_last(m[0], m[1], m[2]);
  return m;
}

inline std::array<unsigned, 3> odd_sum_triangle(const FatPointScheme& z) {
  const auto m = ordered_triangle(z);
  if (m[0] + m[1] <= m[2] || (m[0] + m[1] + m[2]) % 2 == 0)
    throw PreconditionViolation("requires m0 + m1 > m2 and an odd multiplicity sum");
  return m;
}

inline MonomialIdeal triangle_ideal(unsigned n, unsigned a, unsigned b, unsigned c) {
  return ideal_of(FatPointScheme::three_points(n, a, b, c));
}

}  // namespace detail

/// Monomial of degree <= max_degree where membership in I(Z) and the
/// inequality system disagree, if any.
inline std::optional<ExponentVector> cond_equivalence_counterexample(const FatPointScheme& z,
                                                                     std::uint64_t max_degree) {
  const auto ideal = ideal_of(z);
  std::optional<ExponentVector> bad;
  for_each_monomial_upto(z.alphabet_size(), max_degree, [&](const ExponentVector& e) {
    if (!bad && member(e, ideal) != cond_satisfied(e, z)) bad = e;
  });
  return bad;
}

/// m0 + m1 <= m2:  I(Z) = I(m0(P0+P2)) I(m1(P1+P2)) I((m2-m0-m1)P2).
inline bool verify_split_leq(const FatPointScheme& z) {
  const auto [m0, m1, m2] = detail::ordered_triangle(z);
  if (m0 + m1 > m2) throw PreconditionViolation("requires m0 + m1 <= m2");
  const unsigned n = z.ambient_dim();
  const MonomialIdeal factors[] = {detail::triangle_ideal(n, m0, 0, m0),
                                   detail::triangle_ideal(n, 0, m1, m1),
                                   detail::triangle_ideal(n, 0, 0, m2 - m0 - m1)};
  return ideal_of(z) == product(factors, z.alphabet_size());
}

/// m0 + m1 > m2:  I(Z) = I(Z1) I(Z2) I(Z3) with Z1 = (m0+m1-m2)(P0+P1+P2),
/// Z2 = (m2-m1)(P0+P2), Z3 = (m2-m0)(P1+P2).
inline bool verify_split_gt(const FatPointScheme& z) {
  const auto [m0, m1, m2] = detail::ordered_triangle(z);
  if (m0 + m1 <= m2) throw PreconditionViolation("requires m0 + m1 > m2");
  const unsigned n = z.ambient_dim();
  const unsigned t = m0 + m1 - m2;
  const MonomialIdeal factors[] = {detail::triangle_ideal(n, t, t, t),
                                   detail::triangle_ideal(n, m2 - m1, 0, m2 - m1),
                                   detail::triangle_ideal(n, 0, m2 - m0, m2 - m0)};
  return ideal_of(z) == product(factors, z.alphabet_size());
}

/// I((2q+r)T) = I(2T)^q I(T)^r for T = P0+P1+P2 and r in {0, 1}.
inline bool verify_triple_power(unsigned q, unsigned r, unsigned ambient_dim) {
  if (r > 1) throw PreconditionViolation("remainder must be 0 or 1");
  const unsigned k = 2 * q + r;
  const auto lhs = detail::triangle_ideal(ambient_dim, k, k, k);
  const auto rhs = product(power(detail::triangle_ideal(ambient_dim, 2, 2, 2), q),
                           power(detail::triangle_ideal(ambient_dim, 1, 1, 1), r));
  return lhs == rhs;
}

/// Odd-sum case:  I(Z)^{(k)} = I(T)^{(k)} I(Z-T)^{(k)} = I(T)^{(k)} I(Z-T)^k.
inline bool verify_symbolic_factorization(const FatPointScheme& z, unsigned k) {
  const auto [m0, m1, m2] = detail::odd_sum_triangle(z);
  if (k < 1) throw PreconditionViolation("k must be positive");
  const unsigned n = z.ambient_dim();
  const auto triple = FatPointScheme::three_points(n, 1, 1, 1);
  const auto rest = FatPointScheme::three_points(n, m0 - 1, m1 - 1, m2 - 1);
  const auto lhs = symbolic_power(z, k);
  const auto t_sym = symbolic_power(triple, k);
  return lhs == product(t_sym, symbolic_power(rest, k)) &&
         lhs == product(t_sym, power(ideal_of(rest), k));
}

/// Odd-sum case:  I(Z)^{(k)} = I(Z)^{(i)} I(Z)^{(k-i)} unless i and k-i are
/// both odd.
inline bool verify_symbolic_multiplicativity(const FatPointScheme& z, unsigned k, unsigned i) {
  detail::odd_sum_triangle(z);
  if (i < 1 || i >= k) throw PreconditionViolation("requires 1 <= i < k");
  if (i % 2 == 1 && (k - i) % 2 == 1) throw PreconditionViolation("i and k - i are both odd");
  return symbolic_power(z, k) == product(symbolic_power(z, i), symbolic_power(z, k - i));
}

/// I(T)^{(r)} ⊆ I(T)^{r-1} in P^N for T = P0+P1+P2 and 1 <= r <= 4.
inline bool verify_small_containments(unsigned ambient_dim, unsigned r) {
  if (r < 1 || r > 4) throw OutOfRange("only 1 <= r <= 4 is covered");
  const auto triple = FatPointScheme::three_points(ambient_dim, 1, 1, 1);
  return contains(power(ideal_of(triple), r - 1), symbolic_power(triple, r));
}

/// Odd-sum containment schedule with s = m0 + m1 + m2:
///   r == 0:          I^{(q(1+s))}   ⊆ I^{qs}
///   0 < r < 1 + s:   I^{(q(1+s)+r)} ⊆ I^{qs+r-1}
inline bool verify_schedule(const FatPointScheme& z, unsigned q, unsigned r) {
  const auto [m0, m1, m2] = detail::odd_sum_triangle(z);
  const unsigned s = m0 + m1 + m2;
  if (r >= 1 + s) throw PreconditionViolation("requires r < 1 + m0 + m1 + m2");
  const unsigned m = q * (1 + s) + r;
  const unsigned t = r == 0 ? q * s : q * s + r - 1;
  return contains(power(ideal_of(z), t), ideal_of(z.scaled(m)));
}

/// I(W) ⊆ I(T)^S with S = n0+n1+n2 and W = sum_i (n_i + S) P_i.
inline bool verify_w_claim(unsigned n0, unsigned n1, unsigned n2, unsigned ambient_dim) {
  if (n0 < 1 || n1 < 1 || n2 < 1) throw PreconditionViolation("requires n_i >= 1");
  const unsigned s = n0 + n1 + n2;
  return contains(power(detail::triangle_ideal(ambient_dim, 1, 1, 1), s),
                  detail::triangle_ideal(ambient_dim, n0 + s, n1 + s, n2 + s));
}

/// I(V) ⊆ I(T)^{r-1} with V = sum_i (r + n_i - 1) P_i and 1 < r < 1 + S.
inline bool verify_v_claim(unsigned n0, unsigned n1, unsigned n2, unsigned r, unsigned ambient_dim) {
  if (n0 < 1 || n1 < 1 || n2 < 1) throw PreconditionViolation("requires n_i >= 1");
  const unsigned s = n0 + n1 + n2;
  if (r <= 1 || r >= 1 + s) throw PreconditionViolation("requires 1 < r < 1 + n0 + n1 + n2");
  return contains(power(detail::triangle_ideal(ambient_dim, 1, 1, 1), r - 1),
                  detail::triangle_ideal(ambient_dim, r + n0 - 1, r + n1 - 1, r + n2 - 1));
}

inline bool verify_wv_claims(unsigned n0, unsigned n1, unsigned n2, unsigned r, unsigned ambient_dim) {
  return verify_w_claim(n0, n1, n2, ambient_dim) && verify_v_claim(n0, n1, n2, r, ambient_dim);
}

}  // namespace fatpoint

#endif
