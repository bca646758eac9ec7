#ifndef FATPOINT_COLLINEAR_HPP
#define FATPOINT_COLLINEAR_HPP

// Fat points on the line x_2 = ... = x_N = 0.
//
// A point is given by the linear form G = c*x0 + d*x1 vanishing on it, so the
// point itself is [-d : c : 0 : ... : 0]. Ideals of such schemes are
// generated by products G_1^{a_1} ... G_n^{a_n} x_2^{b_2} ... x_N^{b_N} of
// pairwise non-associate primes ("generalized monomials"). Divisibility of
// such products implies ring membership, but the converse fails, so ideal
// equality is never decided from generator sets being different.

#include "fatpoint/errors.hpp"
#include "fatpoint/exponent_vector.hpp"
#include "fatpoint/monomial_ideal.hpp"
#include "fatpoint/rational.hpp"
#include "fatpoint/scheme.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace fatpoint {

struct LinePoint {
  Rational c;
  Rational d;
  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

/// sum m_j P_j for distinct points P_1..P_n on the line, sorted so that
/// m_1 <= ... <= m_n. Multiplicity index 0 is the sentinel m_0 = 0.
class LineScheme {
 public:
  LineScheme(unsigned ambient_dim, std::vector<LinePoint> points, const std::vector<unsigned>& mults)
      : ambient_dim_(ambient_dim) {
    if (ambient_dim < 2) throw PreconditionViolation("ambient dimension must be at least 2");
    if (points.size() != mults.size()) throw PreconditionViolation("one multiplicity per point");
    if (points.empty()) throw PreconditionViolation("at least one point");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].c == 0 && points[i].d == 0) throw PreconditionViolation("point form is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (points[i].c * points[j].d == points[j].c * points[i].d)
          throw PreconditionViolation("points " + std::to_string(j + 1) + " and " +
                                      std::to_string(i + 1) + " coincide");
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return mults[a] < mults[b]; });
    mults_.push_back(0);
    for (auto i : order) {
      points_.push_back(points[i]);
      mults_.push_back(mults[i]);
    }
  }

  /// G_j = x0 + (j-1) x1, i.e. points [-(j-1) : 1 : 0 ...].
  static LineScheme standard(unsigned ambient_dim, const std::vector<unsigned>& mults) {
    std::vector<LinePoint> pts;
    for (std::size_t j = 0; j < mults.size(); ++j) pts.push_back({Rational(1), Rational(j)});
    return LineScheme(ambient_dim, std::move(pts), mults);
  }

  unsigned ambient_dim() const { return ambient_dim_; }
  std::size_t num_points() const { return points_.size(); }
  /// Size of the prime alphabet {G_1..G_n, x_2..x_N}.
  std::size_t alphabet_size() const { return points_.size() + ambient_dim_ - 1; }
  /// 1-based.
  const LinePoint& point(std::size_t j) const { return points_.at(j - 1); }
  /// 0 <= j <= n; multiplicity(0) == 0.
  unsigned multiplicity(std::size_t j) const { return mults_.at(j); }
  unsigned max_multiplicity() const { return mults_.back(); }

  /// Same points, new multiplicities; keeps the point order when the new
  /// multiplicities are nondecreasing.
  LineScheme with_multiplicities(const std::vector<unsigned>& mults) const {
    return LineScheme(ambient_dim_, points_, mults);
  }

  friend bool operator==(const LineScheme&, const LineScheme&) = default;

 private:
  unsigned ambient_dim_;
  std::vector<LinePoint> points_;
  std::vector<unsigned> mults_;
};

/// G_1^{a_1} ... G_n^{a_n} x_2^{b_2} ... x_N^{b_N}, stored as one exponent
/// vector over the prime alphabet (forms first).
class GeneralizedMonomial {
 public:
  GeneralizedMonomial(std::size_t n_forms, ExponentVector exps) : n_forms_(n_forms), exps_(std::move(exps)) {
    if (n_forms_ > exps_.size()) throw PreconditionViolation("more forms than alphabet symbols");
  }
  GeneralizedMonomial(const std::vector<unsigned>& forms, const std::vector<unsigned>& xs)
      : n_forms_(forms.size()), exps_(forms.size() + xs.size()) {
    for (std::size_t j = 0; j < forms.size(); ++j) exps_[j] = forms[j];
    for (std::size_t k = 0; k < xs.size(); ++k) exps_[forms.size() + k] = xs[k];
  }

  std::size_t n_forms() const { return n_forms_; }
  std::size_t n_x() const { return exps_.size() - n_forms_; }
  /// Exponent of G_j, 1-based.
  unsigned form_exponent(std::size_t j) const { return exps_[j - 1]; }
  /// Exponent of x_k, 2 <= k <= N.
  unsigned x_exponent(std::size_t k) const { return exps_[n_forms_ + k - 2]; }
  std::uint64_t x_degree() const {
    std::uint64_t b = 0;
    for (std::size_t i = n_forms_; i < exps_.size(); ++i) b += exps_[i];
    return b;
  }
  std::uint64_t degree() const { return exps_.degree(); }
  const ExponentVector& exps() const { return exps_; }

  friend bool operator==(const GeneralizedMonomial&, const GeneralizedMonomial&) = default;
  friend auto operator<=>(const GeneralizedMonomial& a, const GeneralizedMonomial& b) {
    return a.exps_ <=> b.exps_;
  }

  std::string to_string() const {
    std::string out;
    auto put = [&](const std::string& sym, unsigned e) {
      if (e == 0) return;
      if (!out.empty()) out += '*';
      out += sym;
      if (e > 1) out += '^' + std::to_string(e);
    };
    for (std::size_t j = 1; j <= n_forms_; ++j) put("G" + std::to_string(j), form_exponent(j));
    for (std::size_t k = 2; k < 2 + n_x(); ++k) put("x" + std::to_string(k), x_exponent(k));
    return out.empty() ? "1" : out;
  }

 private:
  std::size_t n_forms_;
  ExponentVector exps_;
};

inline void require_line_alphabet(const GeneralizedMonomial& g, const LineScheme& z) {
  if (g.n_forms() != z.num_points() || g.n_x() + 1 != z.ambient_dim())
    throw AlphabetMismatch(g.exps().size(), z.alphabet_size());
}

/// Divisibility ideal spanned by a set of generalized monomials.
inline MonomialIdeal divisibility_ideal(const std::vector<GeneralizedMonomial>& gens, std::size_t alphabet_size) {
  std::vector<ExponentVector> raw;
  for (const auto& g : gens) raw.push_back(g.exps());
  return minimalize(alphabet_size, std::move(raw));
}

inline std::vector<GeneralizedMonomial> as_generalized(const MonomialIdeal& ideal, std::size_t n_forms) {
  std::vector<GeneralizedMonomial> out;
  for (const auto& g : ideal.generators()) out.emplace_back(n_forms, g);
  return out;
}

/// Generators of I(mZ): for every x-part of degree B <= m*m_n, the G_j
/// exponents are max(0, m*m_j - B). Minimalized, lexicographic order.
inline std::vector<GeneralizedMonomial> canonical_generators(const LineScheme& z, unsigned m) {
  if (m < 1) throw PreconditionViolation("m must be positive");
  const std::size_t n = z.num_points();
  const std::size_t nx = z.ambient_dim() - 1;
  const std::uint64_t top = std::uint64_t{m} * z.max_multiplicity();
  std::vector<ExponentVector> raw;
  for (std::uint64_t b = 0; b <= top; ++b) {
    for_each_monomial_of_degree(nx, b, [&](const ExponentVector& xs) {
      ExponentVector v(z.alphabet_size());
      for (std::size_t j = 1; j <= n; ++j) {
        const std::uint64_t need = std::uint64_t{m} * z.multiplicity(j);
        v[j - 1] = static_cast<ExponentVector::value_type>(need > b ? need - b : 0);
      }
      for (std::size_t k = 0; k < nx; ++k) v[n + k] = xs[k];
      raw.push_back(std::move(v));
    });
  }
  return as_generalized(minimalize(z.alphabet_size(), std::move(raw)), n);
}

/// g ∈ I(mZ): for every j, the G_j exponent is at least m*m_j - B where B is
/// the x-degree of g.
inline bool gm_member(const GeneralizedMonomial& g, const LineScheme& z, unsigned m) {
  require_line_alphabet(g, z);
  const std::uint64_t b = g.x_degree();
  for (std::size_t j = 1; j <= z.num_points(); ++j) {
    const std::uint64_t need = std::uint64_t{m} * z.multiplicity(j);
    if (need > b && g.form_exponent(j) < need - b) return false;
  }
  return true;
}

/// Scheme k(P_i + ... + P_n) over the same points as z.
inline LineScheme tail_scheme(const LineScheme& z, std::size_t i, unsigned k) {
  std::vector<unsigned> mults(z.num_points(), 0);
  for (std::size_t j = i; j <= z.num_points(); ++j) mults[j - 1] = k;
  return z.with_multiplicities(mults);
}

/// target = residual * prod(factors), factor i lying in I(k_i (P_i+...+P_n))
/// with k_i = m*m_i - m*m_{i-1}.
struct SplitCertificate {
  GeneralizedMonomial target;
  std::vector<GeneralizedMonomial> factors;
  GeneralizedMonomial residual;
  /// k_i per factor; factor i's scheme is k_i (P_i + ... + P_n).
  std::vector<unsigned> factor_multiplicities;
};

/// Checks the exponent bookkeeping and every factor's membership.
inline bool certificate_valid(const SplitCertificate& cert, const LineScheme& z) {
  const std::size_t n = z.num_points();
  if (cert.factors.size() != n || cert.factor_multiplicities.size() != n) return false;
  ExponentVector total = cert.residual.exps();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = cert.factors[i - 1];
    if (!gm_member(f, tail_scheme(z, i, cert.factor_multiplicities[i - 1]), 1)) return false;
    total = total + f.exps();
  }
  return total == cert.target.exps();
}

/// Factors a member g of I(mZ) through prod_i I((m*m_i - m*m_{i-1}) Z_i),
/// Z_i = P_i + ... + P_n.
///
/// The x-part is cut, in variable order x_2..x_N, into blocks H_1, H_2, ...
/// of sizes m*m_1, m*m_2 - m*m_1, ...; with a_j = max(0, m*m_j - |H|) and
/// M_i = G_i ... G_n, factor i is M_i^{a_i - a_{i-1}} H_i. Whatever is left
/// of g forms the residual.
inline SplitCertificate split_factorize(const GeneralizedMonomial& g, const LineScheme& z, unsigned m) {
  if (!gm_member(g, z, m)) throw NotAMember(g.to_string() + " is not in I(mZ)");
  const std::size_t n = z.num_points();
  const std::size_t nx = z.ambient_dim() - 1;

  // Flatten the x-part into a sequence of variable indices, in order.
  std::vector<std::size_t> xs;
  for (std::size_t k = 0; k < nx; ++k)
    for (unsigned e = 0; e < g.exps()[n + k]; ++e) xs.push_back(k);
  const std::uint64_t used = std::min<std::uint64_t>(xs.size(), std::uint64_t{m} * z.max_multiplicity());

  auto a = [&](std::size_t j) -> std::uint64_t {
    if (j == 0) return 0;
    const std::uint64_t need = std::uint64_t{m} * z.multiplicity(j);
    return need > used ? need - used : 0;
  };

  SplitCertificate cert{g, {}, g, {}};
  ExponentVector rest = g.exps();
  std::size_t cursor = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const unsigned k = m * (z.multiplicity(i) - z.multiplicity(i - 1));
    ExponentVector f(z.alphabet_size());
    const auto step = static_cast<ExponentVector::value_type>(a(i) - a(i - 1));
    for (std::size_t j = i; j <= n; ++j) f[j - 1] = step;
    for (unsigned t = 0; t < k && cursor < used; ++t, ++cursor) f[n + xs[cursor]] += 1;
    rest = rest - f;
    cert.factors.emplace_back(n, std::move(f));
    cert.factor_multiplicities.push_back(k);
  }
  cert.residual = GeneralizedMonomial(n, std::move(rest));
  if (!certificate_valid(cert, z))
    throw InvariantViolation("split certificate for " + g.to_string() + " failed validation");
  return cert;
}

/// I(mZ) = prod_i I((m*m_i - m*m_{i-1}) Z_i), checked in both directions:
/// every product of the factors' generators is a member of I(mZ), and every
/// generator of I(mZ) has a valid split certificate.
inline bool verify_line_splitting(const LineScheme& z, unsigned m) {
  if (m < 1) throw PreconditionViolation("m must be positive");
  const std::size_t n = z.num_points();
  MonomialIdeal prod = MonomialIdeal::unit(z.alphabet_size());
  for (std::size_t i = 1; i <= n; ++i) {
    const unsigned k = m * (z.multiplicity(i) - z.multiplicity(i - 1));
    if (k == 0) continue;
    prod = product(prod, divisibility_ideal(canonical_generators(tail_scheme(z, i, k), 1), z.alphabet_size()));
  }
  for (const auto& g : as_generalized(prod, n))
    if (!gm_member(g, z, m)) return false;
  for (const auto& g : canonical_generators(z, m)) {
    const auto cert = split_factorize(g, z, m);
    if (!certificate_valid(cert, z)) return false;
  }
  return true;
}

/// Certificate route for I(mZ) = I(Z)^m that does not rely on generator sets
/// coinciding:
///   I(Z)^m ⊆ I(mZ): every product of m generators of I(Z) passes gm_member;
///   I(mZ) ⊆ I(Z)^m: every generator of I(mZ) splits into factors f_i with
///     f_i divisible by a product of k_i generators of I(Z_i), and
///     prod_i I(Z_i)^{m_i - m_{i-1}} ⊆ I(Z) holds generator-wise.
inline bool certify_collinear_power(const LineScheme& z, unsigned m) {
  const std::size_t n = z.num_points();
  const std::size_t alph = z.alphabet_size();
  const auto base = divisibility_ideal(canonical_generators(z, 1), alph);
  for (const auto& g : as_generalized(power(base, m), n))
    if (!gm_member(g, z, m)) return false;

  MonomialIdeal layered = MonomialIdeal::unit(alph);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto simple = divisibility_ideal(canonical_generators(tail_scheme(z, i, 1), 1), alph);
    layered = product(layered, power(simple, z.multiplicity(i) - z.multiplicity(i - 1)));
  }
  for (const auto& g : as_generalized(layered, n))
    if (!gm_member(g, z, 1)) return false;

  std::vector<MonomialIdeal> simple_powers;
  for (std::size_t i = 1; i <= n; ++i) {
    const unsigned k = m * (z.multiplicity(i) - z.multiplicity(i - 1));
    simple_powers.push_back(power(divisibility_ideal(canonical_generators(tail_scheme(z, i, 1), 1), alph), k));
  }
  for (const auto& g : canonical_generators(z, m)) {
    const auto cert = split_factorize(g, z, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!member(cert.factors[i].exps(), simple_powers[i])) return false;
  }
  return true;
}

struct CollinearPowerCheck {
  unsigned m;
  bool generator_sets_equal;
  bool verified;
};

/// I(Z)^{(m)} = I(Z)^m for one m: equal generator sets settle it, otherwise
/// the two-sided certificate route decides.
inline CollinearPowerCheck check_collinear_power(const LineScheme& z, unsigned m) {
  const auto alph = z.alphabet_size();
  const auto sym = divisibility_ideal(canonical_generators(z, m), alph);
  const auto pw = power(divisibility_ideal(canonical_generators(z, 1), alph), m);
  if (sym == pw) return {m, true, true};
  return {m, false, certify_collinear_power(z, m)};
}

inline bool verify_theorem_collinear(const LineScheme& z, unsigned m_max) {
  if (m_max < 1) throw PreconditionViolation("m_max must be positive");
  for (unsigned m = 1; m <= m_max; ++m)
    if (!check_collinear_power(z, m).verified) return false;
  return true;
}

inline nlohmann::ordered_json to_json(const GeneralizedMonomial& g) {
  nlohmann::ordered_json out;
  auto forms = nlohmann::ordered_json::array();
  auto xs = nlohmann::ordered_json::array();
  for (std::size_t j = 1; j <= g.n_forms(); ++j) forms.push_back(g.form_exponent(j));
  for (std::size_t k = 2; k < 2 + g.n_x(); ++k) xs.push_back(g.x_exponent(k));
  out["G"] = forms;
  out["x"] = xs;
  return out;
}

inline nlohmann::ordered_json to_json(const LineScheme& z) {
  nlohmann::ordered_json out;
  out["n_ambient"] = z.ambient_dim();
  auto pts = nlohmann::ordered_json::array();
  for (std::size_t j = 1; j <= z.num_points(); ++j)
    pts.push_back({{"c", to_short_string(z.point(j).c)},
                   {"d", to_short_string(z.point(j).d)},
                   {"multiplicity", z.multiplicity(j)}});
  out["points"] = pts;
  return out;
}

inline nlohmann::ordered_json to_json(const SplitCertificate& cert) {
  nlohmann::ordered_json out;
  out["target"] = to_json(cert.target);
  auto factors = nlohmann::ordered_json::array();
  auto refs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    factors.push_back(to_json(cert.factors[i]));
    refs.push_back({{"first_point", i + 1}, {"multiplicity", cert.factor_multiplicities[i]}});
  }
  out["factors"] = factors;
  out["factor_scheme_refs"] = refs;
  out["residual"] = to_json(cert.residual);
  return out;
}

}  // namespace fatpoint

#endif
