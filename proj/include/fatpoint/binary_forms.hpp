#ifndef FATPOINT_BINARY_FORMS_HPP
#define FATPOINT_BINARY_FORMS_HPP

// Exact-rational forms on P^N split as K[x0, x1][x2, ..., xN], and the
// divisibility test for membership in a fat point ideal supported on the
// line x2 = ... = xN = 0.

#include "fatpoint/collinear.hpp"
#include "fatpoint/errors.hpp"
#include "fatpoint/exponent_vector.hpp"
#include "fatpoint/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoint {

/// Homogeneous polynomial in x0..x_{n-1} with nonzero rational coefficients.
class SparsePoly {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  explicit SparsePoly(std::size_t n_vars) : n_vars_(n_vars) {}

  static SparsePoly monomial(const ExponentVector& e, const Rational& coeff = Rational(1)) {
    SparsePoly p(e.size());
    p.add_term(e, coeff);
    return p;
  }

  std::size_t n_vars() const { return n_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExponentVector& e, const Rational& coeff) {
    require_same_alphabet(n_vars_, e.size());
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_)
      if (e.degree() != d) return false;
    return true;
  }

  /// Degree of a homogeneous nonzero polynomial.
  std::uint64_t degree() const {
    if (!is_homogeneous()) throw NonHomogeneous("polynomial is not homogeneous");
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    require_same_alphabet(a.n_vars_, b.n_vars_);
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require_same_alphabet(a.n_vars_, b.n_vars_);
    SparsePoly out(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::size_t n_vars_;
  Terms terms_;
};

inline SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly out = SparsePoly::monomial(ExponentVector(p.n_vars()));
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

/// Prints terms as `q * x0^a0 x1^a1 ... xN^aN`, largest exponent vector
/// first, every exponent written out. The zero polynomial prints as "0".
inline std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      out += to_short_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_short_string(c < 0 ? Rational(-c) : c);
    }
    first = false;
    out += " *";
    for (std::size_t i = 0; i < e.size(); ++i) out += " x" + std::to_string(i) + "^" + std::to_string(e[i]);
  }
  return out;
}

/// Parses the printer's format. Also accepts omitted coefficients, `*`
/// between factors, `xi` for `xi^1`, and omitted variables.
inline SparsePoly parse_poly(std::string_view text, std::size_t n_vars) {
  SparsePoly out(n_vars);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("cannot parse form at offset " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    const auto start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  if (text.substr(pos) == "0") return out;
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_term) {
      if (text[pos] == '+') sign = 1;
      else if (text[pos] == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos;
      expect_term = true;
      continue;
    }
    if (text[pos] == '-' || text[pos] == '+') {
      if (text[pos] == '-') sign = -sign;
      ++pos;
      continue;
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_digits();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::string den = read_digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      coeff = parse_rational(num);
      have_coeff = true;
    }
    ExponentVector e(n_vars);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != 'x') break;
      ++pos;
      const std::string idx = read_digits();
      if (idx.empty()) fail("variable index expected");
      const auto i = std::stoul(idx);
      if (i >= n_vars) fail("variable x" + idx + " outside the ambient space");
      unsigned ex = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::string d = read_digits();
        if (d.empty()) fail("exponent expected");
        ex = static_cast<unsigned>(std::stoul(d));
      }
      e[i] += ex;
      have_factor = true;
    }
    if (!have_coeff && !have_factor) fail("empty term");
    out.add_term(e, sign < 0 ? Rational(-coeff) : coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !out.is_zero()) fail("dangling sign");
  return out;
}

/// sum_k coeff(k) x0^{d-k} x1^k. The zero form keeps its degree and has no
/// stored coefficients.
class BinaryForm {
 public:
  BinaryForm(unsigned degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != std::size_t{degree} + 1 && !coeffs_.empty())
      throw PreconditionViolation("binary form of degree d needs d + 1 coefficients");
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; })) coeffs_.clear();
  }

  static BinaryForm zero(unsigned degree) { return BinaryForm(degree, {}); }
  /// c*x0 + d*x1
  static BinaryForm linear(const Rational& c, const Rational& d) { return BinaryForm(1, {c, d}); }

  unsigned degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x0^{d-k} x1^k.
  Rational coeff(std::size_t k) const { return is_zero() ? Rational(0) : coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  unsigned degree_;
  std::vector<Rational> coeffs_;
};

/// Quotient g / (c*x0 + d*x1) when the division is exact.
inline std::optional<BinaryForm> divide_by_linear(const BinaryForm& g, const BinaryForm& lin) {
  if (g.is_zero()) return BinaryForm::zero(g.degree() == 0 ? 0 : g.degree() - 1);
  if (g.degree() == 0) return std::nullopt;
  const Rational c = lin.coeff(0), d = lin.coeff(1);
  const unsigned e = g.degree();
  // g_k = c q_k + d q_{k-1}, with q of degree e - 1.
  std::vector<Rational> q(e);
  if (c != 0) {
    Rational prev(0);
    for (unsigned k = 0; k < e; ++k) {
      q[k] = (g.coeff(k) - d * prev) / c;
      prev = q[k];
    }
    if (g.coeff(e) != d * q[e - 1]) return std::nullopt;
  } else {
    for (unsigned k = 1; k <= e; ++k) q[k - 1] = g.coeff(k) / d;
    if (g.coeff(0) != 0) return std::nullopt;
  }
  return BinaryForm(e - 1, std::move(q));
}

/// Whether lin^k divides g over the rationals.
inline bool binary_divides(const BinaryForm& lin, unsigned k, const BinaryForm& g) {
  if (lin.degree() != 1 || lin.is_zero()) throw PreconditionViolation("divisor must be a nonzero linear form");
  if (g.is_zero()) return true;
  BinaryForm cur = g;
  for (unsigned i = 0; i < k; ++i) {
    auto q = divide_by_linear(cur, lin);
    if (!q) return false;
    cur = std::move(*q);
  }
  return true;
}

/// Keys are exponent tuples (i_2, ..., i_N); values the coefficient forms in
/// x0, x1 of degree d - (i_2 + ... + i_N).
using Decomposition = std::map<ExponentVector, BinaryForm>;

inline Decomposition decompose(const SparsePoly& f) {
  if (!f.is_homogeneous()) throw NonHomogeneous("decompose needs a homogeneous form");
  if (f.n_vars() < 2) throw PreconditionViolation("need at least the variables x0, x1");
  const std::size_t tail = f.n_vars() - 2;
  std::map<ExponentVector, std::vector<Rational>> grouped;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector key(tail);
    for (std::size_t i = 0; i < tail; ++i) key[i] = e[i + 2];
    auto& coeffs = grouped[key];
    coeffs.resize(std::size_t{e[0]} + e[1] + 1);
    coeffs[e[1]] = c;
  }
  Decomposition out;
  for (auto& [key, coeffs] : grouped) {
    const auto d = static_cast<unsigned>(coeffs.size() - 1);
    out.emplace(key, BinaryForm(d, std::move(coeffs)));
  }
  return out;
}

inline SparsePoly recompose(const Decomposition& parts, std::size_t n_vars) {
  SparsePoly out(n_vars);
  for (const auto& [key, form] : parts) {
    require_same_alphabet(key.size() + 2, n_vars);
    if (form.is_zero()) continue;
    for (unsigned k = 0; k <= form.degree(); ++k) {
      ExponentVector e(n_vars);
      e[0] = form.degree() - k;
      e[1] = k;
      for (std::size_t i = 0; i < key.size(); ++i) e[i + 2] = key[i];
      out.add_term(e, form.coeff(k));
    }
  }
  return out;
}

/// F ∈ I(mP) for the line point P cut out by G = c*x0 + d*x1: for every
/// key with i_2 + ... + i_N < m, G^{m - sum} divides the key's form.
inline bool poly_membership(const SparsePoly& f, const LinePoint& p, unsigned m) {
  const auto g = BinaryForm::linear(p.c, p.d);
  for (const auto& [key, form] : decompose(f)) {
    const auto sum = key.degree();
    if (sum < m && !binary_divides(g, static_cast<unsigned>(m - sum), form)) return false;
  }
  return true;
}

struct MembershipVerdict {
  bool member;
  /// The input was the zero polynomial, which lies in every ideal.
  bool zero_form;
  explicit operator bool() const { return member; }
};

/// F ∈ I(sum_j m*m_j P_j).
inline MembershipVerdict multi_point_membership(const SparsePoly& f, const LineScheme& z, unsigned m) {
  require_same_alphabet(f.n_vars(), std::size_t{z.ambient_dim()} + 1);
  if (f.is_zero()) return {true, true};
  for (std::size_t j = 1; j <= z.num_points(); ++j)
    if (!poly_membership(f, z.point(j), m * z.multiplicity(j))) return {false, false};
  return {true, false};
}

/// Multiplies out a generalized monomial into x0..xN.
inline SparsePoly expand(const GeneralizedMonomial& g, const LineScheme& z) {
  require_line_alphabet(g, z);
  const std::size_t nv = std::size_t{z.ambient_dim()} + 1;
  ExponentVector xs(nv);
  for (std::size_t k = 2; k <= z.ambient_dim(); ++k) xs[k] = g.x_exponent(k);
  SparsePoly out = SparsePoly::monomial(xs);
  for (std::size_t j = 1; j <= g.n_forms(); ++j) {
    SparsePoly lin(nv);
    lin.add_term(ExponentVector::variable(nv, 0), z.point(j).c);
    lin.add_term(ExponentVector::variable(nv, 1), z.point(j).d);
    out = out * pow(lin, g.form_exponent(j));
  }
  return out;
}

}  // namespace fatpoint

#endif
