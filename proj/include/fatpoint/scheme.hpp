#ifndef FATPOINT_SCHEME_HPP
#define FATPOINT_SCHEME_HPP

#include "fatpoint/errors.hpp"
#include "fatpoint/exponent_vector.hpp"
#include "fatpoint/monomial_ideal.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fatpoint {

/// Calls f on every exponent vector of the given total degree, in
/// lexicographically decreasing order.
inline void for_each_monomial_of_degree(std::size_t alphabet_size, std::uint64_t degree,
                                        const std::function<void(const ExponentVector&)>& f) {
  if (alphabet_size == 0) {
    if (degree == 0) f(ExponentVector{});
    return;
  }
  ExponentVector v(alphabet_size);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == alphabet_size) {
      v[i] = static_cast<ExponentVector::value_type>(left);
      f(v);
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      v[i] = static_cast<ExponentVector::value_type>(e);
      rec(i + 1, left - e);
    }
    v[i] = 0;
  };
  rec(0, degree);
}

inline void for_each_monomial_upto(std::size_t alphabet_size, std::uint64_t max_degree,
                                   const std::function<void(const ExponentVector&)>& f) {
  for (std::uint64_t d = 0; d <= max_degree; ++d) for_each_monomial_of_degree(alphabet_size, d, f);
}

/// A fat point scheme sum m_i P_i supported at coordinate points of P^N,
/// where P_i is the point whose only nonzero coordinate is x_i.
class FatPointScheme {
 public:
  struct Entry {
    std::size_t point;
    unsigned multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  FatPointScheme(unsigned ambient_dim, const std::vector<Entry>& entries)
      : ambient_dim_(ambient_dim), mults_(ambient_dim + 1, 0) {
    if (ambient_dim < 2) throw PreconditionViolation("ambient dimension must be at least 2");
    std::vector<bool> seen(ambient_dim + 1, false);
    for (const auto& e : entries) {
      if (e.point > ambient_dim)
        throw PreconditionViolation("point index " + std::to_string(e.point) + " outside P^" +
                                    std::to_string(ambient_dim));
      if (seen[e.point])
        throw PreconditionViolation("point index " + std::to_string(e.point) + " repeated");
      seen[e.point] = true;
      mults_[e.point] = e.multiplicity;
    }
  }

  /// m0 P0 + m1 P1 + m2 P2 in P^N.
  static FatPointScheme three_points(unsigned ambient_dim, unsigned m0, unsigned m1, unsigned m2) {
    return FatPointScheme(ambient_dim, {{0, m0}, {1, m1}, {2, m2}});
  }

  unsigned ambient_dim() const { return ambient_dim_; }
  std::size_t alphabet_size() const { return ambient_dim_ + 1; }
  unsigned multiplicity(std::size_t point) const { return mults_.at(point); }

  /// Points with positive multiplicity, by increasing index.
  std::vector<Entry> support() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < mults_.size(); ++i)
      if (mults_[i] > 0) out.push_back({i, mults_[i]});
    return out;
  }

  bool is_empty() const { return support().empty(); }

  FatPointScheme scaled(unsigned k) const {
    FatPointScheme out = *this;
    for (auto& m : out.mults_) m *= k;
    return out;
  }

  friend FatPointScheme operator+(const FatPointScheme& a, const FatPointScheme& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw AlphabetMismatch(a.alphabet_size(), b.alphabet_size());
    FatPointScheme out = a;
    for (std::size_t i = 0; i < out.mults_.size(); ++i) out.mults_[i] += b.mults_[i];
    return out;
  }

  /// The same scheme viewed in P^n; every support point must exist there.
  FatPointScheme in_ambient(unsigned n) const {
    std::vector<Entry> entries = support();
    return FatPointScheme(n, entries);
  }

  friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& e : support()) {
      if (!out.empty()) out += " + ";
      out += std::to_string(e.multiplicity) + "*P" + std::to_string(e.point);
    }
    if (out.empty()) out = "0";
    return out + " in P^" + std::to_string(ambient_dim_);
  }

 private:
  unsigned ambient_dim_;
  std::vector<unsigned> mults_;
};

inline nlohmann::ordered_json to_json(const FatPointScheme& z) {
  nlohmann::ordered_json out;
  out["n_ambient"] = z.ambient_dim();
  auto mults = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < z.alphabet_size(); ++i) mults.push_back(z.multiplicity(i));
  out["mults"] = mults;
  return out;
}

/// For each point P_i of Z, the sum of all exponents other than a_i is at
/// least m_i.
inline bool cond_satisfied(const ExponentVector& e, const FatPointScheme& z) {
  require_same_alphabet(e.size(), z.alphabet_size());
  const auto total = e.degree();
  for (const auto& p : z.support())
    if (total - e[p.point] < p.multiplicity) return false;
  return true;
}

/// Ideal of the coordinate point P_i, generated by every x_j with j != i.
inline MonomialIdeal point_ideal(unsigned ambient_dim, std::size_t point) {
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j <= ambient_dim; ++j)
    if (j != point) gens.push_back(ExponentVector::variable(ambient_dim + 1, j));
  return minimalize(ambient_dim + 1, std::move(gens));
}

/// I(P_i)^m: every degree-m monomial in the variables other than x_i.
inline MonomialIdeal point_ideal_power(unsigned ambient_dim, std::size_t point, unsigned m) {
  const std::size_t n = ambient_dim + 1;
  std::vector<ExponentVector> gens;
  for_each_monomial_of_degree(n - 1, m, [&](const ExponentVector& sub) {
    ExponentVector v(n);
    for (std::size_t j = 0, k = 0; j < n; ++j)
      if (j != point) v[j] = sub[k++];
    gens.push_back(std::move(v));
  });
  return minimalize(n, std::move(gens));
}

/// I ∩ I(P_i)^m.
///
/// A generator g of I lies in I(P_i)^m once its degree off x_i reaches m, so
/// the minimal generators of the intersection are among g * u with u of
/// exactly the missing degree in the variables other than x_i. Equal to
/// intersect(I, point_ideal_power(...)) but without the quadratic lcm table.
inline MonomialIdeal intersect_point_power(const MonomialIdeal& ideal, std::size_t point, unsigned m) {
  const std::size_t n = ideal.alphabet_size();
  if (point >= n) throw PreconditionViolation("point index outside alphabet");
  if (m == 0) return ideal;
  std::vector<ExponentVector> cands;
  for (const auto& g : ideal.generators()) {
    const std::uint64_t off = g.degree() - g[point];
    if (off >= m) {
      cands.push_back(g);
      continue;
    }
    for_each_monomial_of_degree(n - 1, m - off, [&](const ExponentVector& sub) {
      ExponentVector v = g;
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != point) v[j] += sub[k++];
      cands.push_back(std::move(v));
    });
  }
  return minimalize(n, std::move(cands));
}

/// I(Z) = intersection over the support of I(P_i)^{m_i}.
inline MonomialIdeal ideal_of(const FatPointScheme& z) {
  MonomialIdeal out = MonomialIdeal::unit(z.alphabet_size());
  for (const auto& p : z.support()) out = intersect_point_power(out, p.point, p.multiplicity);
  return out;
}

/// I(Z)^{(m)} = I(mZ).
inline MonomialIdeal symbolic_power(const FatPointScheme& z, unsigned m) {
  if (m < 1) throw PreconditionViolation("symbolic power index must be positive");
  return ideal_of(z.scaled(m));
}

}  // namespace fatpoint

#endif
