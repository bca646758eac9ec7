#ifndef FATPOINT_CONTAINMENT_HPP
#define FATPOINT_CONTAINMENT_HPP

#include "fatpoint/errors.hpp"
#include "fatpoint/invariants.hpp"
#include "fatpoint/monomial_ideal.hpp"
#include "fatpoint/rational.hpp"
#include "fatpoint/scheme.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <vector>

namespace fatpoint {

struct ContainmentEntry {
  unsigned m;
  unsigned r;
  bool contained;
  /// A generator of I^{(m)} outside I^r, for noncontainments.
  std::optional<ExponentVector> witness;
};

/// Decisions of I^{(m)} ⊆ I^r over 1 <= m <= m_max, 1 <= r <= r_max,
/// stored row-major in m.
struct ContainmentTable {
  FatPointScheme scheme;
  unsigned m_max = 0;
  unsigned r_max = 0;
  std::vector<ContainmentEntry> entries;

  const ContainmentEntry& at(unsigned m, unsigned r) const {
    if (m < 1 || m > m_max || r < 1 || r > r_max) throw OutOfRange("table index out of range");
    return entries[(m - 1) * r_max + (r - 1)];
  }

  /// contained(m, r) implies contained(m', r') for m' >= m, r' <= r.
  bool is_monotone() const {
    for (const auto& e : entries) {
      if (!e.contained) continue;
      if (e.m < m_max && !at(e.m + 1, e.r).contained) return false;
      if (e.r > 1 && !at(e.m, e.r - 1).contained) return false;
    }
    return true;
  }
};

inline ContainmentTable containment_table(const FatPointScheme& z, unsigned m_max, unsigned r_max) {
  if (m_max < 1 || r_max < 1) throw PreconditionViolation("grid bounds must be positive");
  const auto powers = powers_upto(ideal_of(z), r_max);
  ContainmentTable table{z, m_max, r_max, {}};
  table.entries.reserve(std::size_t{m_max} * r_max);
  for (unsigned m = 1; m <= m_max; ++m) {
    const auto sym = symbolic_power(z, m);
    for (unsigned r = 1; r <= r_max; ++r) {
      auto witness = first_nonmember(powers[r], sym);
      table.entries.push_back({m, r, !witness.has_value(), std::move(witness)});
    }
  }
  return table;
}

struct SdefectResult {
  bool zero_defect = true;
  unsigned checked_upto = 0;
  std::optional<unsigned> first_failing_m;
  /// Generator of I^{(m)} not in I^m at the first failing m.
  std::optional<ExponentVector> witness;
};

/// Checks I^{(m)} == I^m as generator sets for m = 1..m_max.
inline SdefectResult sdefect_zero_upto(const FatPointScheme& z, unsigned m_max) {
  if (m_max < 1) throw PreconditionViolation("m_max must be positive");
  const auto base = ideal_of(z);
  SdefectResult out;
  out.checked_upto = m_max;
  MonomialIdeal pw = MonomialIdeal::unit(z.alphabet_size());
  for (unsigned m = 1; m <= m_max; ++m) {
    pw = product(pw, base);
    const auto sym = symbolic_power(z, m);
    if (sym == pw) continue;
    out.zero_defect = false;
    out.first_failing_m = m;
    out.witness = first_nonmember(pw, sym);
    if (!out.witness) throw InvariantViolation("I^m strictly contains I^(m) for " + z.to_string());
    return out;
  }
  return out;
}

/// Multiplicities at P0, P1, P2; the support must lie in {P0, P1, P2}.
inline std::array<unsigned, 3> triangle_multiplicities(const FatPointScheme& z) {
  for (const auto& e : z.support())
    if (e.point > 2) throw PreconditionViolation("scheme must be supported at P0, P1, P2");
  return {z.multiplicity(0), z.multiplicity(1), z.multiplicity(2)};
}

struct AmbientComparison {
  bool contained_in_pn;
  bool contained_in_p2;
};

/// Decides I^{(m)} ⊆ I^r both in P^N and in the plane spanned by P0, P1, P2.
/// Throws InvariantViolation if the P^N containment holds but the planar one
/// does not.
inline AmbientComparison compare_ambient(const FatPointScheme& z, unsigned m, unsigned r) {
  triangle_multiplicities(z);
  auto decide = [&](const FatPointScheme& s) {
    return contains(power(ideal_of(s), r), symbolic_power(s, m));
  };
  const AmbientComparison out{decide(z), decide(z.in_ambient(2))};
  if (out.contained_in_pn && !out.contained_in_p2)
    throw InvariantViolation("containment in P^N without containment in P^2 for " + z.to_string());
  return out;
}

struct ResurgenceWitness {
  unsigned m;
  unsigned r;
  ExponentVector monomial;
};

/// Resurgence of a scheme at P0, P1, P2 as the interval
/// [empirical_lower, certified_value]. The supremum is not claimed to be
/// attained.
struct ResurgenceReport {
  FatPointScheme scheme;
  ClassifyResult classification;
  /// Largest m/r over noncontainments in the grid.
  Rational empirical_lower;
  std::optional<Rational> certified_value;
  /// alpha(I) / Waldschmidt constant in P^2, when all three points are present.
  std::optional<Rational> alpha_ratio_bound;
  /// Noncontainments with m >= r.
  std::vector<ResurgenceWitness> witnesses;
  /// Noncontainments with m / r > certified_value; must be empty.
  std::vector<ResurgenceWitness> violations;
  ContainmentTable table;
};

inline ResurgenceReport resurgence_report(const FatPointScheme& z, unsigned m_max, unsigned r_max) {
  const auto mults = triangle_multiplicities(z);
  ResurgenceReport out{z, classify(mults[0], mults[1], mults[2], false), Rational(0), std::nullopt,
                       std::nullopt, {}, {}, containment_table(z, m_max, r_max)};
  out.certified_value = out.classification.certified_rho;
  const auto& s = out.classification.sorted;
  if (s[0] > 0) {
    out.alpha_ratio_bound = Rational(alpha_three_points(s[0], s[1], s[2])) /
                            waldschmidt_three_points(s[0], s[1], s[2]);
  }
  for (const auto& e : out.table.entries) {
    if (e.contained) continue;
    const Rational ratio(e.m, e.r);
    if (ratio > out.empirical_lower) out.empirical_lower = ratio;
    if (e.m >= e.r) out.witnesses.push_back({e.m, e.r, *e.witness});
    if (out.certified_value && ratio > *out.certified_value) out.violations.push_back({e.m, e.r, *e.witness});
  }
  return out;
}

inline nlohmann::ordered_json to_json(const ContainmentTable& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& e : table.entries) {
    nlohmann::ordered_json row = {e.m, e.r, e.contained};
    if (e.witness) row.push_back(to_json(*e.witness));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json to_json(const ResurgenceReport& rep) {
  auto witness_list = [](const std::vector<ResurgenceWitness>& ws) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& w : ws) out.push_back({w.m, w.r, to_json(w.monomial)});
    return out;
  };
  auto opt_fraction = [](const std::optional<Rational>& q) -> nlohmann::ordered_json {
    if (!q) return nullptr;
    return to_fraction_string(*q);
  };
  nlohmann::ordered_json out;
  out["scheme"] = to_json(rep.scheme);
  out["classification"] = to_string(rep.classification.kind);
  out["certified_rho"] = opt_fraction(rep.certified_value);
  out["empirical_lower"] = to_fraction_string(rep.empirical_lower);
  out["table"] = to_json(rep.table);
  out["permutation"] = rep.classification.permutation;
  out["alpha_ratio_bound"] = opt_fraction(rep.alpha_ratio_bound);
  out["witnesses"] = witness_list(rep.witnesses);
  out["violations"] = witness_list(rep.violations);
  return out;
}

}  // namespace fatpoint

#endif
