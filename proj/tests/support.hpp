#ifndef FATPOINT_TESTS_SUPPORT_HPP
#define FATPOINT_TESTS_SUPPORT_HPP

// Brute-force oracles that share no code with the library's ideal
// arithmetic, plus the seeded generator used by the property tests.

#include "fatpoint/monomial_ideal.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Mono = std::vector<unsigned>;

inline Mono mono(const fatpoint::ExponentVector& v) { return Mono(v.begin(), v.end()); }

inline fatpoint::ExponentVector vec(const Mono& m) {
  fatpoint::ExponentVector v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i];
  return v;
}

inline std::vector<Mono> gens(const fatpoint::MonomialIdeal& ideal) {
  std::vector<Mono> out;
  for (const auto& g : ideal.generators()) out.push_back(mono(g));
  return out;
}

inline unsigned degree(const Mono& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const Mono& m, const std::vector<Mono>& generating_set) {
  for (const auto& g : generating_set)
    if (divides(g, m)) return true;
  return false;
}

/// Every monomial in n variables of total degree <= max_degree.
inline std::vector<Mono> monomials_upto(std::size_t n, unsigned max_degree) {
  std::vector<Mono> out;
  Mono cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned budget) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      cur[i] = e;
      self(self, i + 1, budget - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// m in (A)(B): some a + b divides m.
inline bool product_member(const Mono& m, const std::vector<Mono>& a, const std::vector<Mono>& b) {
  for (const auto& x : a)
    for (const auto& y : b) {
      Mono s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      if (divides(s, m)) return true;
    }
  return false;
}

/// m in (A)^r.
inline bool power_member(const Mono& m, const std::vector<Mono>& a, unsigned r) {
  if (r == 0) return true;
  for (const auto& g : a) {
    if (!divides(g, m)) continue;
    Mono rest(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) rest[i] = m[i] - g[i];
    if (power_member(rest, a, r - 1)) return true;
  }
  return false;
}

/// Vanishing order of x^m at the coordinate point e_i is deg(m) - m_i.
inline bool fat_point_member(const Mono& m, const std::vector<unsigned>& mults) {
  const unsigned d = degree(m);
  for (std::size_t i = 0; i < mults.size(); ++i)
    if (d - m[i] < mults[i]) return false;
  return true;
}

inline std::uint64_t seed() {
  static const std::uint64_t value = [] {
    std::uint64_t s = 20240611;
    if (const char* env = std::getenv("FATPOINT_SEED"); env && *env) s = std::stoull(env);
    std::cerr << "FATPOINT_SEED=" << s << '\n';
    return s;
  }();
  return value;
}

/// Per-test generator; the test name keeps streams independent.
inline std::mt19937_64 rng(const std::string& salt) {
  std::seed_seq seq(salt.begin(), salt.end());
  std::mt19937_64 base(seq);
  return std::mt19937_64(seed() ^ base());
}

inline fatpoint::ExponentVector random_vector(std::mt19937_64& g, std::size_t n, unsigned max_entry) {
  std::uniform_int_distribution<unsigned> d(0, max_entry);
  fatpoint::ExponentVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = d(g);
  return v;
}

inline std::vector<fatpoint::ExponentVector> random_set(std::mt19937_64& g, std::size_t n, std::size_t count,
                                                        unsigned max_entry) {
  std::vector<fatpoint::ExponentVector> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_vector(g, n, max_entry));
  return out;
}

}  // namespace oracle

#endif
