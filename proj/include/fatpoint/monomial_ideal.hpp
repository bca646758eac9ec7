#ifndef FATPOINT_MONOMIAL_IDEAL_HPP
#define FATPOINT_MONOMIAL_IDEAL_HPP

#include "fatpoint/errors.hpp"
#include "fatpoint/exponent_vector.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fatpoint {

namespace detail {

/// Prefix tree over exponent tuples answering "is some stored vector <= v?".
///
/// Children are kept sorted by exponent so a query only descends into
/// branches whose key does not exceed the queried coordinate.
class DivisorTrie {
 public:
  explicit DivisorTrie(std::size_t depth) : depth_(depth), nodes_(1) {}

  void insert(const ExponentVector& v) {
    std::uint32_t node = 0;
    for (std::size_t d = 0; d < depth_; ++d) {
      auto& kids = nodes_[node];
      auto it = std::lower_bound(kids.begin(), kids.end(), v[d],
                                 [](const Edge& e, std::uint32_t key) { return e.key < key; });
      if (it != kids.end() && it->key == v[d]) {
        node = it->child;
        continue;
      }
      const auto child = static_cast<std::uint32_t>(nodes_.size());
      kids.insert(it, Edge{v[d], child});
      nodes_.emplace_back();
      node = child;
    }
    empty_ = false;
  }

  bool has_divisor_of(const ExponentVector& v) const {
    if (empty_) return false;
    return search(0, 0, v);
  }

 private:
  struct Edge {
    std::uint32_t key;
    std::uint32_t child;
  };

  bool search(std::uint32_t node, std::size_t d, const ExponentVector& v) const {
    if (d == depth_) return true;
    for (const Edge& e : nodes_[node]) {
      if (e.key > v[d]) break;
      if (search(e.child, d + 1, v)) return true;
    }
    return false;
  }

  std::size_t depth_;
  std::vector<std::vector<Edge>> nodes_;
  bool empty_ = true;
};

}  // namespace detail

/// A monomial ideal given by its unique minimal generating set.
///
/// Generators form a divisibility antichain stored in lexicographic order.
/// The zero ideal has no generators; the unit ideal is generated by the
/// all-zeros vector. Instances are immutable.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  static MonomialIdeal zero(std::size_t alphabet_size) { return MonomialIdeal(alphabet_size); }
  static MonomialIdeal unit(std::size_t alphabet_size) {
    MonomialIdeal out(alphabet_size);
    out.gens_.emplace_back(alphabet_size);
    return out;
  }

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::span<const ExponentVector> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::size_t, std::vector<ExponentVector>);

  std::size_t alphabet_size_;
  std::vector<ExponentVector> gens_;
};

/// Reduces a generating set to its minimal elements under divisibility.
inline MonomialIdeal minimalize(std::size_t alphabet_size, std::vector<ExponentVector> vectors) {
  for (const auto& v : vectors) require_same_alphabet(alphabet_size, v.size());
  // A proper divisor always has strictly smaller degree, so after sorting by
  // degree every candidate's divisors have already been decided.
  std::sort(vectors.begin(), vectors.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());

  MonomialIdeal out(alphabet_size);
  detail::DivisorTrie trie(alphabet_size);
  for (auto& v : vectors) {
    if (trie.has_divisor_of(v)) continue;
    trie.insert(v);
    out.gens_.push_back(std::move(v));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

inline MonomialIdeal minimalize(std::size_t alphabet_size, std::span<const ExponentVector> vectors) {
  return minimalize(alphabet_size, std::vector<ExponentVector>(vectors.begin(), vectors.end()));
}

/// Ideal generated by a single monomial.
inline MonomialIdeal principal(const ExponentVector& g) {
  return minimalize(g.size(), std::vector<ExponentVector>{g});
}

inline bool member(const ExponentVector& m, const MonomialIdeal& ideal) {
  require_same_alphabet(m.size(), ideal.alphabet_size());
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& g) { return divides(g, m); });
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_alphabet(a.alphabet_size(), b.alphabet_size());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<ExponentVector> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) sums.push_back(g + h);
  return minimalize(a.alphabet_size(), std::move(sums));
}

/// Product of a list of ideals over a common alphabet.
inline MonomialIdeal product(std::span<const MonomialIdeal> factors, std::size_t alphabet_size) {
  MonomialIdeal out = MonomialIdeal::unit(alphabet_size);
  for (const auto& f : factors) out = product(out, f);
  return out;
}

/// I^r, with I^0 the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned r) {
  MonomialIdeal out = MonomialIdeal::unit(ideal.alphabet_size());
  for (unsigned i = 0; i < r; ++i) out = product(out, ideal);
  return out;
}

/// [I^0, I^1, ..., I^r_max]
inline std::vector<MonomialIdeal> powers_upto(const MonomialIdeal& ideal, unsigned r_max) {
  std::vector<MonomialIdeal> out;
  out.reserve(r_max + 1);
  out.push_back(MonomialIdeal::unit(ideal.alphabet_size()));
  for (unsigned r = 1; r <= r_max; ++r) out.push_back(product(out.back(), ideal));
  return out;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_alphabet(a.alphabet_size(), b.alphabet_size());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<ExponentVector> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) lcms.push_back(lcm(g, h));
  return minimalize(a.alphabet_size(), std::move(lcms));
}

/// First generator of `sub` (in canonical order) outside `super`, if any.
inline std::optional<ExponentVector> first_nonmember(const MonomialIdeal& super,
                                                      const MonomialIdeal& sub) {
  require_same_alphabet(super.alphabet_size(), sub.alphabet_size());
  detail::DivisorTrie trie(super.alphabet_size());
  for (const auto& g : super.generators()) trie.insert(g);
  for (const auto& h : sub.generators())
    if (!trie.has_divisor_of(h)) return h;
  return std::nullopt;
}

/// True iff sub is a subset of super.
inline bool contains(const MonomialIdeal& super, const MonomialIdeal& sub) {
  return !first_nonmember(super, sub).has_value();
}

/// Least degree of a nonzero element; nullopt stands for +infinity (zero ideal).
inline std::optional<std::uint64_t> alpha(const MonomialIdeal& ideal) {
  std::optional<std::uint64_t> best;
  for (const auto& g : ideal.generators())
    if (!best || g.degree() < *best) best = g.degree();
  return best;
}

inline nlohmann::ordered_json to_json(const ExponentVector& v) {
  auto out = nlohmann::ordered_json::array();
  for (auto e : v) out.push_back(e);
  return out;
}

inline nlohmann::ordered_json to_json(const MonomialIdeal& ideal) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_json(g));
  return out;
}

inline ExponentVector exponent_vector_from_json(const nlohmann::ordered_json& j) {
  std::vector<ExponentVector::value_type> exps = j.get<std::vector<ExponentVector::value_type>>();
  return ExponentVector(std::span<const ExponentVector::value_type>(exps));
}

/// The alphabet size is explicit so that the zero ideal round-trips.
inline MonomialIdeal ideal_from_json(const nlohmann::ordered_json& j, std::size_t alphabet_size) {
  std::vector<ExponentVector> gens;
  for (const auto& g : j) gens.push_back(exponent_vector_from_json(g));
  return minimalize(alphabet_size, std::move(gens));
}

}  // namespace fatpoint

#endif
