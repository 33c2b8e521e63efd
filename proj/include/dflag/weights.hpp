#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "dflag/poset.hpp"
#include "dflag/symgroup.hpp"

namespace dflag {

using Rational = boost::rational<long long>;

/// Point of the type-A weight space in ambient coordinates: n+1 exact
/// rationals, permuted by S_{n+1}. The pairing with the root e_a - e_b is
/// the coordinate difference.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> coords);
  static WeightVector from_integers(const std::vector<long long>& coords);
  /// Parses "2,1,1,0"; entries may be fractions such as "1/2".
  static WeightVector parse(std::string_view text);

  int degree() const { return static_cast<int>(coords_.size()); }
  /// 1-based coordinate access.
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Rational>& coords() const { return coords_; }
  Rational sum() const;
  /// Weakly decreasing coordinates.
  bool is_dominant() const;
  /// The vector with coordinates a and b (1-based) exchanged: s_{e_a - e_b}.
  WeightVector reflect(int a, int b) const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend std::strong_ordering operator<=>(const WeightVector& x, const WeightVector& y);

 private:
  std::vector<Rational> coords_;
};

/// (w . theta)_{w(i)} = theta_i.
WeightVector act(const Permutation& w, const WeightVector& theta);

/// J = {i : theta_i = theta_{i+1}}. Throws DomainError unless theta is dominant.
GenSet stabilizer_genset(const WeightVector& theta);

/// The dominant representative used for a stabilizer pattern: coordinates
/// count down from |J^c| to 0, dropping by one after each index in J^c.
WeightVector canonical_dominant(int degree, const GenSet& stabilizer_complement);

/// (W theta)_I membership: mu_a >= mu_b whenever a < b lie in one I-block.
bool in_restriction(const WeightVector& mu, const GenSet& restriction);

/// The orbit W theta (or (W theta)_I) under <=_B, the transitive closure of
/// mu <=_B s_beta(mu) for positive roots beta with <mu, beta> > 0 and, when
/// restricted, s_beta(mu) inside the restriction. Element k of `order` is
/// orbit[k]; the orbit is sorted lexicographically descending, so theta
/// comes first.
struct OrbitPoset {
  WeightVector theta;
  std::optional<GenSet> restriction;
  std::vector<WeightVector> orbit;
  FinitePoset order;

  std::optional<std::size_t> index_of(const WeightVector& mu) const;
};

OrbitPoset orbit_poset(const WeightVector& theta,
                       const std::optional<GenSet>& restriction = std::nullopt);

/// nu below mu in root dominance: mu - nu is a nonnegative combination of
/// positive roots, i.e. every prefix sum of mu - nu is >= 0. Throws
/// DomainError if the coordinate sums differ.
bool dominance_leq(const WeightVector& nu, const WeightVector& mu);

struct TightnessResult {
  bool tight = false;
  /// mu <=_B nu implies nu dominance-below mu on every pair.
  bool order_reversing = true;
  /// For non-tight orbits: (mu, nu) with nu dominance-below mu but not mu <=_B nu.
  std::optional<std::pair<WeightVector, WeightVector>> witness;
  /// A pair breaking order_reversing, if one exists.
  std::optional<std::pair<WeightVector, WeightVector>> reversal_violation;
};

TightnessResult is_tight(const WeightVector& theta,
                         const std::optional<GenSet>& restriction = std::nullopt);
TightnessResult is_tight(const OrbitPoset& orbit);

/// Type-A tight-quotient rule: rank <= 2, or J = R, or J^c = {j}, or
/// J^c = {j, j+1}.
bool predicted_tight(int degree, const GenSet& stabilizer_complement);

struct TightScanEntry {
  GenSet stabilizer_complement;
  WeightVector theta;
  bool tight;
  bool predicted;
  bool order_reversing;
  std::optional<std::pair<WeightVector, WeightVector>> witness;
};

struct TightScanReport {
  int degree = 0;
  std::vector<TightScanEntry> entries;

  bool all_match() const;
};

/// One entry per stabilizer pattern J^c subset of {1..n}, ordered by J^c.
TightScanReport tight_scan(int degree, int degree_cap = 6);

std::string to_json(const TightScanReport& report);
std::string to_table(const TightScanReport& report);

}  // namespace dflag
