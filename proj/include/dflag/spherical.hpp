#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dflag/poset.hpp"
#include "dflag/symgroup.hpp"

namespace dflag {

/// Largest degree verify_theorem accepts unless overridden.
inline constexpr int kDefaultVerifyDegreeCap = 7;

/// Which case of the type-A classification a pair (I^c, J^c) falls under.
enum class CaseTag { Trivial, Thm1, Thm2, Thm3, Thm4, Thm5a, Thm5b, Thm5c, Thm5d };

std::string to_string(CaseTag tag);

/// A spherical pair with its predicted shape family.
///
/// The parameters live in the normalized frame I^c = {i}, J^c = {p, q}
/// (Thm-3) or J^c = {1, j} (Thm-5). `reversed` records that the pair was
/// brought there by the diagram flip k -> n+1-k (J^c = {j, n} pairs), and
/// `swapped` that I and J were exchanged first (|J^c| = 1 < |I^c|).
struct SphericalCase {
  int degree = 0;
  GenSet left_complement{0};
  GenSet right_complement{0};
  CaseTag tag = CaseTag::Trivial;
  ShapeKind predicted_shape = ShapeKind::Point;
  int i = 0;
  int j = 0;
  int p = 0;
  int q = 0;
  bool reversed = false;
  bool swapped = false;

  int rank() const { return degree - 1; }
  /// Thm-5 cases only: the ladder rungs meet below w0 iff n+1-(j-1) > i.
  bool predicts_merge_node() const;
};

/// Classifies (I^c, J^c); nullopt when the pair is not in the spherical table.
std::optional<SphericalCase> classify_pair(int degree, const GenSet& left_complement,
                                           const GenSet& right_complement);

/// Every spherical pair of the degree (trivial pairs and I/J-swapped mirrors
/// included), ordered by (|I^c|, I^c, |J^c|, J^c).
std::vector<SphericalCase> spherical_pairs(int degree);

bool has_bottom_formula(CaseTag tag);
/// Closed-form Bruhat-minimum of X^+ for Thm-3 and Thm-5 cases; throws
/// UnsupportedCase for the others.
Permutation predicted_bottom(const SphericalCase& c);

/// Length of the competing bottom candidate of the Thm-3 analysis:
/// C(n+1, 2) + 1 - (n+1-q) - (n+2-q). Requires 3 < q < n.
long long f_n(int q, int n);

struct CaseRecord {
  SphericalCase spherical;
  std::size_t size = 0;
  std::optional<ShapeClass> actual_shape;
  std::optional<ShapeClass> family_match;
  bool lattice = false;
  bool extremes_ok = false;  // unique minimum, unique maximum w0
  std::optional<Permutation> actual_bottom;
  std::optional<Permutation> expected_bottom;
  std::optional<bool> bottom_match;
  int height = 0;
  std::optional<bool> height_ok;
  std::optional<bool> merge_node;
  std::optional<bool> merge_ok;
  std::optional<bool> size_ok;
  std::vector<std::string> notes;

  bool shape_match() const { return family_match.has_value(); }
  bool passed() const;
};

struct VerificationReport {
  std::vector<int> degrees;
  std::vector<CaseRecord> records;

  std::size_t passed_count() const;
  std::size_t failed_count() const { return records.size() - passed_count(); }
  bool all_passed() const { return failed_count() == 0; }
};

struct VerifyOptions {
  int degree_cap = kDefaultVerifyDegreeCap;
  unsigned threads = 1;
};

/// Builds the Bruhat poset on X^+ of one pair and runs every check that
/// applies to its case.
CaseRecord verify_case(const SphericalCase& c, int degree_cap = kDefaultDegreeCap);

VerificationReport verify_theorem(int degree, const VerifyOptions& options = {});
VerificationReport verify_theorem(int first_degree, int last_degree, const VerifyOptions& options = {});

std::string to_json(const VerificationReport& report);
std::string to_table(const VerificationReport& report);

}  // namespace dflag
