#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dflag {

inline constexpr std::size_t kDefaultIsomorphismCap = 10000;

/// Finite poset stored as labelled elements, the transitively reduced cover
/// relation, and the full reachability matrix.
///
/// Elements are addressed by index 0..size()-1; labels are opaque text used
/// only for output.
class FinitePoset {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;

  FinitePoset() = default;

  /// Builds from a predicate leq(a, b) over element indices. Throws
  /// NotAPartialOrder if the predicate is not reflexive, antisymmetric and
  /// transitive.
  static FinitePoset from_relation(std::vector<std::string> labels,
                                   const std::function<bool(std::size_t, std::size_t)>& leq);
  /// Builds from arbitrary "a below b" edges; the order is their reflexive
  /// transitive closure. Throws NotAPartialOrder on a directed cycle.
  static FinitePoset from_edges(std::vector<std::string> labels, const std::vector<Cover>& edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Cover pairs (lower, upper), sorted.
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }

  bool leq(std::size_t a, std::size_t b) const { return above_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  /// Bitset of all b with a <= b.
  const boost::dynamic_bitset<>& up_set(std::size_t a) const { return above_[a]; }
  /// Bitset of all b with b <= a.
  const boost::dynamic_bitset<>& down_set(std::size_t a) const { return below_[a]; }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  /// Longest chain from a minimal element up to i, counted in covers.
  std::vector<int> levels() const;

 private:
  void finish_from_closure();

  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<boost::dynamic_bitset<>> above_;
  std::vector<boost::dynamic_bitset<>> below_;
};

/// Failure witness for is_lattice.
struct LatticeWitness {
  std::size_t first;
  std::size_t second;
  bool missing_join;  // false: the meet is missing
};

struct LatticeCheck {
  bool is_lattice;
  std::optional<LatticeWitness> witness;
};

LatticeCheck is_lattice(const FinitePoset& p);
bool is_chain(const FinitePoset& p);
/// Elements in a longest chain minus one; 0 for the empty poset.
int height(const FinitePoset& p);
bool are_isomorphic(const FinitePoset& p, const FinitePoset& q,
                    std::size_t cap = kDefaultIsomorphismCap);

// ---------------------------------------------------------------------------
// Shape catalogue

enum class ShapeKind { Point, Chain, StretchedDiamond, LadderA, LadderB, LadderC, LadderD };

/// Chain(k) carries k elements; ladders carry m rung levels. Point and
/// StretchedDiamond ignore the parameter.
struct ShapeClass {
  ShapeKind kind = ShapeKind::Point;
  int param = 0;

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

std::string to_string(ShapeKind kind);
std::string to_string(const ShapeClass& shape);
/// "Unrecognized" for nullopt.
std::string to_string(const std::optional<ShapeClass>& shape);

/// Exact Hasse diagram of a catalogue shape.
///
/// Ladders consist of two chains a_1..a_m and b_1..b_m with covers
/// a_k < a_{k+1}, b_k < b_{k+1}, a_k < b_{k+1}, a bottom element below a_1
/// and b_1, and w0 on top. A and B add a one-element stem under the bottom;
/// A and C put a merge node between the rungs and w0.
FinitePoset shape_template(const ShapeClass& shape);

/// Matches p against the catalogue by isomorphism with the generated
/// templates, returning the first hit in the precedence order
/// Point, Chain, StretchedDiamond, LadderA, LadderB, LadderC, LadderD.
std::optional<ShapeClass> classify_shape(const FinitePoset& p);

/// If p is isomorphic to some member of the family, returns that member.
std::optional<ShapeClass> match_family(const FinitePoset& p, ShapeKind kind);

// ---------------------------------------------------------------------------
// Output

/// Graphviz digraph, edges lower -> upper, nodes grouped by level.
std::string to_dot(const FinitePoset& p, const std::string& name = "poset");
/// {"elements": [...], "covers": [[lower, upper], ...]}
std::string to_json(const FinitePoset& p);

}  // namespace dflag
