#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dflag {

/// Default largest degree for which whole-group enumeration is allowed.
inline constexpr int kDefaultDegreeCap = 8;

/// Reads DFLAG_DEGREE_CAP from the environment, falling back to the default.
int degree_cap_from_env();

/// Element of S_{n+1} in 1-based one-line notation w = w_1 ... w_{n+1}.
///
/// Values are immutable once constructed; the constructor rejects anything
/// that is not a bijection of {1, ..., degree}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int degree);
  /// s_i, the transposition (i, i+1); 1 <= i < degree.
  static Permutation simple_reflection(int degree, int i);
  /// Parses "2 1 6 5 4 3" (whitespace separated, 1-based).
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(word_.size()); }
  /// w(pos) for 1 <= pos <= degree.
  int operator()(int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }
  std::span<const int> word() const { return word_; }

  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Subset of the simple-reflection indices {1, ..., rank}.
class GenSet {
 public:
  static constexpr int kMaxRank = 31;

  explicit GenSet(int rank, std::initializer_list<int> members = {});
  GenSet(int rank, std::span<const int> members);

  static GenSet empty(int rank) { return GenSet(rank); }
  static GenSet full(int rank);
  /// Parses "{2,4}", "{}", or the brace-less "2,4".
  static GenSet parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  bool contains(int i) const;
  void insert(int i);
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(const GenSet& other) const;
  GenSet complement() const;
  std::vector<int> members() const;
  std::uint32_t bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const GenSet&, const GenSet&) = default;
  friend auto operator<=>(const GenSet&, const GenSet&) = default;

 private:
  void check_index(int i) const;

  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

/// Number of inversions, i.e. the Coxeter length.
int length(const Permutation& w);
Permutation longest_element(int degree);
/// (u v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

GenSet right_descents(const Permutation& w);
GenSet right_ascents(const Permutation& w);
GenSet left_descents(const Permutation& w);
GenSet left_ascents(const Permutation& w);

/// Position of w among all permutations of its degree in lexicographic order.
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int degree, std::uint64_t rank);
std::uint64_t factorial(int n);

/// Calls fn on every permutation of the given degree in lexicographic order.
void for_each_permutation(int degree, const std::function<void(const Permutation&)>& fn,
                          int degree_cap = kDefaultDegreeCap);
/// All permutations of the degree in lexicographic order.
std::vector<Permutation> enumerate(int degree, int degree_cap = kDefaultDegreeCap);

}  // namespace dflag

template <>
struct std::hash<dflag::Permutation> {
  std::size_t operator()(const dflag::Permutation& w) const noexcept {
    std::size_t h = 0;
    for (int x : w.word()) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};
