#pragma once

#include <optional>
#include <vector>

#include "dflag/poset.hpp"
#include "dflag/symgroup.hpp"

namespace dflag {

/// Longest reduced word the subword oracle accepts; C(7,2) covers all of S_7.
inline constexpr int kDefaultSubwordLengthCap = 21;

/// u <= v in Bruhat-Chevalley order, by the sorted-prefix (tableau)
/// criterion: for every k the increasingly sorted first k entries of u are
/// entrywise at most those of v.
bool leq(const Permutation& u, const Permutation& v);

/// Test-side reference for leq straight from the subword definition: u <= v
/// iff a reduced word of u is a subword of a reduced word of v. Throws
/// ResourceLimit if length(v) exceeds the cap.
bool leq_subword_oracle(const Permutation& u, const Permutation& v,
                        int length_cap = kDefaultSubwordLengthCap);

/// One reduced word of w, as simple-reflection indices, read left to right.
std::vector<int> reduced_word(const Permutation& w);

/// Upper covers of v. Without a universe these are the transposition covers
/// in S_{n+1} (length goes up by exactly one). With a universe, the covers
/// of v in the induced subposet, whatever their length jump. Sorted
/// lexicographically.
std::vector<Permutation> covers(const Permutation& v,
                                const std::optional<std::vector<Permutation>>& universe = std::nullopt);

/// Induced Bruhat poset on an explicit list of permutations. Element i is
/// elements[i]; labels are the one-line words.
FinitePoset bruhat_poset(const std::vector<Permutation>& elements);

/// [u, v] with its cover relation; elements ordered by (length, word).
/// Throws EmptyInterval if u is not below v.
FinitePoset interval(const Permutation& u, const Permutation& v,
                     int degree_cap = kDefaultDegreeCap);
/// The element list behind interval(u, v), in the same order.
std::vector<Permutation> interval_elements(const Permutation& u, const Permutation& v,
                                           int degree_cap = kDefaultDegreeCap);

/// Sort by (length, one-line word), the canonical element order for posets
/// built from permutations.
void sort_by_length(std::vector<Permutation>& elements);

}  // namespace dflag
