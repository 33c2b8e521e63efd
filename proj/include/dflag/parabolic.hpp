#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dflag/poset.hpp"
#include "dflag/symgroup.hpp"

namespace dflag {

/// s_i w: exchanges the values i and i+1 in the one-line word.
Permutation left_multiply_simple(const Permutation& w, int i);
/// w s_i: exchanges the entries at positions i and i+1.
Permutation right_multiply_simple(const Permutation& w, int i);

/// Elements of the standard parabolic subgroup W_S, sorted lexicographically.
std::vector<Permutation> parabolic_elements(int degree, const GenSet& s);

/// X^-_{I,J}: w with I in Asc_L(w) and J in Asc_R(w), in lexicographic order.
std::vector<Permutation> min_representatives(int degree, const GenSet& left, const GenSet& right,
                                             int degree_cap = kDefaultDegreeCap);
/// X^+_{I,J}: w with I in Des_R(w^-1) and J in Des_R(w), in lexicographic order.
std::vector<Permutation> max_representatives(int degree, const GenSet& left, const GenSet& right,
                                             int degree_cap = kDefaultDegreeCap);

struct CosetEntry {
  Permutation min_rep;
  Permutation max_rep;
  std::uint64_t size;
};

/// Partition of S_{n+1} into double cosets W_I w W_J together with the
/// induced order (compared through maximal representatives). Entries are
/// sorted by (length, word) of max_rep, and order element k is entry k,
/// labelled by its max_rep.
struct DoubleCosetTable {
  int degree = 0;
  GenSet left{0};
  GenSet right{0};
  std::vector<CosetEntry> cosets;
  FinitePoset order;
};

DoubleCosetTable decompose(int degree, const GenSet& left, const GenSet& right,
                           int degree_cap = kDefaultDegreeCap);

/// JSON form: {degree, I_complement, J_complement, cosets: [{min, max, size}],
/// covers: [[lower, upper]]} with permutations as 1-based arrays.
std::string to_json(const DoubleCosetTable& table);

/// (min_rep, max_rep) of W_I w W_J.
std::pair<Permutation, Permutation> coset_of(const Permutation& w, const GenSet& left,
                                             const GenSet& right);

struct Factorization {
  Permutation u;  // in W_I, minimal in its coset u W_H
  Permutation w;  // in X^-_{I,J}
  Permutation v;  // in W_J
};

/// The unique length-additive x = u w v with w the minimal representative
/// of x's double coset.
Factorization factorize(const Permutation& x, const GenSet& left, const GenSet& right);

/// H = I cap w J w^-1 for w in X^-_{I,J}: the i in I with w^-1 s_i w = s_j for
/// some j in J.
GenSet intersection_subgroup(const Permutation& w, const GenSet& left, const GenSet& right);

/// True iff every double coset equals the Bruhat interval [min_rep, max_rep].
bool check_interval_property(int degree, const GenSet& left, const GenSet& right,
                             int degree_cap = kDefaultDegreeCap);

}  // namespace dflag
