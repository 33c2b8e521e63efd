#include "dflag/parabolic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include <json.hpp>

#include "dflag/bruhat.hpp"
#include "dflag/error.hpp"

namespace dflag {

namespace {

void require_rank(int degree, const GenSet& s) {
  if (s.rank() != degree - 1) {
    throw InvalidArgument("generator set " + s.to_string() + " has rank " +
                          std::to_string(s.rank()) + ", expected " + std::to_string(degree - 1));
  }
}

void require_ranks(int degree, const GenSet& left, const GenSet& right) {
  require_rank(degree, left);
  require_rank(degree, right);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

nlohmann::json word_json(const Permutation& w) {
  return nlohmann::json(std::vector<int>(w.word().begin(), w.word().end()));
}

}  // namespace

Permutation left_multiply_simple(const Permutation& w, int i) {
  std::vector<int> word(w.word().begin(), w.word().end());
  for (int& x : word) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return Permutation(std::move(word));
}

Permutation right_multiply_simple(const Permutation& w, int i) {
  std::vector<int> word(w.word().begin(), w.word().end());
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
  return Permutation(std::move(word));
}

std::vector<Permutation> parabolic_elements(int degree, const GenSet& s) {
  require_rank(degree, s);
  // Closure of the identity under right multiplication by the generators.
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  const auto gens = s.members();
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) {
      for (int i : gens) {
        auto x = right_multiply_simple(w, i);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> min_representatives(int degree, const GenSet& left, const GenSet& right,
                                             int degree_cap) {
  require_ranks(degree, left, right);
  std::vector<Permutation> out;
  for_each_permutation(
      degree,
      [&](const Permutation& w) {
        if (left.is_subset_of(left_ascents(w)) && right.is_subset_of(right_ascents(w))) {
          out.push_back(w);
        }
      },
      degree_cap);
  return out;
}

std::vector<Permutation> max_representatives(int degree, const GenSet& left, const GenSet& right,
                                             int degree_cap) {
  require_ranks(degree, left, right);
  std::vector<Permutation> out;
  for_each_permutation(
      degree,
      [&](const Permutation& w) {
        if (left.is_subset_of(left_descents(w)) && right.is_subset_of(right_descents(w))) {
          out.push_back(w);
        }
      },
      degree_cap);
  return out;
}

DoubleCosetTable decompose(int degree, const GenSet& left, const GenSet& right, int degree_cap) {
  require_ranks(degree, left, right);
  const auto group = enumerate(degree, degree_cap);
  DisjointSets classes(group.size());
  const auto left_gens = left.members();
  const auto right_gens = right.members();
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (int i : left_gens) classes.unite(k, lex_rank(left_multiply_simple(group[k], i)));
    for (int j : right_gens) classes.unite(k, lex_rank(right_multiply_simple(group[k], j)));
  }

  // Per class: size and the extreme-length elements.
  struct Accum {
    std::size_t min_index, max_index;
    std::uint64_t size = 0;
  };
  std::vector<std::ptrdiff_t> slot(group.size(), -1);
  std::vector<Accum> acc;
  std::vector<int> len(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) len[k] = length(group[k]);
  for (std::size_t k = 0; k < group.size(); ++k) {
    const std::size_t root = classes.find(k);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(acc.size());
      acc.push_back({k, k, 0});
    }
    Accum& a = acc[static_cast<std::size_t>(slot[root])];
    ++a.size;
    if (len[k] < len[a.min_index]) a.min_index = k;
    if (len[k] > len[a.max_index]) a.max_index = k;
  }

  DoubleCosetTable table;
  table.degree = degree;
  table.left = left;
  table.right = right;
  for (const auto& a : acc) table.cosets.push_back({group[a.min_index], group[a.max_index], a.size});
  std::sort(table.cosets.begin(), table.cosets.end(), [](const CosetEntry& x, const CosetEntry& y) {
    return std::pair(length(x.max_rep), x.max_rep) < std::pair(length(y.max_rep), y.max_rep);
  });
  std::vector<Permutation> tops;
  for (const auto& c : table.cosets) tops.push_back(c.max_rep);
  table.order = bruhat_poset(tops);
  return table;
}

std::string to_json(const DoubleCosetTable& table) {
  nlohmann::json j;
  j["degree"] = table.degree;
  j["I_complement"] = table.left.complement().members();
  j["J_complement"] = table.right.complement().members();
  j["cosets"] = nlohmann::json::array();
  for (const auto& c : table.cosets) {
    j["cosets"].push_back({{"min", word_json(c.min_rep)}, {"max", word_json(c.max_rep)}, {"size", c.size}});
  }
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : table.order.covers()) j["covers"].push_back({a, b});
  return j.dump(2) + "\n";
}

std::pair<Permutation, Permutation> coset_of(const Permutation& w, const GenSet& left,
                                             const GenSet& right) {
  require_ranks(w.degree(), left, right);
  // Inside a double coset, any element that is not the minimum (maximum) has
  // a generator move that strictly lowers (raises) the length.
  auto walk = [&](bool upward) {
    Permutation x = w;
    for (bool moved = true; moved;) {
      moved = false;
      for (int i : left.members()) {
        if (left_descents(x).contains(i) != upward) {
          x = left_multiply_simple(x, i);
          moved = true;
        }
      }
      for (int j : right.members()) {
        if (right_descents(x).contains(j) != upward) {
          x = right_multiply_simple(x, j);
          moved = true;
        }
      }
    }
    return x;
  };
  return {walk(false), walk(true)};
}

GenSet intersection_subgroup(const Permutation& w, const GenSet& left, const GenSet& right) {
  GenSet h(left.rank());
  const auto winv = inverse(w);
  for (int i : left.members()) {
    const int a = winv(i);
    const int b = winv(i + 1);
    if (std::abs(a - b) == 1 && right.contains(std::min(a, b))) h.insert(i);
  }
  return h;
}

Factorization factorize(const Permutation& x, const GenSet& left, const GenSet& right) {
  require_ranks(x.degree(), left, right);
  const Permutation w = coset_of(x, left, right).first;
  // y = minimal element of x W_J: sort x's entries inside each J-block of
  // positions. Then x = y v and y = u w with lengths adding.
  std::vector<int> word(x.word().begin(), x.word().end());
  for (int start = 1; start <= x.degree();) {
    int end = start;
    while (end < x.degree() && right.contains(end)) ++end;
    std::sort(word.begin() + (start - 1), word.begin() + end);
    start = end + 1;
  }
  const Permutation y(std::move(word));
  return {compose(y, inverse(w)), w, compose(inverse(y), x)};
}

bool check_interval_property(int degree, const GenSet& left, const GenSet& right, int degree_cap) {
  const auto table = decompose(degree, left, right, degree_cap);
  std::vector<std::uint64_t> in_interval(table.cosets.size(), 0);
  bool ok = true;
  for_each_permutation(
      degree,
      [&](const Permutation& x) {
        if (!ok) return;
        const auto [lo, hi] = coset_of(x, left, right);
        std::size_t hits = 0;
        for (std::size_t c = 0; c < table.cosets.size(); ++c) {
          const auto& entry = table.cosets[c];
          if (leq(entry.min_rep, x) && leq(x, entry.max_rep)) {
            ++hits;
            ++in_interval[c];
            if (entry.max_rep != hi || entry.min_rep != lo) ok = false;
          }
        }
        if (hits != 1) ok = false;
      },
      degree_cap);
  if (!ok) return false;
  for (std::size_t c = 0; c < table.cosets.size(); ++c) {
    if (in_interval[c] != table.cosets[c].size) return false;
  }
  return true;
}

}  // namespace dflag
