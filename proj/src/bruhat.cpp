#include "dflag/bruhat.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>

#include "dflag/error.hpp"

namespace dflag {

bool leq(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw InvalidArgument("degree mismatch in Bruhat comparison");
  const int n = u.degree();
  std::vector<int> su, sv;
  su.reserve(static_cast<std::size_t>(n));
  sv.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    su.insert(std::upper_bound(su.begin(), su.end(), u(k)), u(k));
    sv.insert(std::upper_bound(sv.begin(), sv.end(), v(k)), v(k));
    for (std::size_t i = 0; i < su.size(); ++i) {
      if (su[i] > sv[i]) return false;
    }
  }
  return true;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word(w.word().begin(), w.word().end());
  std::vector<int> letters;
  // Strip right descents until the identity is reached; w is the product of
  // the stripped letters in reverse order.
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        letters.push_back(static_cast<int>(i + 1));
        found = true;
        break;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

namespace {

// One-line word packed four bits per position; positions are 0-based.
using Packed = std::uint64_t;

Packed pack(const Permutation& w) {
  Packed p = 0;
  for (int i = w.degree(); i >= 1; --i) p = (p << 4) | static_cast<Packed>(w(i) - 1);
  return p;
}

int nibble(Packed p, int pos) { return static_cast<int>((p >> (4 * pos)) & 0xF); }

Packed swap_adjacent(Packed p, int pos) {
  const Packed a = (p >> (4 * pos)) & 0xF;
  const Packed b = (p >> (4 * (pos + 1))) & 0xF;
  p &= ~((Packed{0xFF}) << (4 * pos));
  return p | (b << (4 * pos)) | (a << (4 * (pos + 1)));
}

}  // namespace

bool leq_subword_oracle(const Permutation& u, const Permutation& v, int length_cap) {
  if (u.degree() != v.degree()) throw InvalidArgument("degree mismatch in Bruhat comparison");
  if (u.degree() > 16) throw ResourceLimit("subword oracle supports degree <= 16");
  const auto word = reduced_word(v);
  if (static_cast<int>(word.size()) > length_cap) {
    throw ResourceLimit("subword oracle refused: length " + std::to_string(word.size()) +
                        " exceeds cap " + std::to_string(length_cap));
  }
  // Products of reduced subwords of the chosen reduced word of v. A letter
  // s_i extends a reduced subword x exactly when i is a right ascent of x.
  std::unordered_set<Packed> reached{pack(Permutation::identity(u.degree()))};
  for (int letter : word) {
    const int pos = letter - 1;
    std::vector<Packed> fresh;
    for (Packed x : reached) {
      if (nibble(x, pos) < nibble(x, pos + 1)) fresh.push_back(swap_adjacent(x, pos));
    }
    reached.insert(fresh.begin(), fresh.end());
  }
  return reached.contains(pack(u));
}

void sort_by_length(std::vector<Permutation>& elements) {
  std::vector<std::pair<int, Permutation>> keyed;
  keyed.reserve(elements.size());
  for (auto& w : elements) keyed.emplace_back(length(w), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  elements.clear();
  for (auto& [len, w] : keyed) elements.push_back(std::move(w));
}

FinitePoset bruhat_poset(const std::vector<Permutation>& elements) {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& w : elements) labels.push_back(w.to_string());
  return FinitePoset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return leq(elements[a], elements[b]);
  });
}

std::vector<Permutation> covers(const Permutation& v,
                                const std::optional<std::vector<Permutation>>& universe) {
  std::vector<Permutation> out;
  if (!universe) {
    // v < v t_{ab} is a cover iff v_a < v_b and no position strictly between
    // holds a value strictly between.
    const int n = v.degree();
    std::vector<int> word(v.word().begin(), v.word().end());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const int lo = word[static_cast<std::size_t>(a)];
        const int hi = word[static_cast<std::size_t>(b)];
        if (lo > hi) continue;
        bool blocked = false;
        for (int c = a + 1; c < b && !blocked; ++c) {
          const int x = word[static_cast<std::size_t>(c)];
          blocked = lo < x && x < hi;
        }
        if (blocked) continue;
        auto swapped = word;
        std::swap(swapped[static_cast<std::size_t>(a)], swapped[static_cast<std::size_t>(b)]);
        out.emplace_back(std::move(swapped));
      }
    }
  } else {
    const auto& pool = *universe;
    auto it = std::find(pool.begin(), pool.end(), v);
    if (it == pool.end()) throw InvalidArgument("element " + v.to_string() + " not in universe");
    std::vector<const Permutation*> above;
    for (const auto& w : pool) {
      if (w != v && leq(v, w)) above.push_back(&w);
    }
    for (const Permutation* w : above) {
      bool direct = true;
      for (const Permutation* mid : above) {
        if (mid != w && leq(*mid, *w)) {
          direct = false;
          break;
        }
      }
      if (direct) out.push_back(*w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> interval_elements(const Permutation& u, const Permutation& v,
                                           int degree_cap) {
  if (!leq(u, v)) throw EmptyInterval("[" + u.to_string() + ", " + v.to_string() + "] is empty");
  std::vector<Permutation> out;
  for_each_permutation(
      u.degree(),
      [&](const Permutation& x) {
        if (leq(u, x) && leq(x, v)) out.push_back(x);
      },
      degree_cap);
  sort_by_length(out);
  return out;
}

FinitePoset interval(const Permutation& u, const Permutation& v, int degree_cap) {
  return bruhat_poset(interval_elements(u, v, degree_cap));
}

}  // namespace dflag
