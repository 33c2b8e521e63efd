#include "dflag/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "dflag/error.hpp"

namespace dflag {

namespace {

void require_same_degree(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(u.degree()) + " vs " +
                          std::to_string(v.degree()));
  }
}

void require_degree(int degree) {
  if (degree < 1) throw InvalidArgument("invalid degree " + std::to_string(degree));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InvalidArgument("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

int degree_cap_from_env() {
  if (const char* env = std::getenv("DFLAG_DEGREE_CAP")) {
    try {
      int cap = parse_int(env);
      if (cap >= 1) return cap;
    } catch (const InvalidArgument&) {
    }
  }
  return kDefaultDegreeCap;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidArgument("permutation of degree 0");
  std::vector<bool> seen(word_.size() + 1, false);
  for (int x : word_) {
    if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x)]) {
      throw InvalidArgument("not a permutation word: " + to_string());
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  require_degree(degree);
  std::vector<int> word(static_cast<std::size_t>(degree));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::simple_reflection(int degree, int i) {
  if (i < 1 || i >= degree) {
    throw InvalidArgument("s_" + std::to_string(i) + " not in S_" + std::to_string(degree));
  }
  auto id = identity(degree);
  std::vector<int> word(id.word().begin(), id.word().end());
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) word.push_back(parse_int(token));
  if (word.empty()) throw InvalidArgument("empty permutation text");
  return Permutation(std::move(word));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (word_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GenSet

GenSet::GenSet(int rank, std::initializer_list<int> members)
    : GenSet(rank, std::span<const int>(members.begin(), members.size())) {}

GenSet::GenSet(int rank, std::span<const int> members) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw InvalidArgument("unsupported rank " + std::to_string(rank));
  for (int i : members) insert(i);
}

GenSet GenSet::full(int rank) { return GenSet(rank).complement(); }

GenSet GenSet::parse(int rank, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidArgument("unbalanced braces in '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  GenSet out(rank);
  while (!text.empty()) {
    auto comma = text.find(',');
    out.insert(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw InvalidArgument("trailing comma in generator set");
  }
  return out;
}

void GenSet::check_index(int i) const {
  if (i < 1 || i > rank_) {
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(rank_));
  }
}

bool GenSet::contains(int i) const {
  return i >= 1 && i <= rank_ && ((bits_ >> (i - 1)) & 1u) != 0;
}

void GenSet::insert(int i) {
  check_index(i);
  bits_ |= 1u << (i - 1);
}

std::size_t GenSet::size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }

bool GenSet::is_subset_of(const GenSet& other) const { return (bits_ & ~other.bits_) == 0; }

GenSet GenSet::complement() const {
  GenSet out(rank_);
  std::uint32_t mask = rank_ == 32 ? ~0u : ((1u << rank_) - 1u);
  out.bits_ = ~bits_ & mask;
  return out;
}

std::vector<int> GenSet::members() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string GenSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Group operations

int length(const Permutation& w) {
  int inversions = 0;
  auto word = w.word();
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] > word[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation longest_element(int degree) {
  require_degree(degree);
  std::vector<int> word(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) word[static_cast<std::size_t>(i)] = degree - i;
  return Permutation(std::move(word));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  require_same_degree(u, v);
  std::vector<int> word(static_cast<std::size_t>(u.degree()));
  for (int i = 1; i <= u.degree(); ++i) word[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(word));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> word(static_cast<std::size_t>(w.degree()));
  for (int i = 1; i <= w.degree(); ++i) word[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(std::move(word));
}

GenSet right_descents(const Permutation& w) {
  GenSet out(w.degree() - 1);
  for (int i = 1; i < w.degree(); ++i) {
    if (w(i) > w(i + 1)) out.insert(i);
  }
  return out;
}

GenSet right_ascents(const Permutation& w) { return right_descents(w).complement(); }

GenSet left_descents(const Permutation& w) { return right_descents(inverse(w)); }

GenSet left_ascents(const Permutation& w) { return right_ascents(inverse(w)); }

// ---------------------------------------------------------------------------
// Enumeration and ranking

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(const Permutation& w) {
  // Lehmer code read as a factorial-base number.
  const int n = w.degree();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) < w(i)) ++smaller_later;
    }
    rank += static_cast<std::uint64_t>(smaller_later) * factorial(n - i);
  }
  return rank;
}

Permutation lex_unrank(int degree, std::uint64_t rank) {
  require_degree(degree);
  if (rank >= factorial(degree)) throw InvalidArgument("rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(pool.size());
  for (int i = degree - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    word.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(word));
}

void for_each_permutation(int degree, const std::function<void(const Permutation&)>& fn,
                          int degree_cap) {
  require_degree(degree);
  if (degree > degree_cap) {
    throw ResourceLimit("enumeration of S_" + std::to_string(degree) + " exceeds degree cap " +
                        std::to_string(degree_cap));
  }
  std::vector<int> word(static_cast<std::size_t>(degree));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> enumerate(int degree, int degree_cap) {
  std::vector<Permutation> out;
  if (degree >= 1 && degree <= degree_cap) out.reserve(factorial(degree));
  for_each_permutation(degree, [&](const Permutation& w) { out.push_back(w); }, degree_cap);
  return out;
}

}  // namespace dflag
