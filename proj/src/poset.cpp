#include "dflag/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "dflag/error.hpp"

namespace dflag {

namespace {

using Bits = boost::dynamic_bitset<>;

// Indices sorted so that a < b in the order implies a comes first.
std::vector<std::size_t> linear_extension(const std::vector<Bits>& below) {
  std::vector<std::size_t> order(below.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return below[a].count() < below[b].count();
  });
  return order;
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = labels.size();
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.above_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) p.above_[a].set(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.above_[a].test(a)) {
      throw NotAPartialOrder("relation is not reflexive at '" + p.labels_[a] + "'");
    }
    for (std::size_t b = p.above_[a].find_next(a); b != Bits::npos; b = p.above_[a].find_next(b)) {
      if (p.above_[b].test(a)) {
        throw NotAPartialOrder("cycle between '" + p.labels_[a] + "' and '" + p.labels_[b] + "'");
      }
    }
    for (std::size_t b = p.above_[a].find_first(); b != Bits::npos; b = p.above_[a].find_next(b)) {
      if (!p.above_[b].is_subset_of(p.above_[a])) {
        throw NotAPartialOrder("relation is not transitive through '" + p.labels_[b] + "'");
      }
    }
  }
  p.finish_from_closure();
  return p;
}

FinitePoset FinitePoset::from_edges(std::vector<std::string> labels,
                                    const std::vector<Cover>& edges) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InvalidArgument("edge refers to a missing element");
    if (a == b) continue;
    out[a].push_back(b);
    ++indegree[b];
  }
  // Kahn's algorithm; leftovers mean a cycle.
  std::vector<std::size_t> topo;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (std::size_t w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (topo.size() != n) throw NotAPartialOrder("edge set contains a directed cycle");

  FinitePoset p;
  p.labels_ = std::move(labels);
  p.above_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Bits& reach = p.above_[*it];
    reach.set(*it);
    for (std::size_t w : out[*it]) reach |= p.above_[w];
  }
  p.finish_from_closure();
  return p;
}

void FinitePoset::finish_from_closure() {
  const std::size_t n = labels_.size();
  below_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = above_[a].find_first(); b != Bits::npos; b = above_[a].find_next(b)) {
      below_[b].set(a);
    }
  }
  const auto order = linear_extension(below_);
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

  // Covers of a are the minimal elements of the strict up-set of a; walking
  // the up-set in linear-extension order, each survivor knocks out
  // everything above it.
  up_.assign(n, {});
  down_.assign(n, {});
  covers_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    Bits candidates = above_[a];
    candidates.reset(a);
    std::vector<std::size_t> strict;
    for (std::size_t b = candidates.find_first(); b != Bits::npos; b = candidates.find_next(b)) {
      strict.push_back(b);
    }
    std::sort(strict.begin(), strict.end(),
              [&](std::size_t x, std::size_t y) { return position[x] < position[y]; });
    for (std::size_t b : strict) {
      if (!candidates.test(b)) continue;
      Bits knocked = above_[b];
      knocked.reset(b);
      candidates -= knocked;
      covers_.emplace_back(a, b);
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto [a, b] : covers_) {
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> FinitePoset::levels() const {
  std::vector<int> level(size(), 0);
  for (std::size_t v : linear_extension(below_)) {
    for (std::size_t w : up_[v]) level[w] = std::max(level[w], level[v] + 1);
  }
  return level;
}

// ---------------------------------------------------------------------------

LatticeCheck is_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {false, std::nullopt};
  auto extremal_bound = [&](const Bits& bounds, bool upward) -> bool {
    // The join (meet) is the unique bound whose up-set (down-set) contains
    // every other bound; it has the largest such set.
    std::size_t best = Bits::npos;
    std::size_t best_count = 0;
    for (std::size_t z = bounds.find_first(); z != Bits::npos; z = bounds.find_next(z)) {
      std::size_t c = upward ? p.up_set(z).count() : p.down_set(z).count();
      if (best == Bits::npos || c > best_count) {
        best = z;
        best_count = c;
      }
    }
    if (best == Bits::npos) return false;
    return bounds.is_subset_of(upward ? p.up_set(best) : p.down_set(best));
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      if (!extremal_bound(p.up_set(x) & p.up_set(y), true)) {
        return {false, LatticeWitness{x, y, true}};
      }
      if (!extremal_bound(p.down_set(x) & p.down_set(y), false)) {
        return {false, LatticeWitness{x, y, false}};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_chain(const FinitePoset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (!p.comparable(x, y)) return false;
    }
  }
  return true;
}

int height(const FinitePoset& p) {
  auto level = p.levels();
  return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

namespace {

using Signature = std::tuple<int, int, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FinitePoset& p) {
  auto level = p.levels();
  // Depth from the top, by the same recurrence run downwards.
  std::vector<int> depth(p.size(), 0);
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return level[a] > level[b]; });
  for (std::size_t v : order) {
    for (std::size_t w : p.lower_covers(v)) depth[w] = std::max(depth[w], depth[v] + 1);
  }
  std::vector<Signature> sig(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    sig[v] = {level[v],
              depth[v],
              p.upper_covers(v).size(),
              p.lower_covers(v).size(),
              p.up_set(v).count(),
              p.down_set(v).count()};
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FinitePoset& p, const FinitePoset& q)
      : p_(p), q_(q), sp_(signatures(p)), sq_(signatures(q)) {
    order_.resize(p.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return std::get<0>(sp_[a]) < std::get<0>(sp_[b]);
    });
    image_.assign(p.size(), kUnset);
    used_.assign(q.size(), false);
  }

  bool invariants_agree() const {
    auto a = sp_;
    auto b = sq_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool run(std::size_t k = 0) {
    if (k == order_.size()) return true;
    const std::size_t v = order_[k];
    for (std::size_t c = 0; c < q_.size(); ++c) {
      if (used_[c] || sq_[c] != sp_[v] || !consistent(k, v, c)) continue;
      image_[v] = c;
      used_[c] = true;
      if (run(k + 1)) return true;
      used_[c] = false;
      image_[v] = kUnset;
    }
    return false;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t k, std::size_t v, std::size_t c) const {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t u = order_[i];
      const std::size_t d = image_[u];
      if (p_.leq(u, v) != q_.leq(d, c) || p_.leq(v, u) != q_.leq(c, d)) return false;
    }
    return true;
  }

  const FinitePoset& p_;
  const FinitePoset& q_;
  std::vector<Signature> sp_;
  std::vector<Signature> sq_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t cap) {
  if (p.size() > cap || q.size() > cap) {
    throw ResourceLimit("isomorphism test beyond cap of " + std::to_string(cap) + " elements");
  }
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;
  IsoSearch search(p, q);
  if (!search.invariants_agree()) return false;
  return search.run();
}

// ---------------------------------------------------------------------------
// Shape catalogue

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Point: return "Point";
    case ShapeKind::Chain: return "Chain";
    case ShapeKind::StretchedDiamond: return "StretchedDiamond";
    case ShapeKind::LadderA: return "LadderA";
    case ShapeKind::LadderB: return "LadderB";
    case ShapeKind::LadderC: return "LadderC";
    case ShapeKind::LadderD: return "LadderD";
  }
  return "?";
}

std::string to_string(const ShapeClass& shape) {
  switch (shape.kind) {
    case ShapeKind::Point:
    case ShapeKind::StretchedDiamond:
      return to_string(shape.kind);
    default:
      return to_string(shape.kind) + "(" + std::to_string(shape.param) + ")";
  }
}

std::string to_string(const std::optional<ShapeClass>& shape) {
  return shape ? to_string(*shape) : "Unrecognized";
}

namespace {

bool has_stem(ShapeKind k) { return k == ShapeKind::LadderA || k == ShapeKind::LadderB; }
bool has_merge(ShapeKind k) { return k == ShapeKind::LadderA || k == ShapeKind::LadderC; }

// Rung levels m forced by the element count, or 0 if none fits.
int ladder_param_for_size(ShapeKind kind, std::size_t size) {
  const std::size_t fixed = 2 + (has_stem(kind) ? 1 : 0) + (has_merge(kind) ? 1 : 0);
  if (size < fixed + 2 || (size - fixed) % 2 != 0) return 0;
  return static_cast<int>((size - fixed) / 2);
}

}  // namespace

FinitePoset shape_template(const ShapeClass& shape) {
  std::vector<std::string> labels;
  std::vector<FinitePoset::Cover> edges;
  auto add = [&](std::string name) {
    labels.push_back(std::move(name));
    return labels.size() - 1;
  };
  switch (shape.kind) {
    case ShapeKind::Point:
      add("p");
      break;
    case ShapeKind::Chain: {
      if (shape.param < 1) throw InvalidArgument("Chain(k) needs k >= 1");
      for (int k = 0; k < shape.param; ++k) {
        std::size_t v = add("c" + std::to_string(k));
        if (k > 0) edges.emplace_back(v - 1, v);
      }
      break;
    }
    case ShapeKind::StretchedDiamond: {
      for (int k = 0; k <= 5; ++k) add("t" + std::to_string(k));
      edges = {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
      break;
    }
    default: {
      const int m = shape.param;
      if (m < 1) throw InvalidArgument("ladder needs m >= 1 rung levels");
      std::optional<std::size_t> stem;
      if (has_stem(shape.kind)) stem = add("stem");
      const std::size_t bottom = add("bottom");
      if (stem) edges.emplace_back(*stem, bottom);
      std::vector<std::size_t> a, b;
      for (int k = 1; k <= m; ++k) {
        a.push_back(add("a" + std::to_string(k)));
        b.push_back(add("b" + std::to_string(k)));
      }
      edges.emplace_back(bottom, a.front());
      edges.emplace_back(bottom, b.front());
      for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        edges.emplace_back(a[k], a[k + 1]);
        edges.emplace_back(b[k], b[k + 1]);
        edges.emplace_back(a[k], b[k + 1]);
      }
      std::size_t below_top_a = a.back();
      std::size_t below_top_b = b.back();
      if (has_merge(shape.kind)) {
        const std::size_t merge = add("merge");
        edges.emplace_back(a.back(), merge);
        edges.emplace_back(b.back(), merge);
        below_top_a = below_top_b = merge;
      }
      const std::size_t top = add("top");
      edges.emplace_back(below_top_a, top);
      if (below_top_b != below_top_a) edges.emplace_back(below_top_b, top);
      break;
    }
  }
  return FinitePoset::from_edges(std::move(labels), edges);
}

std::optional<ShapeClass> match_family(const FinitePoset& p, ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Point:
      if (p.size() == 1) return ShapeClass{ShapeKind::Point, 0};
      return std::nullopt;
    case ShapeKind::Chain:
      if (p.size() >= 1 && is_chain(p)) return ShapeClass{ShapeKind::Chain, static_cast<int>(p.size())};
      return std::nullopt;
    case ShapeKind::StretchedDiamond: {
      ShapeClass sd{ShapeKind::StretchedDiamond, 0};
      if (p.size() == 6 && are_isomorphic(p, shape_template(sd))) return sd;
      return std::nullopt;
    }
    default: {
      const int m = ladder_param_for_size(kind, p.size());
      if (m < 1) return std::nullopt;
      ShapeClass ladder{kind, m};
      if (are_isomorphic(p, shape_template(ladder))) return ladder;
      return std::nullopt;
    }
  }
}

std::optional<ShapeClass> classify_shape(const FinitePoset& p) {
  for (ShapeKind kind : {ShapeKind::Point, ShapeKind::Chain, ShapeKind::StretchedDiamond,
                         ShapeKind::LadderA, ShapeKind::LadderB, ShapeKind::LadderC,
                         ShapeKind::LadderD}) {
    if (auto hit = match_family(p, kind)) return hit;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Output

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < p.size(); ++v) {
    out << "  n" << v << " [label=\"" << p.label(v) << "\"];\n";
  }
  std::map<int, std::vector<std::size_t>> by_level;
  auto level = p.levels();
  for (std::size_t v = 0; v < p.size(); ++v) by_level[level[v]].push_back(v);
  for (const auto& [lvl, members] : by_level) {
    out << "  { rank=same;";
    for (std::size_t v : members) out << " n" << v << ";";
    out << " }\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const FinitePoset& p) {
  nlohmann::json j;
  j["elements"] = p.labels();
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
  return j.dump(2) + "\n";
}

}  // namespace dflag
