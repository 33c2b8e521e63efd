#include "dflag/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dflag/error.hpp"

namespace dflag {

namespace {

long long parse_integer(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const long long den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(s) + "'");
  return Rational(parse_integer(s.substr(0, slash)), den);
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void require_dominant(const WeightVector& theta) {
  if (!theta.is_dominant()) throw DomainError("weight " + theta.to_string() + " is not dominant");
}

}  // namespace

WeightVector::WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("weight vector needs at least one coordinate");
}

WeightVector WeightVector::from_integers(const std::vector<long long>& coords) {
  std::vector<Rational> out(coords.begin(), coords.end());
  return WeightVector(std::move(out));
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<Rational> coords;
  while (true) {
    const auto comma = text.find(',');
    coords.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return WeightVector(std::move(coords));
}

Rational WeightVector::sum() const {
  Rational s(0);
  for (const auto& c : coords_) s += c;
  return s;
}

bool WeightVector::is_dominant() const {
  return std::is_sorted(coords_.rbegin(), coords_.rend());
}

WeightVector WeightVector::reflect(int a, int b) const {
  auto out = coords_;
  std::swap(out[static_cast<std::size_t>(a - 1)], out[static_cast<std::size_t>(b - 1)]);
  return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += rational_text(coords_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const WeightVector& x, const WeightVector& y) {
  return std::lexicographical_compare_three_way(
      x.coords_.begin(), x.coords_.end(), y.coords_.begin(), y.coords_.end(),
      [](const Rational& a, const Rational& b) {
        if (a < b) return std::strong_ordering::less;
        if (b < a) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
      });
}

WeightVector act(const Permutation& w, const WeightVector& theta) {
  if (w.degree() != theta.degree()) throw InvalidArgument("degree mismatch in weight action");
  std::vector<Rational> out(theta.coords().size());
  for (int i = 1; i <= w.degree(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = theta[i];
  return WeightVector(std::move(out));
}

GenSet stabilizer_genset(const WeightVector& theta) {
  require_dominant(theta);
  GenSet j(theta.degree() - 1);
  for (int i = 1; i < theta.degree(); ++i) {
    if (theta[i] == theta[i + 1]) j.insert(i);
  }
  return j;
}

WeightVector canonical_dominant(int degree, const GenSet& stabilizer_complement) {
  if (stabilizer_complement.rank() != degree - 1) throw InvalidArgument("rank mismatch");
  long long value = static_cast<long long>(stabilizer_complement.size());
  std::vector<long long> coords;
  for (int k = 1; k <= degree; ++k) {
    coords.push_back(value);
    if (stabilizer_complement.contains(k)) --value;
  }
  return WeightVector::from_integers(coords);
}

bool in_restriction(const WeightVector& mu, const GenSet& restriction) {
  if (restriction.rank() != mu.degree() - 1) throw InvalidArgument("rank mismatch");
  // Within an I-block the positive roots are e_a - e_b for a < b; the
  // condition reduces to consecutive pairs.
  for (int i : restriction.members()) {
    if (mu[i] < mu[i + 1]) return false;
  }
  return true;
}

std::optional<std::size_t> OrbitPoset::index_of(const WeightVector& mu) const {
  auto it = std::lower_bound(orbit.begin(), orbit.end(), mu,
                             [](const WeightVector& a, const WeightVector& b) { return a > b; });
  if (it == orbit.end() || *it != mu) return std::nullopt;
  return static_cast<std::size_t>(it - orbit.begin());
}

OrbitPoset orbit_poset(const WeightVector& theta, const std::optional<GenSet>& restriction) {
  require_dominant(theta);
  OrbitPoset out{theta, restriction, {}, {}};
  std::vector<Rational> coords = theta.coords();
  std::sort(coords.begin(), coords.end());
  do {
    WeightVector mu(coords);
    if (!restriction || in_restriction(mu, *restriction)) out.orbit.push_back(std::move(mu));
  } while (std::next_permutation(coords.begin(), coords.end()));
  std::reverse(out.orbit.begin(), out.orbit.end());

  std::vector<FinitePoset::Cover> edges;
  for (std::size_t k = 0; k < out.orbit.size(); ++k) {
    const auto& mu = out.orbit[k];
    for (int a = 1; a <= mu.degree(); ++a) {
      for (int b = a + 1; b <= mu.degree(); ++b) {
        if (!(mu[a] > mu[b])) continue;
        if (auto target = out.index_of(mu.reflect(a, b))) edges.emplace_back(k, *target);
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& mu : out.orbit) labels.push_back(mu.to_string());
  out.order = FinitePoset::from_edges(std::move(labels), edges);
  return out;
}

bool dominance_leq(const WeightVector& nu, const WeightVector& mu) {
  if (nu.degree() != mu.degree()) throw InvalidArgument("degree mismatch in dominance test");
  if (nu.sum() != mu.sum()) throw DomainError("dominance needs equal coordinate sums");
  Rational prefix(0);
  for (int i = 1; i <= mu.degree(); ++i) {
    prefix += mu[i] - nu[i];
    if (prefix < 0) return false;
  }
  return true;
}

TightnessResult is_tight(const OrbitPoset& orbit) {
  TightnessResult result;
  const std::size_t n = orbit.orbit.size();
  std::vector<std::vector<Rational>> prefix(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational running(0);
    for (const auto& c : orbit.orbit[k].coords()) {
      running += c;
      prefix[k].push_back(running);
    }
  }
  auto dominated = [&](std::size_t nu, std::size_t mu) {
    for (std::size_t i = 0; i < prefix[mu].size(); ++i) {
      if (prefix[mu][i] < prefix[nu][i]) return false;
    }
    return true;
  };
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      const bool bruhat = orbit.order.leq(mu, nu);
      const bool dominance = dominated(nu, mu);
      if (bruhat && !dominance && !result.reversal_violation) {
        result.order_reversing = false;
        result.reversal_violation = std::pair(orbit.orbit[mu], orbit.orbit[nu]);
      }
      if (dominance && !bruhat && !result.witness) {
        result.witness = std::pair(orbit.orbit[mu], orbit.orbit[nu]);
      }
    }
  }
  result.tight = !result.witness && result.order_reversing;
  return result;
}

TightnessResult is_tight(const WeightVector& theta, const std::optional<GenSet>& restriction) {
  return is_tight(orbit_poset(theta, restriction));
}

bool predicted_tight(int degree, const GenSet& stabilizer_complement) {
  const int rank = degree - 1;
  if (rank <= 2 || stabilizer_complement.size() <= 1) return true;
  const auto members = stabilizer_complement.members();
  return members.size() == 2 && members[1] == members[0] + 1;
}

bool TightScanReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const TightScanEntry& e) {
    return e.tight == e.predicted && e.order_reversing && (e.tight || e.witness.has_value());
  });
}

TightScanReport tight_scan(int degree, int degree_cap) {
  if (degree < 2) throw InvalidArgument("tight scan needs degree >= 2");
  if (degree > degree_cap) {
    throw ResourceLimit("tight scan of degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(degree_cap));
  }
  TightScanReport report;
  report.degree = degree;
  const int rank = degree - 1;
  std::vector<GenSet> patterns;
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits) {
    GenSet jc(rank);
    for (int i = 1; i <= rank; ++i) {
      if ((bits >> (i - 1)) & 1u) jc.insert(i);
    }
    patterns.push_back(jc);
  }
  std::sort(patterns.begin(), patterns.end(), [](const GenSet& a, const GenSet& b) {
    return std::pair(a.size(), a.members()) < std::pair(b.size(), b.members());
  });
  for (const auto& jc : patterns) {
    const auto theta = canonical_dominant(degree, jc);
    const auto result = is_tight(theta);
    report.entries.push_back(
        {jc, theta, result.tight, predicted_tight(degree, jc), result.order_reversing, result.witness});
  }
  return report;
}

std::string to_json(const TightScanReport& report) {
  nlohmann::json j;
  j["degree"] = report.degree;
  j["all_match"] = report.all_match();
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json row{{"J_complement", e.stabilizer_complement.members()},
                       {"theta", e.theta.to_string()},
                       {"tight", e.tight},
                       {"predicted", e.predicted},
                       {"order_reversing", e.order_reversing}};
    if (e.witness) {
      row["witness"] = {{"mu", e.witness->first.to_string()}, {"nu", e.witness->second.to_string()}};
    }
    j["entries"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string to_table(const TightScanReport& report) {
  std::ostringstream out;
  out << "degree " << report.degree << "\n";
  out << "Jc            theta          tight  rule   witness (mu, nu)\n";
  for (const auto& e : report.entries) {
    std::string jc = e.stabilizer_complement.to_string();
    std::string theta = e.theta.to_string();
    out << jc << std::string(jc.size() < 14 ? 14 - jc.size() : 1, ' ') << theta
        << std::string(theta.size() < 15 ? 15 - theta.size() : 1, ' ')
        << (e.tight ? "yes    " : "no     ") << (e.predicted ? "yes    " : "no     ");
    if (e.witness) out << "(" << e.witness->first.to_string() << ") (" << e.witness->second.to_string() << ")";
    out << (e.tight == e.predicted ? "" : "  MISMATCH") << "\n";
  }
  out << (report.all_match() ? "all entries match the rule\n" : "rule mismatch\n");
  return out.str();
}

}  // namespace dflag
