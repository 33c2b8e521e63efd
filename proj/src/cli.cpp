#include "dflag/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dflag/bruhat.hpp"
#include "dflag/error.hpp"
#include "dflag/parabolic.hpp"
#include "dflag/poset.hpp"
#include "dflag/spherical.hpp"
#include "dflag/symgroup.hpp"
#include "dflag/weights.hpp"

namespace dflag {

namespace {

struct Config {
  int degree = 0;
  std::string ic;
  std::string jc;
  std::string format;
  std::string output;
  std::optional<int> degree_cap;
  std::string degrees;
  unsigned threads = 1;
  std::string theta;
  std::string restrict;
  std::string first;
  std::string second;
};

int resolve_cap(const Config& cfg, int fallback) {
  if (cfg.degree_cap) return *cfg.degree_cap;
  if (std::getenv("DFLAG_DEGREE_CAP") != nullptr) return degree_cap_from_env();
  return fallback;
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad degree range '" + text + "'");
    }
    if (used != s.size()) throw InvalidArgument("bad degree range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int d = to_int(text);
    return {d, d};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

void check_degree(int degree) {
  if (degree < 2) throw InvalidArgument("--degree must be at least 2");
}

std::string cosets_table(const DoubleCosetTable& table) {
  std::ostringstream out;
  out << "degree " << table.degree << "  Ic " << table.left.complement().to_string() << "  Jc "
      << table.right.complement().to_string() << "  cosets " << table.cosets.size() << "\n";
  out << "idx  min_rep  max_rep  size  covered_by\n";
  for (std::size_t k = 0; k < table.cosets.size(); ++k) {
    const auto& c = table.cosets[k];
    out << k << "  " << c.min_rep.to_string() << "  " << c.max_rep.to_string() << "  " << c.size
        << "  [";
    const auto& up = table.order.upper_covers(k);
    for (std::size_t t = 0; t < up.size(); ++t) out << (t ? "," : "") << up[t];
    out << "]\n";
  }
  return out.str();
}

std::string poset_table(const FinitePoset& p) {
  std::ostringstream out;
  const auto levels = p.levels();
  for (std::size_t k = 0; k < p.size(); ++k) {
    out << levels[k] << "  " << p.label(k) << "  <";
    for (auto u : p.upper_covers(k)) out << " " << p.label(u);
    out << "\n";
  }
  return out.str();
}

FinitePoset xplus_poset(const Config& cfg) {
  check_degree(cfg.degree);
  const int n = cfg.degree - 1;
  const GenSet left = GenSet::parse(n, cfg.ic).complement();
  const GenSet right = GenSet::parse(n, cfg.jc).complement();
  auto elements = max_representatives(cfg.degree, left, right, resolve_cap(cfg, kDefaultDegreeCap));
  sort_by_length(elements);
  return bruhat_poset(elements);
}

int run_cosets(const Config& cfg, std::ostream& out) {
  check_degree(cfg.degree);
  const int n = cfg.degree - 1;
  const GenSet left = GenSet::parse(n, cfg.ic).complement();
  const GenSet right = GenSet::parse(n, cfg.jc).complement();
  const auto table = decompose(cfg.degree, left, right, resolve_cap(cfg, kDefaultDegreeCap));
  if (cfg.format == "json") {
    out << to_json(table);
  } else if (cfg.format == "dot") {
    out << to_dot(table.order, "cosets");
  } else {
    out << cosets_table(table);
  }
  return kExitOk;
}

int run_hasse(const Config& cfg, std::ostream& out) {
  const auto poset = xplus_poset(cfg);
  if (cfg.format == "json") {
    out << to_json(poset);
  } else if (cfg.format == "table") {
    out << poset_table(poset);
  } else {
    out << to_dot(poset, "xplus");
  }
  return kExitOk;
}

int run_verify(const Config& cfg, std::ostream& out) {
  int first = cfg.degree;
  int last = cfg.degree;
  if (!cfg.degrees.empty()) std::tie(first, last) = parse_degree_range(cfg.degrees);
  if (first == 0) throw InvalidArgument("verify needs --degrees or --degree");
  VerifyOptions options;
  options.degree_cap = resolve_cap(cfg, kDefaultVerifyDegreeCap);
  options.threads = cfg.threads;
  const auto report = verify_theorem(first, last, options);
  out << (cfg.format == "json" ? to_json(report) : to_table(report));
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_tight(const Config& cfg, std::ostream& out) {
  check_degree(cfg.degree);
  const auto report = tight_scan(cfg.degree, resolve_cap(cfg, 6));
  out << (cfg.format == "json" ? to_json(report) : to_table(report));
  return report.all_match() ? kExitOk : kExitVerifyFailed;
}

int run_compare(const Config& cfg, std::ostream& out) {
  const auto u = Permutation::parse(cfg.first);
  const auto v = Permutation::parse(cfg.second);
  if (u.degree() != v.degree()) throw InvalidArgument("permutations have different degrees");
  out << (leq(u, v) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_orbit(const Config& cfg, std::ostream& out) {
  const auto theta = WeightVector::parse(cfg.theta);
  std::optional<GenSet> restriction;
  if (!cfg.restrict.empty()) restriction = GenSet::parse(theta.degree() - 1, cfg.restrict);
  const int cap = resolve_cap(cfg, kDefaultDegreeCap);
  if (theta.degree() > cap) {
    throw ResourceLimit("degree " + std::to_string(theta.degree()) + " exceeds cap " +
                        std::to_string(cap));
  }
  const auto orbit = orbit_poset(theta, restriction);
  if (cfg.format == "json") {
    out << to_json(orbit.order);
  } else if (cfg.format == "table") {
    out << poset_table(orbit.order);
  } else {
    out << to_dot(orbit.order, "orbit");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Bruhat order on parabolic double cosets of S_{n+1}"};
  app.name("dflag");
  app.require_subcommand(1);

  const std::vector<std::string> formats{"dot", "json", "table"};
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    cfg.format = default_format;
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->default_str(default_format);
    sub->add_option("--output,-o", cfg.output, "Write output to this file");
    sub->add_option("--degree-cap", cfg.degree_cap,
                    "Largest degree to enumerate (default from DFLAG_DEGREE_CAP)");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--degree", cfg.degree, "n+1, the degree of S_{n+1}")->required();
    sub->add_option("--ic", cfg.ic, "Complement of I, e.g. {2} or 2")->required();
    sub->add_option("--jc", cfg.jc, "Complement of J, e.g. {2,4} or 2,4")->required();
  };

  auto* cosets = app.add_subcommand("cosets", "Double cosets W_I \\ W / W_J and their order");
  add_pair(cosets);
  add_common(cosets, "table");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the Bruhat order on X+");
  add_pair(hasse);
  add_common(hasse, "dot");

  auto* verify = app.add_subcommand("verify", "Check every spherical pair in a degree range");
  verify->add_option("--degrees", cfg.degrees, "Degree or range, e.g. 4..6");
  verify->add_option("--degree", cfg.degree, "Single degree");
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 64u));
  add_common(verify, "table");

  auto* tight = app.add_subcommand("tight", "Tightness scan over stabilizer patterns");
  tight->add_option("--degree", cfg.degree, "n+1")->required();
  add_common(tight, "table");

  auto* compare = app.add_subcommand("compare", "Bruhat comparison u <= v");
  compare->add_option("u", cfg.first, "One-line word, e.g. \"2 1 3\"")->required();
  compare->add_option("v", cfg.second, "One-line word")->required();
  add_common(compare, "table");

  auto* orbit = app.add_subcommand("orbit", "Orbit of a dominant weight under <=_B");
  orbit->add_option("--theta", cfg.theta, "Coordinates, e.g. 2,1,1,0")->required();
  orbit->add_option("--restrict", cfg.restrict, "Restrict to (W theta)_I for this I");
  add_common(orbit, "dot");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dflag: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  // add_common overwrote cfg.format once per subcommand; restore the chosen
  // subcommand's default if --format was not given.
  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->get_option("--format")->count() == 0) {
    cfg.format = chosen->get_option("--format")->get_default_str();
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    const std::string name = chosen->get_name();
    if (name == "cosets") code = run_cosets(cfg, buffer);
    else if (name == "hasse") code = run_hasse(cfg, buffer);
    else if (name == "verify") code = run_verify(cfg, buffer);
    else if (name == "tight") code = run_tight(cfg, buffer);
    else if (name == "compare") code = run_compare(cfg, buffer);
    else code = run_orbit(cfg, buffer);
  } catch (const Error& e) {
    err << "dflag: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "dflag: cannot write " << cfg.output << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace dflag
