// afh: command-line driver for the affinely homogeneous surface toolkit.

#include "afh/algebra/parse.hpp"
#include "afh/suites/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using afh::Section;
using afh::Status;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

// Exit code 2: bad configuration or unreadable input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;  // verify suite or catalog action
  std::string n_text;
  std::size_t n_lo = 0, n_hi = 0;
  std::string family;
  std::string alpha;
  std::string point;
  std::string surface;
  int cap = 6;
  std::string out;
  unsigned jobs = 1;
  std::string format = "text";
  bool timings = false;
  std::uint64_t seed = 0x5eed;
};

void parse_n_range(RunConfig& cfg, std::size_t default_lo, std::size_t default_hi) {
  if (cfg.n_text.empty()) {
    cfg.n_lo = default_lo;
    cfg.n_hi = default_hi;
  } else {
    auto dots = cfg.n_text.find("..");
    try {
      if (dots == std::string::npos) {
        cfg.n_lo = cfg.n_hi = std::stoul(cfg.n_text);
      } else {
        cfg.n_lo = std::stoul(cfg.n_text.substr(0, dots));
        cfg.n_hi = std::stoul(cfg.n_text.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw ConfigError("--n expects N or LO..HI, got '" + cfg.n_text + "'");
    }
  }
  if (cfg.n_lo > cfg.n_hi) throw ConfigError("--n range is empty");
  if (cfg.n_lo < 2 || cfg.n_hi > 8) throw ConfigError("--n must lie in [2, 8]");
}

void validate(RunConfig& cfg) {
  if (cfg.cap < 3 || cfg.cap > 8) throw ConfigError("--cap must lie in [3, 8]");
  if (const char* env = std::getenv("AFH_JOBS")) {
    try {
      cfg.jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw ConfigError("AFH_JOBS must be a positive integer");
    }
  }
  if (cfg.jobs == 0) throw ConfigError("--jobs must be positive");
  if (cfg.format != "text" && cfg.format != "json") throw ConfigError("--format must be text or json");
}

json config_echo(const RunConfig& cfg) {
  json c;
  c["command"] = cfg.command;
  if (!cfg.target.empty()) c["target"] = cfg.target;
  if (cfg.n_lo) c["n"] = cfg.n_lo == cfg.n_hi ? std::to_string(cfg.n_lo)
                                               : std::to_string(cfg.n_lo) + ".." + std::to_string(cfg.n_hi);
  if (!cfg.family.empty()) c["family"] = cfg.family;
  if (!cfg.alpha.empty()) c["alpha"] = cfg.alpha;
  if (!cfg.point.empty()) c["point"] = cfg.point;
  if (!cfg.surface.empty()) c["surface"] = cfg.surface;
  c["cap"] = cfg.cap;
  c["seed"] = cfg.seed;
  return c;
}

bool any_failed(const std::vector<Section>& sections) {
  for (const auto& s : sections)
    if (s.failed()) return true;
  return false;
}

std::string render(const RunConfig& cfg, const std::vector<Section>& sections) {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : sections)
    for (const auto& c : s.checks) ++counts[static_cast<int>(c.status)];
  const bool failed = any_failed(sections);
  if (cfg.format == "json") {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = "afh";
    report["version"] = kVersion;
    report["config"] = config_echo(cfg);
    json secs = json::array();
    for (const auto& s : sections) {
      json js;
      js["title"] = s.title;
      js["status"] = s.failed() ? "fail" : "pass";
      json checks = json::array();
      for (const auto& c : s.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = afh::to_string(c.status);
        jc["value"] = c.value;
        if (!c.expected.empty()) jc["expected"] = c.expected;
        if (cfg.timings) jc["seconds"] = c.seconds;
        checks.push_back(jc);
      }
      js["checks"] = checks;
      secs.push_back(js);
    }
    report["sections"] = secs;
    report["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"n/a", counts[2]}};
    report["status"] = failed ? "fail" : "pass";
    return report.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& s : sections) {
    os << "== " << s.title << " ==\n";
    for (const auto& c : s.checks) {
      os << "  [" << afh::to_string(c.status) << "] " << c.name << ": " << c.value;
      if (!c.expected.empty() && c.status == Status::Fail) os << " (expected " << c.expected << ")";
      if (cfg.timings) os << " [" << c.seconds << " s]";
      os << "\n";
    }
  }
  os << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " n/a\n";
  return os.str();
}

afh::Hypersurface surface_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open surface file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("F") || !j.contains("point"))
    throw ConfigError(path + ": surface file needs n, F and point");
  const std::size_t n = j["n"].get<std::size_t>();
  if (n < 1 || n > 8) throw ConfigError(path + ": n must lie in [1, 8]");
  afh::RPoly f = afh::parse_real_poly(j["F"].get<std::string>(), n + 1);
  afh::QVector p;
  for (const auto& x : j["point"]) p.push_back(afh::parse_rational(x.get<std::string>()));
  std::optional<afh::OpenCondition> constraint;
  if (j.contains("constraint")) {
    const std::string text = j["constraint"].get<std::string>();
    auto [g, sign] = afh::parse_constraint(text, n + 1);
    constraint = afh::OpenCondition{g, sign, text};
  }
  return {n, f, p, constraint};
}

std::vector<Section> cmd_analyze(RunConfig& cfg) {
  if (!cfg.surface.empty()) {
    afh::Hypersurface s = surface_from_file(cfg.surface);
    return {afh::analyze_surface("analyze " + cfg.surface, s)};
  }
  if (cfg.family.empty()) throw ConfigError("analyze needs --family or --surface");
  auto family = afh::parse_family(cfg.family);
  if (!family) throw ConfigError("unknown family '" + cfg.family + "'");
  parse_n_range(cfg, 4, 4);
  if (cfg.n_lo != cfg.n_hi) throw ConfigError("analyze takes a single --n");
  afh::SurfaceId id{*family, cfg.n_lo, std::nullopt};
  if (*family == afh::Family::T2_3) id.alpha = cfg.alpha.empty() ? afh::Rational(0) : afh::parse_rational(cfg.alpha);
  else if (!cfg.alpha.empty()) throw ConfigError("--alpha applies to t2.3 only");
  afh::Hypersurface s = afh::make_surface(id);
  if (!cfg.point.empty()) {
    afh::QVector p;
    std::stringstream ss(cfg.point);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(afh::parse_rational(item));
    s = afh::Hypersurface(s.n(), s.F(), p, s.constraint());
  }
  return {afh::analyze_surface("analyze " + id.label(), s)};
}

std::vector<Section> verify_theorem1(RunConfig& cfg) {
  std::vector<std::function<Section()>> tasks;
  for (std::size_t n = cfg.n_lo; n <= cfg.n_hi; ++n) tasks.push_back([n] { return afh::verify_theorem1(n); });
  return afh::run_parallel(tasks, cfg.jobs);
}

std::vector<Section> verify_theorem2(RunConfig& cfg) {
  if (cfg.n_lo < 4) throw ConfigError("theorem2 requires n >= 4");
  std::vector<std::function<Section()>> tasks;
  for (std::size_t n = cfg.n_lo; n <= cfg.n_hi; ++n)
    for (const auto& id : afh::theorem2_ids(n)) tasks.push_back([id] { return afh::verify_theorem2(id); });
  return afh::run_parallel(tasks, cfg.jobs);
}

std::vector<Section> verify_section6(RunConfig& cfg) {
  if (cfg.n_lo < 3) throw ConfigError("section6 requires n >= 3");
  if (cfg.cap < 6) throw ConfigError("section6 needs --cap >= 6 to determine F33");
  std::vector<std::function<Section()>> tasks;
  for (std::size_t n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const std::uint64_t seed = cfg.seed + n;
    const int cap = cfg.cap;
    tasks.push_back([n, seed] { return afh::verify_section6_real(n, seed); });
    tasks.push_back([n] { return afh::verify_section6_fields(n); });
    tasks.push_back([n, cap] { return afh::verify_section6_cm(n, cap); });
  }
  return afh::run_parallel(tasks, cfg.jobs);
}

std::vector<Section> cmd_verify(RunConfig& cfg) {
  if (cfg.target == "theorem1") {
    parse_n_range(cfg, 2, 6);
    return verify_theorem1(cfg);
  }
  if (cfg.target == "theorem2") {
    parse_n_range(cfg, 4, 6);
    return verify_theorem2(cfg);
  }
  if (cfg.target == "section6") {
    parse_n_range(cfg, 4, 5);
    return verify_section6(cfg);
  }
  throw ConfigError("verify expects theorem1, theorem2 or section6");
}

std::vector<Section> cmd_report(RunConfig& cfg) {
  std::vector<Section> all;
  const std::string n_text = cfg.n_text;
  auto add = [&](std::vector<Section> more) { all.insert(all.end(), more.begin(), more.end()); };
  parse_n_range(cfg, 2, 6);
  add(verify_theorem1(cfg));
  cfg.n_text = n_text;
  parse_n_range(cfg, 4, 6);
  add(verify_theorem2(cfg));
  cfg.n_text = n_text;
  parse_n_range(cfg, 4, 5);
  add(verify_section6(cfg));
  cfg.n_lo = cfg.n_hi = 0;
  return all;
}

std::string catalog_list(RunConfig& cfg) {
  parse_n_range(cfg, 4, 4);
  if (cfg.n_lo != cfg.n_hi) throw ConfigError("catalog list takes a single --n");
  const std::size_t n = cfg.n_lo;
  json list = json::array();
  std::ostringstream text;
  for (afh::Family f : afh::all_families()) {
    afh::SurfaceId id{f, n, f == afh::Family::T2_3 ? std::optional<afh::Rational>(0) : std::nullopt};
    json entry;
    entry["family"] = afh::family_name(f);
    try {
      afh::Hypersurface s = afh::make_surface(id);
      entry["F"] = afh::to_string(s.F());
      entry["point"] = afh::to_strings(s.ref_point());
      if (s.constraint()) entry["constraint"] = s.constraint()->text;
      text << afh::family_name(f) << ": " << afh::to_string(s.F()) << " = 0";
      if (s.constraint()) text << ", " << s.constraint()->text;
      text << "\n";
    } catch (const std::invalid_argument& e) {
      entry["unavailable"] = e.what();
      text << afh::family_name(f) << ": unavailable (" << e.what() << ")\n";
    }
    list.push_back(entry);
  }
  if (cfg.format == "json") {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["n"] = n;
    out["families"] = list;
    return out.dump(2) + "\n";
  }
  return text.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot write '" + cfg.out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Affinely homogeneous hypersurfaces: invariants and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", cfg.jobs, "Worker threads for independent checks (AFH_JOBS overrides)");
  app.add_option("--out", cfg.out, "Write the report to a file instead of stdout");
  app.add_flag("--timings", cfg.timings, "Include wall-clock seconds per check");
  app.add_option("--seed", cfg.seed, "Seed for randomized parameter samples");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n_text, "Dimension N or range LO..HI");
    sub->add_option("--format", cfg.format, "text or json");
    sub->add_option("--cap", cfg.cap, "Series truncation degree");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Run the invariant pipeline on one surface");
  add_common(analyze);
  analyze->add_option("--family", cfg.family, "t1, t2.1 .. t2.7, sec6");
  analyze->add_option("--alpha", cfg.alpha, "Quartic coefficient p/q for t2.3");
  analyze->add_option("--point", cfg.point, "Reference point, comma-separated p/q values");
  analyze->add_option("--surface", cfg.surface, "Surface JSON file {n, F, point, constraint?}");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify);
  verify->add_option("suite", cfg.target, "theorem1, theorem2 or section6")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "Catalog of normal forms");
  add_common(catalog);
  catalog->add_option("action", cfg.target, "list")->required();

  CLI::App* report = app.add_subcommand("report", "Run every suite and emit one report");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report->parsed() && report->count("--format") == 0) cfg.format = "json";
    validate(cfg);
    if (catalog->parsed()) {
      cfg.command = "catalog";
      if (cfg.target != "list") throw ConfigError("catalog expects 'list'");
      emit(cfg, catalog_list(cfg));
      return 0;
    }
    std::vector<Section> sections;
    if (analyze->parsed()) {
      cfg.command = "analyze";
      sections = cmd_analyze(cfg);
    } else if (verify->parsed()) {
      cfg.command = "verify";
      sections = cmd_verify(cfg);
    } else {
      cfg.command = "report";
      sections = cmd_report(cfg);
    }
    emit(cfg, render(cfg, sections));
    return any_failed(sections) ? 1 : 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const afh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
