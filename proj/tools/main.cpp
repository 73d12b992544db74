#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fanolie/compfactor.hpp"
#include "fanolie/g2.hpp"
#include "fanolie/lifting.hpp"
#include "fanolie/octonion.hpp"
#include "suites.hpp"

using namespace fanolie;
using nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 2;

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* d = std::getenv("FANOLIE_CACHE_DIR"); d && *d) return std::filesystem::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "fanolie";
  if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "fanolie";
  return std::nullopt;
}

const CompositionFactor& canonical_eps() {
  static const CompositionFactor e = canonical_epsilon(canonical_tau());
  return e;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_verify(const std::string& suite, bool json, bool timing, const cli::VerifyOptions& opts) {
  std::vector<std::string> names;
  if (suite == "all")
    names = cli::suite_names();
  else if (cli::is_suite(suite))
    names = {suite};
  else {
    std::cerr << "unknown suite '" << suite << "'; expected all";
    for (const auto& n : cli::suite_names()) std::cerr << ", " << n;
    std::cerr << "\n";
    return kUsageError;
  }
  auto start = std::chrono::steady_clock::now();
  auto results = cli::run_suites(names, opts);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int checks = 0, passed = 0;
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    for (const auto& c : r.checks) {
      ++checks;
      passed += c.pass;
    }
  }

  if (json) {
    ordered_json out;
    out["field"] = opts.field.name();
    out["pass"] = all_pass;
    out["checks"] = checks;
    out["passed"] = passed;
    if (timing) out["seconds"] = total;
    out["suites"] = ordered_json::array();
    for (const auto& r : results) {
      ordered_json s;
      s["name"] = r.name;
      s["pass"] = r.pass();
      if (!r.error.empty()) s["error"] = r.error;
      if (timing) s["seconds"] = r.seconds;
      s["checks"] = ordered_json::array();
      for (const auto& c : r.checks)
        s["checks"].push_back({{"id", c.id},
                               {"criterion", c.criterion},
                               {"anchor", c.anchor},
                               {"observed", c.observed},
                               {"expected", c.expected},
                               {"pass", c.pass}});
      out["suites"].push_back(s);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << "suite " << r.name << ": " << (r.pass() ? "PASS" : "FAIL");
      if (timing) std::cout << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
      std::cout << "\n";
      if (!r.error.empty()) std::cout << "  ERROR " << r.error << "\n";
      for (const auto& c : r.checks) {
        std::cout << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.criterion << " " << c.id << ": " << c.observed;
        if (!c.pass) std::cout << " (expected " << c.expected << ")";
        std::cout << "  [" << c.anchor << "]\n";
      }
    }
    std::cout << checks << " checks, " << passed << " passed, " << checks - passed << " failed";
    if (timing) std::cout << " in " << std::fixed << std::setprecision(3) << total << " s";
    std::cout << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_enumerate(const std::string& target, const std::string& out_path,
                  const std::optional<std::filesystem::path>& cache_dir) {
  Output out(out_path);
  auto& os = out.stream();
  auto line = [&](const ordered_json& j) { os << j.dump() << "\n"; };
  if (target == "aut") {
    int i = 0;
    for (const auto& g : all_collineations()) line({{"index", i++}, {"images", g.str()}, {"order", g.order()}});
  } else if (target == "aug-aut") {
    int i = 0;
    for (const auto& g : enumerate_aug_group(canonical_eps(), cache_dir).elements)
      line({{"index", i++}, {"images", g.str()}, {"base", g.base().str()}, {"order", g.order()}});
  } else if (target == "comp-factors") {
    const auto& all = enumerate_composition_factors();
    auto orbits = orbit_decomposition(all);
    int i = 0;
    for (const auto& f : all) {
      int orbit = 0;
      for (std::size_t k = 0; k < orbits.size(); ++k)
        if (std::find(orbits[k].begin(), orbits[k].end(), f) != orbits[k].end()) orbit = static_cast<int>(k);
      line({{"index", i++},
            {"code", f.eps().code()},
            {"eps", f.str()},
            {"side", to_string(f.side())},
            {"orbit", orbit},
            {"canonical", f == canonical_eps()}});
    }
  } else if (target == "oriented-maps") {
    int i = 0;
    for (const auto& a : enumerate_oriented_maps()) {
      ordered_json j{{"index", i++}, {"alpha", a.str()}};
      try {
        auto f = exponentiate(a);
        j["eps_code"] = f.eps().code();
        j["side"] = to_string(f.side());
      } catch (const ExponentiationError& e) {
        j["error"] = e.what();
      }
      line(j);
    }
  } else {
    std::cerr << "unknown enumerate target '" << target << "'\n";
    return kUsageError;
  }
  return 0;
}

std::string bracket_table() {
  G2Context<RationalField> g;
  std::ostringstream os;
  for (const auto& a : all_incident_pairs())
    for (const auto& b : all_incident_pairs()) {
      auto br = g.bracket(g.X(a), g.X(b));
      std::string value;
      if (br.is_zero()) value = "0";
      for (const auto& t : all_incident_pairs())
        for (long c : {1L, -1L, 2L, -2L})
          if (value.empty() && br == Rational(c) * g.X(t))
            value = (c == 1 ? "" : c == -1 ? "-" : std::to_string(c) + " ") + std::string("X") + t.str();
      if (value.empty()) value = "?";
      os << a.str() << " " << b.str() << " -> " << value << ", orbit " << to_string(classify_pair(a, b)) << "\n";
    }
  return os.str();
}

int cmd_table(const std::string& target, const std::string& out_path) {
  Output out(out_path);
  if (target == "octonion")
    out.stream() << format_table(multiplication_table(canonical_eps()));
  else if (target == "brackets")
    out.stream() << bracket_table();
  else {
    std::cerr << "unknown table '" << target << "'\n";
    return kUsageError;
  }
  return 0;
}

int cmd_diagram(const std::string& target, const std::string& format, const std::string& out_path,
                const std::optional<std::filesystem::path>& cache_dir) {
  Output out(out_path);
  bool dot = format == "dot";
  if (target == "delta-star") {
    out.stream() << (dot ? delta_star_diagram_dot(canonical_eps()) : delta_star_diagram_text(canonical_eps()));
  } else if (target == "delta") {
    auto group = enumerate_aug_group(canonical_eps(), cache_dir).elements;
    out.stream() << (dot ? delta_diagram_dot(group, canonical_eps()) : delta_diagram_text(group, canonical_eps()));
  } else {
    std::cerr << "unknown diagram '" << target << "'\n";
    return kUsageError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fano plane, octonion and g2 certificates"};
  app.require_subcommand(1);

  std::string cache_dir_opt;
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir_opt, "Cache directory for the 1344-element group");
  app.add_flag("--no-cache", no_cache, "Do not read or write the cache");

  auto* verify = app.add_subcommand("verify", "Run certificate suites");
  std::string suite;
  bool json = false, timing = false;
  std::string field = "q";
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_flag("--json", json, "Machine-readable report");
  verify->add_flag("--timing", timing, "Include wall times");
  verify->add_option("--field", field, "Scalar field: q, qi or fp:<p>");
  verify->add_option("--cache-dir", cache_dir_opt, "Cache directory for the 1344-element group");
  verify->add_flag("--no-cache", no_cache, "Do not read or write the cache");

  auto* enumerate = app.add_subcommand("enumerate", "Write JSON lines");
  std::string target, out_path;
  enumerate->add_option("target", target, "aut | aug-aut | comp-factors | oriented-maps")->required();
  enumerate->add_option("--out", out_path, "Output file (default stdout)");
  enumerate->add_option("--cache-dir", cache_dir_opt, "Cache directory for the 1344-element group");
  enumerate->add_flag("--no-cache", no_cache, "Do not read or write the cache");

  auto* table = app.add_subcommand("table", "Print a table");
  table->add_option("target", target, "octonion | brackets")->required();
  table->add_option("--out", out_path, "Output file (default stdout)");

  auto* diagram = app.add_subcommand("diagram", "Emit diagram data");
  std::string format = "text";
  diagram->add_option("target", target, "delta-star | delta")->required();
  diagram->add_option("--format", format, "dot | text")->check(CLI::IsMember({"dot", "text"}));
  diagram->add_option("--out", out_path, "Output file (default stdout)");
  diagram->add_option("--cache-dir", cache_dir_opt, "Cache directory for the 1344-element group");
  diagram->add_flag("--no-cache", no_cache, "Do not read or write the cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  std::optional<std::filesystem::path> cache_dir;
  if (!no_cache) cache_dir = cache_dir_opt.empty() ? default_cache_dir() : std::filesystem::path(cache_dir_opt);

  try {
    if (verify->parsed()) {
      cli::VerifyOptions opts;
      try {
        opts.field = FieldDescriptor::parse(field);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
      }
      opts.cache_dir = cache_dir;
      return cmd_verify(suite, json, timing, opts);
    }
    if (enumerate->parsed()) return cmd_enumerate(target, out_path, cache_dir);
    if (table->parsed()) return cmd_table(target, out_path);
    if (diagram->parsed()) return cmd_diagram(target, format, out_path, cache_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
