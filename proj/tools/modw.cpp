#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modw/suites.hpp"

namespace {

using namespace modw;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string dump_spec(const SuiteConfig& cfg, const std::string& spec) {
  static const std::regex two(R"(^\s*(D|xiD)\[\s*(\d+)\s*;\s*(\d+)\s*\]\s*$)");
  static const std::regex one(R"(^\s*(Zr|zs|capelli)\[\s*(\d+)\s*\]\s*$)");
  std::smatch m;
  WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
  if (std::regex_match(spec, m, two)) {
    int i = std::stoi(m[2]), r = std::stoi(m[3]);
    if (i < 1 || i > ctx.n()) throw ConfigError("row index " + std::to_string(i) + " outside 1.." + std::to_string(ctx.n()));
    if (m[1] == "D") return dump(ctx.D(i, r));
    if (r < 1 || r > ctx.pyr().p(i)) throw ConfigError("xiD needs 1 <= r <= p_i");
    return dump(ctx.p_centre_D(i, r));
  }
  if (std::regex_match(spec, m, one)) {
    int r = std::stoi(m[2]);
    if (m[1] == "Zr") {
      if (r > cfg.K()) throw ConfigError("Zr index above the truncation K=" + std::to_string(cfg.K()));
      return dump(Z_coeffs(ctx, cfg.K() - ctx.N())[r]);
    }
    if (r > ctx.N()) return "0";
    if (m[1] == "capelli") return dump(capelli(ctx)[r]);
    if (!cfg.pyr.left_justified()) throw ConfigError("zs needs a left-justified pyramid");
    if (r == 0) return "1";
    return dump(z_central(ctx, r).z);
  }
  throw ConfigError("unknown dump spec '" + spec + "' (expected D[i;r], Zr[r], xiD[i;r], zs[s] or capelli[r])");
}

json config_json(const SuiteConfig& cfg) {
  json c;
  c["q"] = cfg.pyr.q();
  c["prime"] = cfg.prime;
  c["trunc"] = cfg.K();
  c["seed"] = cfg.seed;
  c["samples"] = cfg.samples;
  c["suites"] = cfg.suites;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for modular finite W-algebras of type A"};
  std::string q, up, lo, out, dumpspec;
  std::optional<int> level;
  int trunc = -1;
  SuiteConfig cfg;
  bool timing = false;
  auto* oq = app.add_option("--q", q, "pyramid column heights, e.g. 1,3,3,2,1");
  auto* ou = app.add_option("--sigma-upper", up, "superdiagonals s_{i,i+1} (or ';'-separated upper rows)");
  auto* ol = app.add_option("--sigma-lower", lo, "subdiagonals s_{i+1,i} (or ';'-separated lower columns)");
  auto* ov = app.add_option("--level", level, "level l");
  oq->excludes(ou)->excludes(ol)->excludes(ov);
  app.add_option("--prime", cfg.prime, "prime p")->default_val(3);
  app.add_option("--trunc", trunc, "series truncation K (default N+3)");
  app.add_option("--seed", cfg.seed, "mt19937_64 seed")->default_val(1);
  app.add_option("--samples", cfg.samples, "random tableaux per sampling check")->default_val(50);
  app.add_option("--suite", cfg.suites, "suite to run (repeatable; default all)")->take_all();
  app.add_option("--out", out, "write the JSON report here instead of stdout");
  app.add_option("--dump", dumpspec, "print one element: D[i;r], Zr[r], xiD[i;r], zs[s], capelli[r]");
  app.add_flag("--timing", timing, "include per-check seconds in the report");
  auto* desc = app.add_subcommand("describe", "print the pyramid data and exit");
  desc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!q.empty()) {
      cfg.pyr = parse_pyramid(q);
    } else if (level) {
      cfg.pyr = pyramid_from_sigma_level(parse_shift_matrix("upper=" + up + " lower=" + lo), *level);
    } else if (!up.empty() || !lo.empty()) {
      throw ConfigError("--sigma-upper/--sigma-lower need --level");
    } else {
      throw ConfigError("give --q or --sigma-upper/--sigma-lower/--level");
    }
    if (!is_prime(cfg.prime)) throw ConfigError(std::to_string(cfg.prime) + " is not prime");
    if (trunc >= 0 && trunc < cfg.pyr.N()) throw ConfigError("--trunc must be at least N=" + std::to_string(cfg.pyr.N()));
    cfg.trunc = trunc;
    if (cfg.samples < 1) throw ConfigError("--samples must be positive");
    for (const auto& s : cfg.suites) {
      const auto& reg = suite_registry();
      if (std::none_of(reg.begin(), reg.end(), [&](const auto& e) { return e.first == s; }))
        throw ConfigError("unknown suite '" + s + "'");
    }

    if (desc->parsed()) {
      std::cout << describe(cfg.pyr);
      return 0;
    }
    if (!dumpspec.empty()) {
      std::cout << dump_spec(cfg, dumpspec) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  Report rep = verify(cfg);
  json j;
  j["config"] = config_json(cfg);
  json body = rep.to_json(timing);
  for (auto& [k, v] : body.items()) j[k] = v;
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  std::cerr << rep.count("pass") << " pass, " << rep.count("fail") << " fail, " << rep.count("skip") << " skip\n";
  return rep.ok() ? 0 : 1;
}
