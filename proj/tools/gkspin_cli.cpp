#include "gkspin/fiber/fiber.hpp"
#include "gkspin/lie/lie_gk.hpp"
#include "gkspin/models/models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gkspin;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2, BadData = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

bool is_file_arg(const std::string &s) {
  return s.ends_with(".json") || std::filesystem::exists(s);
}

// accepts sqrt(2), sqrt(3) and I as written by sympy
FieldScalar loose_scalar(std::string s) {
  for (auto [from, to] : {std::pair<std::string, std::string>{"sqrt(2)", "sqrt2"},
                          {"sqrt(3)", "sqrt3"},
                          {"sqrt(6)", "sqrt6"},
                          {"I", "i"}})
    for (std::size_t p; (p = s.find(from)) != std::string::npos;)
      s.replace(p, from.size(), to);
  return FieldScalar::parse(s);
}

int finish(const Report &r, const std::string &json_path) {
  std::cout << r.text();
  if (!json_path.empty())
    r.write_json(json_path);
  return r.all_pass() ? Ok : CheckFailed;
}

int cmd_verify(const std::string &target, std::uint64_t seed, int trials, const std::string &json) {
  GKModel m;
  if (is_file_arg(target)) {
    std::string text = slurp(target);
    try {
      m = model_from_json(text);
    } catch (const std::exception &e) {
      throw DataError(target + ": " + e.what());
    }
  } else {
    try {
      m = model_by_name(target);
    } catch (const std::out_of_range &) {
      std::string names;
      for (const auto &n : model_names())
        names += " " + n;
      throw UsageError("unknown model '" + target + "'; known:" + names);
    }
  }
  return finish(verify_model(m, seed, trials), json);
}

int cmd_lie(const std::string &target, std::uint64_t seed, int trials, const std::string &json,
            const std::string &golden) {
  CompactLieData d;
  if (is_file_arg(target)) {
    std::string text = slurp(target);
    try {
      d = lie_from_json(text);
    } catch (const LieDataError &e) {
      std::ostringstream msg;
      msg << target << ": root data violates " << e.violations().size() << " invariant(s)";
      for (const auto &v : e.violations())
        msg << "\n  " << v;
      throw DataError(msg.str());
    } catch (const std::exception &e) {
      throw DataError(target + ": " + e.what());
    }
  } else {
    try {
      d = lie_by_name(target);
    } catch (const std::out_of_range &) {
      throw UsageError("unknown algebra '" + target + "'");
    }
  }
  Report r = lie_report(d, seed, trials);
  int code = finish(r, json);
  const Check *c = r.find("curvature.value");
  std::string norm, s;
  if (c)
    for (const auto &[k, v] : c->values) {
      if (k == "norm_P_sq")
        norm = v;
      if (k == "S")
        s = v;
    }
  std::cout << "|P|^2 = " << norm << "\nS = " << s << "\n";
  if (golden.empty() || norm.empty())
    return code;
  if (!std::filesystem::exists(golden)) {
    nlohmann::ordered_json g;
    g["algebra"] = d.name;
    g["basis"] = d.basis;
    g["norm_P_sq"] = norm;
    g["scalar_curvature"] = s;
    std::ofstream(golden) << g.dump(2) << "\n";
    std::cout << "golden recorded in " << golden << "\n";
    return code;
  }
  nlohmann::json g;
  try {
    g = nlohmann::json::parse(slurp(golden));
  } catch (const nlohmann::json::exception &e) {
    throw DataError(golden + ": " + e.what());
  }
  bool same = loose_scalar(g.at("norm_P_sq").get<std::string>()) == FieldScalar::parse(norm) &&
              loose_scalar(g.at("scalar_curvature").get<std::string>()) == FieldScalar::parse(s);
  std::cout << "golden " << golden << (same ? ": match" : ": MISMATCH") << "\n";
  return same ? code : CheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Checks generalized Kahler spinor identities in exact arithmetic."};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int trials = 8;
  std::string json;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--trials", trials, "random trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--json", json, "write the report as JSON");
  app.fallthrough();

  std::string target, golden;
  int n = 1;
  auto *verify = app.add_subcommand("verify", "verify a built-in or JSON manifold model");
  verify->add_option("model", target, "model name or JSON file")->required();
  auto *lie = app.add_subcommand("lie", "Lie group checks for built-in or JSON root data");
  lie->add_option("algebra", target, "su2xu1, su3 or a JSON file")->required();
  lie->add_option("--golden", golden, "compare |P|^2 and S with this file, or record it");
  auto *props = app.add_subcommand("props", "cross-module property suite");
  auto *fiber = app.add_subcommand("fiber", "bounded domain Kahler checks");
  fiber->add_option("--n", n, "matrix size (1 or 2)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (*verify)
      return cmd_verify(target, seed, trials, json);
    if (*lie)
      return cmd_lie(target, seed, trials, json, golden);
    if (*props)
      return finish(props_report(seed, trials), json);
    if (*fiber) {
      if (n != 1 && n != 2)
        throw UsageError("fiber supports --n 1 or --n 2, not " + std::to_string(n));
      return finish(fiber_report(n, trials, seed), json);
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const DataError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadData;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadData;
  }
  return Usage;
}
