#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qtaft/config.hpp"
#include "qtaft/errors.hpp"
#include "qtaft/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qtaft::parse_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw qtaft::parse_error("cannot write " + path);
  out << text;
}

void print_report(const qtaft::ConstraintReport& report) {
  std::cout << report.to_string();
}

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  int max_degree = 0;
};

int run_verify(const CommonOptions& opts) {
  const qtaft::ActionSpec spec = qtaft::action_spec_from_json(read_file(opts.config_path));
  const int degree = opts.max_degree > 0 ? opts.max_degree : 2 * spec.n;

  qtaft::ConstraintReport report = spec.validate_structure();
  if (report.all_passed()) {
    report.merge(qtaft::verify_module_algebra(spec, degree));
    report.merge(qtaft::verify_hopf_relations(spec, degree));
    report.merge(qtaft::check_necessary(spec));
  }
  print_report(report);
  std::cout << "inner faithful: " << (qtaft::is_inner_faithful(spec) ? "yes" : "no")
            << "\n";
  if (!opts.out_path.empty()) write_file(opts.out_path, qtaft::report_to_json(report));
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_classify(const CommonOptions& opts) {
  const qtaft::FamilyConfig config =
      qtaft::family_config_from_json(read_file(opts.config_path));
  qtaft::BuildOutcome outcome;
  switch (config.family) {
    case qtaft::FamilyKind::rotation:
      outcome = qtaft::build_rotation(config.rotation);
      break;
    case qtaft::FamilyKind::reflection:
      outcome = qtaft::build_reflection(config.reflection);
      break;
    case qtaft::FamilyKind::exceptional:
      outcome = qtaft::build_exceptional_half_turn(config.exceptional);
      break;
  }
  print_report(outcome.report);
  if (!outcome.ok()) {
    if (!opts.out_path.empty())
      write_file(opts.out_path, qtaft::report_to_json(outcome.report));
    return kExitCheckFailed;
  }
  const std::string spec_json = qtaft::action_spec_to_json(*outcome.spec);
  if (!opts.out_path.empty()) {
    write_file(opts.out_path, spec_json);
  } else {
    std::cout << spec_json << "\n";
  }
  return kExitOk;
}

int run_enumerate(qtaft::EnumerationGrid grid, const std::string& kind_text,
                  const std::vector<int>& d_values, const CommonOptions& opts) {
  if (!opts.config_path.empty()) {
    // Config file may carry grid fields not expressible as flags.
    const auto text = read_file(opts.config_path);
    auto j = nlohmann::json::parse(text);
    if (j.contains("n")) grid.n = j.at("n").get<int>();
    if (j.contains("r")) grid.r = j.at("r").get<long>();
    if (j.contains("m")) grid.m = j.at("m").get<long>();
    if (j.contains("kind")) {
      const auto kind = qtaft::kind_from_string(j.at("kind").get<std::string>());
      if (!kind) throw qtaft::parse_error("kind: expected 'rotation' or 'reflection'");
      grid.kind = *kind;
    }
    if (j.contains("grid_order")) grid.mu_grid_order = j.at("grid_order").get<long>();
    if (j.contains("budget")) grid.budget = j.at("budget").get<long>();
    if (j.contains("verify_degree")) grid.verify_degree = j.at("verify_degree").get<int>();
    if (j.contains("L")) grid.field_order = j.at("L").get<long>();
    if (j.contains("d_values"))
      grid.d_values = j.at("d_values").get<std::vector<int>>();
    if (j.contains("gamma_seeds")) {
      grid.gamma_seeds.clear();
      for (const auto& entry : j.at("gamma_seeds"))
        grid.gamma_seeds.push_back(qtaft::cyc_from_json_text(entry.dump()));
    }
    if (j.contains("sigma_seeds")) {
      grid.sigma_seeds.clear();
      for (const auto& entry : j.at("sigma_seeds"))
        grid.sigma_seeds.push_back(qtaft::cyc_from_json_text(entry.dump()));
    }
  }
  if (!kind_text.empty()) {
    const auto kind = qtaft::kind_from_string(kind_text);
    if (!kind) throw qtaft::parse_error("--kind: expected 'rotation' or 'reflection'");
    grid.kind = *kind;
  }
  if (!d_values.empty()) grid.d_values = d_values;
  if (opts.max_degree > 0) grid.verify_degree = opts.max_degree;

  const qtaft::EnumerationOutcome outcome = qtaft::enumerate_actions(grid);
  std::cout << outcome.summary();
  if (!outcome.violations.entries.empty()) {
    std::cout << "violations:\n" << outcome.violations.to_string();
  }
  if (!opts.out_path.empty()) {
    nlohmann::ordered_json specs = nlohmann::ordered_json::array();
    for (const auto& spec : outcome.valid)
      specs.push_back(nlohmann::ordered_json::parse(qtaft::action_spec_to_json(spec)));
    write_file(opts.out_path, specs.dump(2));
  }
  return outcome.violations.entries.empty() ? kExitOk : kExitCheckFailed;
}

int run_invariants(const CommonOptions& opts) {
  const qtaft::ActionSpec spec = qtaft::action_spec_from_json(read_file(opts.config_path));
  const int degree = opts.max_degree > 0 ? opts.max_degree : 2 * spec.n;

  const qtaft::InvariantCenterReport report =
      qtaft::compare_invariants_center(spec, degree);
  std::cout << report.to_string();

  const qtaft::InvariantBasis basis = qtaft::invariant_basis(spec, degree);
  const qtaft::ConstraintReport predicted =
      qtaft::compare_invariants_predicted(spec, basis);
  print_report(predicted);
  for (int ell = 0; ell <= degree; ++ell) {
    std::cout << "invariant basis, degree " << ell << ":\n";
    for (const auto& element : basis.per_degree[ell])
      std::cout << "  " << element.to_string() << "\n";
  }
  if (!opts.out_path.empty()) {
    qtaft::ConstraintReport combined = report.to_report();
    combined.merge(predicted);
    write_file(opts.out_path, qtaft::report_to_json(combined));
  }
  const bool regime_ok = !report.closed_form_regime ||
                         (report.invariants_equal_center() && report.generators_span);
  return (regime_ok && predicted.all_passed()) ? kExitOk : kExitCheckFailed;
}

int run_center(int n, const CommonOptions& opts) {
  const int degree = opts.max_degree > 0 ? opts.max_degree : 2 * n;
  const auto center = qtaft::center_basis(n, degree);
  std::cout << "center dimensions by degree: [";
  for (int ell = 0; ell <= degree; ++ell)
    std::cout << center[ell].size() << (ell < degree ? ", " : "");
  std::cout << "]\n";
  std::ostringstream dump;
  for (int ell = 0; ell <= degree; ++ell) {
    dump << "degree " << ell << ":\n";
    for (const auto& element : center[ell]) dump << "  " << element.to_string() << "\n";
  }
  std::cout << dump.str();
  if (!opts.out_path.empty()) write_file(opts.out_path, dump.str());
  return kExitOk;
}

int run_selftest_command(std::uint64_t seed, const CommonOptions& opts) {
  const auto results = qtaft::run_selftest(seed, &std::cout);
  bool all = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    j.push_back({{"index", r.index},
                 {"name", r.name},
                 {"passed", r.passed},
                 {"detail", r.detail}});
  }
  if (!opts.out_path.empty()) write_file(opts.out_path, j.dump(2));
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact engine for generalized Taft algebra actions on preprojective "
      "algebras of cyclic quivers"};
  app.require_subcommand(1);

  CommonOptions verify_opts, classify_opts, enumerate_opts, invariants_opts, center_opts,
      selftest_opts;

  auto* verify = app.add_subcommand("verify", "Verify an action spec file");
  verify->add_option("--config", verify_opts.config_path, "action spec JSON")->required();
  verify->add_option("--max-degree", verify_opts.max_degree, "operator check degree");
  verify->add_option("--out", verify_opts.out_path, "report output path");

  auto* classify = app.add_subcommand("classify", "Build an action from family parameters");
  classify->add_option("--config", classify_opts.config_path, "family parameter JSON")
      ->required();
  classify->add_option("--out", classify_opts.out_path, "spec output path");

  auto* enumerate = app.add_subcommand("enumerate", "Grid-search raw parameter tables");
  qtaft::EnumerationGrid grid;
  std::string enum_kind;
  std::vector<int> enum_d;
  enumerate->add_option("--config", enumerate_opts.config_path, "grid config JSON");
  enumerate->add_option("--n", grid.n, "number of vertices");
  enumerate->add_option("--r", grid.r, "nilpotency order r");
  enumerate->add_option("--m", grid.m, "group order m");
  enumerate->add_option("--kind", enum_kind, "rotation or reflection");
  enumerate->add_option("--d", enum_d, "restrict to these d values");
  enumerate->add_option("--grid-order", grid.mu_grid_order,
                        "mu entries range over roots of unity of this order");
  enumerate->add_option("--budget", grid.budget, "maximum number of grid points");
  enumerate->add_option("--L", grid.field_order, "working cyclotomic order");
  enumerate->add_option("--max-degree", enumerate_opts.max_degree,
                        "operator verification degree");
  enumerate->add_option("--out", enumerate_opts.out_path, "valid spec dump path");

  auto* invariants = app.add_subcommand("invariants",
                                        "Invariant ring vs center, degree by degree");
  invariants->add_option("--config", invariants_opts.config_path, "action spec JSON")
      ->required();
  invariants->add_option("--max-degree", invariants_opts.max_degree, "degree bound");
  invariants->add_option("--out", invariants_opts.out_path, "report output path");

  auto* center = app.add_subcommand("center", "Center of the preprojective algebra");
  int center_n = 3;
  center->add_option("--n", center_n, "number of vertices")->required();
  center->add_option("--max-degree", center_opts.max_degree, "degree bound");
  center->add_option("--out", center_opts.out_path, "basis output path");

  auto* selftest = app.add_subcommand("selftest", "Run the full property suite");
  std::uint64_t seed = 20240801;
  selftest->add_option("--seed", seed, "seed for the randomized checks");
  selftest->add_option("--out", selftest_opts.out_path, "result output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_opts);
    if (classify->parsed()) return run_classify(classify_opts);
    if (enumerate->parsed())
      return run_enumerate(grid, enum_kind, enum_d, enumerate_opts);
    if (invariants->parsed()) return run_invariants(invariants_opts);
    if (center->parsed()) return run_center(center_n, center_opts);
    if (selftest->parsed()) return run_selftest_command(seed, selftest_opts);
  } catch (const qtaft::parse_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qtaft::budget_exceeded& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qtaft::square_root_not_in_field& e) {
    std::cerr << "field error: " << e.what()
              << " (a larger working order L may be needed)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
