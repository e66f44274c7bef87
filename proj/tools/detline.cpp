#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "detline/suites.hpp"

using namespace detline;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void print_report_text(const SuiteReport& r) {
  std::cout << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << "  trials="
            << r.trials << " failures=" << r.failures << "  ("
            << r.wall_ms << " ms)\n";
  if (r.failures > 0)
    std::cout << "  first counterexample: " << r.first_counterexample.dump()
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detline: exact determinant-line arithmetic over Q"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t trials = 100, max_dim = 5;
  long entry_bound = 3;
  std::string convention_path;
  bool as_json = false;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trials", trials, "trials per suite");
  verify->add_option("--max-dim", max_dim, "dimension cap");
  verify->add_option("--entry-bound", entry_bound, "entry magnitude bound");
  verify->add_option("--convention", convention_path,
                     "convention system JSON file");
  verify->add_flag("--json", as_json, "emit the report as JSON");

  // demo triple
  auto* demo = app.add_subcommand("demo", "evaluate a canonical map");
  auto* demo_triple = demo->add_subcommand(
      "triple", "apply the exact-triple isomorphism to given elements");
  std::string triple_path, element_path;
  demo_triple->add_option("--in", triple_path, "exact triple JSON")->required();
  demo_triple
      ->add_option("--element", element_path,
                   "JSON {\"prime\": element, \"dprime\": element}")
      ->required();

  // translate
  auto* translate =
      app.add_subcommand("translate", "sign factor between conventions");
  std::string from = "baseline", to;
  std::string delta_path;
  long t_rank = -1, t_n = 0, t_nprime = 0, t_cdim = 0, t_ind = 0;
  translate->add_option("--from", from, "source convention (baseline)");
  translate->add_option("--to", to, "km | ms | salamon-seidel")->required();
  translate->add_option("--delta", delta_path,
                        "km: JSON matrix of the connecting map");
  translate->add_option("--rank", t_rank, "km: rank of the connecting map");
  translate->add_option("--n", t_n, "ms/salamon-seidel: stabilization size");
  translate->add_option("--nprime", t_nprime, "ms: second stabilization size");
  translate->add_option("--cdim", t_cdim, "cokernel dimension");
  translate->add_option("--ind", t_ind, "salamon-seidel: operator index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.max_dim = max_dim;
      cfg.entry_bound = entry_bound;
      ConventionSystem conv;
      bool has_conv = !convention_path.empty();
      if (has_conv) conv = convention_from_json(load_json(convention_path));
      std::vector<SuiteReport> reports;
      if (suite == "all") {
        reports = run_all_suites(cfg, has_conv ? &conv : nullptr);
      } else {
        reports.push_back(run_suite(suite, cfg, has_conv ? &conv : nullptr));
      }
      std::size_t failures = 0;
      if (as_json) {
        json out = json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : reports) print_report_text(r);
      }
      for (const auto& r : reports) failures += r.failures;
      return failures == 0 ? 0 : 1;
    }

    if (*demo_triple) {
      ExactTriple t = triple_from_json(load_json(triple_path));
      if (auto bad = validate_triple(t)) {
        std::cerr << "invalid triple: " << *bad << "\n";
        return 2;
      }
      json e = load_json(element_path);
      DetLineElement sp = det_element_from_json(e.at("prime"));
      DetLineElement spp = det_element_from_json(e.at("dprime"));
      std::cout << to_json(psi(t, sp, spp)).dump(2) << "\n";
      return 0;
    }

    if (*translate) {
      if (from != "baseline") {
        std::cerr << "only --from baseline is supported\n";
        return 2;
      }
      int exponent;
      if (to == "km") {
        if (!delta_path.empty()) {
          FinOperator delta(matrix_from_json(load_json(delta_path)));
          exponent = km_reversal_exponent(delta);
        } else if (t_rank >= 0) {
          exponent = static_cast<int>(t_rank % 2);
        } else {
          std::cerr << "km needs --delta or --rank\n";
          return 2;
        }
      } else if (to == "ms") {
        exponent = ms_overlap_exponent(t_n, t_nprime, t_cdim);
      } else if (to == "salamon-seidel") {
        exponent = salamon_exponent(t_n, t_ind, t_cdim);
      } else {
        std::cerr << "unknown target convention: " << to << "\n";
        return 2;
      }
      std::cout << (exponent % 2 == 0 ? "+1" : "-1") << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
