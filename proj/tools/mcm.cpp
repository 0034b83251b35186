// Command-line front end: expression evaluation, canonical forms, order and
// congruence queries, equation solving, random elements and the seeded
// property suites.
//
// Boolean queries answer on stdout ("true"/"false") and through the exit
// code (0 true, 1 false, 2 error) so they compose in shell pipelines.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcm/congruence.hpp"
#include "mcm/dsl.hpp"
#include "mcm/element.hpp"
#include "mcm/equations.hpp"
#include "mcm/json_io.hpp"
#include "mcm/oracle.hpp"
#include "mcm/quotient.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240801;

std::uint64_t env_seed() {
  if (const char* s = std::getenv("MCM_SEED")) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

mcm::Element eval_arg(const std::string& text) { return mcm::eval(mcm::parse(text)); }

mcm::Element next_random(std::uint64_t& seed, const mcm::RandomParams& params) {
  for (;;) {
    try {
      return mcm::random_element(seed++, params);
    } catch (const mcm::GenerationExhausted&) {
    }
  }
}

struct SuiteResult {
  int checks = 0;
  int failures = 0;
};

using SuiteFn = SuiteResult (*)(std::uint64_t, int);

SuiteResult suite_representation(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{6, 3, 4};
  for (int k = 0; k < samples; ++k) {
    const mcm::Element e = next_random(seed, params);
    ++r.checks;
    if (!mcm::bf_check(mcm::truncate(e, mcm::Window{18})).ok()) ++r.failures;
  }
  return r;
}

SuiteResult suite_composition(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{5, 2, 3};
  for (int k = 0; k < samples; ++k) {
    const mcm::Element a = next_random(seed, params);
    const mcm::Element b = next_random(seed, params);
    const mcm::Element c = next_random(seed, params);
    ++r.checks;
    if (!mcm::equals(mcm::compose(mcm::compose(a, b), c),
                     mcm::compose(a, mcm::compose(b, c))))
      ++r.failures;
    ++r.checks;
    const mcm::WindowedPartialMap lhs = mcm::truncate(mcm::compose(a, b), mcm::Window{14});
    const mcm::WindowedPartialMap rhs = mcm::bf_compose(mcm::truncate(a, mcm::Window{14}),
                                                        mcm::truncate(b, mcm::Window{14}));
    if (lhs.entries != rhs.entries) ++r.failures;
  }
  return r;
}

SuiteResult suite_order(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{5, 2, 3};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const mcm::Element b = next_random(seed, params);
    std::set<mcm::Point> holes;
    for (int h = 0; h < 2; ++h)
      holes.insert(mcm::Point{1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9)});
    const mcm::Element a = mcm::restrict(b, holes);
    ++r.checks;
    if (!mcm::natural_leq(a, b)) {
      ++r.failures;
      continue;
    }
    auto eps = mcm::natural_leq_witness(a, b);
    ++r.checks;
    if (!eps || !mcm::equals(mcm::compose(b, *eps), a)) ++r.failures;
  }
  return r;
}

SuiteResult suite_sigma(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{5, 2, 3};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const mcm::Element e = next_random(seed, params);
    std::set<mcm::Point> h1, h2;
    for (int h = 0; h < 2; ++h) {
      h1.insert(mcm::Point{1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 8)});
      h2.insert(mcm::Point{1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 8)});
    }
    const mcm::Element a = mcm::restrict(e, h1);
    const mcm::Element b = mcm::restrict(e, h2);
    ++r.checks;
    if (!mcm::sigma_equiv(a, b)) {
      ++r.failures;
      continue;
    }
    auto w = mcm::sigma_witness(a, b);
    ++r.checks;
    if (!w) ++r.failures;
    const mcm::Element g = next_random(seed, params);
    ++r.checks;
    if (!mcm::sigma_equiv(mcm::compose(a, g), mcm::compose(b, g)) ||
        !mcm::sigma_equiv(mcm::compose(g, a), mcm::compose(g, b)))
      ++r.failures;
  }
  return r;
}

SuiteResult suite_words(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{5, 2, 3};
  for (int k = 0; k < samples; ++k) {
    mcm::Element a = next_random(seed, params);
    mcm::Element b = next_random(seed, params);
    a.orientation = 0;
    b.orientation = 0;
    ++r.checks;
    if (!(mcm::sigma_class_word(mcm::compose(a, b)) ==
          mcm::word_mul(mcm::sigma_class_word(a), mcm::sigma_class_word(b))))
      ++r.failures;
    const mcm::Element c = next_random(seed, params);
    const mcm::Element d = next_random(seed, params);
    ++r.checks;
    if (!(mcm::sigma_class(mcm::compose(c, d)) ==
          mcm::semidirect_mul(mcm::sigma_class(c), mcm::sigma_class(d))))
      ++r.failures;
  }
  return r;
}

SuiteResult suite_equations(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{3, 1, 2};
  for (int k = 0; k < samples; ++k) {
    const mcm::Element a = next_random(seed, params);
    const mcm::Element x = next_random(seed, params);
    const mcm::Element b = mcm::compose(a, x);
    ++r.checks;
    bool hit = false;
    for (const mcm::Element& sol : mcm::solve_right(a, b)) {
      if (!mcm::equals(mcm::compose(a, sol), b)) {
        ++r.failures;
        hit = true;
        break;
      }
      if (mcm::equals(sol, x)) hit = true;
    }
    if (!hit) ++r.failures;
  }
  return r;
}

SuiteResult suite_dsl(std::uint64_t seed, int samples) {
  SuiteResult r;
  mcm::RandomParams params{5, 2, 3};
  for (int k = 0; k < samples; ++k) {
    const mcm::Element e = next_random(seed, params);
    ++r.checks;
    try {
      if (!mcm::equals(mcm::eval(mcm::parse(mcm::print_expression(e))), e)) ++r.failures;
    } catch (const std::exception&) {
      ++r.failures;
    }
  }
  return r;
}

int run_verify(const std::string& which, std::uint64_t seed, int samples) {
  static const std::map<std::string, SuiteFn> suites = {
      {"representation", &suite_representation},
      {"composition", &suite_composition},
      {"order", &suite_order},
      {"sigma", &suite_sigma},
      {"words", &suite_words},
      {"equations", &suite_equations},
      {"dsl", &suite_dsl},
  };
  int failed = 0;
  for (const auto& [name, fn] : suites) {
    if (!which.empty() && which != name) continue;
    const SuiteResult r = fn(seed, samples);
    std::cout << (r.failures == 0 ? "[PASS] " : "[FAIL] ") << name << " (" << r.checks
              << " checks, " << r.failures << " failures)\n";
    if (r.failures != 0) ++failed;
  }
  if (!which.empty() && !suites.count(which)) {
    std::cerr << "unknown suite: " << which << "\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the monoid of monotone injective "
               "cofinite partial selfmaps of the quarter grid"};
  app.require_subcommand(1);

  std::string expr_a, expr_b, side = "right", suite;
  int apply_i = 0, apply_j = 0;
  bool has_apply = false;
  std::uint64_t seed = env_seed();
  int samples = 200;
  int max_window = 4, max_shift = 2, holes = 3;
  std::optional<int> margin;

  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  cmd_eval->add_option("expr", expr_a)->required();
  auto* opt_apply = cmd_eval->add_option(
      "--apply", [&](const std::vector<std::string>& vals) {
        const auto comma = vals[0].find(',');
        if (comma == std::string::npos) return false;
        apply_i = std::stoi(vals[0].substr(0, comma));
        apply_j = std::stoi(vals[0].substr(comma + 1));
        has_apply = true;
        return true;
      },
      "apply to the point i,j");
  (void)opt_apply;

  auto* cmd_norm = app.add_subcommand("normalize", "print the canonical JSON form");
  cmd_norm->add_option("expr", expr_a)->required();

  auto* cmd_eq = app.add_subcommand("eq", "semantic equality of two expressions");
  cmd_eq->add_option("a", expr_a)->required();
  cmd_eq->add_option("b", expr_b)->required();

  auto* cmd_leq = app.add_subcommand("leq", "natural partial order test");
  cmd_leq->add_option("a", expr_a)->required();
  cmd_leq->add_option("b", expr_b)->required();

  auto* cmd_sigma = app.add_subcommand("sigma-eq", "cofinite-agreement congruence test");
  cmd_sigma->add_option("a", expr_a)->required();
  cmd_sigma->add_option("b", expr_b)->required();

  auto* cmd_canon = app.add_subcommand("canon", "class in the twisted word monoid");
  cmd_canon->add_option("expr", expr_a)->required();

  auto* cmd_solve = app.add_subcommand("solve", "all solutions of a one-sided equation");
  cmd_solve->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  cmd_solve->add_option("--margin", margin, "override the search window (testing)");
  cmd_solve->add_option("a", expr_a)->required();
  cmd_solve->add_option("b", expr_b)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run the seeded property suites");
  cmd_verify->add_option("--suite", suite);
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--samples", samples)->check(CLI::PositiveNumber);

  auto* cmd_random = app.add_subcommand("random", "emit a random element");
  cmd_random->add_option("--seed", seed);
  cmd_random->add_option("--max-window", max_window)->check(CLI::PositiveNumber);
  cmd_random->add_option("--max-shift", max_shift);
  cmd_random->add_option("--holes", holes);

  try {
    app.parse(argc, argv);

    if (cmd_eval->parsed()) {
      const mcm::Element e = eval_arg(expr_a);
      if (has_apply) {
        const auto y = mcm::apply(e, mcm::Point{apply_i, apply_j});
        if (y)
          std::cout << "[" << y->i << "," << y->j << "]\n";
        else
          std::cout << "undefined\n";
      } else {
        std::cout << mcm::element_to_json(mcm::normalize(e)).dump() << "\n";
      }
      return 0;
    }
    if (cmd_norm->parsed()) {
      std::cout << mcm::element_to_json(mcm::normalize(eval_arg(expr_a))).dump() << "\n";
      return 0;
    }
    if (cmd_eq->parsed() || cmd_leq->parsed() || cmd_sigma->parsed()) {
      const mcm::Element a = eval_arg(expr_a);
      const mcm::Element b = eval_arg(expr_b);
      bool result = false;
      if (cmd_eq->parsed()) result = mcm::equals(a, b);
      if (cmd_leq->parsed()) result = mcm::natural_leq(a, b);
      if (cmd_sigma->parsed()) result = mcm::sigma_equiv(a, b);
      std::cout << (result ? "true" : "false") << "\n";
      return result ? 0 : 1;
    }
    if (cmd_canon->parsed()) {
      std::cout << mcm::semidirect_to_json(mcm::sigma_class(eval_arg(expr_a))).dump() << "\n";
      return 0;
    }
    if (cmd_solve->parsed()) {
      const mcm::Element a = eval_arg(expr_a);
      const mcm::Element b = eval_arg(expr_b);
      const auto sols = side == "right" ? mcm::solve_right(a, b, margin)
                                        : mcm::solve_left(a, b, margin);
      for (const mcm::Element& s : sols)
        std::cout << mcm::element_to_json(s).dump() << "\n";
      return 0;
    }
    if (cmd_verify->parsed()) return run_verify(suite, seed, samples);
    if (cmd_random->parsed()) {
      std::uint64_t s = seed;
      const mcm::Element e =
          next_random(s, mcm::RandomParams{max_window, max_shift, holes});
      std::cout << mcm::element_to_json(e).dump() << "\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
