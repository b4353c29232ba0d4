// Acceptance harness: one PASS/FAIL line per criterion on stdout, failure
// details on stderr.  `acceptance --criterion N` runs a single criterion;
// without arguments all eight run in order.

#include "qschur/suites.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>

using namespace qschur;

namespace {

struct Outcome {
  bool passed;
  std::string summary;
};

SuiteConfig config(std::optional<int> n, std::optional<int> r_max, std::optional<int> bound, int random_count = 200) {
  SuiteConfig cfg;
  cfg.n = n;
  cfg.r_max = r_max;
  cfg.bound = bound;
  cfg.random_count = random_count;
  return cfg;
}

std::string counts(const SuiteReport& rep) {
  return std::to_string(rep.instances) + " instances, " + std::to_string(rep.failure_count) + " failures";
}

void dump_failures(const SuiteReport& rep) {
  if (rep.passed()) return;
  std::cerr << rep.suite << " failures (first " << rep.failures.size() << "):\n" << rep.failures.dump(2) << "\n";
  std::cerr << rep.suite << " details:\n" << rep.details.dump(2) << "\n";
}

Outcome single(const char* what, const SuiteReport& rep) {
  dump_failures(rep);
  return {rep.passed(), std::string(what) + ": " + counts(rep)};
}

Outcome binomials() { return single("binomial identities", verify_binomials(config({}, {}, 4))); }

Outcome blm_formulas() {
  return single("raising and lowering formulas vs Hecke oracle, n in {2,3}, r <= 4",
                verify_blm_formulas(config({}, 4, {})));
}

Outcome new_formulas() {
  const auto f1 = verify_formula1(config({}, 4, 2, 100));
  const auto f2 = verify_formula2(config({}, 4, 2, 100));
  dump_failures(f1);
  dump_failures(f2);
  return {f1.passed() && f2.passed(),
          "torus rule " + counts(f1) + "; divided-power rules " + counts(f2) + "; n in {2,3}, r_max = 4"};
}

Outcome relations() {
  return single("defining relations (a)-(g), n in {2,3}, r <= 5", verify_relations(config({}, 5, {})));
}

Outcome triangular() {
  return single("triangular relation, sigma(A) <= 3, n in {2,3}", verify_triangular(config({}, 4, 3)));
}

Outcome realization() {
  const auto rep = verify_realization(config(2, 6, 3));
  dump_failures(rep);
  const auto& v = rep.details.at("verdict");
  std::string s = "realization family sigma(A)+sigma(lambda) <= 3, n = 2, r_max = 6: " +
                  std::to_string(v.at("members").get<int>()) + " members, " +
                  std::to_string(v.at("coordinates").get<int>()) + " coordinates";
  if (!rep.passed()) {
    s += ", dependent (kernel reported on stderr)";
    if (rep.details.contains("first_independent_r_max"))
      s += ", first independent at r_max = " + std::to_string(rep.details.at("first_independent_r_max").get<int>());
  }
  s += ". Truncation witness only, not a proof of injectivity";
  return {rep.passed(), s};
}

Outcome specialization() {
  SuiteConfig cfg = config({}, 5, 2);
  return single("specialization l in {1,3}, n in {2,3}: K_i^l trivial and B_k family independent at r_max = 5",
                verify_specialization(cfg));
}

Outcome basis_count() {
  return single("basis counts n <= 3, r <= 4", verify_basis_count(config(3, 4, {})));
}

const std::vector<std::function<Outcome()>>& criteria() {
  static const std::vector<std::function<Outcome()>> all{binomials,  blm_formulas,  new_formulas,    relations,
                                                         triangular, realization,   specialization,  basis_count};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::stoi(argv[++i]);
  const int count = static_cast<int>(criteria().size());
  if (only < 0 || only > count) {
    std::cerr << "criterion must be between 1 and " << count << "\n";
    return 2;
  }
  bool all_passed = true;
  for (int k = 1; k <= count; ++k) {
    if (only != 0 && k != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
      out = criteria()[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << k << ": " << (out.passed ? "PASS" : "FAIL") << " | " << out.summary << " ["
              << secs << " s]" << std::endl;
    all_passed = all_passed && out.passed;
  }
  return all_passed ? 0 : 1;
}
