// qschur: products, expansions and verification suites from the command line.
//
// JSON goes to stdout; a one-line summary and the wall time go to stderr.
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error or bad
// domain, 3 dimension mismatch, 4 resource cap.

#include "qschur/errors.hpp"
#include "qschur/json_io.hpp"
#include "qschur/suites.hpp"
#include "qschur/uqgl.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qschur;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kDimension = 3, kResource = 4 };

std::string load_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// An operand of `multiply`: whichever of the three element forms it parses as.
struct Operand {
  enum Kind { schur, symbolic, truncated } kind;
  SchurElement s;
  SymbolicElement sym;
  TruncatedElement t;
  int n() const { return kind == schur ? s.n() : kind == symbolic ? sym.n() : t.n(); }
};

Operand parse_operand(const std::string& text, int n_hint) {
  const Json j = parse_json(text);
  if (j.is_array()) return {Operand::symbolic, {}, symbolic_from_json(j, n_hint), {}};
  if (j.is_object() && j.contains("components")) return {Operand::truncated, {}, {}, truncated_from_json(j)};
  if (j.is_object() && j.contains("terms")) return {Operand::schur, schur_from_json(j), {}, {}};
  throw ParseError("operand is not a Schur, symbolic or truncated element");
}

/// x * y with the closed-form rules; every key of x must be a generator shape
/// 0(gamma, mu), (m E_{h,h+1})(0) or (m E_{h+1,h})(0).
SymbolicElement formula_product(const SymbolicElement& x, const SymbolicElement& y) {
  SymbolicElement out(y.n());
  for (const auto& [k, c] : x.terms()) {
    const int n = k.A.n();
    const bool zero_torus = std::all_of(k.delta.begin(), k.delta.end(), [](int d) { return d == 0; }) &&
                            std::all_of(k.lam.begin(), k.lam.end(), [](int d) { return d == 0; });
    int nonzero = 0, h = -1, m = 0;
    bool raising = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (k.A(i, j) != 0) {
          ++nonzero;
          raising = j == i + 1;
          h = raising ? i : j;
          m = k.A(i, j);
          if (std::abs(i - j) != 1) nonzero = 2;
        }
    SymbolicElement part(y.n());
    if (nonzero == 0)
      part = torus_times(k.delta, k.lam, y);
    else if (nonzero == 1 && zero_torus)
      part = raising ? raise_times(m, h, y) : lower_times(m, h, y);
    else
      throw DomainError("formula mode needs left keys of the form 0(gamma, mu), (mE_{h,h+1})(0) or (mE_{h+1,h})(0)");
    out += c * part;
  }
  return out;
}

TruncatedElement as_truncated(const Operand& x, int r_max) {
  if (x.kind == Operand::truncated) return x.t;
  return realize(x.sym, r_max);
}

int cmd_multiply(const std::string& left_text, const std::string& right_text, const std::string& mode,
                 std::optional<int> n_opt, int r_max, int oracle_cap) {
  const int n_hint = n_opt.value_or(2);
  const Operand x = parse_operand(load_text(left_text), n_hint);
  const Operand y = parse_operand(load_text(right_text), n_hint);
  if (x.n() != y.n()) throw DimensionError("operands have different n");
  if (n_opt && *n_opt != x.n()) throw DimensionError("operands do not have the requested n");
  const ProductOptions formula_opts{ProductRoute::automatic, oracle_cap};
  const ProductOptions oracle_opts{ProductRoute::oracle, oracle_cap};
  const bool want_formula = mode != "oracle", want_oracle = mode != "formula";
  Json out = {{"mode", mode}};
  bool equal = true;

  if (x.kind == Operand::schur || y.kind == Operand::schur) {
    if (x.kind != y.kind) throw ParseError("a Schur element can only be multiplied by a Schur element");
    if (x.s.degree() != y.s.degree()) throw DimensionError("operands have different r");
    std::optional<SchurElement> f, o;
    if (want_formula) out["formula"] = to_json(*(f = general_product(x.s, y.s, formula_opts)));
    if (want_oracle) out["oracle"] = to_json(*(o = general_product(x.s, y.s, oracle_opts)));
    if (f && o) equal = *f == *o;
  } else if (x.kind == Operand::symbolic && y.kind == Operand::symbolic) {
    std::optional<SymbolicElement> f;
    if (want_formula) out["formula"] = to_json(*(f = formula_product(x.sym, y.sym)));
    if (want_oracle) {
      const auto o = multiply(realize(x.sym, r_max), realize(y.sym, r_max), oracle_opts);
      out["r_max"] = r_max;
      out["oracle"] = to_json(o);
      if (f) equal = realize(*f, r_max) == o;
    }
  } else {
    const int r = x.kind == Operand::truncated ? x.t.r_max() : y.t.r_max();
    const auto a = as_truncated(x, r), b = as_truncated(y, r);
    if (a.r_max() != b.r_max()) throw DimensionError("operands have different r_max");
    std::optional<TruncatedElement> f, o;
    if (want_formula) out["formula"] = to_json(*(f = multiply(a, b, formula_opts)));
    if (want_oracle) out["oracle"] = to_json(*(o = multiply(a, b, oracle_opts)));
    if (f && o) equal = *f == *o;
  }
  if (mode == "both") out["equal"] = equal;
  std::cout << out.dump() << "\n";
  if (mode == "both") std::cerr << (equal ? "formula and oracle agree" : "formula and oracle DISAGREE") << "\n";
  return equal ? kPass : kFail;
}

int cmd_expand(const std::string& word_text, int n, std::optional<int> r_max) {
  const auto word = parse_word(word_text, n);
  const auto sym = delta_reduce(zeta_symbolic(word, n));
  Json out = {{"word", to_string(word)}, {"n", n}, {"symbolic", to_json(sym)}};
  if (r_max) out["truncated"] = to_json(realize(sym, *r_max));
  std::cout << out.dump() << "\n";
  return kPass;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg) {
  const auto rep = run_suite(suite, cfg);
  std::cout << rep.to_json().dump(2) << "\n";
  std::cerr << suite << ": " << rep.instances << " instances, " << rep.failure_count << " failures, "
            << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return rep.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Schur algebra products, expansions and verification suites"};
  app.require_subcommand(1);

  std::optional<int> n, r_max, l, bound;
  int oracle_cap = kDefaultOracleCap;
  std::uint64_t seed = 1;

  auto* mul = app.add_subcommand("multiply", "Product of two elements");
  std::string left, right, mode = "formula";
  mul->add_option("--left", left, "Left operand (JSON text or @file)")->required();
  mul->add_option("--right", right, "Right operand (JSON text or @file)")->required();
  mul->add_option("--mode", mode, "formula, oracle or both")->check(CLI::IsMember({"formula", "oracle", "both"}));
  mul->add_option("--n", n, "Expected rank");
  int mul_rmax = 4;
  mul->add_option("--rmax", mul_rmax, "Truncation for symbolic operands in oracle mode");
  mul->add_option("--oracle-cap", oracle_cap, "Largest r for the Hecke oracle");

  auto* exp = app.add_subcommand("expand", "Image of a generator word");
  std::string word;
  int exp_n = 2;
  exp->add_option("word", word, "Word such as \"E1^(2) K2^-1 [K1;2] F1\"")->required();
  exp->add_option("--n", exp_n, "Rank");
  exp->add_option("--rmax", r_max, "Also emit the truncated image up to this r");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteConfig cfg;
  ver->add_option("suite", suite, "Suite name")->required();
  ver->add_option("--n", n, "Rank");
  ver->add_option("--rmax", r_max, "Truncation");
  ver->add_option("--oracle-cap", oracle_cap, "Largest r for the Hecke oracle");
  ver->add_option("--seed", seed, "Seed for the random extension");
  ver->add_option("--l", l, "Order of the root of unity");
  ver->add_option("--bound", bound, "Entry bound of the exhaustive core");
  ver->add_option("--random", cfg.random_count, "Number of random instances");
  ver->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one formula coefficient (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (*mul) {
      code = cmd_multiply(left, right, mode, n, mul_rmax, oracle_cap);
    } else if (*exp) {
      code = cmd_expand(word, exp_n, r_max);
    } else {
      cfg.n = n;
      cfg.r_max = r_max;
      cfg.l = l;
      cfg.bound = bound;
      cfg.oracle_cap = oracle_cap;
      cfg.seed = seed;
      code = cmd_verify(suite, cfg);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall time: " << secs << " s\n";
  return code;
}
