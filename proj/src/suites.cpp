#include "qschur/suites.hpp"

#include "qschur/errors.hpp"
#include "qschur/parallel.hpp"
#include "qschur/uqgl.hpp"

#include <functional>
#include <map>
#include <random>

namespace qschur {

namespace {

constexpr std::size_t kMaxRecordedFailures = 20;

const char* const kTruncationNote =
    "Independence at a finite r_max is necessary but not sufficient for independence in the full "
    "product over all r; a pass certifies that no counterexample exists at this scale.";

std::vector<int> ranks_of(const SuiteConfig& cfg) {
  if (cfg.n) {
    if (*cfg.n < 2) throw DomainError("n must be at least 2");
    return {*cfg.n};
  }
  return {2, 3};
}

int value_or(const std::optional<int>& x, int fallback, const char* name) {
  const int v = x.value_or(fallback);
  if (v < 0) throw DomainError(std::string(name) + " must be nonnegative");
  return v;
}

/// Seeded generator with a portable bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  IntVector vector(int n, int lo, int hi) {
    IntVector x(static_cast<std::size_t>(n));
    for (auto& e : x) e = uniform(lo, hi);
    return x;
  }
  /// Zero-diagonal matrix with entry sum s, entries at most cap.
  ThetaMatrix theta_pm(int n, int s, int cap) {
    ThetaMatrix A(n);
    s = std::min(s, cap * n * (n - 1));
    while (s > 0) {
      const int i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i == j || A(i, j) >= cap) continue;
      ++A(i, j);
      --s;
    }
    return A;
  }
  LaurentPoly laurent() {
    LaurentPoly p;
    const int terms = uniform(1, 3);
    for (int k = 0; k < terms; ++k) p.add_monomial(uniform(-3, 3), uniform(-3, 3));
    return p.is_zero() ? LaurentPoly(1) : p;
  }

 private:
  std::mt19937_64 g_;
};

Json key_json(const BlmKey& k) {
  return {{"A", to_json(k.A)}, {"delta", to_json(k.delta)}, {"lambda", to_json(k.lam)}};
}

/// First component where a and b differ, or null.
Json difference(const TruncatedElement& expected, const TruncatedElement& got) {
  for (int r = 0; r <= expected.r_max(); ++r)
    if (!(expected.component(r) == got.component(r)))
      return {{"r", r}, {"expected", to_json(expected.component(r))}, {"got", to_json(got.component(r))}};
  return nullptr;
}

std::vector<BlmKey> keys_within(int n, int max_sigma_A, int max_lam, int lo_delta, int hi_delta) {
  std::vector<BlmKey> out;
  for (int s = 0; s <= max_sigma_A; ++s)
    for (const auto& A : enumerate_theta_pm(n, s))
      for (const auto& lam : enumerate_box(IntVector(static_cast<std::size_t>(n), max_lam)))
        for (const auto& delta : enumerate_cube(n, lo_delta, hi_delta)) out.push_back({A, delta, lam});
  return out;
}

// ---------------------------------------------------------------------------
// Left factors of the closed-form multiplication rules

struct LeftFactor {
  enum Kind { torus, raise, lower } kind;
  IntVector gamma;
  IntVector mu;
  int h = 0;
  int m = 0;

  SymbolicElement symbol(int n) const {
    const IntVector zero(static_cast<std::size_t>(n), 0);
    switch (kind) {
      case torus: return SymbolicElement::single(ThetaMatrix(n), gamma, mu);
      case raise: return SymbolicElement::single(m * ThetaMatrix::unit(n, h, h + 1), zero, zero);
      case lower: return SymbolicElement::single(m * ThetaMatrix::unit(n, h + 1, h), zero, zero);
    }
    throw InternalError("unreachable");
  }

  SymbolicElement apply(const BlmKey& k) const {
    switch (kind) {
      case torus: return formula1_product(gamma, mu, k.A, k.delta, k.lam);
      case raise: return formula2_E(m, h, k.A, k.delta, k.lam);
      case lower: return formula2_F(m, h, k.A, k.delta, k.lam);
    }
    throw InternalError("unreachable");
  }

  Json to_json() const {
    switch (kind) {
      case torus: return {{"rule", "formula1"}, {"gamma", qschur::to_json(gamma)}, {"mu", qschur::to_json(mu)}};
      case raise: return {{"rule", "formula2_E"}, {"h", h + 1}, {"m", m}};
      case lower: return {{"rule", "formula2_F"}, {"h", h + 1}, {"m", m}};
    }
    throw InternalError("unreachable");
  }
};

std::vector<LeftFactor> divided_power_lefts(int n, int max_m) {
  std::vector<LeftFactor> out;
  for (int h = 0; h + 1 < n; ++h)
    for (int m = 0; m <= max_m; ++m) {
      out.push_back({LeftFactor::raise, {}, {}, h, m});
      out.push_back({LeftFactor::lower, {}, {}, h, m});
    }
  return out;
}

std::vector<LeftFactor> torus_lefts(int n, int lo_gamma, int hi_gamma, int max_mu) {
  std::vector<LeftFactor> out;
  for (const auto& g : enumerate_cube(n, lo_gamma, hi_gamma))
    for (const auto& mu : enumerate_box(IntVector(static_cast<std::size_t>(n), max_mu)))
      out.push_back({LeftFactor::torus, g, mu});
  return out;
}

/// 0(0,0), 0(+-e_i, 0), 0(0, e_i), 0(0, 2 e_i).
std::vector<LeftFactor> torus_generator_lefts(int n) {
  const IntVector zero(static_cast<std::size_t>(n), 0);
  std::vector<LeftFactor> out{{LeftFactor::torus, zero, zero}};
  for (int i = 0; i < n; ++i) {
    out.push_back({LeftFactor::torus, unit_vector(n, i), zero});
    out.push_back({LeftFactor::torus, scaled(-1, unit_vector(n, i)), zero});
    out.push_back({LeftFactor::torus, zero, unit_vector(n, i)});
    out.push_back({LeftFactor::torus, zero, scaled(2, unit_vector(n, i))});
  }
  return out;
}

/// Checks realize(left.apply(right)) against the truncated product for every
/// pair.  When fault is set the very first pair gets an extra unit term.
void check_rule_block(SuiteReport& rep, int n, int r_max, const std::vector<LeftFactor>& lefts,
                      const std::vector<BlmKey>& rights, bool fault) {
  std::vector<TruncatedElement> left_images;
  for (const auto& L : lefts) left_images.push_back(realize(L.symbol(n), r_max));
  const IntVector zero(static_cast<std::size_t>(n), 0);
  auto results = parallel_map<std::vector<Json>>(rights.size(), [&](std::size_t ri) {
    std::vector<Json> bad;
    const auto& k = rights[ri];
    const auto right = realize(SymbolicElement::single(k.A, k.delta, k.lam), r_max);
    for (std::size_t li = 0; li < lefts.size(); ++li) {
      auto sym = lefts[li].apply(k);
      if (fault && ri == 0 && li == 0) sym += SymbolicElement::single(ThetaMatrix(n), zero, zero);
      const auto got = realize(sym, r_max);
      const auto expected = multiply(left_images[li], right);
      if (!(got == expected))
        bad.push_back({{"n", n}, {"r_max", r_max}, {"left", lefts[li].to_json()}, {"right", key_json(k)},
                       {"difference", difference(expected, got)}});
    }
    return bad;
  });
  rep.instances += lefts.size() * rights.size();
  for (auto& v : results)
    for (auto& f : v) rep.record_failure(std::move(f));
}

/// Random larger instances of the given rule kinds.
void check_random_rules(SuiteReport& rep, const SuiteConfig& cfg, const std::vector<LeftFactor::Kind>& kinds,
                        const std::vector<int>& ns, int r_max) {
  struct Case {
    int n;
    LeftFactor left;
    BlmKey right;
  };
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  for (int c = 0; c < cfg.random_count; ++c) {
    const int n = ns[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ns.size()) - 1))];
    LeftFactor L{kinds[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(kinds.size()) - 1))], {}, {}, 0, 0};
    if (L.kind == LeftFactor::torus) {
      L.gamma = rng.vector(n, -3, 3);
      L.mu = rng.vector(n, 0, 3);
    } else {
      L.h = rng.uniform(0, n - 2);
      L.m = rng.uniform(0, 3);
    }
    BlmKey k{rng.theta_pm(n, rng.uniform(0, 3), 3), rng.vector(n, -3, 3), rng.vector(n, 0, 3)};
    cases.push_back({n, L, k});
  }
  auto results = parallel_map<Json>(cases.size(), [&](std::size_t i) -> Json {
    const auto& c = cases[i];
    const auto got = realize(c.left.apply(c.right), r_max);
    const auto expected = multiply(realize(c.left.symbol(c.n), r_max),
                                   realize(SymbolicElement::single(c.right.A, c.right.delta, c.right.lam), r_max));
    if (got == expected) return nullptr;
    return {{"n", c.n}, {"r_max", r_max}, {"random_index", i}, {"left", c.left.to_json()},
            {"right", key_json(c.right)}, {"difference", difference(expected, got)}};
  });
  rep.instances += cases.size();
  for (auto& f : results)
    if (!f.is_null()) rep.record_failure(std::move(f));
}

// ---------------------------------------------------------------------------
// Independence helpers

Json kernel_json(const std::vector<LaurentPoly>& w, const std::function<Json(std::size_t)>& label) {
  Json out = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) out.push_back({{"member", label(i)}, {"coeff", to_json(w[i])}});
  return out;
}

Json verdict_json(const IndependenceVerdict& v) {
  return {{"r_max", v.r_max},
          {"members", v.members},
          {"coordinates", v.coordinates},
          {"eval_points", v.rank.points},
          {"ranks", v.rank.ranks},
          {"independent", v.independent()}};
}

/// Runs an independence check at r_max and, if it fails, searches upward for
/// the least truncation at which the family becomes independent.
void independence_report(SuiteReport& rep, const std::function<std::vector<TruncatedElement>(int)>& family_at,
                         const std::function<Json(std::size_t)>& label, int r_max, int search_limit) {
  const auto v = independence_of(family_at(r_max), r_max);
  rep.instances += 1;
  rep.details["verdict"] = verdict_json(v);
  rep.details["note"] = kTruncationNote;
  if (v.independent()) return;
  Json f = verdict_json(v);
  if (v.rank.kernel) f["kernel"] = kernel_json(*v.rank.kernel, label);
  f["reason"] = "the members are linearly dependent over Q(v) in the components r <= r_max";
  rep.record_failure(std::move(f));
  Json search = Json::array();
  for (int r = r_max + 1; r <= search_limit; ++r) {
    const auto w = independence_of(family_at(r), r);
    search.push_back(verdict_json(w));
    if (w.independent()) {
      rep.details["first_independent_r_max"] = r;
      break;
    }
  }
  rep.details["truncation_search"] = search;
}

}  // namespace

void SuiteReport::record_failure(Json f) {
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(f));
}

Json SuiteReport::to_json() const {
  return {{"suite", suite},
          {"parameters", parameters},
          {"instances", instances},
          {"failure_count", failure_count},
          {"passed", passed()},
          {"failures", failures},
          {"details", details}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"binomials",     "blm-formulas",     "formula1",    "formula2",
                                              "closure",       "relations",        "triangular",  "pbw-independence",
                                              "realization",   "specialization",   "basis-count"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "binomials") return verify_binomials(cfg);
  if (name == "blm-formulas") return verify_blm_formulas(cfg);
  if (name == "formula1") return verify_formula1(cfg);
  if (name == "formula2") return verify_formula2(cfg);
  if (name == "closure") return verify_closure(cfg);
  if (name == "relations") return verify_relations(cfg);
  if (name == "triangular") return verify_triangular(cfg);
  if (name == "pbw-independence") return verify_pbw_independence(cfg);
  if (name == "realization") return verify_realization(cfg);
  if (name == "specialization") return verify_specialization(cfg);
  if (name == "basis-count") return verify_basis_count(cfg);
  throw DomainError("unknown suite \"" + name + "\"");
}

// ---------------------------------------------------------------------------

SuiteReport verify_binomials(const SuiteConfig& cfg) {
  SuiteReport rep{"binomials"};
  const int top = value_or(cfg.bound, 4, "bound");
  const int range = 6;
  rep.parameters = {{"integer_range", {-range, range}}, {"bound", top}, {"seed", cfg.seed},
                    {"random_count", cfg.random_count}};
  auto check = [&](bool ok, const char* identity, Json args) {
    ++rep.instances;
    if (!ok) rep.record_failure({{"identity", identity}, {"arguments", std::move(args)}});
  };

  // [[n over a]] = sum_j v^{2(m-j)(a-j)} [[m over j]] [[n-m over a-j]]
  for (int n = -range; n <= range; ++n)
    for (int m = -range; m <= range; ++m)
      for (int a = 0; a <= top; ++a) {
        LaurentPoly rhs;
        for (int j = 0; j <= a; ++j)
          rhs += vpow(2 * (m - j) * (a - j)) * unbalanced_binomial(m, j) * unbalanced_binomial(n - m, a - j);
        check(unbalanced_binomial(n, a) == rhs, "vandermonde", {{"n", n}, {"m", m}, {"a", a}});
      }

  // [[m over a]][[m over b]] = sum_c v^{2(b-c)(a-c)} [[m over a+b-c]] [[a+b-c]]!/([[c]]![[a-c]]![[b-c]]!)
  for (int m = -range; m <= range; ++m)
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b) {
        LaurentPoly rhs;
        for (int c = 0; c <= std::min(a, b); ++c)
          rhs += vpow(2 * (b - c) * (a - c)) * unbalanced_binomial(m, a + b - c) * unbalanced_trinomial(c, a - c, b - c);
        check(unbalanced_binomial(m, a) * unbalanced_binomial(m, b) == rhs, "product", {{"m", m}, {"a", a}, {"b", b}});
      }

  // Vector identities over alpha, beta in Z^k and natural lambda, mu.
  auto sum_rule = [&](const IntVector& alpha, const IntVector& beta, const IntVector& lam) {
    LaurentPoly rhs;
    for (const auto& mu : enumerate_box(lam)) {
      const auto rest = lam - mu;
      rhs += vpow(dot(alpha, rest) - dot(mu, beta)) * vector_binomial(alpha, mu) * vector_binomial(beta, rest);
    }
    check(vector_binomial(alpha + beta, lam) == rhs, "vector_sum",
          {{"alpha", alpha}, {"beta", beta}, {"lambda", lam}});
  };
  auto product_rule = [&](const IntVector& alpha, const IntVector& lam, const IntVector& mu) {
    LaurentPoly rhs;
    IntVector meet(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) meet[i] = std::min(lam[i], mu[i]);
    for (const auto& g : enumerate_box(meet)) {
      const auto total = lam + mu - g;
      rhs += vpow(dot(lam, mu) - dot(alpha, g)) * trinomial(total, g, lam - g, mu - g) * vector_binomial(alpha, total);
    }
    check(vector_binomial(alpha, lam) * vector_binomial(alpha, mu) == rhs, "vector_product",
          {{"alpha", alpha}, {"lambda", lam}, {"mu", mu}});
  };
  const IntVector box1{top}, box2{top, top};
  for (const auto& alpha : enumerate_cube(1, -range, range)) {
    for (const auto& beta : enumerate_cube(1, -range, range))
      for (const auto& lam : enumerate_box(box1)) sum_rule(alpha, beta, lam);
    for (const auto& lam : enumerate_box(box1))
      for (const auto& mu : enumerate_box(box1)) product_rule(alpha, lam, mu);
  }
  for (const auto& alpha : enumerate_cube(2, -2, 2)) {
    for (const auto& beta : enumerate_cube(2, -2, 2))
      for (const auto& lam : enumerate_box(box2)) sum_rule(alpha, beta, lam);
    for (const auto& lam : enumerate_box(box2))
      for (const auto& mu : enumerate_box(box2)) product_rule(alpha, lam, mu);
  }
  Rng rng(cfg.seed);
  for (int c = 0; c < cfg.random_count; ++c) {
    const int k = rng.uniform(2, 3);
    sum_rule(rng.vector(k, -range, range), rng.vector(k, -range, range), rng.vector(k, 0, top));
    product_rule(rng.vector(k, -range, range), rng.vector(k, 0, top), rng.vector(k, 0, top));
  }
  return rep;
}

SuiteReport verify_blm_formulas(const SuiteConfig& cfg) {
  SuiteReport rep{"blm-formulas"};
  const auto ns = ranks_of(cfg);
  const int r_max = value_or(cfg.r_max, 4, "r_max");
  rep.parameters = {{"n", ns}, {"r_max", r_max}, {"oracle_cap", cfg.oracle_cap}};
  for (int n : ns)
    for (int r = 0; r <= r_max; ++r) {
      const auto mats = enumerate_theta(n, r);
      auto results = parallel_map<std::pair<std::size_t, std::vector<Json>>>(mats.size(), [&](std::size_t k) {
        const auto& A = mats[k];
        const auto rows = ro(A);
        std::pair<std::size_t, std::vector<Json>> out{0, {}};
        for (int h = 0; h + 1 < n; ++h)
          for (int raising = 1; raising >= 0; --raising) {
            const int top = raising ? rows[static_cast<std::size_t>(h + 1)] : rows[static_cast<std::size_t>(h)];
            for (int m = 0; m <= top; ++m) {
              ++out.first;
              const auto left = raising ? b_matrix(h, m, A) : c_matrix(h, m, A);
              const auto formula = raising ? multiply_Bm(h, m, A) : multiply_Cm(h, m, A);
              const auto oracle = oracle_product(left, A, cfg.oracle_cap);
              IntVector want_ro = rows;
              want_ro[static_cast<std::size_t>(h)] += raising ? m : -m;
              want_ro[static_cast<std::size_t>(h + 1)] -= raising ? m : -m;
              bool shape_ok = true;
              for (const auto& [C, c] : formula.terms()) shape_ok = shape_ok && ro(C) == want_ro && co(C) == co(A);
              if (formula == oracle && shape_ok) continue;
              out.second.push_back({{"n", n}, {"r", r}, {"h", h + 1}, {"m", m}, {"side", raising ? "B" : "C"},
                                    {"A", to_json(A)}, {"formula", to_json(formula)}, {"oracle", to_json(oracle)},
                                    {"shape_ok", shape_ok}});
            }
          }
        return out;
      });
      for (auto& [count, bad] : results) {
        rep.instances += count;
        for (auto& f : bad) rep.record_failure(std::move(f));
      }
    }
  return rep;
}

SuiteReport verify_formula1(const SuiteConfig& cfg) {
  SuiteReport rep{"formula1"};
  const auto ns = ranks_of(cfg);
  const int r_max = value_or(cfg.r_max, 4, "r_max");
  const int b = value_or(cfg.bound, 2, "bound");
  rep.parameters = {{"n", ns}, {"r_max", r_max}, {"bound", b}, {"seed", cfg.seed},
                    {"random_count", cfg.random_count}, {"random_r_max", r_max + 1}};
  Json cores = Json::array();
  bool fault = cfg.inject_fault;
  for (int n : ns) {
    const auto rights = keys_within(n, b, b, -b, b);
    if (n == 2) {
      check_rule_block(rep, n, r_max, torus_lefts(n, -b, b, b), rights, fault);
      cores.push_back({{"n", n}, {"gamma", {-b, b}}, {"mu", {0, b}}, {"right", "full"}});
    } else {
      // Every torus generator against the full right bounds, and a smaller
      // full box on both sides.
      check_rule_block(rep, n, r_max, torus_generator_lefts(n), rights, fault);
      const int c = std::max(b - 1, 0);
      check_rule_block(rep, n, r_max, torus_lefts(n, -c, c, c), keys_within(n, c, c, -c, c), false);
      cores.push_back({{"n", n}, {"left", "torus generators"}, {"right", "full"}});
      cores.push_back({{"n", n}, {"gamma", {-c, c}}, {"mu", {0, c}}, {"right_bound", c}});
    }
    fault = false;
  }
  rep.details["exhaustive_cores"] = cores;
  check_random_rules(rep, cfg, {LeftFactor::torus}, ns, r_max + 1);
  return rep;
}

SuiteReport verify_formula2(const SuiteConfig& cfg) {
  SuiteReport rep{"formula2"};
  const auto ns = ranks_of(cfg);
  const int r_max = value_or(cfg.r_max, 4, "r_max");
  const int b = value_or(cfg.bound, 2, "bound");
  rep.parameters = {{"n", ns}, {"r_max", r_max}, {"bound", b}, {"seed", cfg.seed},
                    {"random_count", cfg.random_count}, {"random_r_max", r_max + 1}};
  bool fault = cfg.inject_fault;
  for (int n : ns) {
    check_rule_block(rep, n, r_max, divided_power_lefts(n, b), keys_within(n, b, b, -b, b), fault);
    fault = false;
  }
  check_random_rules(rep, cfg, {LeftFactor::raise, LeftFactor::lower}, ns, r_max + 1);
  return rep;
}

SuiteReport verify_closure(const SuiteConfig& cfg) {
  SuiteReport rep{"closure"};
  const auto ns = ranks_of(cfg);
  const int r_max = value_or(cfg.r_max, 4, "r_max");
  rep.parameters = {{"n", ns}, {"r_max", r_max}, {"seed", cfg.seed}, {"random_count", cfg.random_count}};

  // Generator times element, re-expanded in keys with delta in {0,1}^n.
  auto check = [&](int n, const LeftFactor& g, const SymbolicElement& x, Json label) {
    SymbolicElement y(n);
    switch (g.kind) {
      case LeftFactor::torus: y = torus_times(g.gamma, g.mu, x); break;
      case LeftFactor::raise: y = raise_times(g.m, g.h, x); break;
      case LeftFactor::lower: y = lower_times(g.m, g.h, x); break;
    }
    const auto reduced = delta_reduce(y);
    bool keys_ok = true;
    for (const auto& [k, c] : reduced.terms())
      for (int d : k.delta) keys_ok = keys_ok && (d == 0 || d == 1);
    const auto expected = multiply(realize(g.symbol(n), r_max), realize(x, r_max));
    const auto got = realize(reduced, r_max);
    ++rep.instances;
    if (keys_ok && got == expected) return;
    label["generator"] = g.to_json();
    label["keys_in_basis_range"] = keys_ok;
    label["difference"] = difference(expected, got);
    rep.record_failure(std::move(label));
  };

  for (int n : ns) {
    std::vector<LeftFactor> gens = divided_power_lefts(n, 1);
    for (auto& t : torus_lefts(n, -1, 1, 1)) gens.push_back(t);
    for (const auto& k : keys_within(n, 1, 1, 0, 1))
      for (const auto& g : gens)
        check(n, g, SymbolicElement::single(k.A, k.delta, k.lam), {{"n", n}, {"element", to_json(
                                                                             SymbolicElement::single(k.A, k.delta, k.lam))}});
  }
  Rng rng(cfg.seed);
  for (int c = 0; c < cfg.random_count; ++c) {
    const int n = ns[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ns.size()) - 1))];
    SymbolicElement x(n);
    const int terms = rng.uniform(1, 3);
    for (int t = 0; t < terms; ++t)
      x.add_term({rng.theta_pm(n, rng.uniform(0, 2), 2), rng.vector(n, 0, 1), rng.vector(n, 0, 2)}, rng.laurent());
    LeftFactor g{LeftFactor::torus, {}, {}, 0, 0};
    switch (rng.uniform(0, 2)) {
      case 0: g = {LeftFactor::torus, rng.vector(n, -2, 2), rng.vector(n, 0, 2)}; break;
      case 1: g = {LeftFactor::raise, {}, {}, rng.uniform(0, n - 2), rng.uniform(0, 2)}; break;
      default: g = {LeftFactor::lower, {}, {}, rng.uniform(0, n - 2), rng.uniform(0, 2)}; break;
    }
    check(n, g, x, {{"n", n}, {"random_index", c}, {"element", to_json(x)}});
  }
  rep.details["observed_coefficient_ring"] = "Z[v,v^-1]";
  return rep;
}

SuiteReport verify_relations(const SuiteConfig& cfg) {
  SuiteReport rep{"relations"};
  const auto ns = ranks_of(cfg);
  const int r_max = value_or(cfg.r_max, 5, "r_max");
  rep.parameters = {{"n", ns}, {"r_max", r_max}};
  Json per_rank = Json::array();
  for (int n : ns) {
    const auto r = check_relations(n, r_max);
    std::map<std::string, std::pair<int, int>> tally;  // relation -> (instances, holding)
    for (const auto& inst : r.instances) {
      ++rep.instances;
      auto& t = tally[inst.relation];
      ++t.first;
      if (inst.holds) {
        ++t.second;
        continue;
      }
      rep.record_failure({{"n", n}, {"relation", inst.relation}, {"instance", inst.label}, {"detail", inst.detail}});
    }
    Json counts = Json::object();
    for (const auto& [name, t] : tally) counts[name] = {{"instances", t.first}, {"holding", t.second}};
    per_rank.push_back({{"n", n}, {"relations", counts}});
  }
  rep.details["per_rank"] = per_rank;
  return rep;
}

SuiteReport verify_triangular(const SuiteConfig& cfg) {
  SuiteReport rep{"triangular"};
  const auto ns = ranks_of(cfg);
  const int r_max = value_or(cfg.r_max, 4, "r_max");
  const int b = value_or(cfg.bound, 3, "bound");
  rep.parameters = {{"n", ns}, {"r_max", r_max}, {"bound", b}};
  std::size_t lower_terms = 0;
  std::size_t order_pairs = 0;
  for (int n : ns) {
    std::vector<ThetaMatrix> mats;
    for (int s = 0; s <= b; ++s)
      for (const auto& A : enumerate_theta_pm(n, s)) mats.push_back(A);
    auto reports = parallel_map<std::optional<TriangularReport>>(
        mats.size(), [&](std::size_t k) { return std::optional(triangular_product(mats[k], r_max)); });
    for (const auto& r : reports) {
      ++rep.instances;
      lower_terms += r->product.terms().size() - (r->leading_ok ? 1 : 0);
      if (r->ok()) continue;
      rep.record_failure({{"n", n}, {"A", to_json(r->A)}, {"leading_coeff", to_json(r->leading_coeff)},
                          {"violations", r->violations}, {"realized_ok", r->realized_ok}});
    }
    // The induction measure: B < A forces ||B|| < ||A||.
    for (const auto& A : mats)
      for (const auto& B : mats) {
        if (!order_less(B, A)) continue;
        ++order_pairs;
        ++rep.instances;
        if (norm(B) >= norm(A))
          rep.record_failure({{"n", n}, {"order_pair", {{"B", to_json(B)}, {"A", to_json(A)}}},
                              {"norms", {norm(B), norm(A)}}});
      }
  }
  rep.details["lower_terms"] = lower_terms;
  rep.details["order_pairs_checked"] = order_pairs;
  rep.details["observed_coefficient_ring"] = "Z[v,v^-1]";
  return rep;
}

SuiteReport verify_pbw_independence(const SuiteConfig& cfg) {
  SuiteReport rep{"pbw-independence"};
  const int n = cfg.n.value_or(2);
  if (n < 2) throw DomainError("n must be at least 2");
  const int b = value_or(cfg.bound, 2, "bound");
  const int r_max = value_or(cfg.r_max, 5, "r_max");
  rep.parameters = {{"n", n}, {"bound", b}, {"r_max", r_max}};
  const auto indices = pbw_indices(n, b);
  auto family_at = [&](int r) {
    auto members = parallel_map<std::optional<TruncatedElement>>(
        indices.size(), [&](std::size_t k) { return std::optional(pbw_monomial(indices[k], r)); });
    std::vector<TruncatedElement> out;
    for (auto& m : members) out.push_back(std::move(*m));
    return out;
  };
  auto label = [&](std::size_t i) -> Json { return to_string(pbw_word(indices[i])); };
  independence_report(rep, family_at, label, r_max, r_max + 6);
  return rep;
}

SuiteReport verify_realization(const SuiteConfig& cfg) {
  SuiteReport rep{"realization"};
  const int n = cfg.n.value_or(2);
  if (n < 2) throw DomainError("n must be at least 2");
  const int b = value_or(cfg.bound, 3, "bound");
  const int r_max = value_or(cfg.r_max, 6, "r_max");
  rep.parameters = {{"n", n}, {"bound", b}, {"r_max", r_max}};
  std::vector<BlmKey> keys;
  for (int s = 0; s <= b; ++s)
    for (const auto& A : enumerate_theta_pm(n, s))
      for (int t = 0; t <= b - s; ++t)
        for (const auto& lam : enumerate_compositions(n, t))
          for (const auto& delta : enumerate_cube(n, 0, 1)) keys.push_back({A, delta, lam});
  auto family_at = [&](int r) {
    std::vector<TruncatedElement> out;
    for (const auto& k : keys) out.push_back(realize(SymbolicElement::single(k.A, k.delta, k.lam), r));
    return out;
  };
  auto label = [&](std::size_t i) -> Json { return key_json(keys[i]); };
  independence_report(rep, family_at, label, r_max, r_max + 6);
  return rep;
}

SuiteReport verify_specialization(const SuiteConfig& cfg) {
  SuiteReport rep{"specialization"};
  const auto ns = ranks_of(cfg);
  const std::vector<int> ls = cfg.l ? std::vector<int>{*cfg.l} : std::vector<int>{1, 3};
  const int r_max = value_or(cfg.r_max, 5, "r_max");
  const int b = value_or(cfg.bound, 2, "bound");
  rep.parameters = {{"n", ns}, {"l", ls}, {"r_max", r_max}, {"bound", b}};
  Json runs = Json::array();
  for (int n : ns) {
    const IntVector zero(static_cast<std::size_t>(n), 0);
    const auto indices = bk_indices(n, b);
    auto members = parallel_map<std::optional<TruncatedElement>>(indices.size(), [&](std::size_t k) {
      const auto& idx = indices[k];
      return std::optional(multiply(realize(SymbolicElement::single(idx.A, zero, zero), r_max),
                                    realize(SymbolicElement::single(ThetaMatrix(n), zero - idx.lam, idx.lam), r_max)));
    });
    std::vector<TruncatedElement> family;
    for (auto& m : members) family.push_back(std::move(*m));
    const auto generic = independence_of(family, r_max);
    for (int l : ls) {
      for (int i = 0; i < n; ++i) {
        const auto kl = check_Kl_trivial(i, l, n, r_max);
        ++rep.instances;
        if (!kl.holds)
          rep.record_failure({{"check", "K^l trivial"}, {"n", n}, {"l", l}, {"i", i + 1},
                              {"first_bad_degree", kl.first_bad_degree}});
      }
      std::vector<CycloTruncatedElement> special;
      for (const auto& x : family) special.push_back(specialize(x, l));
      const auto v = cyclo_independence(special, l, r_max);
      ++rep.instances;
      const std::size_t generic_rank = generic.rank.ranks.empty() ? 0 : *std::max_element(generic.rank.ranks.begin(),
                                                                                            generic.rank.ranks.end());
      Json run = {{"n", n}, {"l", l}, {"members", v.members}, {"coordinates", v.coordinates}, {"rank", v.rank},
                  {"rank_over_Qv", generic_rank}, {"rank_drop", static_cast<long>(generic_rank) - static_cast<long>(v.rank)}};
      runs.push_back(run);
      if (v.independent()) continue;
      Json kernel = Json::array();
      if (v.kernel)
        for (std::size_t k = 0; k < v.kernel->size(); ++k)
          if (!(*v.kernel)[k].is_zero())
            kernel.push_back({{"member", {{"A", to_json(indices[k].A)}, {"lambda", to_json(indices[k].lam)}}},
                              {"coeff", to_json((*v.kernel)[k])}});
      run["kernel"] = kernel;
      run["check"] = "B_k independence";
      rep.record_failure(std::move(run));
    }
  }
  rep.details["runs"] = runs;
  rep.details["note"] = kTruncationNote;
  return rep;
}

SuiteReport verify_basis_count(const SuiteConfig& cfg) {
  SuiteReport rep{"basis-count"};
  const int n_max = cfg.n.value_or(3);
  const int r_max = value_or(cfg.r_max, 4, "r_max");
  rep.parameters = {{"n_max", n_max}, {"r_max", r_max}};
  Json table = Json::array();
  for (int n = 1; n <= n_max; ++n)
    for (int r = 0; r <= r_max; ++r) {
      const std::size_t matrices = enumerate_theta(n, r).size();
      std::size_t cosets = 0;
      const auto comps = enumerate_compositions(n, r);
      for (const auto& lam : comps)
        for (const auto& mu : comps) cosets += distinguished_reps(lam, mu).size();
      // C(n^2 + r - 1, r)
      Integer stars = 1;
      for (int k = 1; k <= r; ++k) stars = stars * (n * n + r - k) / k;
      ++rep.instances;
      const bool ok = Integer(matrices) == stars && cosets == matrices;
      table.push_back({{"n", n}, {"r", r}, {"matrices", matrices}, {"double_cosets", cosets}, {"binomial", to_json(stars)}});
      if (!ok) rep.record_failure(table.back());
    }
  rep.details["counts"] = table;
  return rep;
}

}  // namespace qschur
