#include "qschur/uqgl.hpp"

#include "qschur/errors.hpp"

#include <map>
#include <regex>
#include <sstream>

namespace qschur {

Generator divided_E(int h, int m) { return {GenKind::E, h, m}; }
Generator divided_F(int h, int m) { return {GenKind::F, h, m}; }
Generator torus_K(int i, int sign) { return {GenKind::K, i, sign}; }
Generator torus_binom(int i, int t) { return {GenKind::KBinom, i, t}; }

void check_generator(const Generator& g, int n) {
  switch (g.kind) {
    case GenKind::E:
    case GenKind::F:
      if (g.index < 0 || g.index + 1 >= n) throw DomainError("generator index h out of range for rank n");
      if (g.power < 0) throw DomainError("divided power must be natural");
      break;
    case GenKind::K:
      if (g.index < 0 || g.index >= n) throw DomainError("K index out of range for rank n");
      if (g.power != 1 && g.power != -1) throw DomainError("K exponent must be +1 or -1");
      break;
    case GenKind::KBinom:
      if (g.index < 0 || g.index >= n) throw DomainError("K index out of range for rank n");
      if (g.power < 0) throw DomainError("torus binomial t must be natural");
      break;
  }
}

GeneratorWord parse_word(const std::string& text, int n) {
  static const std::regex ef(R"(([EF])(\d+)(?:\^\((\d+)\))?)");
  static const std::regex k(R"(K(\d+)(?:\^(-?1))?)");
  static const std::regex kb(R"(\[K(\d+);(\d+)\])");
  std::string spaced = text;
  for (char& ch : spaced)
    if (ch == '*') ch = ' ';
  std::istringstream in(spaced);
  GeneratorWord word;
  std::string tok;
  std::smatch m;
  while (in >> tok) {
    Generator g{};
    if (std::regex_match(tok, m, ef)) {
      g = {m[1] == "E" ? GenKind::E : GenKind::F, std::stoi(m[2]) - 1, m[3].matched ? std::stoi(m[3]) : 1};
    } else if (std::regex_match(tok, m, k)) {
      g = {GenKind::K, std::stoi(m[1]) - 1, m[2].matched ? std::stoi(m[2]) : 1};
    } else if (std::regex_match(tok, m, kb)) {
      g = {GenKind::KBinom, std::stoi(m[1]) - 1, std::stoi(m[2])};
    } else {
      throw ParseError("unrecognized generator token '" + tok + "'");
    }
    check_generator(g, n);
    word.push_back(g);
  }
  return word;
}

std::string to_string(const GeneratorWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Generator& g = w[k];
    if (k > 0) os << ' ';
    switch (g.kind) {
      case GenKind::E:
      case GenKind::F:
        os << (g.kind == GenKind::E ? 'E' : 'F') << g.index + 1;
        if (g.power != 1) os << "^(" << g.power << ")";
        break;
      case GenKind::K:
        os << 'K' << g.index + 1 << (g.power < 0 ? "^-1" : "");
        break;
      case GenKind::KBinom:
        os << "[K" << g.index + 1 << ';' << g.power << ']';
        break;
    }
  }
  return os.str();
}

SymbolicElement generator_image(const Generator& g, int n) {
  check_generator(g, n);
  ThetaMatrix M(n);
  IntVector delta(static_cast<std::size_t>(n), 0);
  IntVector lam(static_cast<std::size_t>(n), 0);
  switch (g.kind) {
    case GenKind::E:
      M(g.index, g.index + 1) = g.power;
      break;
    case GenKind::F:
      M(g.index + 1, g.index) = g.power;
      break;
    case GenKind::K:
      delta[g.index] = g.power;
      break;
    case GenKind::KBinom:
      lam[g.index] = g.power;
      break;
  }
  return SymbolicElement::single(M, delta, lam);
}

TruncatedElement zeta(const GeneratorWord& word, int n, int r_max, const ProductOptions& opts) {
  TruncatedElement x = TruncatedElement::unit(n, r_max);
  for (const auto& g : word) x = multiply(x, realize(generator_image(g, n), r_max), opts);
  return x;
}

SymbolicElement zeta_symbolic(const GeneratorWord& word, int n) {
  const IntVector zero(static_cast<std::size_t>(n), 0);
  SymbolicElement x = SymbolicElement::single(ThetaMatrix(n), zero, zero);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Generator& g = *it;
    check_generator(g, n);
    switch (g.kind) {
      case GenKind::E:
        x = raise_times(g.power, g.index, x);
        break;
      case GenKind::F:
        x = lower_times(g.power, g.index, x);
        break;
      case GenKind::K:
        x = torus_times(scaled(g.power, unit_vector(n, g.index)), zero, x);
        break;
      case GenKind::KBinom:
        x = torus_times(zero, scaled(g.power, unit_vector(n, g.index)), x);
        break;
    }
  }
  return x;
}

bool RelationReport::ok() const {
  for (const auto& inst : instances)
    if (!inst.holds) return false;
  return true;
}

namespace {

/// Memoized zeta over words, keyed by their text form.
class WordEvaluator {
 public:
  WordEvaluator(int n, int r_max) : n_(n), r_max_(r_max) {}

  const TruncatedElement& word(const GeneratorWord& w) {
    const std::string key = to_string(w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TruncatedElement x = w.empty() ? TruncatedElement::unit(n_, r_max_)
                                   : multiply(word(GeneratorWord(w.begin(), w.end() - 1)), generator(w.back()));
    return cache_.emplace(key, std::move(x)).first->second;
  }

  TruncatedElement combination(const WordCombination& c) {
    TruncatedElement x(n_, r_max_);
    for (const auto& [coeff, w] : c) x += coeff * word(w);
    return x;
  }

 private:
  const TruncatedElement& generator(const Generator& g) {
    const std::string key = "#" + to_string(GeneratorWord{g});
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, realize(generator_image(g, n_), r_max_)).first->second;
  }

  int n_;
  int r_max_;
  std::map<std::string, TruncatedElement> cache_;
};

std::string first_difference(const TruncatedElement& a, const TruncatedElement& b) {
  for (int r = 0; r <= a.r_max(); ++r)
    if (!(a.component(r) == b.component(r))) return "components differ at r = " + std::to_string(r);
  return "";
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

RelationReport check_relations(int n, int r_max) {
  if (n < 2) throw DomainError("check_relations: n must be at least 2");
  RelationReport rep;
  rep.n = n;
  rep.r_max = r_max;
  WordEvaluator ev(n, r_max);
  const LaurentPoly one = 1;
  const LaurentPoly qbr2 = balanced_bracket(2);
  auto E = [](int h) { return divided_E(h, 1); };
  auto F = [](int h) { return divided_F(h, 1); };
  auto K = [](int i, int s = 1) { return torus_K(i, s); };

  auto check = [&](std::string rel, std::string label, const WordCombination& lhs, const WordCombination& rhs) {
    const TruncatedElement a = ev.combination(lhs);
    const TruncatedElement b = ev.combination(rhs);
    RelationInstance inst{std::move(rel), std::move(label), a == b, ""};
    if (!inst.holds) inst.detail = first_difference(a, b);
    rep.instances.push_back(std::move(inst));
  };
  auto idx = [](int i) { return std::to_string(i + 1); };

  // (a)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      check("a", "K" + idx(i) + " K" + idx(j) + " = K" + idx(j) + " K" + idx(i), {{one, {K(i), K(j)}}},
            {{one, {K(j), K(i)}}});
  for (int i = 0; i < n; ++i) {
    check("a", "K" + idx(i) + " K" + idx(i) + "^-1 = 1", {{one, {K(i), K(i, -1)}}}, {{one, {}}});
    check("a", "K" + idx(i) + "^-1 K" + idx(i) + " = 1", {{one, {K(i, -1), K(i)}}}, {{one, {}}});
  }
  // (b), (c)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      const int e = delta(i, j) - delta(i, j + 1);
      check("b", "K" + idx(i) + " E" + idx(j), {{one, {K(i), E(j)}}}, {{vpow(e), {E(j), K(i)}}});
      check("c", "K" + idx(i) + " F" + idx(j), {{one, {K(i), F(j)}}}, {{vpow(-e), {F(j), K(i)}}});
    }
  // (d)
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 2; j + 1 < n; ++j) {
      check("d", "E" + idx(i) + " E" + idx(j), {{one, {E(i), E(j)}}}, {{one, {E(j), E(i)}}});
      check("d", "F" + idx(i) + " F" + idx(j), {{one, {F(i), F(j)}}}, {{one, {F(j), F(i)}}});
    }
  // (e)
  const LaurentPoly v_minus_vinv = vpow(1) - vpow(-1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      const std::string label = "E" + idx(i) + " F" + idx(j) + " - F" + idx(j) + " E" + idx(i);
      const TruncatedElement lhs = ev.combination({{one, {E(i), F(j)}}, {-one, {F(j), E(i)}}});
      TruncatedElement rhs(n, r_max);
      RelationInstance inst{"e", label, false, ""};
      if (i == j) {
        const TruncatedElement num =
            ev.combination({{one, {K(i), K(i + 1, -1)}}, {-one, {K(i, -1), K(i + 1)}}});
        auto q = num.divided_by(v_minus_vinv);
        if (!q) {
          inst.detail = "numerator not divisible by v - v^-1";
          rep.instances.push_back(std::move(inst));
          continue;
        }
        rhs = std::move(*q);
      }
      inst.holds = lhs == rhs;
      if (!inst.holds) inst.detail = first_difference(lhs, rhs);
      rep.instances.push_back(std::move(inst));
    }
  // (f), (g)
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      if (std::abs(i - j) != 1) continue;
      check("f", "Serre E" + idx(i) + " E" + idx(j),
            {{one, {E(i), E(i), E(j)}}, {-qbr2, {E(i), E(j), E(i)}}, {one, {E(j), E(i), E(i)}}}, {});
      check("g", "Serre F" + idx(i) + " F" + idx(j),
            {{one, {F(i), F(i), F(j)}}, {-qbr2, {F(i), F(j), F(i)}}, {one, {F(j), F(i), F(i)}}}, {});
    }
  // Divided powers: X^m = [m]! X^{(m)}.
  for (int h = 0; h + 1 < n; ++h)
    for (int m = 2; m <= 3; ++m) {
      const GeneratorWord e_plain(static_cast<std::size_t>(m), E(h));
      const GeneratorWord f_plain(static_cast<std::size_t>(m), F(h));
      check("divided-power", "E" + idx(h) + "^" + std::to_string(m), {{one, e_plain}},
            {{balanced_factorial(m), {divided_E(h, m)}}});
      check("divided-power", "F" + idx(h) + "^" + std::to_string(m), {{one, f_plain}},
            {{balanced_factorial(m), {divided_F(h, m)}}});
    }
  // Torus binomials: [K;0 over t] prod (v^s - v^-s) = prod (K v^{1-s} - K^-1 v^{s-1}).
  for (int i = 0; i < n; ++i)
    for (int t = 1; t <= 2; ++t) {
      TruncatedElement rhs = TruncatedElement::unit(n, r_max);
      LaurentPoly scale = 1;
      for (int s = 1; s <= t; ++s) {
        rhs = multiply(rhs, ev.combination({{vpow(1 - s), {K(i)}}, {-vpow(s - 1), {K(i, -1)}}}));
        scale *= vpow(s) - vpow(-s);
      }
      const TruncatedElement lhs = scale * ev.word({torus_binom(i, t)});
      RelationInstance inst{"torus-binomial", "[K" + idx(i) + ";" + std::to_string(t) + "]", lhs == rhs, ""};
      if (!inst.holds) inst.detail = first_difference(lhs, rhs);
      rep.instances.push_back(std::move(inst));
    }
  return rep;
}

GeneratorWord pbw_word(const PBWIndex& idx) {
  const int n = idx.A.n();
  if (static_cast<int>(idx.delta.size()) != n || static_cast<int>(idx.lam.size()) != n)
    throw DimensionError("pbw_word: vector length differs from n");
  if (!idx.A.has_zero_diagonal() || !idx.A.is_natural()) throw DomainError("pbw_word: A must lie in Theta^pm");
  for (int i = 0; i < n; ++i) {
    if (idx.delta[i] != 0 && idx.delta[i] != 1) throw DomainError("pbw_word: delta must be binary");
    if (idx.lam[i] < 0) throw DomainError("pbw_word: lambda must be natural");
  }
  const auto factors = triangular_factors(idx.A);
  GeneratorWord w;
  for (const auto& f : factors)
    if (f.raising) w.push_back(divided_E(f.h, f.m));
  for (int i = 0; i < n; ++i) {
    if (idx.delta[i] == 1) w.push_back(torus_K(i, 1));
    if (idx.lam[i] > 0) w.push_back(torus_binom(i, idx.lam[i]));
  }
  for (const auto& f : factors)
    if (!f.raising) w.push_back(divided_F(f.h, f.m));
  return w;
}

TruncatedElement pbw_monomial(const PBWIndex& idx, int r_max, const ProductOptions& opts) {
  return zeta(pbw_word(idx), idx.A.n(), r_max, opts);
}

std::vector<PBWIndex> pbw_indices(int n, int bound) {
  std::vector<PBWIndex> out;
  const auto deltas = enumerate_box(IntVector(static_cast<std::size_t>(n), 1));
  for (int s = 0; s <= bound; ++s)
    for (const auto& A : enumerate_theta_pm(n, s))
      for (int l = 0; l <= bound - s; ++l)
        for (const auto& lam : enumerate_compositions(n, l))
          for (const auto& d : deltas) out.push_back({A, d, lam});
  return out;
}

Matrix<LaurentPoly> coordinate_matrix(const std::vector<TruncatedElement>& family) {
  std::map<std::pair<int, ThetaMatrix>, std::size_t> rows;
  for (const auto& x : family)
    for (int r = 0; r <= x.r_max(); ++r)
      for (const auto& [C, c] : x.component(r).terms()) rows.emplace(std::pair(r, C), 0);
  std::size_t k = 0;
  for (auto& [key, row] : rows) row = k++;
  Matrix<LaurentPoly> M(rows.size(), std::vector<LaurentPoly>(family.size()));
  for (std::size_t col = 0; col < family.size(); ++col)
    for (int r = 0; r <= family[col].r_max(); ++r)
      for (const auto& [C, c] : family[col].component(r).terms()) M[rows.at({r, C})][col] = c;
  return M;
}

IndependenceVerdict independence_of(const std::vector<TruncatedElement>& family, int r_max) {
  IndependenceVerdict v;
  v.r_max = r_max;
  v.members = family.size();
  const auto M = coordinate_matrix(family);
  v.coordinates = M.size();
  v.rank = rank_over_Qv(M, family.size());
  return v;
}

IndependenceVerdict independence_check(const std::vector<PBWIndex>& indices, int n, int r_max) {
  std::vector<TruncatedElement> family;
  family.reserve(indices.size());
  for (const auto& idx : indices) {
    if (idx.A.n() != n) throw DimensionError("independence_check: index of the wrong rank");
    family.push_back(pbw_monomial(idx, r_max));
  }
  return independence_of(family, r_max);
}

}  // namespace qschur
