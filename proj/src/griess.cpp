#include "w22/griess.hpp"

#include <algorithm>
#include <stdexcept>

#include "w22/characters.hpp"
#include "w22/charges.hpp"
#include "w22/linalg.hpp"

namespace w22 {

namespace {

const Vec2 kBasis[2] = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};

Vec2 mul_with(const CommAlgebra2::Table& p, const Vec2& x, const Vec2& y) {
  const Rational* xs[2] = {&x.a, &x.b};
  const Rational* ys[2] = {&y.a, &y.b};
  Vec2 out{Rational(0), Rational(0)};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Rational f = *xs[i] * *ys[j];
      if (!f.is_zero()) out = out + f * p[i][j];
    }
  }
  return out;
}

Rational form_with(const CommAlgebra2::Form& f, const Vec2& x, const Vec2& y) {
  return x.a * (f[0][0] * y.a + f[0][1] * y.b) + x.b * (f[1][0] * y.a + f[1][1] * y.b);
}

// Solve alpha * u + beta * v = target for (alpha, beta); u, v independent.
std::pair<Rational, Rational> coords_in(const Vec2& u, const Vec2& v, const Vec2& target) {
  Rational det = u.a * v.b - u.b * v.a;
  return {(target.a * v.b - target.b * v.a) / det, (u.a * target.b - u.b * target.a) / det};
}

struct Split {
  Vec2 unit;
  Vec2 x;  // v - (beta/2) u, so that x^2 = delta * u
  Rational delta;
};

Split split(const CommAlgebra2& a) {
  const Vec2& u = a.unit();
  // Any basis vector not proportional to the unit completes it to a basis.
  Vec2 v = (u.a * kBasis[0].b - u.b * kBasis[0].a).is_zero() ? kBasis[1] : kBasis[0];
  auto [alpha, beta] = coords_in(u, v, a.mul(v, v));
  Rational half_beta = beta / Rational(2);
  return {u, v - half_beta * u, alpha + half_beta * half_beta};
}

}  // namespace

CommAlgebra2 CommAlgebra2::make(std::array<std::string, 2> labels, Table products, Form form) {
  if (!(products[0][1] == products[1][0])) {
    throw AxiomError("commutativity", labels[0] + "*" + labels[1] + " != " + labels[1] + "*" + labels[0]);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        Vec2 left = mul_with(products, mul_with(products, kBasis[i], kBasis[j]), kBasis[k]);
        Vec2 right = mul_with(products, kBasis[i], mul_with(products, kBasis[j], kBasis[k]));
        if (!(left == right)) {
          throw AxiomError("associativity", "(" + labels[i] + labels[j] + ")" + labels[k] + " != " +
                                                labels[i] + "(" + labels[j] + labels[k] + ")");
        }
      }
    }
  }
  // u * e_j = u_1 p[0][j] + u_2 p[1][j] must equal e_j: four equations, two unknowns.
  Matrix sys;
  for (int j = 0; j < 2; ++j) {
    const Vec2& t = kBasis[j];
    sys.push_back({products[0][j].a, products[1][j].a, t.a});
    sys.push_back({products[0][j].b, products[1][j].b, t.b});
  }
  Echelon e = row_reduce(sys);
  bool consistent = e.pivot_cols.empty() || e.pivot_cols.back() != 2;
  if (!consistent || e.pivot_cols.size() != 2) {
    throw AxiomError("identity", "no unique element u with u*x = x for both basis vectors");
  }
  if (!(form[0][1] == form[1][0])) throw AxiomError("form symmetry", "(e1,e2) != (e2,e1)");
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        Rational left = form_with(form, mul_with(products, kBasis[i], kBasis[j]), kBasis[k]);
        Rational right = form_with(form, kBasis[i], mul_with(products, kBasis[j], kBasis[k]));
        if (left != right) {
          throw AxiomError("form associativity", "(" + labels[i] + labels[j] + "," + labels[k] + ") != (" +
                                                     labels[i] + "," + labels[j] + labels[k] + ")");
        }
      }
    }
  }
  CommAlgebra2 out;
  out.labels_ = std::move(labels);
  out.products_ = products;
  out.form_ = form;
  out.unit_ = {e.rref[0][2], e.rref[1][2]};
  return out;
}

Vec2 CommAlgebra2::mul(const Vec2& x, const Vec2& y) const { return mul_with(products_, x, y); }

Rational CommAlgebra2::form(const Vec2& x, const Vec2& y) const { return form_with(form_, x, y); }

std::string CommAlgebra2::str(const Vec2& x) const {
  return x.a.str() + "*" + labels_[0] + " + " + x.b.str() + "*" + labels_[1];
}

std::optional<Vec2> radical(const CommAlgebra2& a) {
  Split s = split(a);
  if (s.delta.is_zero()) return s.x;
  return std::nullopt;
}

std::pair<Vec2, Vec2> idempotent_decomposition(const CommAlgebra2& a) {
  Split s = split(a);
  if (s.delta.is_zero()) throw DomainError("not semisimple: the algebra has a nilpotent radical");
  auto root = s.delta.sqrt_exact();
  if (!root) {
    throw DomainError("irrational splitting: idempotents need sqrt(" + s.delta.str() + ")");
  }
  Vec2 y = (Rational(1) / *root) * s.x;  // y^2 = unit
  Rational half(1, 2);
  return {half * (s.unit + y), half * (s.unit - y)};
}

GriessVerdict classify(const CommAlgebra2& a, const Rational& c) {
  if (c.is_zero()) throw DomainError("classification needs central charge c != 0");
  const auto& f = a.form_matrix();
  if ((f[0][0] * f[1][1] - f[0][1] * f[1][0]).is_zero()) throw DomainError("degenerate form");
  Vec2 omega = Rational(2) * a.unit();
  Rational ww = a.form(omega, omega);
  if (ww != c) {
    throw DomainError("form normalization: (omega,omega) = " + ww.str() + " but c = " + c.str());
  }
  GriessVerdict v;
  v.c = c;
  if (auto x = radical(a)) {
    v.kind = GriessVerdict::Kind::radical;
    Rational wx = a.form(omega, *x);
    v.nilpotent = (c / wx) * *x;
    return v;
  }
  auto [p1, p2] = idempotent_decomposition(a);
  v.kind = GriessVerdict::Kind::semisimple;
  v.p1 = p1;
  v.p2 = p2;
  Vec2 w1 = Rational(2) * p1, w2 = Rational(2) * p2;
  v.c1 = a.form(w1, w1);
  v.c2 = a.form(w2, w2);
  if (v.c1 + v.c2 != c) throw std::logic_error("central charges of the idempotents do not add up to c");
  return v;
}

std::vector<WeightPair> ising_square_modules() {
  const Rational hs[] = {Rational(0), Rational(1, 2), Rational(1, 16)};
  std::vector<WeightPair> out;
  for (const auto& a : hs) {
    for (const auto& b : hs) out.emplace_back(a, b);
  }
  return out;
}

std::vector<WeightPair> ising_module_filter() {
  std::vector<WeightPair> out;
  for (auto& p : ising_square_modules()) {
    if ((p.first + p.second).is_integer()) out.push_back(p);
  }
  return out;
}

PipelineResult characterization_pipeline(const Rational& c, const Rational& c_tilde, long dim_v1,
                                         long dim_v2, const CommAlgebra2& griess,
                                         const PipelineOptions& options) {
  PipelineResult res;
  auto record = [&res](std::string claim, std::string anchor, std::string outcome) {
    res.trace.push_back({static_cast<int>(res.trace.size()) + 1, std::move(claim), std::move(anchor),
                         std::move(outcome)});
  };

  std::string failed;
  if (c != Rational(1)) failed = "c ≠ 1";
  else if (c_tilde != Rational(1)) failed = "c̃ ≠ 1";
  else if (dim_v1 != 0) failed = "dim V1 ≠ 0";
  else if (dim_v2 != 2) failed = "dim V2 ≠ 2";
  record("c = c̃ = 1, dim V1 = 0, dim V2 = 2 (c = " + c.str() + ", c̃ = " + c_tilde.str() +
             ", dim V1 = " + std::to_string(dim_v1) + ", dim V2 = " + std::to_string(dim_v2) + ")",
         "hypotheses", failed.empty() ? "ok" : "failed: " + failed);
  if (!failed.empty()) {
    res.verdict = "hypotheses not met: " + failed;
    return res;
  }

  GriessVerdict gv;
  try {
    gv = classify(griess, c);
  } catch (const DomainError& e) {
    record("the weight-2 algebra is semisimple or has a one-dimensional radical", "griess-dichotomy",
           std::string("failed: ") + e.what());
    res.verdict = std::string("hypotheses not met: griess-dichotomy: ") + e.what();
    return res;
  }
  res.hypotheses_met = true;

  if (gv.kind == GriessVerdict::Kind::radical) {
    record("the weight-2 algebra is semisimple or has a one-dimensional radical", "griess-dichotomy",
           "radical: x = " + griess.str(gv.nilpotent) + ", V contains L(1,0,0) for W(2,2)");
    auto s = eta(options.growth_order) * vacuum_character_w22(Rational(1), options.growth_order);
    auto rep = growth_diagnostic(s, options.growth);
    record("coefficients of eta * ch L(1,0,0) = (1-q)/prod_{n>1}(1-q^n) grow polynomially",
           "w22-vacuum-growth", to_string(rep.classification) + " to order " + std::to_string(options.growth_order));
    res.verdict = rep.classification == GrowthClass::superpolynomial_consistent
                      ? "excluded by growth contradiction"
                      : "inconclusive: growth diagnostic did not separate";
    return res;
  }

  record("the weight-2 algebra is semisimple or has a one-dimensional radical", "griess-dichotomy",
         "semisimple: c1 = " + gv.c1.str() + ", c2 = " + gv.c2.str());

  auto m1 = is_minimal_charge(gv.c1);
  auto m2 = is_minimal_charge(gv.c2);
  if (!m1 || !m2) {
    const Rational& bad = !m1 ? gv.c1 : gv.c2;
    auto s = generic_virasoro_character(bad, options.growth_order).shifted(bad / Rational(24));
    auto rep = growth_diagnostic(s, options.growth);
    record("both c_i are minimal-model charges c_{s,t}", "minimal-model-forcing",
           "failed: c = " + bad.str() + " is generic; 1/prod_{n>1}(1-q^n) is " + to_string(rep.classification));
    res.verdict = rep.classification == GrowthClass::superpolynomial_consistent
                      ? "excluded by growth contradiction"
                      : "inconclusive: growth diagnostic did not separate";
    return res;
  }
  record("both c_i are minimal-model charges c_{s,t}", "minimal-model-forcing",
         "c1 = c_" + m1->str() + ", c2 = c_" + m2->str());

  long bound = std::max({options.search_bound, m1->t, m2->t});
  auto sols = solve_sum_one(bound);
  std::string listed;
  for (const auto& [p, q] : sols) listed += (listed.empty() ? "" : ", ") + ("(" + p.str() + "," + q.str() + ")");
  PairSolution mine{std::min(*m1, *m2), std::max(*m1, *m2)};
  bool found = std::find(sols.begin(), sols.end(), mine) != sols.end();
  record("c_{s1,t1} + c_{s2,t2} = 1 (t1 <= " + std::to_string(bound) + ")", "sum-one-solutions",
         "solutions: [" + listed + "]" + (found ? "" : "; given pair absent"));
  if (!found || !(mine == PairSolution{MinimalPair{3, 4}, MinimalPair{3, 4}})) {
    res.verdict = "excluded: c1 + c2 = 1 forces c1 = c2 = 1/2";
    return res;
  }

  res.surviving_modules = ising_module_filter();
  std::string kept;
  for (const auto& [h1, h2] : res.surviving_modules) {
    kept += (kept.empty() ? "" : ", ") + ("(" + h1.str() + "," + h2.str() + ")");
  }
  record("modules L(1/2,h1)⊗L(1/2,h2) with h1 + h2 integral", "ising-module-filter",
         std::to_string(res.surviving_modules.size()) + " of " + std::to_string(ising_square_modules().size()) +
             ": " + kept);
  res.verdict = "isomorphic to L(1/2,0)⊗L(1/2,0)";
  return res;
}

}  // namespace w22
