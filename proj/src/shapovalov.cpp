#include "w22/shapovalov.hpp"

#include <omp.h>

#include "w22/errors.hpp"

namespace w22 {

Rational FormEvaluator::pair(const Monomial& u, const Monomial& v) {
  if (u.level() != v.level()) return Rational(0);
  const VermaModule& m = action_.module();
  ModuleVector cur = ModuleVector::basis_vector(m, v);
  for (const auto& x : u.letters()) {
    cur = action_.apply(adjoint(x), cur);
    if (cur.is_zero()) return Rational(0);
  }
  return cur.coeff(Monomial{});
}

Rational FormEvaluator::pair(const ModuleVector& u, const ModuleVector& v) {
  const VermaModule& m = action_.module();
  if (!(u.module() == m) || !(v.module() == m)) {
    throw DomainError("pairing needs both vectors in the same module");
  }
  Rational out(0);
  for (const auto& [mu, a] : u.terms()) {
    for (const auto& [mv, b] : v.terms()) {
      if (mu.level() != mv.level()) continue;
      out += a * b * pair(mu, mv);
    }
  }
  return out;
}

Rational pair(const ModuleVector& u, const ModuleVector& v) {
  if (!(u.module() == v.module())) throw DomainError("pairing needs both vectors in the same module");
  FormEvaluator f(u.module());
  return f.pair(u, v);
}

namespace {

GramMatrix empty_gram(const VermaModule& module, int level) {
  if (level < 0) throw DomainError("level must be non-negative");
  GramMatrix g{module, level, basis(level, module.vacuum()), {}};
  g.entries.assign(g.basis.size(), std::vector<Rational>(g.basis.size(), Rational(0)));
  return g;
}

}  // namespace

GramMatrix gram_serial(const VermaModule& module, int level) {
  GramMatrix g = empty_gram(module, level);
  FormEvaluator f(module);
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    for (std::size_t j = i; j < g.basis.size(); ++j) {
      g.entries[i][j] = g.entries[j][i] = f.pair(g.basis[i], g.basis[j]);
    }
  }
  return g;
}

GramMatrix gram(const VermaModule& module, int level) {
  GramMatrix g = empty_gram(module, level);
  const long n = static_cast<long>(g.basis.size());
#pragma omp parallel
  {
    FormEvaluator f(module);
#pragma omp for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      for (long j = i; j < n; ++j) g.entries[i][j] = g.entries[j][i] = f.pair(g.basis[i], g.basis[j]);
    }
  }
  return g;
}

Rational det_gram(const GramMatrix& g) { return determinant(g.entries); }

std::vector<ModuleVector> radical_basis(const GramMatrix& g) {
  std::vector<ModuleVector> out;
  for (const auto& x : kernel_basis(g.entries)) {
    ModuleVector v(g.module);
    for (std::size_t i = 0; i < x.size(); ++i) v.add(g.basis[i], x[i]);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_singular(const ModuleVector& v) {
  int lvl = v.homogeneous_level();
  if (lvl == -2) throw DomainError("singular-vector test needs a homogeneous vector");
  if (lvl < 1) throw DomainError("singular-vector test needs a nonzero vector of level >= 1");
  ModuleAction action(v.module());
  for (auto g : {Generator::L(1), Generator::L(2), Generator::W(1), Generator::W(2)}) {
    if (!action.apply(g, v).is_zero()) return false;
  }
  return true;
}

IrreducibilityDecision verma_irreducible(const HighestWeight& w) {
  IrreducibilityDecision d;
  if (w.c.is_zero()) {
    // Every m contributes 2 h2.
    if (w.h2.is_zero()) {
      d.irreducible = false;
      d.witness_m = 1;
      d.trivial_vacuum = w.h1.is_zero();
    }
    return d;
  }
  Rational m2 = (w.c - Rational(24) * w.h2) / w.c;
  if (!m2.is_integer() || m2.sign() <= 0) return d;
  auto root = m2.sqrt_exact();
  if (!root) return d;
  d.irreducible = false;
  d.witness_m = root->num().get_si();
  return d;
}

}  // namespace w22
