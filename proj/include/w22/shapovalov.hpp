#pragma once

#include <optional>
#include <vector>

#include "w22/linalg.hpp"
#include "w22/verma.hpp"

namespace w22 {

/// Evaluates the invariant symmetric form with (1,1) = 1, (L_m u, v) = (u, L_{-m} v)
/// and (W_m u, v) = (u, W_{-m} v). Holds a memoized action; one per thread.
class FormEvaluator {
 public:
  explicit FormEvaluator(VermaModule module) : action_(std::move(module)) {}

  /// (x_1 .. x_r 1, v) is the coefficient of 1 in adjoint(x_r) .. adjoint(x_1) v.
  Rational pair(const Monomial& u, const Monomial& v);
  Rational pair(const ModuleVector& u, const ModuleVector& v);

  ModuleAction& action() { return action_; }

 private:
  ModuleAction action_;
};

/// Throws DomainError when the vectors belong to different modules.
Rational pair(const ModuleVector& u, const ModuleVector& v);

struct GramMatrix {
  VermaModule module;
  int level = 0;
  std::vector<Monomial> basis;
  Matrix entries;
};

/// Level-n Gram matrix over basis(n, module.vacuum()). Only the upper triangle is
/// evaluated (the form is symmetric); rows run in parallel with OpenMP and each
/// thread owns its own FormEvaluator.
GramMatrix gram(const VermaModule& module, int level);
/// Single-threaded reference for `gram`.
GramMatrix gram_serial(const VermaModule& module, int level);

Rational det_gram(const GramMatrix& g);

/// Kernel of the Gram matrix as module vectors; empty iff the determinant is nonzero.
std::vector<ModuleVector> radical_basis(const GramMatrix& g);

/// True iff L_1, L_2, W_1, W_2 all kill v. Throws DomainError unless v is a
/// nonzero homogeneous vector of level >= 1.
bool is_singular(const ModuleVector& v);

struct IrreducibilityDecision {
  bool irreducible = true;
  /// Least positive m with (m^2 - 1) c / 12 + 2 h2 = 0.
  std::optional<long> witness_m;
  /// Set for c = h1 = h2 = 0, where the irreducible quotient is one dimensional.
  bool trivial_vacuum = false;
};

/// Exact decision: V(c,h1,h2) is reducible iff (m^2 - 1) c / 12 + 2 h2 = 0 for
/// some nonzero integer m. For c != 0 this means (c - 24 h2) / c is the square
/// of a nonzero integer; for c = 0 it means h2 = 0 (witness m = 1).
IrreducibilityDecision verma_irreducible(const HighestWeight& w);

}  // namespace w22
