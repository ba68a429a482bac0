#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "w22/errors.hpp"
#include "w22/growth.hpp"
#include "w22/rational.hpp"

namespace w22 {

/// Coordinates in the algebra's declared basis (e_1, e_2).
struct Vec2 {
  Rational a;
  Rational b;

  friend Vec2 operator+(const Vec2& x, const Vec2& y) { return {x.a + y.a, x.b + y.b}; }
  friend Vec2 operator-(const Vec2& x, const Vec2& y) { return {x.a - y.a, x.b - y.b}; }
  friend Vec2 operator*(const Rational& f, const Vec2& x) { return {f * x.a, f * x.b}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

/// A structure-constant or form record that breaks one of the algebra axioms.
class AxiomError : public DomainError {
 public:
  AxiomError(std::string axiom, const std::string& detail)
      : DomainError(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Two-dimensional commutative associative algebra with identity and an
/// associative symmetric form, i.e. a weight-2 Griess algebra with identity omega/2.
class CommAlgebra2 {
 public:
  using Table = std::array<std::array<Vec2, 2>, 2>;
  using Form = std::array<std::array<Rational, 2>, 2>;

  /// Validates commutativity, associativity, the identity, form symmetry and
  /// form associativity (ab, c) = (a, bc); throws AxiomError naming the first failure.
  static CommAlgebra2 make(std::array<std::string, 2> labels, Table products, Form form);

  const std::array<std::string, 2>& labels() const { return labels_; }
  const Table& products() const { return products_; }
  const Form& form_matrix() const { return form_; }
  /// The identity element (omega/2).
  const Vec2& unit() const { return unit_; }

  Vec2 mul(const Vec2& x, const Vec2& y) const;
  Rational form(const Vec2& x, const Vec2& y) const;
  std::string str(const Vec2& x) const;

 private:
  CommAlgebra2() = default;
  std::array<std::string, 2> labels_;
  Table products_;
  Form form_;
  Vec2 unit_;
};

/// The nilpotent radical: nullopt when semisimple, else a spanning vector x with x^2 = 0.
std::optional<Vec2> radical(const CommAlgebra2& a);

/// Primitive idempotents p1 + p2 = unit, p1 p2 = 0. Throws DomainError for a
/// non-semisimple algebra or when the split needs an irrational square root.
std::pair<Vec2, Vec2> idempotent_decomposition(const CommAlgebra2& a);

struct GriessVerdict {
  enum class Kind { semisimple, radical };
  Kind kind = Kind::semisimple;
  Rational c;
  // semisimple: omega = omega1 + omega2 with omega_i = 2 p_i and c_i = (omega_i, omega_i)
  Rational c1, c2;
  Vec2 p1, p2;
  // radical: nilpotent x normalized so that (omega, x) = c
  Vec2 nilpotent;
};

/// Dichotomy for the weight-2 algebra at central charge c != 0. The form must be
/// nondegenerate and normalized so that (omega, omega) = c with omega = 2 * unit.
GriessVerdict classify(const CommAlgebra2& a, const Rational& c);

using WeightPair = std::pair<Rational, Rational>;

/// The 9 lowest-weight pairs (h1, h2) in {0, 1/2, 1/16}^2.
std::vector<WeightPair> ising_square_modules();
/// Those with h1 + h2 an integer: (0,0) and (1/2,1/2).
std::vector<WeightPair> ising_module_filter();

struct TraceStep {
  int step = 0;
  std::string claim;
  std::string anchor;
  std::string outcome;
};

struct PipelineResult {
  std::string verdict;
  bool hypotheses_met = false;
  std::vector<TraceStep> trace;
  std::vector<WeightPair> surviving_modules;
};

struct PipelineOptions {
  std::size_t growth_order = 400;
  long search_bound = 200;
  GrowthConfig growth;
};

/// Runs the characterization chain for a moonshine-type algebra with the given
/// central charge, effective central charge, dim V_1, dim V_2 and Griess data.
/// Failures are verdicts, never exceptions.
PipelineResult characterization_pipeline(const Rational& c, const Rational& c_tilde, long dim_v1,
                                         long dim_v2, const CommAlgebra2& griess,
                                         const PipelineOptions& options = {});

}  // namespace w22
