#pragma once

#include <map>
#include <utility>
#include <vector>

#include "w22/algebra.hpp"
#include "w22/enveloping.hpp"
#include "w22/partitions.hpp"
#include "w22/rational.hpp"

namespace w22 {

struct HighestWeight {
  Rational c;
  Rational h1;  // L_0 eigenvalue
  Rational h2;  // W_0 eigenvalue

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// PBW monomial W_{-w_1}..W_{-w_s} L_{-l_1}..L_{-l_t} applied to the
/// highest-weight vector. Both partitions are weakly decreasing.
struct Monomial {
  Partition w;
  Partition l;

  int w_degree() const { return partition_sum(w); }
  int l_degree() const { return partition_sum(l); }
  int level() const { return w_degree() + l_degree(); }
  bool has_part_one() const;

  /// The lowering word, leftmost letter first.
  Word letters() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Deterministic basis order: level ascending, then W-degree descending, then
/// the W and L partitions in decreasing lexicographic order. Within a level this
/// lists the blocks S_{d, n-d} for d = n, n-1, ..., 0.
struct BasisOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Terms = std::map<Monomial, Rational, BasisOrder>;

/// Either the Verma module V(c,h1,h2) or, with `vacuum` set, its quotient by
/// the submodule generated by L_{-1}1 and W_{-1}1 (only defined at h1 = h2 = 0).
class VermaModule {
 public:
  static VermaModule verma(HighestWeight w) { return VermaModule(std::move(w), false); }
  /// Throws DomainError unless h1 = h2 = 0.
  static VermaModule vacuum_quotient(HighestWeight w);
  static VermaModule vacuum(const Rational& c) { return vacuum_quotient({c, 0, 0}); }

  const HighestWeight& weight() const { return weight_; }
  bool vacuum() const { return vacuum_; }
  /// At c = 0 the vacuum quotient is not the irreducible module (which is one
  /// dimensional); the part-one-free monomials then span but are not a basis of L(0,0,0).
  bool degenerate_vacuum() const { return vacuum_ && weight_.c.is_zero(); }
  int min_part() const { return vacuum_ ? 2 : 1; }

  friend bool operator==(const VermaModule&, const VermaModule&) = default;

 private:
  VermaModule(HighestWeight w, bool vacuum) : weight_(std::move(w)), vacuum_(vacuum) {}
  HighestWeight weight_;
  bool vacuum_ = false;
};

class ModuleVector {
 public:
  explicit ModuleVector(VermaModule module) : module_(std::move(module)) {}
  ModuleVector(VermaModule module, Terms terms);

  static ModuleVector highest_weight_vector(const VermaModule& m);
  /// Throws DomainError if the monomial is not in the module's basis family.
  static ModuleVector basis_vector(const VermaModule& m, const Monomial& mono);

  const VermaModule& module() const { return module_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  void add(const Monomial& m, const Rational& coeff);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector scaled(const Rational& f) const;

  /// Level if every term sits at the same level; -1 for the zero vector, -2 if mixed.
  int homogeneous_level() const;

  std::string str() const;

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  VermaModule module_;
  Terms terms_;
};

/// Ordered basis of the level-n piece: pairs (W-partition, L-partition) of
/// total n with every part >= 2 (exclude_ones) or >= 1.
std::vector<Monomial> basis(int n, bool exclude_ones);

/// |basis(n, exclude_ones)| computed by counting rather than enumeration.
BigInt graded_dim(int n, bool exclude_ones);
std::vector<BigInt> graded_dims(int max_level, bool exclude_ones);

/// Generator action on one module with a memo table for monomial actions.
/// Not thread-safe; give each thread its own instance.
///
/// A generator is commuted to the right through the monomial's letters until it
/// either reaches its slot in PBW order (lowering modes) or hits the
/// highest-weight vector, where positive modes kill it and L_0, W_0, C act by
/// h1, h2, c. In the vacuum quotient L_{-1} and W_{-1} also kill the vector, so
/// they are commuted right as well. Every commutation step shortens the word of
/// the bracket term, so the recursion is well founded on (length, inversions).
class ModuleAction {
 public:
  explicit ModuleAction(VermaModule module) : module_(std::move(module)) {}

  const VermaModule& module() const { return module_; }
  const Terms& apply(const Generator& g, const Monomial& m);
  ModuleVector apply(const Generator& g, const ModuleVector& v);
  /// Applies the word right to left, like an operator product.
  ModuleVector apply(const Word& word, const ModuleVector& v);

 private:
  Terms compute(const Generator& g, const Monomial& m);
  void accumulate(Terms& into, const Generator& g, const Terms& src, const Rational& factor);
  bool absorbs(const Generator& g, const Monomial& m) const;

  VermaModule module_;
  std::map<std::pair<Generator, Monomial>, Terms> memo_;
};

/// One-shot action (builds a fresh memo table).
ModuleVector apply(const Generator& g, const ModuleVector& v);

}  // namespace w22
