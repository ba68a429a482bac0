#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "w22/algebra.hpp"

namespace w22 {

/// Product of generators read left to right.
using Word = std::vector<Generator>;

std::string word_str(const Word& w);

/// A word is in PBW normal form when its letters are weakly increasing in the
/// Generator order: C^k, then W modes ascending, then L modes ascending. That is
/// C^k W_{-m_1}..W_{-m_s} W_0^a W_{p_1}.. L_{-n_1}..L_{-n_t} L_0^b L_{q_1}..
bool is_pbw(const Word& w);

/// Element of U(W(2,2)): finite combination of words with no zero coefficients.
/// Elements returned by the operations below only carry PBW words.
class UeaElement {
 public:
  UeaElement() = default;
  UeaElement(Word w, Rational coeff = Rational(1));

  static UeaElement identity() { return UeaElement(Word{}); }
  static UeaElement from_lie(const LieCombination& x);

  void add(const Word& w, const Rational& coeff);
  UeaElement& operator+=(const UeaElement& o);
  UeaElement& operator-=(const UeaElement& o);
  UeaElement scaled(const Rational& f) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const& { return terms_; }
  std::map<Word, Rational> terms() && { return std::move(terms_); }
  Rational coeff(const Word& w) const;

  /// "coeff * word + ..." in a deterministic order; the empty word renders as "1".
  std::string str() const;

  friend bool operator==(const UeaElement&, const UeaElement&) = default;

 private:
  std::map<Word, Rational> terms_;
};

/// Rewrites a word into PBW normal form using xy = yx + [x,y] on the leftmost
/// inversion. Each step either removes one inversion at fixed length or
/// replaces two letters by one, so (length, inversions) strictly decreases.
UeaElement normal_order(const Word& w);

/// Renormalizes an arbitrary combination of words.
UeaElement normal_order(const UeaElement& a);

UeaElement multiply(const UeaElement& a, const UeaElement& b);

/// Anti-automorphism extending the generator adjoint: reverses each word,
/// maps every letter through `adjoint`, then renormalizes.
UeaElement adjoint_element(const UeaElement& a);

}  // namespace w22
