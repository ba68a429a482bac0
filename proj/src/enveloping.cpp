#include "w22/enveloping.hpp"

#include <algorithm>

namespace w22 {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) out += g.str();
  return out;
}

bool is_pbw(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

UeaElement::UeaElement(Word w, Rational coeff) { add(w, coeff); }

UeaElement UeaElement::from_lie(const LieCombination& x) {
  UeaElement out;
  for (const auto& [g, c] : x.terms()) out.add(Word{g}, c);
  return out;
}

void UeaElement::add(const Word& w, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UeaElement& UeaElement::operator+=(const UeaElement& o) {
  for (const auto& [w, x] : o.terms_) add(w, x);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& o) {
  for (const auto& [w, x] : o.terms_) add(w, -x);
  return *this;
}

UeaElement UeaElement::scaled(const Rational& f) const {
  UeaElement out;
  for (const auto& [w, x] : terms_) out.add(w, x * f);
  return out;
}

Rational UeaElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string UeaElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, x] : terms_) {
    if (!out.empty()) out += " + ";
    out += x.str() + " * " + word_str(w);
  }
  return out;
}

namespace {

class Orderer {
 public:
  UeaElement order(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
    UeaElement result;
    if (i + 1 >= w.size()) {
      result = UeaElement(w);
    } else {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      result = order(swapped);
      const LieCombination br = bracket(w[i], w[i + 1]);
      for (const auto& [g, x] : br.terms()) {
        Word shorter(w.begin(), w.begin() + static_cast<long>(i));
        shorter.push_back(g);
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        result += order(shorter).scaled(x);
      }
    }
    memo_.emplace(w, result);
    return result;
  }

 private:
  std::map<Word, UeaElement> memo_;
};

}  // namespace

UeaElement normal_order(const Word& w) { return Orderer{}.order(w); }

UeaElement normal_order(const UeaElement& a) {
  Orderer o;
  UeaElement out;
  for (const auto& [w, x] : a.terms()) out += o.order(w).scaled(x);
  return out;
}

UeaElement multiply(const UeaElement& a, const UeaElement& b) {
  Orderer o;
  UeaElement out;
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out += o.order(w).scaled(x * y);
    }
  }
  return out;
}

UeaElement adjoint_element(const UeaElement& a) {
  UeaElement raw;
  for (const auto& [w, x] : a.terms()) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) g = adjoint(g);
    raw.add(r, x);
  }
  return normal_order(raw);
}

}  // namespace w22
