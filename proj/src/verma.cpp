#include "w22/verma.hpp"

#include <algorithm>

#include "w22/errors.hpp"

namespace w22 {

bool Monomial::has_part_one() const {
  return (!w.empty() && w.back() == 1) || (!l.empty() && l.back() == 1);
}

Word Monomial::letters() const {
  Word out;
  out.reserve(w.size() + l.size());
  for (int k : w) out.push_back(Generator::W(-k));
  for (int k : l) out.push_back(Generator::L(-k));
  return out;
}

bool BasisOrder::operator()(const Monomial& a, const Monomial& b) const {
  int la = a.level(), lb = b.level();
  if (la != lb) return la < lb;
  int da = a.w_degree(), db = b.w_degree();
  if (da != db) return da > db;
  if (a.w != b.w) return a.w > b.w;
  return a.l > b.l;
}

VermaModule VermaModule::vacuum_quotient(HighestWeight w) {
  if (!w.h1.is_zero() || !w.h2.is_zero()) {
    throw DomainError("the vacuum quotient needs h1 = h2 = 0 (got h1 = " + w.h1.str() +
                      ", h2 = " + w.h2.str() + ")");
  }
  return VermaModule(std::move(w), true);
}

ModuleVector::ModuleVector(VermaModule module, Terms terms) : module_(std::move(module)) {
  for (auto& [m, x] : terms) add(m, x);
}

ModuleVector ModuleVector::highest_weight_vector(const VermaModule& m) {
  ModuleVector v(m);
  v.add(Monomial{}, Rational(1));
  return v;
}

ModuleVector ModuleVector::basis_vector(const VermaModule& m, const Monomial& mono) {
  auto bad = [](const Partition& p) {
    return !std::is_sorted(p.rbegin(), p.rend()) || (!p.empty() && p.back() < 1);
  };
  if (bad(mono.w) || bad(mono.l)) throw DomainError("monomial parts must be weakly decreasing and positive");
  if (m.vacuum() && mono.has_part_one()) {
    throw DomainError("monomials of the vacuum quotient have no part equal to 1");
  }
  ModuleVector v(m);
  v.add(mono, Rational(1));
  return v;
}

Rational ModuleVector::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ModuleVector::add(const Monomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (!(o.module_ == module_)) throw DomainError("vectors live in different modules");
  for (const auto& [m, x] : o.terms_) add(m, x);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (!(o.module_ == module_)) throw DomainError("vectors live in different modules");
  for (const auto& [m, x] : o.terms_) add(m, -x);
  return *this;
}

ModuleVector ModuleVector::scaled(const Rational& f) const {
  ModuleVector out(module_);
  for (const auto& [m, x] : terms_) out.add(m, x * f);
  return out;
}

int ModuleVector::homogeneous_level() const {
  if (terms_.empty()) return -1;
  int lvl = terms_.begin()->first.level();
  for (const auto& [m, x] : terms_) {
    if (m.level() != lvl) return -2;
  }
  return lvl;
}

std::string ModuleVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, x] : terms_) {
    if (!out.empty()) out += " + ";
    out += x.str() + " * " + (m.letters().empty() ? std::string("1") : word_str(m.letters()) + "1");
  }
  return out;
}

std::vector<Monomial> basis(int n, bool exclude_ones) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  int min_part = exclude_ones ? 2 : 1;
  for (int d = n; d >= 0; --d) {
    auto ws = partitions(d, min_part);
    auto ls = partitions(n - d, min_part);
    for (const auto& wp : ws) {
      for (const auto& lp : ls) out.push_back(Monomial{wp, lp});
    }
  }
  return out;
}

std::vector<BigInt> graded_dims(int max_level, bool exclude_ones) {
  if (max_level < 0) return {};
  auto p = partition_counts(max_level, exclude_ones ? 2 : 1);
  std::vector<BigInt> out(static_cast<std::size_t>(max_level) + 1, 0);
  for (int n = 0; n <= max_level; ++n) {
    for (int d = 0; d <= n; ++d) out[n] += p[d] * p[n - d];
  }
  return out;
}

BigInt graded_dim(int n, bool exclude_ones) {
  if (n < 0) return 0;
  return graded_dims(n, exclude_ones).back();
}

bool ModuleAction::absorbs(const Generator& g, const Monomial& m) const {
  if (!g.lowers()) return false;
  if (module_.vacuum() && g.mode == -1) return false;
  if (m.w.empty() && m.l.empty()) return true;
  Generator first = m.w.empty() ? Generator::L(-m.l.front()) : Generator::W(-m.w.front());
  return !(first < g);
}

void ModuleAction::accumulate(Terms& into, const Generator& g, const Terms& src,
                              const Rational& factor) {
  for (const auto& [m, x] : src) {
    const Terms& img = apply(g, m);
    Rational f = x * factor;
    for (const auto& [m2, y] : img) {
      auto [it, inserted] = into.try_emplace(m2, y * f);
      if (!inserted) {
        it->second += y * f;
        if (it->second.is_zero()) into.erase(it);
      }
    }
  }
}

Terms ModuleAction::compute(const Generator& g, const Monomial& m) {
  const HighestWeight& hw = module_.weight();
  Terms out;
  if (g.is_central()) {
    if (!hw.c.is_zero()) out.emplace(m, hw.c);
    return out;
  }
  if (absorbs(g, m)) {
    Monomial grown = m;
    Partition& part = g.family == Family::W ? grown.w : grown.l;
    part.insert(part.begin(), -g.mode);
    out.emplace(std::move(grown), Rational(1));
    return out;
  }
  if (m.w.empty() && m.l.empty()) {
    // g hits the highest-weight vector.
    if (g.mode == 0) {
      const Rational& ev = g.family == Family::L ? hw.h1 : hw.h2;
      if (!ev.is_zero()) out.emplace(m, ev);
    }
    return out;
  }
  // g x rest = x (g rest) + [g, x] rest
  Monomial rest = m;
  Generator x;
  if (!rest.w.empty()) {
    x = Generator::W(-rest.w.front());
    rest.w.erase(rest.w.begin());
  } else {
    x = Generator::L(-rest.l.front());
    rest.l.erase(rest.l.begin());
  }
  Terms inner = apply(g, rest);  // copy: the memo map may grow below
  accumulate(out, x, inner, Rational(1));
  const LieCombination br = bracket(g, x);
  for (const auto& [y, coeff] : br.terms()) {
    Terms single;
    single.emplace(rest, Rational(1));
    accumulate(out, y, single, coeff);
  }
  return out;
}

const Terms& ModuleAction::apply(const Generator& g, const Monomial& m) {
  auto key = std::make_pair(g, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Terms t = compute(g, m);
  return memo_.emplace(std::move(key), std::move(t)).first->second;
}

ModuleVector ModuleAction::apply(const Generator& g, const ModuleVector& v) {
  if (!(v.module() == module_)) throw DomainError("vector does not belong to this module");
  Terms out;
  accumulate(out, g, v.terms(), Rational(1));
  return ModuleVector(module_, std::move(out));
}

ModuleVector ModuleAction::apply(const Word& word, const ModuleVector& v) {
  ModuleVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

ModuleVector apply(const Generator& g, const ModuleVector& v) {
  ModuleAction action(v.module());
  return action.apply(g, v);
}

}  // namespace w22
