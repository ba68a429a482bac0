#pragma once

// Test-side reference implementations. Nothing here calls into the library
// beyond Rational and the plain data types, so agreement is a real check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "w22/rational.hpp"

namespace oracle {

using w22::Rational;
using Parts = std::vector<int>;

// All partitions of n with parts >= min_part, built from multiplicity vectors
// (one loop per part size) rather than by descending recursion.
inline std::set<Parts> partitions(int n, int min_part = 1) {
  std::set<Parts> out;
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> go = [&](int size, int left) {
    if (left == 0) {
      Parts p;
      for (int k = n; k >= 1; --k) p.insert(p.end(), static_cast<std::size_t>(mult[k]), k);
      out.insert(p);
      return;
    }
    if (size > left) return;
    for (int m = left / size; m >= 0; --m) {
      mult[size] = m;
      go(size + 1, left - m * size);
    }
    mult[size] = 0;
  };
  if (n == 0) return {Parts{}};
  go(std::max(min_part, 1), n);
  return out;
}

// Number of (lambda, mu) with |lambda| + |mu| = n.
inline long partition_pairs(int n, int min_part) {
  long total = 0;
  for (int d = 0; d <= n; ++d) {
    total += static_cast<long>(partitions(d, min_part).size() * partitions(n - d, min_part).size());
  }
  return total;
}

// Truncated integer polynomial product.
inline std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, std::size_t order) {
  std::vector<long> out(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// prod_{n=1}^{order} (1 - q^n), multiplied out factor by factor.
inline std::vector<long> euler_product(std::size_t order) {
  std::vector<long> acc{1};
  for (std::size_t n = 1; n <= order; ++n) {
    std::vector<long> f(n + 1, 0);
    f[0] = 1;
    f[n] = -1;
    acc = poly_mul(acc, f, order);
  }
  acc.resize(order + 1, 0);
  return acc;
}

// ---------------------------------------------------------------------------
// W(2,2) letters and U(g) rewriting, independent of the library.

struct Letter {
  char fam;  // 'L', 'W' or 'C'
  int mode;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};
using LWord = std::vector<Letter>;
using Combo = std::vector<std::pair<Letter, Rational>>;

inline Combo bracket(const Letter& a, const Letter& b) {
  if (a.fam == 'C' || b.fam == 'C') return {};
  if (a.fam == 'W' && b.fam == 'W') return {};
  Rational central = a.mode + b.mode == 0 ? Rational(a.mode * a.mode * a.mode - a.mode, 12) : Rational(0);
  if (a.fam == 'L') {
    Combo out;
    char fam = b.fam;  // [L, L] -> L, [L, W] -> W
    if (a.mode != b.mode) out.push_back({{fam, a.mode + b.mode}, Rational(a.mode - b.mode)});
    if (!central.is_zero()) out.push_back({{'C', 0}, central});
    return out;
  }
  // [W_m, L_n] = -[L_n, W_m]
  Combo out;
  for (auto [x, c] : bracket(b, a)) out.push_back({x, -c});
  return out;
}

struct Weight {
  Rational c, h1, h2;
};

// <1| word |1> for the Verma module: the vacuum expectation of the product,
// found by pushing the rightmost raising letter to the right end.
class Expectation {
 public:
  explicit Expectation(Weight w) : w_(std::move(w)) {}

  Rational operator()(const LWord& word) {
    int total = 0;
    for (const auto& x : word) total += x.mode;
    if (total != 0) return 0;
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    Rational r = eval(word);
    memo_.emplace(word, r);
    return r;
  }

 private:
  Rational eval(const LWord& word) {
    if (word.empty()) return 1;
    const Letter& last = word.back();
    LWord rest(word.begin(), word.end() - 1);
    if (last.fam == 'C') return w_.c * (*this)(rest);
    if (last.mode > 0) return 0;
    if (last.mode == 0) return (last.fam == 'L' ? w_.h1 : w_.h2) * (*this)(rest);
    const Letter& first = word.front();
    if (first.fam != 'C' && first.mode < 0) return 0;
    // rightmost raising letter with a non-raising right neighbour
    int i = static_cast<int>(word.size()) - 2;
    while (i >= 0 && !(word[i].fam != 'C' && word[i].mode > 0)) --i;
    if (i < 0) return 0;  // no raising letter but nonzero level impossible; all zero-mode handled
    LWord swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    Rational r = (*this)(swapped);
    for (const auto& [x, c] : bracket(word[i], word[i + 1])) {
      LWord shorter(word.begin(), word.begin() + i);
      shorter.push_back(x);
      shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
      r += c * (*this)(shorter);
    }
    return r;
  }

  Weight w_;
  std::map<LWord, Rational> memo_;
};

// Letters of a monomial W_{-w1}..W_{-ws} L_{-l1}..L_{-lt}.
inline LWord monomial_word(const Parts& w, const Parts& l) {
  LWord out;
  for (int m : w) out.push_back({'W', -m});
  for (int n : l) out.push_back({'L', -n});
  return out;
}

// (u 1, v 1) = <1| theta(u) v |1>.
inline Rational pair(Expectation& e, const Parts& uw, const Parts& ul, const Parts& vw, const Parts& vl) {
  LWord word;
  LWord u = monomial_word(uw, ul);
  for (auto it = u.rbegin(); it != u.rend(); ++it) word.push_back({it->fam, -it->mode});
  LWord v = monomial_word(vw, vl);
  word.insert(word.end(), v.begin(), v.end());
  return e(word);
}

// Module action by sorting a whole word into PBW shape. Lowering letters come
// first (W before L, most negative mode first); with `vacuum` the -1 modes are
// moved to the right end of the lowering block, where they kill the vacuum.
class ActionOracle {
 public:
  using Vec = std::map<std::pair<Parts, Parts>, Rational>;

  ActionOracle(Weight w, bool vacuum) : w_(std::move(w)), vacuum_(vacuum) {}

  Vec apply(const Letter& g, const Parts& mw, const Parts& ml) {
    LWord word{g};
    LWord m = monomial_word(mw, ml);
    word.insert(word.end(), m.begin(), m.end());
    Vec out;
    for (const auto& [sorted, c] : sort(word)) {
      auto v = evaluate(sorted);
      if (!v) continue;
      Rational x = c * v->second;
      auto& slot = out[v->first];
      slot += x;
      if (slot.is_zero()) out.erase(v->first);
    }
    return out;
  }

 private:
  std::tuple<int, int, int, int> key(const Letter& x) const {
    if (x.fam == 'C' || x.mode == 0) return {1, x.fam == 'W' ? 0 : 1, 0, 0};
    if (x.mode > 0) return {2, x.fam == 'W' ? 0 : 1, x.mode, 0};
    int last = vacuum_ && x.mode == -1 ? 1 : 0;
    return {0, last, x.fam == 'W' ? 0 : 1, x.mode};
  }

  std::map<LWord, Rational> sort(const LWord& word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    std::size_t i = 0;
    while (i + 1 < word.size() && !(key(word[i + 1]) < key(word[i]))) ++i;
    std::map<LWord, Rational> out;
    auto add = [&](const std::map<LWord, Rational>& src, const Rational& f) {
      for (const auto& [w, c] : src) {
        auto& slot = out[w];
        slot += f * c;
        if (slot.is_zero()) out.erase(w);
      }
    };
    if (i + 1 >= word.size()) {
      out[word] = 1;
    } else {
      LWord swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      add(sort(swapped), 1);
      for (const auto& [x, c] : bracket(word[i], word[i + 1])) {
        LWord shorter(word.begin(), word.begin() + static_cast<long>(i));
        shorter.push_back(x);
        shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 2, word.end());
        add(sort(shorter), c);
      }
    }
    memo_.emplace(word, out);
    return out;
  }

  // A sorted word applied to the highest-weight vector.
  std::optional<std::pair<std::pair<Parts, Parts>, Rational>> evaluate(const LWord& sorted) const {
    Rational scalar = 1;
    Parts w, l;
    for (const auto& x : sorted) {
      if (x.fam == 'C') {
        scalar *= w_.c;
      } else if (x.mode > 0) {
        return std::nullopt;
      } else if (x.mode == 0) {
        scalar *= x.fam == 'L' ? w_.h1 : w_.h2;
      } else {
        if (vacuum_ && x.mode == -1) return std::nullopt;
        (x.fam == 'W' ? w : l).push_back(-x.mode);
      }
    }
    if (scalar.is_zero()) return std::nullopt;
    return std::make_pair(std::make_pair(w, l), scalar);
  }

  Weight w_;
  bool vacuum_;
  std::map<LWord, std::map<LWord, Rational>> memo_;
};

// ---------------------------------------------------------------------------
// Charges.

inline Rational charge(long s, long t) { return Rational(1) - Rational(6 * (s - t) * (s - t), s * t); }

// All valid (s, t) with t <= tmax, and their charges.
inline std::map<std::pair<long, long>, Rational> charge_table(long tmax) {
  std::map<std::pair<long, long>, Rational> out;
  for (long t = 3; t <= tmax; ++t) {
    for (long s = 2; s < t; ++s) {
      if (std::gcd(s, t) == 1) out[{s, t}] = charge(s, t);
    }
  }
  return out;
}

}  // namespace oracle
