#include "w22/charges.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "w22/errors.hpp"

namespace w22 {

bool MinimalPair::valid(long s, long t) { return 1 < s && s < t && std::gcd(s, t) == 1; }

MinimalPair MinimalPair::make(long s, long t) {
  if (!valid(s, t)) {
    throw DomainError("(" + std::to_string(s) + "," + std::to_string(t) +
                      ") is not a coprime pair with 1 < s < t");
  }
  return MinimalPair{s, t};
}

Rational minimal_charge(const MinimalPair& p) {
  MinimalPair q = MinimalPair::make(p.s, p.t);
  Rational d(q.s - q.t);
  return Rational(1) - Rational(6) * d * d / (Rational(q.s) * Rational(q.t));
}

std::optional<MinimalPair> is_minimal_charge(const Rational& c) {
  Rational b = Rational(13) - c;
  auto root = (b * b - Rational(144)).sqrt_exact();
  if (!root) return std::nullopt;
  Rational ratio = (b + *root) / Rational(12);
  if (ratio <= Rational(1)) return std::nullopt;
  BigInt s = ratio.den(), t = ratio.num();
  if (!s.fits_slong_p() || !t.fits_slong_p()) return std::nullopt;
  if (!MinimalPair::valid(s.get_si(), t.get_si())) return std::nullopt;
  return MinimalPair{s.get_si(), t.get_si()};
}

NoncongruentResult noncongruent_multiple(const MinimalPair& p) {
  Rational c = minimal_charge(p);
  if (c.is_zero()) throw DomainError("c_" + p.str() + " = 0 has no non-congruent multiple");
  NoncongruentResult res;
  res.modulus = 6 * p.s * p.t;
  std::vector<long> divisors;
  for (long d = 1; d <= res.modulus; ++d) {
    if (res.modulus % d == 0) divisors.push_back(d);
  }
  std::set<long> forbidden;
  for (long s1 : divisors) {
    for (long t1 : divisors) {
      if (!MinimalPair::valid(s1, t1)) continue;
      NoncongruentEntry e{MinimalPair{s1, t1}, minimal_charge(MinimalPair{s1, t1}), std::nullopt};
      Rational ratio = e.charge / c;
      if (ratio.is_integer() && ratio.sign() > 0) {
        e.multiple = ratio.num().get_si();
        forbidden.insert(*e.multiple);
        res.collisions.push_back(e);
      }
      res.examined.push_back(std::move(e));
    }
  }
  long k = 1;
  while (forbidden.count(k)) ++k;
  res.k = k;
  return res;
}

namespace {

void solutions_for_t(long t1, std::vector<PairSolution>& out) {
  for (long s1 = 2; s1 < t1; ++s1) {
    if (std::gcd(s1, t1) != 1) continue;
    MinimalPair p1{s1, t1};
    auto p2 = is_minimal_charge(Rational(1) - minimal_charge(p1));
    if (!p2) continue;
    out.emplace_back(std::min(p1, *p2), std::max(p1, *p2));
  }
}

std::vector<PairSolution> finish(std::vector<PairSolution> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_bound(long bound) {
  if (bound < 4) throw DomainError("search bound must be at least 4 (got " + std::to_string(bound) + ")");
}

}  // namespace

std::vector<PairSolution> solve_sum_one_serial(long bound) {
  check_bound(bound);
  std::vector<PairSolution> out;
  for (long t1 = 3; t1 <= bound; ++t1) solutions_for_t(t1, out);
  return finish(std::move(out));
}

std::vector<PairSolution> solve_sum_one(long bound) {
  check_bound(bound);
  std::vector<PairSolution> out;
#pragma omp parallel
  {
    std::vector<PairSolution> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long t1 = 3; t1 <= bound; ++t1) solutions_for_t(t1, local);
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  return finish(std::move(out));
}

bool CurvePoint::finite() const { return x && y && !x->is_zero() && !y->is_zero(); }

std::string CurvePoint::str() const {
  auto s = [](const std::optional<Rational>& v) { return v ? v->str() : std::string("inf"); };
  return "(" + s(x) + "," + s(y) + ")";
}

bool on_curve(const CurvePoint& p) {
  if (!p.finite()) return false;
  const Rational& x = *p.x;
  const Rational& y = *p.y;
  Rational lhs = Rational(6) * x * y * y + Rational(6) * x * x * y + Rational(6) * x + Rational(6) * y;
  return lhs == Rational(25) * x * y;
}

namespace {

std::optional<Rational> invert(const std::optional<Rational>& v) {
  if (!v) return Rational(0);
  if (v->is_zero()) return std::nullopt;
  return Rational(1) / *v;
}

std::vector<CurvePoint> orbit_of(const CurvePoint& seed) {
  std::set<CurvePoint> seen{seed};
  std::vector<CurvePoint> frontier{seed};
  while (!frontier.empty()) {
    CurvePoint p = frontier.back();
    frontier.pop_back();
    for (CurvePoint q : {CurvePoint{invert(p.x), p.y}, CurvePoint{p.x, invert(p.y)}, CurvePoint{p.y, p.x}}) {
      if (seen.insert(q).second) frontier.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<CurvePoint> curve_orbit() {
  const CurvePoint seeds[] = {
      {Rational(3, 4), Rational(3, 4)},
      {Rational(1), Rational(2, 3)},
      {Rational(-1), Rational(6)},
      {std::nullopt, std::nullopt},
  };
  std::vector<CurvePoint> out;
  std::set<CurvePoint> seen;
  for (const auto& seed : seeds) {
    for (const auto& p : orbit_of(seed)) {
      if (!seen.insert(p).second) continue;
      if (p.finite() && !on_curve(p)) throw std::logic_error("orbit point " + p.str() + " is not on the curve");
      out.push_back(p);
    }
  }
  return out;
}

std::vector<CurvePoint> minimal_pair_points(const std::vector<CurvePoint>& points) {
  auto admissible = [](const Rational& v) {
    return v.num().fits_slong_p() && v.den().fits_slong_p() &&
           MinimalPair::valid(v.num().get_si(), v.den().get_si());
  };
  std::vector<CurvePoint> out;
  for (const auto& p : points) {
    if (p.finite() && admissible(*p.x) && admissible(*p.y)) out.push_back(p);
  }
  return out;
}

}  // namespace w22
