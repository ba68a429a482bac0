#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "w22/rational.hpp"

namespace w22 {

/// Coprime integers 1 < s < t labelling the minimal-model charge c_{s,t}.
struct MinimalPair {
  long s = 0;
  long t = 0;

  static bool valid(long s, long t);
  /// Throws DomainError unless `valid(s, t)`.
  static MinimalPair make(long s, long t);

  std::string str() const { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }
  friend auto operator<=>(const MinimalPair&, const MinimalPair&) = default;
};

/// c_{s,t} = 1 - 6 (s - t)^2 / (s t).
Rational minimal_charge(const MinimalPair& p);

/// The unique pair with c = c_{s,t}, if any. Decided exactly: c = c_{s,t} iff
/// 6 t^2 - (13 - c) s t + 6 s^2 = 0, so t/s is the larger root
/// ((13 - c) + sqrt((13 - c)^2 - 144)) / 12, which must be rational, > 1, and have
/// reduced denominator s > 1.
std::optional<MinimalPair> is_minimal_charge(const Rational& c);

struct NoncongruentEntry {
  MinimalPair pair;
  Rational charge;
  /// c_{s1,t1} / c_{s,t} when that ratio is a positive integer.
  std::optional<long> multiple;
};

struct NoncongruentResult {
  long k = 0;
  long modulus = 0;  // 6 s t; every colliding s1, t1 divides it
  std::vector<NoncongruentEntry> examined;
  std::vector<NoncongruentEntry> collisions;
};

/// Least positive k with k c_{s,t} != c_{s1,t1} for every valid pair. Any
/// collision forces s1 and t1 to divide 6 s t, so only those pairs are examined.
/// Throws DomainError when c_{s,t} = 0.
NoncongruentResult noncongruent_multiple(const MinimalPair& p);

using PairSolution = std::pair<MinimalPair, MinimalPair>;

/// All ((s1,t1),(s2,t2)) with c_{s1,t1} + c_{s2,t2} = 1 and t1 <= bound, each
/// ordered so the first pair is lexicographically smaller. The second pair is
/// found exactly by `is_minimal_charge`, so only the first is enumerated.
/// OpenMP-parallel over t1. Throws DomainError for bound < 4.
std::vector<PairSolution> solve_sum_one(long bound);
/// Single-threaded reference for `solve_sum_one`.
std::vector<PairSolution> solve_sum_one_serial(long bound);

/// Point of the curve x + 1/x + y + 1/y = 25/6 in P^1 x P^1; nullopt is infinity.
struct CurvePoint {
  std::optional<Rational> x;
  std::optional<Rational> y;

  /// Both coordinates finite and nonzero (away from the poles of x + 1/x + y + 1/y).
  bool finite() const;
  std::string str() const;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

/// 6 x y^2 + 6 x^2 y + 6 x + 6 y = 25 x y, i.e. the curve with denominators cleared.
/// Only meaningful for finite points.
bool on_curve(const CurvePoint& p);

/// Orbits of (3/4,3/4), (1,2/3), (-1,6) and (inf,inf) under the group of order 8
/// generated by (x,y) -> (1/x,y), (x,1/y), (y,x): 12 finite points followed by the
/// 4 boundary points. Throws std::logic_error if a finite point misses the curve.
std::vector<CurvePoint> curve_orbit();

/// Finite points whose coordinates are both s/t for a valid minimal pair (s,t).
std::vector<CurvePoint> minimal_pair_points(const std::vector<CurvePoint>& points);

}  // namespace w22
