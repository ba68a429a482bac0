#include <doctest.h>

#include <fstream>
#include <set>

#include "generators.hpp"
#include "w22/griess.hpp"
#include "w22/json_io.hpp"

using namespace w22;

namespace {

using Table = CommAlgebra2::Table;
using Form = CommAlgebra2::Form;

const Vec2 kE1{1, 0}, kE2{0, 1}, kZero{0, 0};

CommAlgebra2 ising_square() {
  return CommAlgebra2::make({"f1", "f2"}, Table{{{kE1, kZero}, {kZero, kE2}}},
                            Form{{{Rational(1, 8), 0}, {0, Rational(1, 8)}}});
}

CommAlgebra2 radical_example() {
  return CommAlgebra2::make({"u", "v"}, Table{{{kE1, kE2}, {kE2, kZero}}},
                            Form{{{Rational(1, 4), Rational(1, 2)}, {Rational(1, 2), 0}}});
}

// u unit, v^2 = v
CommAlgebra2 idempotent_v() {
  return CommAlgebra2::make({"u", "v"}, Table{{{kE1, kE2}, {kE2, kE2}}},
                            Form{{{Rational(1, 4), Rational(1, 8)}, {Rational(1, 8), Rational(1, 8)}}});
}

// u unit, v^2 = 2u: splits only over Q(sqrt 2)
CommAlgebra2 irrational() {
  return CommAlgebra2::make({"u", "v"}, Table{{{kE1, kE2}, {kE2, Vec2{2, 0}}}},
                            Form{{{Rational(1, 4), 0}, {0, Rational(1, 2)}}});
}

// Orthogonal idempotents with (omega_i, omega_i) = c_i.
CommAlgebra2 split_with(const Rational& c1, const Rational& c2) {
  return CommAlgebra2::make({"f1", "f2"}, Table{{{kE1, kZero}, {kZero, kE2}}}, Form{{{c1 / 4, 0}, {0, c2 / 4}}});
}

Json file(const std::string& name) {
  std::ifstream in(std::string(W22_DATA_DIR) + "/" + name);
  return Json::parse(in);
}

struct Generated {
  CommAlgebra2 algebra;
  bool semisimple;
  Rational c;
};

// Random algebra of a known type, written in a random basis.
Generated random_algebra(gen::Source& g) {
  bool semisimple = g.coin();
  // standard basis: (f1, f2) idempotents, or (u, x) with x^2 = 0
  Table std_table = semisimple ? Table{{{kE1, kZero}, {kZero, kE2}}} : Table{{{kE1, kE2}, {kE2, kZero}}};
  Form std_form;
  if (semisimple) {
    std_form = Form{{{g.nonzero_rational(), 0}, {0, g.nonzero_rational()}}};
  } else {
    std_form = Form{{{g.rational(), g.nonzero_rational()}, {0, 0}}};
    std_form[1][0] = std_form[0][1];
  }
  Rational p[2][2];
  do {
    for (auto& row : p) {
      for (auto& x : row) x = Rational(g.integer(-3, 3));
    }
  } while ((p[0][0] * p[1][1] - p[0][1] * p[1][0]).is_zero());
  Rational det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
  Rational q[2][2] = {{p[1][1] / det, -p[0][1] / det}, {-p[1][0] / det, p[0][0] / det}};
  // new e_i = sum_j p[i][j] s_j; a vector with std coords (a, b) has new coords (a, b) q
  auto to_new = [&](const Vec2& v) { return Vec2{v.a * q[0][0] + v.b * q[1][0], v.a * q[0][1] + v.b * q[1][1]}; };
  Table t;
  Form f;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Vec2 prod{0, 0};
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          prod = prod + (p[i][k] * p[j][l]) * std_table[k][l];
          f[i][j] += p[i][k] * p[j][l] * std_form[k][l];
        }
      }
      t[i][j] = to_new(prod);
    }
  }
  CommAlgebra2 a = CommAlgebra2::make({"e1", "e2"}, t, f);
  Vec2 omega = Rational(2) * a.unit();
  return {a, semisimple, a.form(omega, omega)};
}

}  // namespace

TEST_CASE("construction checks each axiom") {
  CHECK_NOTHROW(ising_square());
  CHECK(ising_square().unit() == Vec2{1, 1});
  CHECK(radical_example().unit() == kE1);
  auto axiom_of = [](Table t, Form f) {
    try {
      CommAlgebra2::make({"a", "b"}, t, f);
    } catch (const AxiomError& e) {
      return e.axiom();
    }
    return std::string("none");
  };
  Form ok{{{1, 0}, {0, 1}}};
  CHECK(axiom_of(Table{{{kE1, kE2}, {kZero, kZero}}}, ok) == "commutativity");
  CHECK(axiom_of(Table{{{kE2, kZero}, {kZero, kE1}}}, ok) == "associativity");
  CHECK(axiom_of(Table{{{kZero, kZero}, {kZero, kZero}}}, ok) == "identity");
  CHECK(axiom_of(Table{{{kE1, kE2}, {kE2, kZero}}}, Form{{{1, 2}, {3, 0}}}) == "form symmetry");
  CHECK(axiom_of(Table{{{kE1, kE2}, {kE2, Vec2{1, 1}}}}, Form{{{Rational(1, 4), Rational(1, 8)}, {Rational(1, 8), Rational(1, 4)}}}) ==
        "form associativity");
}

TEST_CASE("radical examples") {
  CHECK(radical(radical_example()) == kE2);
  CHECK_FALSE(radical(ising_square()).has_value());
  CHECK_FALSE(radical(idempotent_v()).has_value());
  CHECK_FALSE(radical(irrational()).has_value());
}

TEST_CASE("idempotent_decomposition examples") {
  auto [p1, p2] = idempotent_decomposition(ising_square());
  std::set<std::pair<Rational, Rational>> got{{p1.a, p1.b}, {p2.a, p2.b}};
  CHECK(got == std::set<std::pair<Rational, Rational>>{{1, 0}, {0, 1}});
  auto [q1, q2] = idempotent_decomposition(idempotent_v());
  std::set<std::pair<Rational, Rational>> got2{{q1.a, q1.b}, {q2.a, q2.b}};
  CHECK(got2 == std::set<std::pair<Rational, Rational>>{{0, 1}, {1, -1}});  // v and u - v
  CHECK_THROWS_WITH_AS(idempotent_decomposition(radical_example()), doctest::Contains("not semisimple"), DomainError);
  CHECK_THROWS_WITH_AS(idempotent_decomposition(irrational()), doctest::Contains("irrational"), DomainError);
}

TEST_CASE("classify examples") {
  GriessVerdict s = classify(ising_square(), 1);
  CHECK(s.kind == GriessVerdict::Kind::semisimple);
  CHECK(s.c1 == Rational(1, 2));
  CHECK(s.c2 == Rational(1, 2));
  GriessVerdict r = classify(radical_example(), 1);
  CHECK(r.kind == GriessVerdict::Kind::radical);
  CHECK(r.c == Rational(1));
  CHECK(radical_example().form(Rational(2) * radical_example().unit(), r.nilpotent) == Rational(1));
  CHECK_THROWS_AS(classify(ising_square(), 0), DomainError);
  CHECK_THROWS_WITH_AS(classify(ising_square(), 2), doctest::Contains("normalization"), DomainError);
  auto degenerate = CommAlgebra2::make({"u", "v"}, Table{{{kE1, kE2}, {kE2, kZero}}}, Form{{{1, 0}, {0, 0}}});
  CHECK_THROWS_WITH_AS(classify(degenerate, 4), doctest::Contains("degenerate"), DomainError);
}

TEST_CASE("ising module filter") {
  CHECK(ising_square_modules().size() == 9);
  auto kept = ising_module_filter();
  CHECK(kept == std::vector<WeightPair>{{0, 0}, {Rational(1, 2), Rational(1, 2)}});
  auto all = ising_square_modules();
  CHECK(std::find(all.begin(), all.end(), WeightPair{Rational(1, 16), Rational(1, 16)}) != all.end());
}

TEST_CASE("pipeline examples") {
  auto ok = characterization_pipeline(1, 1, 0, 2, ising_square());
  CHECK(ok.verdict == "isomorphic to L(1/2,0)⊗L(1/2,0)");
  CHECK(ok.hypotheses_met);
  CHECK(ok.trace.size() == 5);
  CHECK(ok.surviving_modules == ising_module_filter());

  auto rad = characterization_pipeline(1, 1, 0, 2, radical_example());
  CHECK(rad.verdict == "excluded by growth contradiction");
  REQUIRE(rad.trace.size() == 3);
  CHECK(rad.trace[2].anchor == "w22-vacuum-growth");
  CHECK(rad.trace[2].outcome.find("superpolynomial_consistent") == 0);

  auto bad = characterization_pipeline(2, 2, 0, 2, ising_square());
  CHECK(bad.verdict == "hypotheses not met: c ≠ 1");
  CHECK(bad.trace.size() == 1);
  CHECK_FALSE(bad.hypotheses_met);
}

TEST_CASE("pipeline failure branches") {
  CHECK(characterization_pipeline(1, Rational(3, 2), 0, 2, ising_square()).verdict == "hypotheses not met: c̃ ≠ 1");
  CHECK(characterization_pipeline(1, 1, 3, 2, ising_square()).verdict == "hypotheses not met: dim V1 ≠ 0");
  CHECK(characterization_pipeline(1, 1, 0, 3, ising_square()).verdict == "hypotheses not met: dim V2 ≠ 2");
  // v^2 = 2u needs sqrt 2; with (omega, omega) = 1 the algebra is not split over Q
  auto irr = characterization_pipeline(1, 1, 0, 2, irrational());
  CHECK(irr.verdict.find("hypotheses not met: griess-dichotomy") == 0);
  // semisimple but c1 = 3/2 is not a minimal charge
  auto generic = characterization_pipeline(1, 1, 0, 2, split_with(Rational(3, 2), Rational(-1, 2)));
  CHECK(generic.verdict == "excluded by growth contradiction");
  CHECK(generic.trace.back().anchor == "minimal-model-forcing");
}

TEST_CASE("pipeline traces are byte-stable") {
  for (const auto& a : {ising_square(), radical_example()}) {
    std::string first = to_json(characterization_pipeline(1, 1, 0, 2, a)).dump();
    std::string second = to_json(characterization_pipeline(1, 1, 0, 2, a)).dump();
    CHECK(first == second);
  }
}

TEST_CASE("data files load and classify") {
  auto ising = comm_algebra_from_json(file("griess_ising_square.json"));
  CHECK(classify(ising, 1).c1 == Rational(1, 2));
  CHECK(to_json(ising) == file("griess_ising_square.json"));
  auto rad = comm_algebra_from_json(file("griess_radical.json"));
  CHECK(classify(rad, 1).kind == GriessVerdict::Kind::radical);
  CHECK(classify(comm_algebra_from_json(file("griess_idempotent_v.json")), 1).c2 == Rational(1, 2));
  CHECK_THROWS_AS(comm_algebra_from_json(file("griess_bad_form.json")), AxiomError);
  CHECK_THROWS_AS(comm_algebra_from_json(Json{{"products", 3}}), ParseError);
}

TEST_CASE("property: the dichotomy is total and its witnesses check out") {
  gen::Source g(2024);
  for (int i = 0; i < 200; ++i) {
    Generated x = random_algebra(g);
    const CommAlgebra2& a = x.algebra;
    CHECK(radical(a).has_value() != x.semisimple);
    if (x.c.is_zero()) continue;
    GriessVerdict v;
    try {
      v = classify(a, x.c);
    } catch (const DomainError& e) {
      // only an irrational split or a degenerate form may stop a valid algebra
      std::string what = e.what();
      CHECK((what.find("irrational") != std::string::npos || what.find("degenerate") != std::string::npos));
      continue;
    }
    CHECK((v.kind == GriessVerdict::Kind::semisimple) == x.semisimple);
    if (v.kind == GriessVerdict::Kind::semisimple) {
      CHECK(v.p1 + v.p2 == a.unit());
      CHECK(a.mul(v.p1, v.p2).is_zero());
      CHECK(a.mul(v.p1, v.p1) == v.p1);
      CHECK(a.mul(v.p2, v.p2) == v.p2);
      CHECK(v.c1 + v.c2 == x.c);
    } else {
      CHECK(a.mul(v.nilpotent, v.nilpotent).is_zero());
      CHECK(a.form(v.nilpotent, v.nilpotent).is_zero());
      CHECK(a.form(Rational(2) * a.unit(), v.nilpotent) == x.c);
    }
    // form associativity on all basis triples
    for (const Vec2& p : {kE1, kE2}) {
      for (const Vec2& q : {kE1, kE2}) {
        for (const Vec2& r : {kE1, kE2}) CHECK(a.form(a.mul(p, q), r) == a.form(p, a.mul(q, r)));
      }
    }
  }
}
