#include <doctest.h>

#include <omp.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "w22/errors.hpp"
#include "w22/shapovalov.hpp"

using namespace w22;

namespace {

ModuleVector bv(const VermaModule& m, Partition w, Partition l) { return ModuleVector::basis_vector(m, {w, l}); }

const std::vector<HighestWeight> kWeights{
    {Rational(7, 3), Rational(2, 5), Rational(-3, 4)},  // generic
    {Rational(1, 2), Rational(1, 3), Rational(0)},      // h2 = 0
    {Rational(1), Rational(0), Rational(-1, 8)},        // m = 2 degenerate
};

void check_gram_against_oracle(const VermaModule& m, int max_level) {
  const auto& hw = m.weight();
  oracle::Expectation e({hw.c, hw.h1, hw.h2});
  for (int n = 0; n <= max_level; ++n) {
    GramMatrix g = gram(m, n);
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
      for (std::size_t j = 0; j < g.basis.size(); ++j) {
        const auto &u = g.basis[i], &v = g.basis[j];
        CHECK(g.entries[i][j] == oracle::pair(e, u.w, u.l, v.w, v.l));
      }
    }
  }
}

}  // namespace

TEST_CASE("pair examples") {
  HighestWeight hw{Rational(5, 2), Rational(1, 7), Rational(-4, 9)};
  VermaModule m = VermaModule::verma(hw);
  ModuleVector one = ModuleVector::highest_weight_vector(m);
  CHECK(pair(one, one) == Rational(1));
  CHECK(pair(bv(m, {}, {1}), bv(m, {1}, {})) == hw.h2 * 2);
  CHECK(pair(bv(m, {1}, {}), bv(m, {1}, {})) == Rational(0));
  CHECK(pair(bv(m, {2}, {}), bv(m, {1}, {})) == Rational(0));  // different levels
  CHECK_THROWS_AS(pair(one, ModuleVector::highest_weight_vector(VermaModule::verma({Rational(1), 0, 0}))),
                  DomainError);
}

TEST_CASE("gram examples") {
  HighestWeight hw{Rational(5, 2), Rational(1, 7), Rational(-4, 9)};
  GramMatrix g1 = gram(VermaModule::verma(hw), 1);
  // basis order [W-1, L-1]; the [L-1, W-1] form is [[2h1, 2h2], [2h2, 0]]
  REQUIRE(g1.basis == std::vector<Monomial>{Monomial{{1}, {}}, Monomial{{}, {1}}});
  CHECK(g1.entries == Matrix{{0, hw.h2 * 2}, {hw.h2 * 2, hw.h1 * 2}});
  CHECK(det_gram(g1) == -(hw.h2 * hw.h2) * 4);

  Rational c(3, 7);
  GramMatrix g2 = gram(VermaModule::vacuum(c), 2);
  REQUIRE(g2.basis == std::vector<Monomial>{Monomial{{2}, {}}, Monomial{{}, {2}}});
  CHECK(g2.entries == Matrix{{0, c / 2}, {c / 2, c / 2}});
  CHECK(det_gram(g2) == -(c * c) / 4);

  GramMatrix g0 = gram(VermaModule::verma(hw), 0);
  CHECK(g0.entries == Matrix{{1}});
  CHECK(is_symmetric(g2.entries));
}

TEST_CASE("determinant vanishes at the first degenerate level") {
  // (m^2 - 1)c/12 + 2 h2 = 0 with c = 1, m = 2: h2 = -1/8
  VermaModule m = VermaModule::verma({Rational(1), Rational(3, 5), Rational(-1, 8)});
  CHECK_FALSE(det_gram(gram(m, 1)).is_zero());
  CHECK(det_gram(gram(m, 2)).is_zero());
}

TEST_CASE("radical_basis examples") {
  VermaModule m = VermaModule::verma({Rational(2), Rational(5, 3), Rational(0)});
  auto rad = radical_basis(gram(m, 1));
  REQUIRE(rad.size() == 1);
  CHECK(rad[0] == bv(m, {1}, {}));
  CHECK(radical_basis(gram(VermaModule::verma({Rational(2), Rational(5, 3), Rational(1, 4)}), 1)).empty());
  CHECK(radical_basis(gram(VermaModule::vacuum(Rational(-2)), 2)).empty());
  // every radical vector pairs to zero with the whole level
  VermaModule d = VermaModule::verma({Rational(1), Rational(0), Rational(-1, 8)});
  GramMatrix g = gram(d, 3);
  auto r3 = radical_basis(g);
  CHECK_FALSE(r3.empty());
  FormEvaluator f(d);
  for (const auto& v : r3) {
    for (const auto& b : g.basis) CHECK(f.pair(v, ModuleVector::basis_vector(d, b)).is_zero());
  }
}

TEST_CASE("is_singular examples") {
  VermaModule m0 = VermaModule::verma({Rational(3), Rational(1, 2), Rational(0)});
  CHECK(is_singular(bv(m0, {1}, {})));
  VermaModule m1 = VermaModule::verma({Rational(3), Rational(1, 2), Rational(1, 5)});
  CHECK_FALSE(is_singular(bv(m1, {}, {1})));
  CHECK_THROWS_AS(is_singular(ModuleVector::highest_weight_vector(m1)), DomainError);
  ModuleVector mixed = bv(m1, {1}, {});
  mixed += bv(m1, {2}, {});
  CHECK_THROWS_AS(is_singular(mixed), DomainError);
  // radical vectors at the first degenerate level are singular
  VermaModule d = VermaModule::verma({Rational(1), Rational(0), Rational(-1, 8)});
  for (const auto& v : radical_basis(gram(d, 2))) CHECK(is_singular(v));
}

TEST_CASE("verma_irreducible examples") {
  auto r = verma_irreducible({Rational(1), Rational(9), Rational(0)});
  CHECK_FALSE(r.irreducible);
  CHECK(r.witness_m == 1);
  r = verma_irreducible({Rational(1, 2), Rational(0), Rational(-1, 16)});
  CHECK_FALSE(r.irreducible);
  CHECK(r.witness_m == 2);
  r = verma_irreducible({Rational(1), Rational(0), Rational(1)});
  CHECK(r.irreducible);
  CHECK_FALSE(r.witness_m.has_value());
  r = verma_irreducible({Rational(0), Rational(0), Rational(0)});
  CHECK_FALSE(r.irreducible);
  CHECK(r.witness_m == 1);
  CHECK(r.trivial_vacuum);
  r = verma_irreducible({Rational(0), Rational(1), Rational(3)});
  CHECK(r.irreducible);
  // (m^2 - 1)c/12 + 2h2 = 0 at m = 5, c = -2: h2 = 2
  r = verma_irreducible({Rational(-2), Rational(0), Rational(2)});
  CHECK(r.witness_m == 5);
}

TEST_CASE("gram entries match the expectation oracle") {
  for (const auto& hw : kWeights) check_gram_against_oracle(VermaModule::verma(hw), 4);
  check_gram_against_oracle(VermaModule::vacuum(Rational(1)), 6);
  check_gram_against_oracle(VermaModule::vacuum(Rational(-22, 5)), 6);
}

TEST_CASE("parallel and serial Gram builders agree") {
  int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (const auto& hw : kWeights) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(gram(VermaModule::verma(hw), n).entries == gram_serial(VermaModule::verma(hw), n).entries);
    }
  }
  for (int n = 0; n <= 9; ++n) {
    CHECK(gram(VermaModule::vacuum(Rational(1)), n).entries == gram_serial(VermaModule::vacuum(Rational(1)), n).entries);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("property: form symmetry and level orthogonality (levels <= 5)") {
  for (const auto& hw : kWeights) {
    VermaModule m = VermaModule::verma(hw);
    FormEvaluator f(m);
    std::vector<Monomial> all;
    for (int n = 0; n <= 5; ++n) {
      auto b = basis(n, false);
      all.insert(all.end(), b.begin(), b.end());
    }
    for (const auto& u : all) {
      for (const auto& v : all) {
        Rational x = f.pair(u, v);
        CHECK(x == f.pair(v, u));
        if (u.level() != v.level()) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("property: adjointness (g in L+-1, L+-2, W+-1, W+-2; levels <= 4)") {
  std::vector<Generator> gens;
  for (int k : {-2, -1, 1, 2}) {
    gens.push_back(Generator::L(k));
    gens.push_back(Generator::W(k));
  }
  for (const auto& hw : kWeights) {
    VermaModule m = VermaModule::verma(hw);
    FormEvaluator f(m);
    ModuleAction& act = f.action();
    for (int n = 0; n <= 4; ++n) {
      for (const auto& mu : basis(n, false)) {
        ModuleVector u = ModuleVector::basis_vector(m, mu);
        for (const auto& g : gens) {
          int target = n - g.mode;
          if (target < 0 || target > 4) continue;
          for (const auto& mv : basis(target, false)) {
            ModuleVector v = ModuleVector::basis_vector(m, mv);
            CHECK(f.pair(act.apply(g, u), v) == f.pair(u, act.apply(adjoint(g), v)));
          }
        }
      }
    }
  }
}

TEST_CASE("property: random combinations obey bilinearity") {
  gen::Source g(99);
  for (int i = 0; i < 30; ++i) {
    HighestWeight hw = g.weight();
    VermaModule m = VermaModule::verma(hw);
    int n = g.integer(1, 3);
    ModuleVector u = g.vector(m, n, 3), v = g.vector(m, n, 3), w = g.vector(m, n, 3);
    Rational a = g.rational();
    ModuleVector lin = u.scaled(a);
    lin += v;
    CHECK(pair(lin, w) == a * pair(u, w) + pair(v, w));
  }
}
