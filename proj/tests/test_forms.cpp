#include <bit>
#include <random>

#include "doctest.h"
#include "fanolie/forms.hpp"
#include "fanolie/g2.hpp"

using namespace fanolie;

namespace {

using F = ExteriorForm;
F m(std::vector<int> l) { return F::monomial(l); }

const CompositionFactor& eps() {
  static const CompositionFactor e = canonical_epsilon(canonical_tau());
  return e;
}

F random_form(std::mt19937_64& rng, int grade) {
  std::uniform_int_distribution<int> coef(-3, 3);
  F f(grade);
  for (unsigned mask = 0; mask < 128; ++mask)
    if (std::popcount(mask) == grade) f.add_term(mask, Rational(coef(rng)));
  return f;
}

}  // namespace

TEST_CASE("wedge and contraction basics") {
  CHECK(wedge(F::e(1), F::e(1)).is_zero());
  CHECK(contract(basis_vector(1), m({1, 2})) == F::e(2));
  CHECK(contract(basis_vector(2), m({1, 2})) == -F::e(1));
  CHECK(wedge(m({1, 2}), m({3, 4})) == wedge(m({3, 4}), m({1, 2})));
  CHECK(wedge(F::e(1), F::e(2)) == -wedge(F::e(2), F::e(1)));
  CHECK(m({2, 1, 3}) == -m({1, 2, 3}));
  CHECK(m({3, 1, 2}) == m({1, 2, 3}));
  CHECK(m({1, 1}).is_zero());
  CHECK_THROWS(wedge(F::volume(), F::e(1)));
  CHECK_THROWS(contract(basis_vector(1), F(0)));
  CHECK(F::volume().str() == "e1234567");
  CHECK((m({1, 2}) - Rational(2) * m({3, 4})).str() == "e12 - 2 e34");
}

TEST_CASE("exterior algebra laws on random forms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto a = random_form(rng, 2), b = random_form(rng, 3), c = random_form(rng, 1);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, c) == wedge(c, a));
    CHECK(wedge(b, c) == -wedge(c, b));
    for (int v = 1; v <= 7; ++v) {
      auto iv = basis_vector(v);
      CHECK(contract(iv, contract(iv, b)).is_zero());
      // Graded Leibniz rule for the interior product.
      CHECK(contract(iv, wedge(a, b)) == wedge(contract(iv, a), b) + wedge(a, contract(iv, b)));
    }
  }
}

TEST_CASE("derivation action obeys the Leibniz rule") {
  G2Context<RationalField> g;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 21; ++k) {
    auto mat = g.vector_matrix(g.basis(k));
    auto a = random_form(rng, 2), b = random_form(rng, 2);
    CHECK(derivation(mat, wedge(a, b)) == wedge(derivation(mat, a), b) + wedge(a, derivation(mat, b)));
  }
}

TEST_CASE("the invariant forms") {
  auto w = omega(eps());
  auto W = Omega(eps());
  // Written out by hand from the seven lines and seven quadrilaterals.
  CHECK(w == m({1, 2, 4}) + m({2, 3, 5}) + m({3, 4, 6}) + m({4, 5, 7}) + m({1, 5, 6}) + m({2, 6, 7}) + m({1, 3, 7}));
  CHECK(W == m({3, 5, 6, 7}) - m({1, 4, 6, 7}) + m({1, 2, 5, 7}) - m({1, 2, 3, 6}) - m({2, 3, 4, 7}) + m({1, 3, 4, 5}) +
                 m({2, 4, 5, 6}));
  CHECK(w.terms().size() == 7);
  CHECK(W.terms().size() == 7);
  CHECK(inner(w, w) == Rational(7));
  CHECK(inner(W, W) == Rational(7));
  CHECK(wedge(W, w) == Rational(-7) * F::volume());
  // Every composition factor gives ordering-independent terms.
  for (const auto& f : enumerate_composition_factors()) {
    CHECK(omega(f).terms().size() == 7);
    CHECK(Omega(f).terms().size() == 7);
  }
}

TEST_CASE("invariance under g2") {
  auto r = invariance_check();
  CHECK(r.killed_by_generators == 21);
  CHECK(r.invariant_dimension == 1);
  CHECK(r.contraction_failures == 0);
  CHECK(r.volume_ratio == Rational(-7));
  CHECK(r.ok());
  // A generic so(7) element outside g2 moves omega.
  G2Context<RationalField> g;
  auto e12 = g.basis(0);
  CHECK_FALSE(g.in_g2(e12));
  CHECK_FALSE(derivation(g.vector_matrix(e12), omega(eps())).is_zero());
}
