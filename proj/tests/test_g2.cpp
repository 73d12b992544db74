#include <map>
#include <set>

#include "doctest.h"
#include "fanolie/g2.hpp"

using namespace fanolie;

namespace {

Point P(int i) { return Point::from_label(i); }
Line D(int i) { return Line::from_label(i); }
IncidentPair I(int p, int d) { return IncidentPair::make(P(p), D(d)); }

const G2Context<RationalField>& Q() {
  static const G2Context<RationalField> g;
  return g;
}

// e_{ij} written out by hand in the 21-pair basis.
IntElt e(int i, int j) {
  IntElt v{};
  auto [s, k] = pair_slot(P(i), P(j));
  v[k] = s;
  return v;
}
IntElt lin(std::initializer_list<std::pair<int, IntElt>> terms) {
  IntElt v{};
  for (const auto& [c, x] : terms)
    for (int k = 0; k < 21; ++k) v[k] += c * x[k];
  return v;
}

}  // namespace

TEST_CASE("pair basis and structure constants") {
  CHECK(pair_points(0) == std::pair{P(1), P(2)});
  CHECK(pair_points(20) == std::pair{P(6), P(7)});
  CHECK(pair_slot(P(3), P(1)) == std::pair{-1, pair_index(P(1), P(3))});
  // The structure constants agree with commutators of the 7x7 matrices e_j e_i^T - e_i e_j^T.
  const auto& g = Q();
  for (int a = 0; a < 21; ++a)
    for (int b = 0; b < 21; ++b) {
      auto x = g.basis(a), y = g.basis(b);
      CHECK(g.vector_matrix(g.bracket(x, y)) == commutator(g.vector_matrix(x), g.vector_matrix(y)));
      CHECK(g.spinor(g.bracket(x, y)) == commutator(g.spinor(x), g.spinor(y)));
      CHECK(g.bracket(x, y) == -g.bracket(y, x));
    }
  // [e_12, e_23] = -e_13 from the convention.
  CHECK(g.bracket(g.from_ints(e(1, 2)), g.from_ints(e(2, 3))) == g.from_ints(lin({{-1, e(1, 3)}})));
}

TEST_CASE("decode inverts the spinor map") {
  const auto& g = Q();
  auto x = g.from_ints(lin({{2, e(1, 4)}, {-3, e(5, 7)}, {1, e(2, 6)}}));
  auto back = g.decode(g.spinor(x));
  REQUIRE(back);
  CHECK(*back == x);
  auto bad = Matrix<Rational>::identity(RationalField{}, 8);
  CHECK_FALSE(g.decode(bad));
}

TEST_CASE("X and Y generators") {
  const auto& g = Q();
  CHECK(x_coords(I(1, 1)) == lin({{1, e(3, 7)}, {-1, e(5, 6)}}));
  // At P1: A = e_{P3 P7}, B = e_{P5 P6}, C = e_{P2 P4}.
  CHECK(x_coords(I(1, 7)) == lin({{1, e(5, 6)}, {-1, e(2, 4)}}));
  CHECK(x_coords(I(1, 5)) == lin({{1, e(2, 4)}, {-1, e(3, 7)}}));
  CHECK(y_coords(I(1, 1)) == lin({{1, e(3, 7)}, {1, e(5, 6)}, {-2, e(2, 4)}}));
  CHECK(y_coords(I(1, 7)) == lin({{1, e(5, 6)}, {1, e(2, 4)}, {-2, e(3, 7)}}));
  CHECK_THROWS(IncidentPair::make(P(3), D(1)));
  CHECK(all_incident_pairs().size() == 21);

  std::vector<Vec<Rational>> rows;
  for (const auto& pd : all_incident_pairs()) {
    CHECK(g.in_g2(g.X(pd)));
    CHECK(g.in_g2(g.Y(pd)));
    rows.push_back(g.X(pd).coeffs());
  }
  CHECK(rank(rows) == 14);
  auto ann = g.annihilator_of_unit();
  CHECK(ann.size() == 14);
  CHECK(same_span(ann, span_basis(rows)));
  // Y lies in the Cartan subalgebra at its point.
  for (const auto& pd : all_incident_pairs()) {
    std::vector<Vec<Rational>> h;
    for (Line d : lines_through(pd.p)) h.push_back(g.X(pd.p, d).coeffs());
    CHECK(in_span(h, g.Y(pd).coeffs()));
  }
}

TEST_CASE("action on the imaginary units") {
  const auto& g = Q();
  auto r = action_report(g);
  CHECK(r.cases == 147);
  CHECK(r.spinor_mismatches == 0);
  CHECK(r.vector_mismatches == 0);
  // X_{P1,D1} e_P2: e_P3 coefficient read off e_{P3 P7} - e_{P5 P6}: zero since P2 is on D1.
  CHECK_FALSE(action_on_basis(I(1, 1), P(2), canonical_tau()));
  // X_{P1,D1} e_P3 = [e_37, e_3] = e_P7.
  auto a = action_on_basis(I(1, 1), P(3), canonical_tau());
  REQUIRE(a);
  CHECK(a->first == 1);
  CHECK(a->second == P(7));
  // The dual factor reads leg(a - b) on line labels.
  auto star = dual_epsilon(canonical_tau());
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      if (x != y) CHECK(star[x][y] == legendre7(x - y));
}

TEST_CASE("orbit census of pairs of incident pairs") {
  auto c = pair_census();
  CHECK(c[PairOrbit::Diagonal] == 21);
  CHECK(c[PairOrbit::O1] == 42);
  CHECK(c[PairOrbit::O2] == 42);
  CHECK(c[PairOrbit::O3] == 84);
  CHECK(c[PairOrbit::O3Prime] == 84);
  CHECK(c[PairOrbit::O4] == 168);
  CHECK(pair_orbits_are_single_orbits());
  CHECK(classify_pair(I(1, 1), I(7, 7)) == PairOrbit::O3);
  CHECK(classify_pair(I(7, 7), I(1, 1)) == PairOrbit::O3Prime);
}

TEST_CASE("bracket law over all 441 ordered pairs") {
  auto r = bracket_law_report(Q());
  CHECK(r.pairs == 441);
  CHECK(r.law_mismatches == 0);
  CHECK(r.matrix_mismatches == 0);
  CHECK(r.vector_mismatches == 0);
  const auto& g = Q();
  Rational two(2);
  CHECK(g.bracket(g.X(I(1, 1)), g.X(I(3, 7))) == -g.X(I(7, 7)));
  CHECK(g.bracket(g.X(I(4, 1)), g.X(I(5, 2))) == -g.X(I(7, 6)));
  CHECK(g.bracket(g.X(I(1, 1)), g.X(I(2, 1))) == two * g.X(I(4, 1)));
  CHECK(g.bracket(g.X(I(1, 1)), g.X(I(1, 7))).is_zero());
  CHECK_THROWS(bracket_law(I(1, 1), I(1, 1), g.eps()));
}

TEST_CASE("Jacobi identity on g2") {
  const auto& g = Q();
  auto basis = g.annihilator_of_unit();
  int failures = 0;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        using E = So7Elt<Rational>;
        E x(a), y(b), z(c);
        auto sum = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        if (!sum.is_zero()) ++failures;
        if (!g.in_g2(g.bracket(x, y))) ++failures;
      }
  CHECK(failures == 0);
}

TEST_CASE("Cartan subalgebras and the decomposition") {
  const auto& g = Q();
  for (Point p : all_points()) CHECK(cartan(g, p).ok());
  auto d = decomposition_check(g);
  CHECK(d.total_dimension == 14);
  CHECK(d.ok());
  auto c = cartan(G2Context<PrimeField>(PrimeField(5)), P(3));
  CHECK(c.ok());
}

TEST_CASE("line subalgebras") {
  const auto& g = Q();
  for (Line d : all_lines()) {
    auto r = line_subalgebra(g, d);
    CHECK(r.dimension == 6);
    CHECK(r.ok());
    auto cyc = eps_cyclic_order(d, g.eps());
    CHECK(g.eps()(cyc[0], cyc[1]) == 1);
    CHECK(g.eps()(cyc[1], cyc[2]) == 1);
    CHECK(g.eps()(cyc[2], cyc[0]) == 1);
  }
}

TEST_CASE("root system") {
  const auto& g = Q();
  for (Point p : all_points()) {
    auto r = root_system(g, p);
    CHECK(r.roots.size() == 12);
    CHECK(r.short_roots == 6);
    CHECK(r.long_roots == 6);
    CHECK(r.ok());
  }
}

TEST_CASE("delta hat") {
  auto eps = canonical_epsilon(canonical_tau());
  auto t = multiplication_table(eps);
  for (Point p : all_points()) CHECK(delta_hat(AugAut::identity(), p, t) == 1);
  for (Line d : all_lines())
    for (Point p : all_points()) CHECK((delta_hat(t_map(d), p, t) == 1) == d.contains(p));
  auto a_hat = AugAut::parse("1 2 7 4 -6 5 -3");
  std::set<Point> plus;
  for (Point p : all_points())
    if (delta_hat(a_hat, p, t) == 1) plus.insert(p);
  CHECK(plus == std::set<Point>{P(1), P(6), P(7)});

  auto r = delta_hat_report(enumerate_aug_group(eps).elements, eps);
  CHECK(r.elements == 1344);
  CHECK(r.distinct_functions == 64);
  CHECK(r.min_multiplicity == 21);
  CHECK(r.max_multiplicity == 21);
  CHECK(r.ok());
}

TEST_CASE("point subalgebras") {
  const auto& g = Q();
  for (Point p : all_points()) {
    auto r = point_subalgebra(g, p);
    CHECK(r.dimension == 8);
    CHECK(r.ok());
    CHECK_FALSE(r.has_sqrt_minus_one);
    CHECK_FALSE(r.relations_checked);
  }
  G2Context<GaussianField> gi;
  auto r = point_subalgebra(gi, P(1));
  CHECK(r.has_sqrt_minus_one);
  CHECK(r.relations_checked);
  CHECK(r.relations);
  CHECK(r.ok());
  auto r5 = point_subalgebra(G2Context<PrimeField>(PrimeField(5)), P(1));
  CHECK(r5.relations_checked);
  CHECK(r5.ok());
  auto r3 = point_subalgebra(G2Context<PrimeField>(PrimeField(3)), P(1));
  CHECK_FALSE(r3.has_sqrt_minus_one);
  CHECK(r3.dimension == 8);
}

TEST_CASE("almost complex structure") {
  const auto& g = Q();
  for (Point p : all_points()) {
    auto r = almost_complex(g, p);
    CHECK(r.square_minus_one);
    CHECK(r.isometry);
    CHECK(r.commutes);
    CHECK(r.annihilator_dimension == 8);
  }
}

TEST_CASE("subalgebras generated by two generators") {
  const auto& g = Q();
  std::map<PairOrbit, std::set<std::size_t>> dims;
  for (const auto& a : all_incident_pairs())
    for (const auto& b : all_incident_pairs())
      if (a != b) dims[classify_pair(a, b)].insert(pair_generated_subalgebra(g, a, b));
  // An O4 bracket lands on (P+P', D+D'), which is again O4 against both inputs, so the span of the
  // three X's closes: so(3), not g2.
  CHECK(dims[PairOrbit::O4] == std::set<std::size_t>{3});
  CHECK(dims[PairOrbit::O3] == std::set<std::size_t>{4});
  CHECK(dims[PairOrbit::O3Prime] == std::set<std::size_t>{4});
  CHECK(dims[PairOrbit::O2] == std::set<std::size_t>{3});
  CHECK(dims[PairOrbit::O1] == std::set<std::size_t>{2});

  auto alg = g.lie_closure({g.X(I(1, 1)), g.X(I(7, 7))});
  CHECK(alg.size() == 4);
  auto y = g.Y(I(1, 7));
  CHECK(in_span(alg, y.coeffs()));
  for (const auto& row : alg) CHECK(g.bracket(y, So7Elt<Rational>(row)).is_zero());
  std::vector<So7Elt<Rational>> derived;
  for (const auto& u : alg)
    for (const auto& v : alg) derived.push_back(g.bracket(So7Elt<Rational>(u), So7Elt<Rational>(v)));
  CHECK(same_span(g.span_of(derived), g.span_of({g.X(I(7, 7)), g.X(I(3, 7)), g.X(I(1, 7))})));
}
