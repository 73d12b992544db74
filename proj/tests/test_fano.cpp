#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fanolie/fano.hpp"

using namespace fanolie;

namespace {

Point P(int i) { return Point::from_label(i); }
Line D(int i) { return Line::from_label(i); }

// Collineations found by filtering all 5040 permutations with "lines go to lines".
std::vector<std::array<int, 7>> brute_force_collineations() {
  std::vector<std::array<int, 3>> lines;
  for (Line d : all_lines()) {
    auto pts = d.points();
    std::array<int, 3> l = {pts[0].label(), pts[1].label(), pts[2].label()};
    std::sort(l.begin(), l.end());
    lines.push_back(l);
  }
  std::vector<std::array<int, 7>> out;
  std::array<int, 7> perm = {1, 2, 3, 4, 5, 6, 7};
  do {
    bool ok = true;
    for (const auto& l : lines) {
      std::array<int, 3> img = {perm[l[0] - 1], perm[l[1] - 1], perm[l[2] - 1]};
      std::sort(img.begin(), img.end());
      ok = ok && std::find(lines.begin(), lines.end(), img) != lines.end();
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("coordinate model") {
  CHECK(P(1).mask() == 0b001);
  CHECK(P(2).mask() == 0b010);
  CHECK(P(3).mask() == 0b100);
  CHECK(P(4).mask() == 0b011);
  CHECK(P(5).mask() == 0b110);
  CHECK(P(6).mask() == 0b111);
  CHECK(P(7).mask() == 0b101);
  for (int i = 1; i <= 7; ++i) {
    CHECK(third_point(P(i), P(i).shifted(1)) == P(i).shifted(3));
    CHECK(Point::from_mask(P(i).mask()) == P(i));
  }
  CHECK_THROWS(Point::from_label(0));
  CHECK_THROWS(Point::from_mask(0));
  CHECK(Point::parse("P5") == P(5));
  CHECK(Line::parse("D7") == D(7));
  CHECK_THROWS(Line::parse("D8"));
}

TEST_CASE("add and wedge") {
  CHECK(add(P(1), P(2)) == P(4));
  CHECK(add(P(7), P(1)) == P(3));
  for (Point p : all_points()) CHECK_FALSE(add(p, p).has_value());
  CHECK(wedge(P(1), P(2)) == D(1));
  CHECK(wedge(P(5), P(6)) == D(5));
  CHECK_THROWS(wedge(P(3), P(3)));
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q) {
        CHECK(wedge(p, q) == wedge(q, p));
        CHECK(wedge(p, q).contains(third_point(p, q)));
      }
}

TEST_CASE("lines and incidence") {
  std::map<int, int> lines_per_point;
  for (Line d : all_lines()) {
    auto pts = d.points();
    CHECK((pts[0].mask() ^ pts[1].mask() ^ pts[2].mask()) == 0u);
    for (Point p : pts) {
      ++lines_per_point[p.label()];
      CHECK(parity(d.dual_mask() & p.mask()) == 0);
    }
    CHECK(d.quadrilateral().size() == 4);
  }
  for (auto [label, count] : lines_per_point) CHECK(count == 3);
  CHECK(D(1).points() == std::array<Point, 3>{P(1), P(2), P(4)});
  CHECK(D(7).points() == std::array<Point, 3>{P(7), P(1), P(3)});
  for (Point p : all_points())
    for (Line d : lines_through(p)) CHECK(d.contains(p));
  for (Line d : all_lines())
    for (Line e : all_lines())
      if (d != e) {
        Line f = third_line(d, e);
        CHECK(f != d);
        CHECK(f != e);
        CHECK(f.contains(meet(d, e)));
      }
}

TEST_CASE("all_collineations: 168 additive bijections forming a group") {
  const auto& g = all_collineations();
  REQUIRE(g.size() == 168);
  auto oracle = brute_force_collineations();
  REQUIRE(oracle.size() == 168);
  for (std::size_t i = 0; i < 168; ++i) {
    std::array<int, 7> images{};
    for (int k = 0; k < 7; ++k) images[k] = g[i].images()[k];
    CHECK(images == oracle[i]);
  }
  std::set<Collineation> set(g.begin(), g.end());
  CHECK(set.count(Collineation::identity()));
  for (const auto& x : g) {
    CHECK(set.count(x.inverse()));
    CHECK((x * x.inverse()).is_identity());
  }
  for (std::size_t i = 0; i < g.size(); i += 7)
    for (std::size_t j = 0; j < g.size(); j += 5) CHECK(set.count(g[i] * g[j]));
}

TEST_CASE("order histogram") {
  std::map<int, int> hist;
  for (const auto& g : all_collineations()) ++hist[g.order()];
  CHECK(hist == std::map<int, int>{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}});
}

TEST_CASE("collineation validation and serialization") {
  CHECK_THROWS(Collineation::parse("1234576"));
  CHECK_THROWS(Collineation::parse("1123456"));
  CHECK_THROWS(Collineation::parse("123456"));
  CHECK(Collineation::parse("2345671").str() == "2345671");
  CHECK_FALSE(is_additive({2, 1, 3, 4, 5, 6, 7}));
  auto tau = canonical_tau();
  CHECK(tau(D(1)) == D(2));
}

TEST_CASE("standard generators") {
  auto [a, b] = standard_generators();
  CHECK(a.str() == "1274653");
  CHECK(b.str() == "2746531");
  CHECK(a.pow(2).is_identity());
  CHECK(b.pow(3).is_identity());
  CHECK((a * b).pow(7).is_identity());
  CHECK_FALSE((a * b).pow(3).is_identity());
  CHECK((a * b * a.inverse() * b.inverse()).pow(4).is_identity());
  CHECK((a * b * a.inverse() * b.inverse()).order() == 4);
  CHECK(a * b == canonical_tau());
  CHECK(generated_subgroup({a, b}).size() == 168);
  CHECK(a == involution_from(D(1), P(1)));
}

TEST_CASE("order-7 elements: minimal polynomial, conjugacy and Legendre rule") {
  auto tau = canonical_tau();
  CHECK(order7_minimal_polynomial(tau) == Cubic::X3_X_1);
  CHECK(order7_minimal_polynomial(tau.pow(3)) == Cubic::X3_X2_1);
  CHECK_THROWS(order7_minimal_polynomial(Collineation::identity()));

  std::vector<Collineation> order7;
  for (const auto& g : all_collineations())
    if (g.order() == 7) order7.push_back(g);
  REQUIRE(order7.size() == 48);
  int tag1 = 0;
  for (const auto& g : order7) {
    CHECK(order7_minimal_polynomial(g) == order7_minimal_polynomial(g.pow(2)));
    if (order7_minimal_polynomial(g) == Cubic::X3_X_1) ++tag1;
  }
  CHECK(tag1 == 24);

  // Exhaustive conjugation oracle.
  for (const auto& g : order7) {
    auto cls = conjugacy_class(g);
    CHECK(cls.size() == 24);
    for (const auto& h : order7) {
      bool conj = std::binary_search(cls.begin(), cls.end(), h);
      CHECK(conj == (order7_minimal_polynomial(g) == order7_minimal_polynomial(h)));
    }
  }
  for (int m = 1; m < 7; ++m) {
    auto cls = conjugacy_class(tau);
    bool conj = std::binary_search(cls.begin(), cls.end(), tau.pow(m));
    CHECK(conj == (legendre7(m) == 1));
  }
}

TEST_CASE("elements of the same order 2, 3 or 4 are conjugate") {
  for (int ord : {2, 3, 4}) {
    std::vector<Collineation> elems;
    for (const auto& g : all_collineations())
      if (g.order() == ord) elems.push_back(g);
    CHECK(conjugacy_class(elems.front()) == elems);
  }
}

TEST_CASE("legendre7") {
  CHECK(legendre7(1) == 1);
  CHECK(legendre7(3) == -1);
  CHECK(legendre7(4) == 1);
  CHECK(legendre7(-1) == -1);
  CHECK(legendre7(9) == 1);
  CHECK_THROWS(legendre7(0));
  CHECK_THROWS(legendre7(14));
  for (long n = 1; n < 7; ++n) CHECK(legendre7(n) == ((n * n * n) % 7 == 1 ? 1 : -1));
}

TEST_CASE("orientation types") {
  auto tau = canonical_tau();
  CHECK(orientation_type(tau) == OrientationType::T013);
  CHECK(orientation_type(tau.inverse()) == OrientationType::T023);
  CHECK(orientation_type(tau.pow(2)) == OrientationType::T013);
  CHECK(orientation_type(tau.pow(4)) == OrientationType::T013);
  CHECK(orientation_type(tau.pow(3)) == OrientationType::T023);
  CHECK_THROWS(orientation_type(standard_generators().first));
  // Type is constant on conjugacy classes and separates them.
  for (const auto& g : all_collineations())
    if (g.order() == 7)
      CHECK((orientation_type(g) == OrientationType::T013) ==
            (order7_minimal_polynomial(g) == order7_minimal_polynomial(tau)));
}

TEST_CASE("the dual plane with tau* has the type of (F, tau^-1)") {
  for (const auto& g : all_collineations()) {
    if (g.order() != 7) continue;
    auto dual_type = orientation_type(dual_incidence(), line_perm(g));
    CHECK(dual_type == orientation_type(g.inverse()));
    CHECK(dual_type != orientation_type(g));
  }
}

TEST_CASE("involution_from") {
  auto f = involution_from(D(1), P(1));
  for (Point p : D(1).points()) CHECK(f(p) == p);
  for (Point r : all_points())
    if (!D(1).contains(r)) CHECK(f(r) == third_point(r, P(1)));
  CHECK((f * f).is_identity());
  CHECK_THROWS(involution_from(D(1), P(3)));

  std::set<Collineation> invs;
  for (Line d : all_lines())
    for (Point p : d.points()) invs.insert(involution_from(d, p));
  std::set<Collineation> order2;
  for (const auto& g : all_collineations())
    if (g.order() == 2) order2.insert(g);
  CHECK(invs == order2);
}

TEST_CASE("stable triangles of order-3 elements") {
  CHECK(all_triangles().size() == 28);
  std::map<std::array<Point, 3>, int> count;
  for (const auto& g : all_collineations())
    if (g.order() == 3) ++count[stable_triangle(g)];
  CHECK(count.size() == 28);
  for (const auto& [t, n] : count) CHECK(n == 2);
  CHECK_THROWS(stable_triangle(canonical_tau()));
}

TEST_CASE("induced line orientations") {
  auto tau = canonical_tau();
  CHECK(induced_line_orientation(tau, D(1)) == std::array<Point, 3>{P(1), P(2), P(4)});
  for (Line d : all_lines()) {
    auto c = induced_line_orientation(tau, d);
    CHECK(c[0] == d.points()[0]);
    CHECK(c[1] == tau(c[0]));
    CHECK(c[2] == tau.pow(3)(c[0]));
  }
  CHECK_THROWS(induced_line_orientation(tau.inverse(), D(1)));

  for (Point p : all_points()) {
    auto d_of = [&](Point x) { return *line_of({x, tau(x), tau.pow(3)(x)}); };
    auto expected = std::array<Line, 3>{d_of(p), d_of(tau.pow(-1)(p)), d_of(tau.pow(-3)(p))};
    CHECK(dual_line_orientation(tau, p) == expected);
  }
}

TEST_CASE("collineations carry line orientations for all lines or for none") {
  std::vector<Collineation> type013;
  for (const auto& g : all_collineations())
    if (g.order() == 7 && orientation_type(g) == OrientationType::T013) type013.push_back(g);
  REQUIRE(type013.size() == 24);
  auto tau = canonical_tau();
  std::map<int, int> histogram;
  for (const auto& f : all_collineations()) {
    Collineation sigma = f * tau * f.inverse();
    for (const auto& tau2 : type013) {
      int n = 0;
      for (Line d : all_lines()) n += maps_line_orientation(f, tau, tau2, d);
      ++histogram[n];
      bool same = tau2 == sigma || tau2 == sigma.pow(2) || tau2 == sigma.pow(4);
      CHECK((n == 7) == same);
    }
    // Target of the other type: tau2 = sigma^-1 reads its lines as (P, tau2^2 P, tau2^3 P),
    // which f reverses on every line.
    Collineation rho = sigma.inverse();
    REQUIRE(orientation_type(rho) == OrientationType::T023);
    for (Line d : all_lines()) {
      auto cyc = induced_line_orientation(tau, d);
      std::array<Point, 3> img = {f(cyc[0]), f(cyc[1]), f(cyc[2])};
      std::array<Point, 3> rho_order = img;
      int starts = 0;
      for (Point q : img) {
        std::array<Point, 3> c = {q, rho.pow(2)(q), rho.pow(3)(q)};
        if (f(d).contains(c[1]) && f(d).contains(c[2])) rho_order = c, ++starts;
      }
      REQUIRE(starts == 1);
      std::array<Point, 3> reversed = {rho_order[0], rho_order[2], rho_order[1]};
      CHECK(same_cycle(img, reversed));
    }
  }
  // Within the same type an isomorphism either preserves all seven lines or exactly three.
  CHECK(histogram == std::map<int, int>{{3, 3528}, {7, 504}});
}
