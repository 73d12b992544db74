#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fanolie/compfactor.hpp"

using namespace fanolie;

namespace {

Point P(int i) { return Point::from_label(i); }

// Integer octonions with e_P e_P = -N(P): an oracle for N(xy) = N(x)N(y) independent of the sign rules.
using IntOct = std::array<long long, 8>;

IntOct mul(const MultFactor& eps, const Norm& n, const IntOct& x, const IntOct& y) {
  IntOct z{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      long long c = x[i] * y[j];
      if (i == 0) z[j] += c;
      else if (j == 0) z[i] += c;
      else if (i == j) z[0] -= n(P(i)) * c;
      else {
        Point p = P(i), q = P(j);
        z[third_point(p, q).label()] += eps(p, q) * c;
      }
    }
  return z;
}

long long norm(const Norm& n, const IntOct& x) {
  long long s = x[0] * x[0];
  for (int i = 1; i < 8; ++i) s += n(P(i)) * x[i] * x[i];
  return s;
}

bool multiplicative_on_samples(const MultFactor& eps, const Norm& n, std::mt19937& rng, int samples) {
  std::uniform_int_distribution<int> d(-5, 5);
  for (int s = 0; s < samples; ++s) {
    IntOct x{}, y{};
    for (int i = 0; i < 8; ++i) {
      x[i] = d(rng);
      y[i] = d(rng);
    }
    if (norm(n, mul(eps, n, x, y)) != norm(n, x) * norm(n, y)) return false;
  }
  return true;
}

bool has_line_dichotomy(const MultFactor& eps) {
  bool fut = true, past = true;
  for (Point p : all_points()) {
    std::vector<Point> f, b;
    for (Point q : all_points()) {
      if (q == p) continue;
      (eps(p, q) == 1 ? f : b).push_back(q);
    }
    fut = fut && f.size() == 3 && line_of({f[0], f[1], f[2]});
    past = past && b.size() == 3 && line_of({b[0], b[1], b[2]});
  }
  return fut || past;
}

const CompositionFactor& eps_tau() {
  static const CompositionFactor e = canonical_epsilon(canonical_tau());
  return e;
}

}  // namespace

TEST_CASE("norms") {
  auto norms = Norm::all();
  CHECK(norms.size() == 8);
  int trivial = 0;
  for (const auto& n : norms) {
    std::vector<Point> plus;
    for (Point p : all_points())
      if (n(p) == 1) plus.push_back(p);
    if (plus.size() == 7) ++trivial;
    else CHECK((plus.size() == 3 && line_of({plus[0], plus[1], plus[2]}).has_value()));
  }
  CHECK(trivial == 1);
  CHECK_THROWS(Norm::from_values({-1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("multiplication factor storage") {
  auto e = eps_tau().eps();
  CHECK(MultFactor::parse(e.str()) == e);
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q) CHECK(e(p, q) * e(q, p) == -1);
  CHECK_THROWS(e(P(1), P(1)));
  std::array<std::array<int, 7>, 7> bad{};
  CHECK_THROWS(MultFactor::from_table(bad));
}

TEST_CASE("canonical epsilon") {
  const auto& e = eps_tau();
  CHECK(e(P(1), P(2)) == 1);
  CHECK(e(P(1), P(4)) == -1);
  CHECK(e(P(2), P(1)) == -1);
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q) CHECK(e(p, q) == legendre7(q.label() - p.label()));
  CHECK(e.side() == Side::Plus);
  CHECK(line_of(e.eps().future(P(1))) == Line::from_label(2));

  auto tau = canonical_tau();
  for (Point base : all_points()) CHECK(canonical_epsilon(tau, base) == e);
  for (int k = 1; k < 7; ++k) {
    auto ek = canonical_epsilon(tau.pow(k));
    CHECK(ek == (legendre7(k) == 1 ? e : e.negated()));
  }
  CHECK_THROWS(canonical_epsilon(Collineation::identity()));
}

TEST_CASE("composition factor rules") {
  const auto& e = eps_tau().eps();
  CHECK(is_composition_factor(e));
  for (int k = 0; k < 21; ++k) {
    MultFactor flipped = MultFactor::from_code(e.code() ^ (1u << k));
    CHECK_FALSE(satisfies_line_rule(flipped));
    CHECK_FALSE(is_composition_factor(flipped));
  }
  // Lines are consistently oriented.
  for (Line d : all_lines()) {
    auto [p, q, r] = d.points();
    CHECK(e(p, q) == e(q, r));
    CHECK(e(q, r) == e(r, p));
  }
}

TEST_CASE("exhaustive scan: exactly 16 composition factors, 8 per side") {
  const auto& all = enumerate_composition_factors();
  REQUIRE(all.size() == 16);
  int plus = 0;
  for (const auto& f : all) {
    if (f.side() == Side::Plus) ++plus;
    auto neg = f.negated();
    CHECK(std::binary_search(all.begin(), all.end(), neg));
    CHECK(neg.side() != f.side());
    for (Line d : all_lines()) {
      auto [p, q, r] = d.points();
      CHECK(f(p, q) == f(q, r));
      CHECK(f(q, r) == f(r, p));
    }
  }
  CHECK(plus == 8);
  CHECK(std::binary_search(all.begin(), all.end(), eps_tau()));
}

TEST_CASE("every table failing the future/past dichotomy is rejected") {
  std::size_t dichotomy = 0;
  for (std::uint32_t code = 0; code <= MultFactor::kAllPairs; ++code) {
    MultFactor eps = MultFactor::from_code(code);
    if (!is_composition_factor(eps)) continue;
    CHECK(has_line_dichotomy(eps));
    ++dichotomy;
  }
  CHECK(dichotomy == 16);
}

TEST_CASE("sign rules agree with sampled norm multiplicativity for every norm") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> code_dist(0, MultFactor::kAllPairs);
  for (const auto& n : Norm::all()) {
    CAPTURE(n.str());
    std::size_t passing = 0;
    for (std::uint32_t code = 0; code <= MultFactor::kAllPairs; ++code) {
      MultFactor eps = MultFactor::from_code(code);
      if (!is_composition_factor(eps, n)) continue;
      ++passing;
      CHECK(multiplicative_on_samples(eps, n, rng, 20));
    }
    CHECK(passing > 0);
    for (int t = 0; t < 300; ++t) {
      MultFactor eps = MultFactor::from_code(code_dist(rng));
      if (!is_composition_factor(eps, n)) CHECK_FALSE(multiplicative_on_samples(eps, n, rng, 20));
    }
  }
}

TEST_CASE("Aut(F) action") {
  const auto& g = all_collineations();
  const auto& e = eps_tau();
  CHECK(act(Collineation::identity(), e) == e);
  for (std::size_t i = 0; i < g.size(); i += 3)
    for (std::size_t j = 0; j < g.size(); j += 5) CHECK(act(g[i], act(g[j], e)) == act(g[i] * g[j], e));
}

TEST_CASE("two orbits of eight, one per side, and transitivity witnesses") {
  const auto& all = enumerate_composition_factors();
  auto orbits = orbit_decomposition(all);
  REQUIRE(orbits.size() == 2);
  for (const auto& orbit : orbits) {
    CHECK(orbit.size() == 8);
    for (const auto& f : orbit) CHECK(f.side() == orbit.front().side());
  }
  CHECK(orbits[0].front().side() != orbits[1].front().side());
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.side() != b.side()) continue;
      bool witness = std::any_of(all_collineations().begin(), all_collineations().end(),
                                 [&](const Collineation& x) { return act(x, a) == b; });
      CHECK(witness);
    }
}

TEST_CASE("isotropy of eps^tau is the normalizer of <tau>") {
  auto tau = canonical_tau();
  auto iso = isotropy(eps_tau().eps());
  CHECK(iso.size() == 21);
  CHECK(iso == normalizer(cyclic_subgroup(tau)));
  CHECK(std::binary_search(iso.begin(), iso.end(), tau));
  std::map<int, int> hist;
  for (const auto& z : iso) {
    ++hist[z.order()];
    if (z.order() == 3) {
      auto c = z * tau * z.inverse();
      CHECK((c == tau.pow(2) || c == tau.pow(4)));
    }
  }
  CHECK(hist == std::map<int, int>{{1, 1}, {3, 14}, {7, 6}});
  auto z = Collineation::parse("4152637");
  CHECK(z * tau * z.inverse() == tau.pow(4));
  CHECK(std::binary_search(iso.begin(), iso.end(), z));
}

TEST_CASE("oriented maps and exponentiation") {
  const auto& maps = enumerate_oriented_maps();
  REQUIRE(maps.size() == 8);
  std::set<CompositionFactor> images;
  for (const auto& alpha : maps) {
    auto f = exponentiate(alpha);
    images.insert(f);
    for (Point p : all_points())
      for (Point q : all_points())
        if (p != q) CHECK(f(p, q) * f(q, p) == -1);
  }
  CHECK(images.size() == 8);
  CHECK(images.count(eps_tau()));
  for (const auto& f : images) CHECK(f.side() == eps_tau().side());
  for (const auto& g : all_collineations())
    for (const auto& alpha : maps) CHECK(exponentiate(act(g, alpha)) == act(g, exponentiate(alpha)));
  CHECK_THROWS(OrientedMap::from_masks({1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("point_to_bilinear") {
  std::set<BilinearForm> forms;
  for (unsigned v = 0; v < 8; ++v) {
    auto b = point_to_bilinear(v);
    CHECK(b.vanishes_on_diagonal());
    forms.insert(b);
  }
  CHECK(forms.size() == 8);
  for (Point p : all_points())
    for (Point q : all_points())
      for (Point r : all_points())
        if (q != r && wedge(q, r).contains(p)) CHECK(point_to_bilinear(p)(q.mask(), r.mask()) == 0);
  auto [a, b] = standard_generators();
  for (const auto& g : {a, b})
    for (Point p : all_points()) CHECK(act(g, point_to_bilinear(p)) == point_to_bilinear(g(p)));
  for (const auto& g : all_collineations())
    for (Point p : all_points()) CHECK(act(g, point_to_bilinear(p)) == point_to_bilinear(g(p)));
}

TEST_CASE("orientable triangles") {
  auto tris = orientable_triangles(eps_tau().eps());
  CHECK(tris.size() == 7);
  std::set<std::array<Point, 3>> expected;
  for (int i = 1; i <= 7; ++i) {
    std::array<Point, 3> t = {P(i), P(i).shifted(2), P(i).shifted(3)};
    std::sort(t.begin(), t.end());
    expected.insert(t);
  }
  CHECK(std::set<std::array<Point, 3>>(tris.begin(), tris.end()) == expected);
  CHECK(expected.count({P(1), P(3), P(4)}));
  for (Line d : all_lines()) {
    int inside = 0;
    for (const auto& t : tris)
      inside += std::all_of(t.begin(), t.end(), [&](Point p) { return !d.contains(p); });
    CHECK(inside == 1);
  }
}

TEST_CASE("twisting by R-star is simply transitive on each side") {
  const auto& all = enumerate_composition_factors();
  for (const auto& f : all) {
    std::set<MultFactor> orbit;
    for (LineSigns t : all_Rstar()) {
      MultFactor twisted = twist(f.eps(), t);
      REQUIRE(is_composition_factor(twisted));
      CHECK(CompositionFactor::from(twisted).side() == f.side());
      orbit.insert(twisted);
    }
    CHECK(orbit.size() == 8);
  }
  // Twisting by e(T_P) is the affine translation by the bilinear form of P.
  for (const auto& f : all)
    for (Point v : all_points()) {
      auto b = point_to_bilinear(v);
      MultFactor twisted = twist(f.eps(), e(LineFn::T(v)));
      for (Point q : all_points())
        for (Point r : all_points())
          if (q != r) CHECK(twisted(q, r) == (b(q.mask(), r.mask()) ? -1 : 1) * f(q, r));
    }
}
