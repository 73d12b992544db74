#include <algorithm>
#include <set>

#include "doctest.h"
#include "fanolie/radon.hpp"

using namespace fanolie;

namespace {

Point P(int i) { return Point::from_label(i); }

}  // namespace

TEST_CASE("radon of basic functions") {
  CHECK(radon(PointFn()) == LineFn());
  for (Line d : all_lines()) CHECK(radon(PointFn::T(d)) == LineFn());
  for (Point p : all_points()) {
    LineFn f = radon(PointFn::indicator(p));
    for (Line d : all_lines()) CHECK(f(d) == (d.contains(p) ? 1 : 0));
    CHECK(f == LineFn::T(p) + LineFn::constant(1));
  }
}

TEST_CASE("radon is linear and satisfies the pencil-sum identity") {
  for (PointFn f : all_point_fns()) {
    for (PointFn g : all_point_fns()) CHECK(radon(f + g) == radon(f) + radon(g));
    for (Point p : all_points()) CHECK(pencil_sum(radon(f), p) == f.sum());
  }
}

TEST_CASE("kernel") {
  auto k = radon_kernel();
  CHECK(k.size() == 8);
  std::set<PointFn> expected{PointFn()};
  for (Line d : all_lines()) expected.insert(PointFn::T(d));
  CHECK(std::set<PointFn>(k.begin(), k.end()) == expected);
  for (Line d : all_lines())
    for (Point p : all_points()) CHECK((PointFn::T(d)(p) == 0) == d.contains(p));
  for (PointFn a : k)
    for (PointFn b : k) CHECK(std::find(k.begin(), k.end(), a + b) != k.end());
  for (PointFn a : k) CHECK(in_S0(a));
}

TEST_CASE("image") {
  auto im = radon_image();
  CHECK(im.size() == 16);
  std::set<LineFn> expected{LineFn(), LineFn::constant(1)};
  for (Point p : all_points()) {
    expected.insert(LineFn::T(p));
    expected.insert(LineFn::T(p) + LineFn::constant(1));
  }
  CHECK(std::set<LineFn>(im.begin(), im.end()) == expected);
  for (LineFn f : all_line_fns()) CHECK(in_image(f) == std::binary_search(im.begin(), im.end(), f));
  CHECK(in_image(LineFn::constant(1)));
  // Flipping one value of a member mixes pencil sums 0 and 1.
  for (LineFn f : im)
    for (Line d : all_lines()) CHECK_FALSE(in_image(f + LineFn::from_bits(1u << d.index())));
}

TEST_CASE("ranks as Z2 spaces") {
  CHECK(radon_image().size() == 16);  // rank 4
  CHECK(radon_kernel().size() == 8);  // rank 3
}

TEST_CASE("preimages") {
  auto k = radon_kernel();
  CHECK(preimages(LineFn()) == k);

  // The highlighted function of the preimage figure is e(T_P6); its eight preimages,
  // read from the figure as sign patterns over P1..P7.
  const std::set<std::string> figure = {"-----+-", "+--+--+", "-+-++--", "+++----",
                                        "--+-+-+", "++--+++", "+-++++-", "-+++-++"};
  std::set<std::string> got;
  for (PointFn g : preimages(LineFn::T(P(6)))) {
    CHECK(in_S0(g));
    got.insert(e(g).str());
  }
  CHECK(got == figure);

  for (Point p : all_points()) {
    auto pre = preimages(LineFn::T(p));
    CHECK(pre.size() == 8);
    for (PointFn g : pre) CHECK(radon(g) == LineFn::T(p));
    CHECK_THROWS_AS(preimages(LineFn::T(p) + LineFn::constant(1)), std::invalid_argument);
  }
  CHECK_THROWS_AS(preimages(LineFn::from_bits(1)), std::invalid_argument);
}

TEST_CASE("multiplicative radon") {
  auto r = all_R();
  auto rstar = all_Rstar();
  CHECK(r.size() == 64);
  CHECK(rstar.size() == 8);
  CHECK(multiplicative_radon(PointSigns()) == LineSigns());
  std::set<LineSigns> images;
  std::set<PointSigns> kernel;
  for (PointSigns h1 : r) {
    images.insert(multiplicative_radon(h1));
    if (multiplicative_radon(h1) == LineSigns()) kernel.insert(h1);
    for (PointSigns h2 : r) CHECK(multiplicative_radon(h1 * h2) == multiplicative_radon(h1) * multiplicative_radon(h2));
  }
  CHECK(images == std::set<LineSigns>(rstar.begin(), rstar.end()));
  std::set<PointSigns> eT;
  for (PointFn t : radon_kernel()) eT.insert(e(t));
  CHECK(kernel == eT);
  CHECK_THROWS_AS(multiplicative_radon(e(PointFn::indicator(P(1)))), std::invalid_argument);
}

TEST_CASE("R-star members and their distinguished points") {
  std::set<std::optional<Point>> seen;
  for (LineSigns f : all_Rstar()) {
    auto p = distinguished_point(f);
    seen.insert(p);
    if (p) {
      for (Line d : all_lines()) CHECK((f(d) == 1) == d.contains(*p));
    } else {
      CHECK(f == LineSigns());
    }
  }
  CHECK(seen.size() == 8);
  CHECK_THROWS(distinguished_point(e(LineFn::from_bits(1))));
}

TEST_CASE("sign function text") {
  CHECK(PointSigns::from_values({1, -1, 1, 1, 1, 1, -1}).str() == "+-++++-");
  CHECK(PointFn::parse("1000001").bits() == 0b1000001u);
  CHECK_THROWS(PointFn::parse("10"));
  CHECK_THROWS(PointSigns::from_values({1, 0, 1, 1, 1, 1, 1}));
}
