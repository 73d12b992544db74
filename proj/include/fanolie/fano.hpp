#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanolie {

// A point P_i of the Fano plane, i.e. a nonzero vector of Z2^3.
// Labels follow P_{i+3} = P_i + P_{i+1} starting from P1=001, P2=010, P3=100.
class Point {
 public:
  static Point from_label(int label);
  static Point from_mask(unsigned mask);
  static Point parse(const std::string& text);  // "P3" or "3"

  int label() const { return label_; }
  unsigned mask() const;
  int index() const { return label_ - 1; }
  std::string name() const { return "P" + std::to_string(label_); }

  // P_{i+k}, labels read cyclically mod 7.
  Point shifted(int k) const;

  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  explicit Point(int label) : label_(static_cast<std::uint8_t>(label)) {}
  std::uint8_t label_;
};

// D_i = {P_i, P_{i+1}, P_{i+3}}.
class Line {
 public:
  static Line from_label(int label);
  static Line parse(const std::string& text);  // "D3" or "3"

  int label() const { return label_; }
  int index() const { return label_ - 1; }
  std::string name() const { return "D" + std::to_string(label_); }

  // (P_i, P_{i+1}, P_{i+3}).
  std::array<Point, 3> points() const;
  bool contains(Point p) const;
  // The nonzero linear form vanishing on the line, as a 3-bit mask.
  unsigned dual_mask() const;
  // The four points off the line.
  std::array<Point, 4> quadrilateral() const;

  friend auto operator<=>(const Line&, const Line&) = default;

 private:
  explicit Line(int label) : label_(static_cast<std::uint8_t>(label)) {}
  std::uint8_t label_;
};

const std::array<Point, 7>& all_points();
const std::array<Line, 7>& all_lines();

std::optional<Point> add(Point p, Point q);
// P + Q for P != Q.
Point third_point(Point p, Point q);
Line wedge(Point p, Point q);
bool collinear(Point p, Point q, Point r);
std::array<Line, 3> lines_through(Point p);
Point meet(Line d, Line e);
// The line through meet(d, e) other than d and e.
Line third_line(Line d, Line e);
std::optional<Line> line_of(const std::array<Point, 3>& pts);
int parity(unsigned x);

class Collineation {
 public:
  static Collineation identity();
  // images[i] is the label of the image of P_{i+1}. Throws unless additive bijection.
  static Collineation from_images(const std::array<int, 7>& images);
  static std::optional<Collineation> try_from_images(const std::array<int, 7>& images);
  static Collineation parse(const std::string& digits);

  Point operator()(Point p) const { return Point::from_label(perm_[p.index()]); }
  Line operator()(Line d) const;
  // (g * h)(P) = g(h(P)).
  friend Collineation operator*(const Collineation& g, const Collineation& h);
  Collineation inverse() const;
  Collineation pow(int k) const;
  int order() const;
  bool is_identity() const { return *this == identity(); }
  const std::array<std::uint8_t, 7>& images() const { return perm_; }
  std::string str() const;

  friend auto operator<=>(const Collineation&, const Collineation&) = default;

 private:
  explicit Collineation(const std::array<std::uint8_t, 7>& perm) : perm_(perm) {}
  std::array<std::uint8_t, 7> perm_;
};

bool is_additive(const std::array<int, 7>& images);

// Sorted by digit string.
const std::vector<Collineation>& all_collineations();
std::vector<Collineation> conjugacy_class(const Collineation& g);
std::vector<Collineation> generated_subgroup(const std::vector<Collineation>& gens);

enum class Cubic { X3_X_1, X3_X2_1 };  // x^3+x+1, x^3+x^2+1
std::string to_string(Cubic c);
Cubic order7_minimal_polynomial(const Collineation& g);

// +1 iff n mod 7 is a nonzero square.
int legendre7(long n);

enum class OrientationType { T013, T023 };
std::string to_string(OrientationType t);

// An abstract 7-element incidence structure: elements 0..6 and seven 3-element blocks.
struct IncidenceStructure {
  std::array<std::array<int, 3>, 7> blocks;
};
using Perm7 = std::array<int, 7>;

IncidenceStructure fano_incidence();
// Elements are lines (index of D_i), blocks are pencils (index of P_i).
IncidenceStructure dual_incidence();
Perm7 point_perm(const Collineation& g);
Perm7 line_perm(const Collineation& g);
Perm7 inverse_perm(const Perm7& p);

OrientationType orientation_type(const IncidenceStructure& s, const Perm7& sigma);
OrientationType orientation_type(const Collineation& tau);
// The cycle (x, s x, s^3 x) on a block of a type (0,1,3) orientation.
std::array<int, 3> induced_cycle(const IncidenceStructure& s, const Perm7& sigma, int block);

struct Orientation {
  Collineation tau;
  OrientationType type;
  static Orientation from(const Collineation& tau);
};

// P_i -> P_{i+1}.
Collineation canonical_tau();
// (a, b) with a^2 = b^3 = (ab)^7 = (aba^-1b^-1)^4 = 1 and ab = canonical_tau().
std::pair<Collineation, Collineation> standard_generators();

Collineation involution_from(Line l, Point p);
std::array<Point, 3> stable_triangle(const Collineation& g);
std::vector<std::array<Point, 3>> all_triangles();

// (P, tau P, tau^3 P) for the unique P of D with D = {P, tau P, tau^3 P}.
std::array<Point, 3> induced_line_orientation(const Collineation& tau, Line d);
// The pencil through P ordered as (D_P, D_{tau^-1 P}, D_{tau^-3 P}), D_P = {P, tau P, tau^3 P}.
std::array<Line, 3> dual_line_orientation(const Collineation& tau, Point p);

// True iff f carries the tau-cyclic order of D to the tau2-cyclic order of f(D).
bool maps_line_orientation(const Collineation& f, const Collineation& tau, const Collineation& tau2, Line d);
bool same_cycle(const std::array<Point, 3>& a, const std::array<Point, 3>& b);

}  // namespace fanolie
