#include "fanolie/fano.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fanolie {

namespace {

constexpr std::array<unsigned, 7> kMaskOfLabel = {1, 2, 4, 3, 6, 7, 5};

int label_of_mask(unsigned mask) {
  for (int i = 0; i < 7; ++i)
    if (kMaskOfLabel[i] == mask) return i + 1;
  throw std::out_of_range("point mask must be in 1..7, got " + std::to_string(mask));
}

int wrap7(int i) { return ((i - 1) % 7 + 7) % 7 + 1; }

int parse_label(const std::string& text, char prefix) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == prefix || digits[0] == prefix + ('a' - 'A'))) digits.erase(0, 1);
  if (digits.size() != 1 || digits[0] < '1' || digits[0] > '7')
    throw std::invalid_argument("cannot parse '" + text + "'");
  return digits[0] - '0';
}

}  // namespace

int parity(unsigned x) { return __builtin_popcount(x) & 1; }

Point Point::from_label(int label) {
  if (label < 1 || label > 7) throw std::out_of_range("point label must be in 1..7, got " + std::to_string(label));
  return Point(label);
}

Point Point::from_mask(unsigned mask) { return Point(label_of_mask(mask)); }

Point Point::parse(const std::string& text) { return Point(parse_label(text, 'P')); }

unsigned Point::mask() const { return kMaskOfLabel[label_ - 1]; }

Point Point::shifted(int k) const { return Point(wrap7(label_ + k)); }

Line Line::from_label(int label) {
  if (label < 1 || label > 7) throw std::out_of_range("line label must be in 1..7, got " + std::to_string(label));
  return Line(label);
}

Line Line::parse(const std::string& text) { return Line(parse_label(text, 'D')); }

std::array<Point, 3> Line::points() const {
  Point p = Point::from_label(label_);
  return {p, p.shifted(1), p.shifted(3)};
}

bool Line::contains(Point p) const {
  for (Point q : points())
    if (q == p) return true;
  return false;
}

unsigned Line::dual_mask() const {
  for (unsigned m = 1; m < 8; ++m) {
    bool vanishes = true;
    for (Point p : points()) vanishes = vanishes && parity(m & p.mask()) == 0;
    if (vanishes) return m;
  }
  throw std::logic_error("line without dual form");
}

std::array<Point, 4> Line::quadrilateral() const {
  std::array<Point, 4> out{Point::from_label(1), Point::from_label(1), Point::from_label(1), Point::from_label(1)};
  int k = 0;
  for (Point p : all_points())
    if (!contains(p)) out[k++] = p;
  return out;
}

const std::array<Point, 7>& all_points() {
  static const std::array<Point, 7> pts = {Point::from_label(1), Point::from_label(2), Point::from_label(3),
                                           Point::from_label(4), Point::from_label(5), Point::from_label(6),
                                           Point::from_label(7)};
  return pts;
}

const std::array<Line, 7>& all_lines() {
  static const std::array<Line, 7> lines = {Line::from_label(1), Line::from_label(2), Line::from_label(3),
                                            Line::from_label(4), Line::from_label(5), Line::from_label(6),
                                            Line::from_label(7)};
  return lines;
}

std::optional<Point> add(Point p, Point q) {
  unsigned m = p.mask() ^ q.mask();
  if (m == 0) return std::nullopt;
  return Point::from_mask(m);
}

Point third_point(Point p, Point q) {
  auto r = add(p, q);
  if (!r) throw std::invalid_argument("third_point of equal points " + p.name());
  return *r;
}

Line wedge(Point p, Point q) {
  if (p == q) throw std::invalid_argument("wedge of equal points " + p.name());
  for (Line d : all_lines())
    if (d.contains(p) && d.contains(q)) return d;
  throw std::logic_error("no line through two points");
}

bool collinear(Point p, Point q, Point r) { return (p.mask() ^ q.mask() ^ r.mask()) == 0; }

std::array<Line, 3> lines_through(Point p) {
  // D_i, D_{i-1}, D_{i-3} contain P_i.
  return {Line::from_label(p.label()), Line::from_label(wrap7(p.label() - 1)), Line::from_label(wrap7(p.label() - 3))};
}

Point meet(Line d, Line e) {
  if (d == e) throw std::invalid_argument("meet of equal lines " + d.name());
  for (Point p : d.points())
    if (e.contains(p)) return p;
  throw std::logic_error("lines do not meet");
}

Line third_line(Line d, Line e) {
  Point p = meet(d, e);
  for (Line l : lines_through(p))
    if (l != d && l != e) return l;
  throw std::logic_error("pencil with fewer than three lines");
}

std::optional<Line> line_of(const std::array<Point, 3>& pts) {
  if (pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2]) return std::nullopt;
  if (!collinear(pts[0], pts[1], pts[2])) return std::nullopt;
  return wedge(pts[0], pts[1]);
}

bool is_additive(const std::array<int, 7>& images) {
  std::array<bool, 8> seen{};
  for (int x : images) {
    if (x < 1 || x > 7 || seen[x]) return false;
    seen[x] = true;
  }
  for (Point p : all_points())
    for (Point q : all_points()) {
      if (p == q) continue;
      Point r = third_point(p, q);
      unsigned lhs = Point::from_label(images[p.index()]).mask() ^ Point::from_label(images[q.index()]).mask();
      if (lhs != Point::from_label(images[r.index()]).mask()) return false;
    }
  return true;
}

Collineation Collineation::identity() { return Collineation({1, 2, 3, 4, 5, 6, 7}); }

std::optional<Collineation> Collineation::try_from_images(const std::array<int, 7>& images) {
  if (!is_additive(images)) return std::nullopt;
  std::array<std::uint8_t, 7> perm{};
  for (int i = 0; i < 7; ++i) perm[i] = static_cast<std::uint8_t>(images[i]);
  return Collineation(perm);
}

Collineation Collineation::from_images(const std::array<int, 7>& images) {
  auto g = try_from_images(images);
  if (!g) throw std::invalid_argument("not an additive bijection of the Fano plane");
  return *g;
}

Collineation Collineation::parse(const std::string& digits) {
  if (digits.size() != 7) throw std::invalid_argument("collineation needs 7 digits: '" + digits + "'");
  std::array<int, 7> images{};
  for (int i = 0; i < 7; ++i) {
    if (digits[i] < '1' || digits[i] > '7') throw std::invalid_argument("bad collineation digit in '" + digits + "'");
    images[i] = digits[i] - '0';
  }
  return from_images(images);
}

Line Collineation::operator()(Line d) const {
  auto pts = d.points();
  auto l = line_of({(*this)(pts[0]), (*this)(pts[1]), (*this)(pts[2])});
  if (!l) throw std::logic_error("collineation does not map lines to lines");
  return *l;
}

Collineation operator*(const Collineation& g, const Collineation& h) {
  std::array<std::uint8_t, 7> perm{};
  for (int i = 0; i < 7; ++i) perm[i] = g.perm_[h.perm_[i] - 1];
  return Collineation(perm);
}

Collineation Collineation::inverse() const {
  std::array<std::uint8_t, 7> perm{};
  for (int i = 0; i < 7; ++i) perm[perm_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return Collineation(perm);
}

Collineation Collineation::pow(int k) const {
  Collineation base = k < 0 ? inverse() : *this;
  Collineation result = identity();
  for (int n = k < 0 ? -k : k; n > 0; --n) result = result * base;
  return result;
}

int Collineation::order() const {
  int k = 1;
  for (Collineation x = *this; !x.is_identity(); x = x * *this) ++k;
  return k;
}

std::string Collineation::str() const {
  std::string s;
  for (auto x : perm_) s.push_back(static_cast<char>('0' + x));
  return s;
}

const std::vector<Collineation>& all_collineations() {
  static const std::vector<Collineation> group = [] {
    std::vector<Collineation> out;
    // A linear map is fixed by the images of the basis masks 001, 010, 100.
    for (unsigned a = 1; a < 8; ++a)
      for (unsigned b = 1; b < 8; ++b) {
        if (b == a) continue;
        for (unsigned c = 1; c < 8; ++c) {
          if (c == a || c == b || c == (a ^ b)) continue;
          std::array<int, 7> images{};
          for (Point p : all_points()) {
            unsigned m = p.mask(), img = 0;
            if (m & 1) img ^= a;
            if (m & 2) img ^= b;
            if (m & 4) img ^= c;
            images[p.index()] = Point::from_mask(img).label();
          }
          out.push_back(Collineation::from_images(images));
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return group;
}

std::vector<Collineation> conjugacy_class(const Collineation& g) {
  std::set<Collineation> cls;
  for (const auto& h : all_collineations()) cls.insert(h * g * h.inverse());
  return {cls.begin(), cls.end()};
}

std::vector<Collineation> generated_subgroup(const std::vector<Collineation>& gens) {
  std::set<Collineation> seen{Collineation::identity()};
  std::vector<Collineation> frontier{Collineation::identity()};
  while (!frontier.empty()) {
    std::vector<Collineation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Collineation y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(Cubic c) { return c == Cubic::X3_X_1 ? "x^3+x+1" : "x^3+x^2+1"; }

Cubic order7_minimal_polynomial(const Collineation& g) {
  if (g.order() != 7) throw std::invalid_argument("order7_minimal_polynomial needs an element of order 7");
  // Evaluate the cubic on g as a linear map of Z2^3, pointwise on the basis of points.
  auto annihilates = [&](bool square_term) {
    for (Point p : all_points()) {
      unsigned v = g.pow(3)(p).mask() ^ p.mask() ^ (square_term ? g.pow(2)(p).mask() : g(p).mask());
      if (v != 0) return false;
    }
    return true;
  };
  if (annihilates(false)) return Cubic::X3_X_1;
  if (annihilates(true)) return Cubic::X3_X2_1;
  throw std::logic_error("order 7 element annihilated by neither cubic");
}

int legendre7(long n) {
  long r = ((n % 7) + 7) % 7;
  if (r == 0) throw std::invalid_argument("legendre7 of a multiple of 7");
  return (r == 1 || r == 2 || r == 4) ? 1 : -1;
}

std::string to_string(OrientationType t) { return t == OrientationType::T013 ? "(0,1,3)" : "(0,2,3)"; }

IncidenceStructure fano_incidence() {
  IncidenceStructure s{};
  for (Line d : all_lines()) {
    auto pts = d.points();
    s.blocks[d.index()] = {pts[0].index(), pts[1].index(), pts[2].index()};
  }
  return s;
}

IncidenceStructure dual_incidence() {
  IncidenceStructure s{};
  for (Point p : all_points()) {
    auto ls = lines_through(p);
    s.blocks[p.index()] = {ls[0].index(), ls[1].index(), ls[2].index()};
  }
  return s;
}

Perm7 point_perm(const Collineation& g) {
  Perm7 out{};
  for (Point p : all_points()) out[p.index()] = g(p).index();
  return out;
}

Perm7 line_perm(const Collineation& g) {
  Perm7 out{};
  for (Line d : all_lines()) out[d.index()] = g(d).index();
  return out;
}

Perm7 inverse_perm(const Perm7& p) {
  Perm7 out{};
  for (int i = 0; i < 7; ++i) out[p[i]] = i;
  return out;
}

namespace {

bool is_block(const IncidenceStructure& s, std::array<int, 3> xs) {
  std::sort(xs.begin(), xs.end());
  for (auto b : s.blocks) {
    std::sort(b.begin(), b.end());
    if (b == xs) return true;
  }
  return false;
}

int apply_n(const Perm7& sigma, int x, int n) {
  for (int i = 0; i < n; ++i) x = sigma[x];
  return x;
}

bool is_seven_cycle(const Perm7& sigma) {
  int x = sigma[0], len = 1;
  while (x != 0 && len <= 7) {
    x = sigma[x];
    ++len;
  }
  return x == 0 && len == 7;
}

}  // namespace

OrientationType orientation_type(const IncidenceStructure& s, const Perm7& sigma) {
  if (!is_seven_cycle(sigma)) throw std::invalid_argument("orientation needs an element of order 7");
  bool t013 = true, t023 = true;
  for (int x = 0; x < 7; ++x) {
    t013 = t013 && is_block(s, {x, apply_n(sigma, x, 1), apply_n(sigma, x, 3)});
    t023 = t023 && is_block(s, {x, apply_n(sigma, x, 2), apply_n(sigma, x, 3)});
  }
  if (t013) return OrientationType::T013;
  if (t023) return OrientationType::T023;
  throw std::logic_error("order 7 element of neither orientation type");
}

OrientationType orientation_type(const Collineation& tau) {
  return orientation_type(fano_incidence(), point_perm(tau));
}

std::array<int, 3> induced_cycle(const IncidenceStructure& s, const Perm7& sigma, int block) {
  if (orientation_type(s, sigma) != OrientationType::T013)
    throw std::invalid_argument("induced orientation needs type (0,1,3)");
  std::array<int, 3> target = s.blocks.at(block);
  std::sort(target.begin(), target.end());
  std::optional<std::array<int, 3>> found;
  for (int x : s.blocks[block]) {
    std::array<int, 3> cyc = {x, apply_n(sigma, x, 1), apply_n(sigma, x, 3)};
    std::array<int, 3> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == target) {
      if (found) throw std::logic_error("block with two starting points");
      found = cyc;
    }
  }
  if (!found) throw std::logic_error("block with no starting point");
  return *found;
}

Orientation Orientation::from(const Collineation& tau) { return {tau, orientation_type(tau)}; }

Collineation canonical_tau() { return Collineation::parse("2345671"); }

std::pair<Collineation, Collineation> standard_generators() {
  return {Collineation::parse("1274653"), Collineation::parse("2746531")};
}

Collineation involution_from(Line l, Point p) {
  if (!l.contains(p)) throw std::invalid_argument(p.name() + " is not on " + l.name());
  std::array<int, 7> images{};
  for (Point r : all_points()) images[r.index()] = l.contains(r) ? r.label() : third_point(r, p).label();
  return Collineation::from_images(images);
}

std::vector<std::array<Point, 3>> all_triangles() {
  std::vector<std::array<Point, 3>> out;
  const auto& pts = all_points();
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k)
        if (!collinear(pts[i], pts[j], pts[k])) out.push_back({pts[i], pts[j], pts[k]});
  return out;
}

std::array<Point, 3> stable_triangle(const Collineation& g) {
  if (g.order() != 3) throw std::invalid_argument("stable_triangle needs an element of order 3");
  std::optional<std::array<Point, 3>> found;
  for (const auto& t : all_triangles()) {
    std::array<Point, 3> img = {g(t[0]), g(t[1]), g(t[2])};
    std::sort(img.begin(), img.end());
    if (img == t) {
      if (found) throw std::logic_error("order 3 element with several stable triangles");
      found = t;
    }
  }
  if (!found) throw std::logic_error("order 3 element without stable triangle");
  return *found;
}

std::array<Point, 3> induced_line_orientation(const Collineation& tau, Line d) {
  auto cyc = induced_cycle(fano_incidence(), point_perm(tau), d.index());
  return {all_points()[cyc[0]], all_points()[cyc[1]], all_points()[cyc[2]]};
}

std::array<Line, 3> dual_line_orientation(const Collineation& tau, Point p) {
  auto cyc = induced_cycle(dual_incidence(), inverse_perm(line_perm(tau)), p.index());
  return {all_lines()[cyc[0]], all_lines()[cyc[1]], all_lines()[cyc[2]]};
}

bool same_cycle(const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
  return false;
}

bool maps_line_orientation(const Collineation& f, const Collineation& tau, const Collineation& tau2, Line d) {
  auto cyc = induced_line_orientation(tau, d);
  std::array<Point, 3> img = {f(cyc[0]), f(cyc[1]), f(cyc[2])};
  return same_cycle(img, induced_line_orientation(tau2, f(d)));
}

}  // namespace fanolie
