#include "fanolie/radon.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanolie {

namespace {

std::string bits_str(unsigned bits) {
  std::string s;
  for (int i = 0; i < 7; ++i) s.push_back((bits >> i) & 1 ? '1' : '0');
  return s;
}

unsigned parse_bits(const std::string& text) {
  if (text.size() != 7) throw std::invalid_argument("function table needs 7 entries: '" + text + "'");
  unsigned bits = 0;
  for (int i = 0; i < 7; ++i) {
    if (text[i] == '1') bits |= 1u << i;
    else if (text[i] != '0') throw std::invalid_argument("function table entries must be 0/1: '" + text + "'");
  }
  return bits;
}

std::string signs_str(unsigned bits) {
  std::string s;
  for (int i = 0; i < 7; ++i) s.push_back((bits >> i) & 1 ? '-' : '+');
  return s;
}

unsigned sign_bits(const std::array<int, 7>& values) {
  unsigned bits = 0;
  for (int i = 0; i < 7; ++i) {
    if (values[i] == -1) bits |= 1u << i;
    else if (values[i] != 1) throw std::invalid_argument("sign function values must be +1 or -1");
  }
  return bits;
}

}  // namespace

PointFn PointFn::from_bits(unsigned bits) {
  if (bits >= 128) throw std::out_of_range("point function bits out of range");
  PointFn f;
  f.bits_ = static_cast<std::uint8_t>(bits);
  return f;
}

PointFn PointFn::indicator(Point p) { return from_bits(1u << p.index()); }

PointFn PointFn::T(Line d) {
  unsigned bits = 0;
  for (Point p : all_points())
    if (!d.contains(p)) bits |= 1u << p.index();
  return from_bits(bits);
}

PointFn PointFn::parse(const std::string& text) { return from_bits(parse_bits(text)); }

std::string PointFn::str() const { return bits_str(bits_); }

LineFn LineFn::from_bits(unsigned bits) {
  if (bits >= 128) throw std::out_of_range("line function bits out of range");
  LineFn f;
  f.bits_ = static_cast<std::uint8_t>(bits);
  return f;
}

LineFn LineFn::constant(int v) { return from_bits(v & 1 ? 127 : 0); }

LineFn LineFn::T(Point p) {
  unsigned bits = 0;
  for (Line d : all_lines())
    if (!d.contains(p)) bits |= 1u << d.index();
  return from_bits(bits);
}

LineFn LineFn::parse(const std::string& text) { return from_bits(parse_bits(text)); }

std::string LineFn::str() const { return bits_str(bits_); }

const std::vector<PointFn>& all_point_fns() {
  static const std::vector<PointFn> fns = [] {
    std::vector<PointFn> out;
    for (unsigned b = 0; b < 128; ++b) out.push_back(PointFn::from_bits(b));
    return out;
  }();
  return fns;
}

const std::vector<LineFn>& all_line_fns() {
  static const std::vector<LineFn> fns = [] {
    std::vector<LineFn> out;
    for (unsigned b = 0; b < 128; ++b) out.push_back(LineFn::from_bits(b));
    return out;
  }();
  return fns;
}

LineFn radon(PointFn f) {
  unsigned bits = 0;
  for (Line d : all_lines()) {
    int s = 0;
    for (Point p : d.points()) s ^= f(p);
    if (s) bits |= 1u << d.index();
  }
  return LineFn::from_bits(bits);
}

bool in_S0(PointFn f) { return f.sum() == 0; }

int pencil_sum(LineFn f, Point p) {
  int s = 0;
  for (Line d : lines_through(p)) s ^= f(d);
  return s;
}

std::vector<PointFn> radon_kernel() {
  std::vector<PointFn> out;
  for (PointFn f : all_point_fns())
    if (radon(f) == LineFn()) out.push_back(f);
  return out;
}

bool in_image(LineFn f) {
  const int first = pencil_sum(f, all_points()[0]);
  for (Point p : all_points())
    if (pencil_sum(f, p) != first) return false;
  return true;
}

std::vector<LineFn> radon_image() {
  std::vector<LineFn> out;
  for (PointFn f : all_point_fns()) out.push_back(radon(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PointFn> preimages(LineFn f) {
  std::vector<PointFn> out;
  bool hit_s0 = false;
  for (PointFn g : all_point_fns())
    if (radon(g) == f) {
      out.push_back(g);
      hit_s0 = hit_s0 || in_S0(g);
    }
  if (!hit_s0) throw std::invalid_argument("line function " + f.str() + " is not in the image of S0");
  return out;
}

PointSigns PointSigns::from_values(const std::array<int, 7>& values) {
  return PointSigns(PointFn::from_bits(sign_bits(values)));
}

std::string PointSigns::str() const { return signs_str(log_.bits()); }

LineSigns LineSigns::from_values(const std::array<int, 7>& values) {
  return LineSigns(LineFn::from_bits(sign_bits(values)));
}

std::string LineSigns::str() const { return signs_str(log_.bits()); }

bool in_R(PointSigns h) { return h.product() == 1; }

bool in_Rstar(LineSigns f) {
  for (Point p : all_points())
    if (pencil_sum(f.log(), p) != 0) return false;
  return true;
}

LineSigns multiplicative_radon(PointSigns h) {
  if (!in_R(h)) throw std::invalid_argument("sign function " + h.str() + " is not in R");
  return LineSigns(radon(h.log()));
}

std::vector<PointSigns> all_R() {
  std::vector<PointSigns> out;
  for (PointFn f : all_point_fns())
    if (in_R(e(f))) out.push_back(e(f));
  return out;
}

std::vector<LineSigns> all_Rstar() {
  std::vector<LineSigns> out;
  for (LineFn f : all_line_fns())
    if (in_Rstar(e(f))) out.push_back(e(f));
  return out;
}

std::optional<Point> distinguished_point(LineSigns f) {
  if (!in_Rstar(f)) throw std::invalid_argument("line function " + f.str() + " is not in R-star");
  if (f.log() == LineFn()) return std::nullopt;
  for (Point p : all_points())
    if (f.log() == LineFn::T(p)) return p;
  throw std::logic_error("member of R-star that is neither 1 nor some e(T_P)");
}

}  // namespace fanolie
