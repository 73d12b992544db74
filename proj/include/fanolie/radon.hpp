#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanolie/fano.hpp"

namespace fanolie {

// Z2-valued function on the points; bit i holds f(P_{i+1}).
class PointFn {
 public:
  PointFn() = default;
  static PointFn from_bits(unsigned bits);
  static PointFn indicator(Point p);
  // T_D: 0 on D, 1 off D.
  static PointFn T(Line d);
  // Text "0110100" listing f(P1)..f(P7).
  static PointFn parse(const std::string& text);

  int operator()(Point p) const { return (bits_ >> p.index()) & 1; }
  unsigned bits() const { return bits_; }
  int sum() const { return parity(bits_); }
  std::string str() const;

  friend PointFn operator+(PointFn a, PointFn b) { return from_bits(a.bits_ ^ b.bits_); }
  friend auto operator<=>(const PointFn&, const PointFn&) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Z2-valued function on the lines; bit i holds f(D_{i+1}).
class LineFn {
 public:
  LineFn() = default;
  static LineFn from_bits(unsigned bits);
  static LineFn constant(int v);
  // T_P: 0 on the lines through P, 1 on the others.
  static LineFn T(Point p);
  static LineFn parse(const std::string& text);

  int operator()(Line d) const { return (bits_ >> d.index()) & 1; }
  unsigned bits() const { return bits_; }
  std::string str() const;

  friend LineFn operator+(LineFn a, LineFn b) { return from_bits(a.bits_ ^ b.bits_); }
  friend auto operator<=>(const LineFn&, const LineFn&) = default;

 private:
  std::uint8_t bits_ = 0;
};

const std::vector<PointFn>& all_point_fns();
const std::vector<LineFn>& all_line_fns();

LineFn radon(PointFn f);
bool in_S0(PointFn f);
// Sum of f over the three lines through p.
int pencil_sum(LineFn f, Point p);

std::vector<PointFn> radon_kernel();
bool in_image(LineFn f);
std::vector<LineFn> radon_image();
// All g with radon(g) = f; f must lie in the image of S0.
std::vector<PointFn> preimages(LineFn f);

// +-1 valued function on the points, stored as the Z2 function of its sign bits (e(0)=1, e(1)=-1).
class PointSigns {
 public:
  PointSigns() = default;
  explicit PointSigns(PointFn log) : log_(log) {}
  static PointSigns from_values(const std::array<int, 7>& values);

  int operator()(Point p) const { return log_(p) ? -1 : 1; }
  PointFn log() const { return log_; }
  int product() const { return log_.sum() ? -1 : 1; }
  std::string str() const;  // "+-+..." over P1..P7

  friend PointSigns operator*(PointSigns a, PointSigns b) { return PointSigns(a.log_ + b.log_); }
  friend auto operator<=>(const PointSigns&, const PointSigns&) = default;

 private:
  PointFn log_;
};

class LineSigns {
 public:
  LineSigns() = default;
  explicit LineSigns(LineFn log) : log_(log) {}
  static LineSigns from_values(const std::array<int, 7>& values);

  int operator()(Line d) const { return log_(d) ? -1 : 1; }
  LineFn log() const { return log_; }
  std::string str() const;

  friend LineSigns operator*(LineSigns a, LineSigns b) { return LineSigns(a.log_ + b.log_); }
  friend auto operator<=>(const LineSigns&, const LineSigns&) = default;

 private:
  LineFn log_;
};

inline PointSigns e(PointFn f) { return PointSigns(f); }
inline LineSigns e(LineFn f) { return LineSigns(f); }

// R: product over all points is +1.
bool in_R(PointSigns h);
// R-star: product over every pencil of three concurrent lines is +1.
bool in_Rstar(LineSigns f);
// (e . radon . log)(h), defined on R.
LineSigns multiplicative_radon(PointSigns h);
std::vector<PointSigns> all_R();
std::vector<LineSigns> all_Rstar();

// e(T_P) -> P, constant 1 -> nullopt. Throws outside R-star.
std::optional<Point> distinguished_point(LineSigns f);

}  // namespace fanolie
