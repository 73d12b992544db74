#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanolie/fano.hpp"
#include "fanolie/radon.hpp"

namespace fanolie {

// N : F -> {+1,-1} with N(P+Q) = N(P)N(Q).
class Norm {
 public:
  static Norm one();
  static Norm from_values(const std::array<int, 7>& values);  // throws unless multiplicative
  static std::vector<Norm> all();

  int operator()(Point p) const { return v_[p.index()]; }
  std::string str() const;

 private:
  explicit Norm(const std::array<int, 7>& v) : v_(v) {}
  std::array<int, 7> v_;
};

// Antisymmetric sign table eps_PQ, P != Q. Bit k of the code is set when eps is -1
// on the k-th pair (i<j) in lexicographic order.
class MultFactor {
 public:
  static MultFactor from_code(std::uint32_t code);
  static MultFactor from_table(const std::array<std::array<int, 7>, 7>& table);
  static MultFactor parse(const std::string& text);

  int operator()(Point p, Point q) const;
  std::uint32_t code() const { return code_; }
  MultFactor negated() const { return from_code(code_ ^ kAllPairs); }
  // 21 characters '+'/'-' for pairs (i<j) in lexicographic order.
  std::string str() const;

  // {Q : eps_PQ = +1} and {Q : eps_QP = +1}.
  std::array<Point, 3> future(Point p) const;
  std::array<Point, 3> past(Point p) const;

  friend auto operator<=>(const MultFactor&, const MultFactor&) = default;

  static constexpr std::uint32_t kAllPairs = (1u << 21) - 1;

 private:
  explicit MultFactor(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

// Index 0..20 of the unordered pair {P,Q}.
int pair_index(Point p, Point q);

enum class Side { Plus, Minus };  // future-is-line, past-is-line
std::string to_string(Side s);

// N(P+R) eps_PQ eps_QR = 1 for every ordering of every line.
bool satisfies_line_rule(const MultFactor& eps, const Norm& n = Norm::one());
// N(P+Q) eps_PQ eps_QR eps_RS eps_SP N(P+S) = -1 for every ordering of every quadrilateral.
bool satisfies_quadrilateral_rule(const MultFactor& eps, const Norm& n = Norm::one());
bool is_composition_factor(const MultFactor& eps, const Norm& n = Norm::one());

class CompositionFactor {
 public:
  // Throws unless eps is a composition factor for N = 1.
  static CompositionFactor from(const MultFactor& eps);

  const MultFactor& eps() const { return eps_; }
  Side side() const { return side_; }
  int operator()(Point p, Point q) const { return eps_(p, q); }
  CompositionFactor negated() const { return from(eps_.negated()); }
  std::string str() const { return eps_.str(); }

  friend bool operator==(const CompositionFactor& a, const CompositionFactor& b) { return a.eps_ == b.eps_; }
  friend auto operator<=>(const CompositionFactor& a, const CompositionFactor& b) { return a.eps_ <=> b.eps_; }

 private:
  CompositionFactor(const MultFactor& eps, Side side) : eps_(eps), side_(side) {}
  MultFactor eps_;
  Side side_;
};

// eps_{tau^i P0, tau^j P0} = legendre7(j - i).
CompositionFactor canonical_epsilon(const Collineation& tau, Point base = Point::from_label(1));
// The canonical construction for any 7-cycle sigma on 7 abstract elements; table[x][y] for x != y.
std::array<std::array<int, 7>, 7> canonical_sign_table(const Perm7& sigma, int base);

// Exhaustive scan over all 2^21 antisymmetric tables; sorted.
const std::vector<CompositionFactor>& enumerate_composition_factors();

// (g.eps)_{PQ} = eps_{g^-1 P, g^-1 Q}.
MultFactor act(const Collineation& g, const MultFactor& eps);
CompositionFactor act(const Collineation& g, const CompositionFactor& eps);
// Orbits sorted by their least member.
std::vector<std::vector<CompositionFactor>> orbit_decomposition(const std::vector<CompositionFactor>& factors);

std::vector<Collineation> isotropy(const MultFactor& eps);
std::vector<Collineation> normalizer(const std::vector<Collineation>& subgroup);
std::vector<Collineation> cyclic_subgroup(const Collineation& g);

// Triangles whose cyclic order is consistently signed by eps.
std::vector<std::array<Point, 3>> orientable_triangles(const MultFactor& eps);

// eps'_PQ = f(P^Q) eps_PQ.
MultFactor twist(const MultFactor& eps, LineSigns f);

// Symmetric Z2 bilinear form on V_F; rows[i] bit j = B(basis_i, basis_j).
class BilinearForm {
 public:
  int operator()(unsigned u, unsigned v) const;
  // B(v, v) = 0 for every v.
  bool vanishes_on_diagonal() const;
  const std::array<std::uint8_t, 3>& rows() const { return rows_; }

  friend auto operator<=>(const BilinearForm&, const BilinearForm&) = default;

 private:
  friend BilinearForm point_to_bilinear(unsigned v);
  friend BilinearForm act(const Collineation& g, const BilinearForm& b);
  std::array<std::uint8_t, 3> rows_{};
};

// Cross product of masks: for Q != R nonzero, the dual mask of the line Q^R.
unsigned cross(unsigned q, unsigned r);
// (Q, R) -> (Q ^ R)(v) for v in V_F (mask 0..7).
BilinearForm point_to_bilinear(unsigned v);
inline BilinearForm point_to_bilinear(Point p) { return point_to_bilinear(p.mask()); }
// (g.B)(u, v) = B(g^-1 u, g^-1 v).
BilinearForm act(const Collineation& g, const BilinearForm& b);
// Image of a V_F vector (mask 0..7) under g.
unsigned apply_linear(const Collineation& g, unsigned v);

// alpha_P in V_F*, stored as a dual mask per point.
class OrientedMap {
 public:
  // Throws unless alpha_P(P) = 1 and alpha_P(Q) + alpha_Q(P) = 1.
  static OrientedMap from_masks(const std::array<unsigned, 7>& masks);
  int operator()(Point p, Point q) const { return parity(masks_[p.index()] & q.mask()); }
  const std::array<unsigned, 7>& masks() const { return masks_; }
  std::string str() const;

  friend auto operator<=>(const OrientedMap&, const OrientedMap&) = default;

 private:
  explicit OrientedMap(const std::array<unsigned, 7>& m) : masks_(m) {}
  std::array<unsigned, 7> masks_;
};

const std::vector<OrientedMap>& enumerate_oriented_maps();

class ExponentiationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// eps_PQ = (-1)^{alpha_P(Q)}; throws ExponentiationError if that is not a composition factor.
CompositionFactor exponentiate(const OrientedMap& alpha);
// (g.alpha)_P(Q) = alpha_{g^-1 P}(g^-1 Q).
OrientedMap act(const Collineation& g, const OrientedMap& alpha);

}  // namespace fanolie
