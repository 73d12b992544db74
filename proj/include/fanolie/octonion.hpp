#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanolie/compfactor.hpp"
#include "fanolie/fano.hpp"
#include "fanolie/linalg.hpp"
#include "fanolie/scalars.hpp"

namespace fanolie {

// Basis index 0 is the unit, index k in 1..7 is e_{P_k}.
struct SignedBasis {
  int sign;
  int index;
  friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

using MultiplicationTable = std::array<std::array<SignedBasis, 8>, 8>;

MultiplicationTable multiplication_table(const CompositionFactor& eps);
// "e_P4", "-e_P2", "1", "-1"
std::string basis_label(const SignedBasis& b);
std::string format_table(const MultiplicationTable& t);

// N(xy) - N(x)N(y) expanded as a polynomial in the 16 coordinates of x and y; true iff it vanishes.
bool symbolic_norm_multiplicativity(const MultiplicationTable& t);

template <ExactField F>
class AlgebraContext;

template <ExactField F>
class Octonion {
 public:
  using S = typename F::value_type;

  const std::array<S, 8>& coefficients() const { return c_; }
  const S& operator[](int k) const { return c_.at(k); }
  const S& real() const { return c_[0]; }
  std::uint64_t context_id() const { return ctx_; }

  Octonion conj() const {
    Octonion r = *this;
    for (int k = 1; k < 8; ++k) r.c_[k] = -r.c_[k];
    return r;
  }
  bool is_imaginary() const { return is_zero(c_[0]); }

  Octonion& operator+=(const Octonion& o) {
    check(o);
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    check(o);
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  Octonion operator-() const {
    Octonion r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Octonion operator*(const S& s, Octonion a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 8; ++k) {
      if (is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c_[k]) << ")";
      if (k > 0) os << "e" << k;
    }
    return first ? "0" : os.str();
  }

 private:
  friend class AlgebraContext<F>;
  Octonion(std::uint64_t ctx, std::array<S, 8> c) : ctx_(ctx), c_(std::move(c)) {}
  void check(const Octonion& o) const {
    if (o.ctx_ != ctx_) throw std::invalid_argument("octonions from different algebra contexts");
  }
  std::uint64_t ctx_;
  std::array<S, 8> c_;
};

inline std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

struct NormCheckReport {
  bool structural = false;  // line and quadrilateral rules for N = 1
  int sampled_pairs = 0;
  int sampled_failures = 0;
  bool symbolic_ran = false;
  bool symbolic = false;
  bool ok() const { return structural && sampled_failures == 0 && (!symbolic_ran || symbolic); }
};

template <ExactField F>
class AlgebraContext {
 public:
  using S = typename F::value_type;
  using O = Octonion<F>;

  AlgebraContext(const CompositionFactor& eps, F field)
      : eps_(eps), field_(std::move(field)), table_(multiplication_table(eps)), id_(next_context_id()) {}

  const CompositionFactor& eps() const { return eps_; }
  const F& field() const { return field_; }
  const MultiplicationTable& table() const { return table_; }
  std::uint64_t id() const { return id_; }

  O zero() const { return O(id_, filled(field_.zero())); }
  O one() const { return basis(0); }
  O basis(int k) const {
    auto c = filled(field_.zero());
    c.at(k) = field_.one();
    return O(id_, c);
  }
  O e(Point p) const { return basis(p.label()); }
  O from(const std::array<S, 8>& c) const { return O(id_, c); }
  O from_ints(const std::array<long, 8>& v) const {
    auto c = filled(field_.zero());
    for (int k = 0; k < 8; ++k) c[k] = field_.from_int(v[k]);
    return O(id_, c);
  }

  O mul(const O& x, const O& y) const {
    if (x.ctx_ != id_ || y.ctx_ != id_) throw std::invalid_argument("octonion from a different algebra context");
    auto c = filled(field_.zero());
    for (int a = 0; a < 8; ++a) {
      if (is_zero(x.c_[a])) continue;
      for (int b = 0; b < 8; ++b) {
        if (is_zero(y.c_[b])) continue;
        const SignedBasis& t = table_[a][b];
        S p = x.c_[a] * y.c_[b];
        if (t.sign > 0)
          c[t.index] += p;
        else
          c[t.index] -= p;
      }
    }
    return O(id_, c);
  }

  S norm(const O& x) const {
    S n = field_.zero();
    for (const auto& v : x.coefficients()) n += v * v;
    return n;
  }
  // Polarization of the norm: <x,y> = sum of coordinate products.
  S inner(const O& x, const O& y) const {
    S n = field_.zero();
    for (int k = 0; k < 8; ++k) n += x[k] * y[k];
    return n;
  }
  O associator(const O& x, const O& y, const O& z) const { return mul(mul(x, y), z) - mul(x, mul(y, z)); }

  // Left multiplication as an 8x8 matrix (columns are images of the basis).
  Matrix<S> left_matrix(const O& x) const {
    Matrix<S> m(8, 8, field_.zero());
    for (int b = 0; b < 8; ++b) {
      O col = mul(x, basis(b));
      for (int a = 0; a < 8; ++a) m(a, b) = col[a];
    }
    return m;
  }

  O random_integer(std::mt19937_64& rng, long bound) const {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::array<long, 8> v{};
    for (auto& x : v) x = d(rng);
    return from_ints(v);
  }

  NormCheckReport norm_multiplicativity_check(int samples, std::uint64_t seed, bool symbolic) const {
    NormCheckReport r;
    r.structural = is_composition_factor(eps_.eps(), Norm::one());
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      O x = random_integer(rng, 9), y = random_integer(rng, 9);
      ++r.sampled_pairs;
      if (!(norm(mul(x, y)) == norm(x) * norm(y))) ++r.sampled_failures;
    }
    if (symbolic) {
      r.symbolic_ran = true;
      r.symbolic = symbolic_norm_multiplicativity(table_);
    }
    return r;
  }

  // Dimension of the smallest multiplication-closed subspace containing 1 and the generators.
  std::size_t subalgebra_dimension(const std::vector<O>& generators) const {
    std::vector<Vec<S>> basis_rows{as_vec(one())};
    for (const auto& g : generators) basis_rows.push_back(as_vec(g));
    basis_rows = span_basis(basis_rows);
    for (;;) {
      std::vector<Vec<S>> grown = basis_rows;
      for (const auto& u : basis_rows)
        for (const auto& v : basis_rows) grown.push_back(as_vec(mul(from_vec(u), from_vec(v))));
      grown = span_basis(grown);
      if (grown.size() == basis_rows.size()) return grown.size();
      basis_rows = std::move(grown);
    }
  }

  std::size_t subalgebra_generated(const std::vector<Point>& points) const {
    if (points.empty()) throw std::invalid_argument("subalgebra_generated needs at least one point");
    std::vector<O> gens;
    for (Point p : points) gens.push_back(e(p));
    return subalgebra_dimension(gens);
  }

  struct QuaternionSubalgebra {
    Line line;
    std::array<O, 4> basis;  // 1, e_P, e_Q, e_R in line order
  };

  // Throws if span<1, e_P, e_Q, e_R> is not closed or not associative.
  QuaternionSubalgebra quaternion_subalgebra(Line d) const {
    auto pts = d.points();
    std::array<O, 4> b = {one(), e(pts[0]), e(pts[1]), e(pts[2])};
    std::vector<Vec<S>> rows;
    for (const auto& x : b) rows.push_back(as_vec(x));
    for (const auto& x : b)
      for (const auto& y : b) {
        if (!in_span(rows, as_vec(mul(x, y)))) throw std::runtime_error("quaternion span not closed on " + d.name());
        for (const auto& z : b)
          if (!(associator(x, y, z) == zero())) throw std::runtime_error("quaternion span not associative on " + d.name());
      }
    return {d, b};
  }

  Vec<S> as_vec(const O& x) const { return Vec<S>(x.coefficients().begin(), x.coefficients().end()); }
  O from_vec(const Vec<S>& v) const {
    if (v.size() != 8) throw std::invalid_argument("octonion vector must have 8 entries");
    return O(id_, {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }

 private:
  static std::array<S, 8> filled(const S& z) { return {z, z, z, z, z, z, z, z}; }

  CompositionFactor eps_;
  F field_;
  MultiplicationTable table_;
  std::uint64_t id_;
};

}  // namespace fanolie
