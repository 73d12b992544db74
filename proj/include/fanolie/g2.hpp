#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fanolie/compfactor.hpp"
#include "fanolie/fano.hpp"
#include "fanolie/lifting.hpp"
#include "fanolie/linalg.hpp"
#include "fanolie/octonion.hpp"
#include "fanolie/radon.hpp"
#include "fanolie/scalars.hpp"

namespace fanolie {

// ---- pair basis of so(7) ----------------------------------------------------

// Basis element k of so(7) is e_{P_i P_j}, i < j, in lexicographic order.
std::pair<Point, Point> pair_points(int k);
// e_{PQ} = sign * basis[index]; e_{QP} = -e_{PQ}.
std::pair<int, int> pair_slot(Point p, Point q);

struct Term {
  int sign;
  int index;
};
// [basis_a, basis_b] as a signed combination of basis elements.
const std::vector<Term>& so7_structure(int a, int b);

using IntElt = std::array<int, 21>;
using IntMatrix = std::array<std::array<int, 8>, 8>;

// ---- incident pairs and the generators --------------------------------------

struct IncidentPair {
  Point p;
  Line d;
  static IncidentPair make(Point p, Line d);  // throws unless p lies on d
  std::string str() const { return "(" + p.name() + "," + d.name() + ")"; }
  friend auto operator<=>(const IncidentPair&, const IncidentPair&) = default;
};

const std::vector<IncidentPair>& all_incident_pairs();  // 21, sorted

// Integer coordinates of X_{P,D} and Y_{P,D} in the pair basis.
IntElt x_coords(const IncidentPair& pd);
IntElt y_coords(const IncidentPair& pd);

enum class PairOrbit { Diagonal, O1, O2, O3, O3Prime, O4 };
std::string to_string(PairOrbit o);
// Diagonal: equal. O1: same point. O2: same line. O3: P in D'. O3': P' in D. O4: otherwise.
PairOrbit classify_pair(const IncidentPair& a, const IncidentPair& b);
std::map<PairOrbit, int> pair_census();
// Each tag class is one orbit: closure of a representative under the standard generators.
bool pair_orbits_are_single_orbits();

// Predicted [X_1, X_2] = coeff * X_target (nullopt when zero); throws for the diagonal.
std::optional<std::pair<int, IncidentPair>> bracket_law(const IncidentPair& a, const IncidentPair& b,
                                                        const CompositionFactor& eps);

// Canonical factor of the dual plane for the orientation tau*^-1; table[D][D'] by line index.
std::array<std::array<int, 7>, 7> dual_epsilon(const Collineation& tau);
// X_{P,D} e_Q: zero for Q on D, else eps_{PQ} eps*_{D, P^Q} e_{P+Q}.
std::optional<std::pair<int, Point>> action_on_basis(const IncidentPair& pd, Point q, const Collineation& tau);

// ---- integer spinor matrices -------------------------------------------------

// L_i[k][j] = s when e_i e_j = s e_k (8x8, index 0 is the unit).
IntMatrix left_mult_int(const MultiplicationTable& t, int i);
// 4 * spinor(basis_k) = L_i L_j - L_j L_i.
IntMatrix spinor4_basis(const MultiplicationTable& t, int k);
IntMatrix spinor4(const MultiplicationTable& t, const IntElt& x);

// g^ X_{P,D} g^-1 = delta(g^, P) X_{gP, gD}; throws if the conjugate is not +-X_{gP,gD}
// or the sign depends on D.
int delta_hat(const AugAut& g, Point p, const MultiplicationTable& t);
PointSigns delta_hat_fn(const AugAut& g, const MultiplicationTable& t);

struct DeltaHatReport {
  int elements = 0;
  int distinct_functions = 0;
  int min_multiplicity = 0;
  int max_multiplicity = 0;
  int product_failures = 0;  // product over all points != +1
  int radon_failures = 0;    // multiplicative Radon transform != delta*
  int equivariance_failures = 0;
  bool ok() const {
    return elements == 1344 && distinct_functions == 64 && min_multiplicity == 21 && max_multiplicity == 21 &&
           product_failures == 0 && radon_failures == 0 && equivariance_failures == 0;
  }
};
DeltaHatReport delta_hat_report(const std::vector<AugAut>& group, const CompositionFactor& eps);

// The 64 delta colorings of the points, one block per function with its multiplicity and delta*.
std::string delta_diagram_text(const std::vector<AugAut>& group, const CompositionFactor& eps);
std::string delta_diagram_dot(const std::vector<AugAut>& group, const CompositionFactor& eps);

// ---- exact algebra over a field ---------------------------------------------

template <class S>
class So7Elt {
 public:
  explicit So7Elt(const S& zero) : c_(21, zero) {}
  explicit So7Elt(Vec<S> c) : c_(std::move(c)) {
    if (c_.size() != 21) throw std::invalid_argument("so(7) element needs 21 coefficients");
  }
  const Vec<S>& coeffs() const { return c_; }
  const S& operator[](int k) const { return c_.at(k); }
  S& operator[](int k) { return c_.at(k); }
  bool is_zero() const { return is_zero_vec(c_); }

  So7Elt& operator+=(const So7Elt& o) {
    for (int k = 0; k < 21; ++k) c_[k] += o.c_[k];
    return *this;
  }
  So7Elt& operator-=(const So7Elt& o) {
    for (int k = 0; k < 21; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend So7Elt operator+(So7Elt a, const So7Elt& b) { return a += b; }
  friend So7Elt operator-(So7Elt a, const So7Elt& b) { return a -= b; }
  So7Elt operator-() const {
    So7Elt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend So7Elt operator*(const S& s, So7Elt a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const So7Elt& a, const So7Elt& b) { return a.c_ == b.c_; }

 private:
  Vec<S> c_;
};

template <ExactField F>
class G2Context {
 public:
  using S = typename F::value_type;
  using E = So7Elt<S>;
  using M = Matrix<S>;

  explicit G2Context(F field = F{}, Collineation tau = canonical_tau())
      : field_(std::move(field)), tau_(tau), eps_(canonical_epsilon(tau)), table_(multiplication_table(eps_)) {
    for (int i = 1; i < 8; ++i) left_.push_back(to_matrix(left_mult_int(table_, i), field_.one()));
    S quarter = field_.one() / field_.from_int(4);
    for (int k = 0; k < 21; ++k) spinor_basis_.push_back(to_matrix(spinor4_basis(table_, k), quarter));
  }

  const F& field() const { return field_; }
  const CompositionFactor& eps() const { return eps_; }
  const Collineation& tau() const { return tau_; }
  const MultiplicationTable& table() const { return table_; }

  E zero() const { return E(field_.zero()); }
  E basis(int k) const {
    E e = zero();
    e[k] = field_.one();
    return e;
  }
  E from_ints(const IntElt& v) const {
    E e = zero();
    for (int k = 0; k < 21; ++k) e[k] = field_.from_int(v[k]);
    return e;
  }
  E X(const IncidentPair& pd) const { return from_ints(x_coords(pd)); }
  E Y(const IncidentPair& pd) const { return from_ints(y_coords(pd)); }
  E X(Point p, Line d) const { return X(IncidentPair::make(p, d)); }
  E Y(Point p, Line d) const { return Y(IncidentPair::make(p, d)); }

  E bracket(const E& x, const E& y) const {
    E r = zero();
    for (int a = 0; a < 21; ++a) {
      if (fanolie::is_zero(x[a])) continue;
      for (int b = 0; b < 21; ++b) {
        if (fanolie::is_zero(y[b])) continue;
        S p = x[a] * y[b];
        for (const Term& t : so7_structure(a, b)) {
          if (t.sign > 0)
            r[t.index] += p;
          else
            r[t.index] -= p;
        }
      }
    }
    return r;
  }

  // Action on the seven imaginary units: [e_ij, e_k] = delta_ik e_j - delta_jk e_i.
  M vector_matrix(const E& x) const {
    M m(7, 7, field_.zero());
    for (int k = 0; k < 21; ++k) {
      auto [p, q] = pair_points(k);
      m(q.index(), p.index()) += x[k];
      m(p.index(), q.index()) -= x[k];
    }
    return m;
  }

  M spinor(const E& x) const {
    M m(8, 8, field_.zero());
    for (int k = 0; k < 21; ++k) {
      if (fanolie::is_zero(x[k])) continue;
      M t = spinor_basis_[k];
      t *= x[k];
      m += t;
    }
    return m;
  }
  const M& left(Point p) const { return left_[p.index()]; }

  // Coordinates read off by the trace form; nullopt if the matrix is not in the spinor image.
  std::optional<E> decode(const M& m) const {
    E x = zero();
    for (int k = 0; k < 21; ++k) {
      const M& b = spinor_basis_[k];
      S num = field_.zero(), den = field_.zero();
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
          num += b(r, c) * m(r, c);
          den += b(r, c) * b(r, c);
        }
      x[k] = num / den;
    }
    if (!(spinor(x) == m)) return std::nullopt;
    return x;
  }

  bool in_g2(const E& x) const {
    M m = spinor(x);
    for (std::size_t r = 0; r < 8; ++r)
      if (!fanolie::is_zero(m(r, 0))) return false;
    return true;
  }

  // Basis of {x : spinor(x) 1 = 0}.
  std::vector<Vec<S>> annihilator_of_unit() const { return annihilator_of(0); }
  // Basis of {x in so(7) : spinor(x) kills the unit and e_k} for basis index k (0 = unit only).
  std::vector<Vec<S>> annihilator_of(int k) const {
    std::vector<Vec<S>> rows;
    for (int col : std::set<int>{0, k})
      for (int r = 0; r < 8; ++r) {
        Vec<S> row(21, field_.zero());
        for (int j = 0; j < 21; ++j) row[j] = spinor_basis_[j](r, col);
        rows.push_back(row);
      }
    return nullspace(field_, rows, 21);
  }

  std::vector<Vec<S>> span_of(const std::vector<E>& xs) const {
    std::vector<Vec<S>> rows;
    for (const auto& x : xs) rows.push_back(x.coeffs());
    return span_basis(rows);
  }

  // Basis of the Lie algebra generated by xs.
  std::vector<Vec<S>> lie_closure(const std::vector<E>& xs) const {
    auto basis_rows = span_of(xs);
    for (;;) {
      auto grown = basis_rows;
      for (const auto& u : basis_rows)
        for (const auto& v : basis_rows) grown.push_back(bracket(E(u), E(v)).coeffs());
      grown = span_basis(grown);
      if (grown.size() == basis_rows.size()) return grown;
      basis_rows = std::move(grown);
    }
  }

  bool is_closed(const std::vector<Vec<S>>& basis_rows) const {
    for (const auto& u : basis_rows)
      for (const auto& v : basis_rows)
        if (!in_span(basis_rows, bracket(E(u), E(v)).coeffs())) return false;
    return true;
  }

  // Elements of `space` (a basis of a subspace of g2) commuting with every element of `with`.
  std::vector<Vec<S>> centralizer(const std::vector<Vec<S>>& space, const std::vector<E>& with) const {
    // Unknowns: coefficients c_m of sum c_m space[m]; equations: coordinates of [w, sum] = 0.
    std::vector<Vec<S>> rows;
    for (const auto& w : with) {
      std::vector<E> images;
      for (const auto& s : space) images.push_back(bracket(w, E(s)));
      for (int k = 0; k < 21; ++k) {
        Vec<S> row;
        for (const auto& im : images) row.push_back(im[k]);
        rows.push_back(row);
      }
    }
    std::vector<Vec<S>> out;
    for (const auto& c : nullspace(field_, rows, space.size())) {
      E x = zero();
      for (std::size_t m = 0; m < space.size(); ++m) x += c[m] * E(space[m]);
      out.push_back(x.coeffs());
    }
    return out;
  }

  // Restriction of spinor(x) to the imaginary units, as a 7x7 matrix.
  M imaginary_action(const E& x) const {
    M s = spinor(x);
    M m(7, 7, field_.zero());
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) m(r, c) = s(r + 1, c + 1);
    return m;
  }

 private:
  template <class A>
  M to_matrix(const A& a, const S& scale) const {
    M m(a.size(), a.size(), field_.zero());
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c)
        if (a[r][c] != 0) m(r, c) = field_.from_int(a[r][c]) * scale;
    return m;
  }

  F field_;
  Collineation tau_;
  CompositionFactor eps_;
  MultiplicationTable table_;
  std::vector<M> left_;
  std::vector<M> spinor_basis_;
};

// ---- reports -------------------------------------------------------------------

struct BracketLawReport {
  int pairs = 0;
  int law_mismatches = 0;     // structure constants vs the case formula
  int matrix_mismatches = 0;  // structure constants vs spinor commutator
  int vector_mismatches = 0;  // structure constants vs vector commutator
  bool ok() const { return pairs == 441 && law_mismatches == 0 && matrix_mismatches == 0 && vector_mismatches == 0; }
};

template <ExactField F>
BracketLawReport bracket_law_report(const G2Context<F>& g) {
  BracketLawReport r;
  for (const auto& a : all_incident_pairs())
    for (const auto& b : all_incident_pairs()) {
      ++r.pairs;
      auto xa = g.X(a), xb = g.X(b);
      auto br = g.bracket(xa, xb);
      auto expected = g.zero();
      if (a != b)
        if (auto law = bracket_law(a, b, g.eps())) expected = g.field().from_int(law->first) * g.X(law->second);
      if (!(br == expected)) ++r.law_mismatches;
      if (!(g.spinor(br) == commutator(g.spinor(xa), g.spinor(xb)))) ++r.matrix_mismatches;
      if (!(g.vector_matrix(br) == commutator(g.vector_matrix(xa), g.vector_matrix(xb)))) ++r.vector_mismatches;
    }
  return r;
}

struct ActionReport {
  int cases = 0;
  int spinor_mismatches = 0;
  int vector_mismatches = 0;
  bool ok() const { return cases == 147 && spinor_mismatches == 0 && vector_mismatches == 0; }
};

// action_on_basis against the spinor matrix and the vector representation, all 21 x 7 cases.
template <ExactField F>
ActionReport action_report(const G2Context<F>& g) {
  ActionReport r;
  for (const auto& pd : all_incident_pairs()) {
    auto x = g.X(pd);
    auto sm = g.imaginary_action(x);
    auto vm = g.vector_matrix(x);
    for (Point q : all_points()) {
      ++r.cases;
      Vec<typename F::value_type> expected(7, g.field().zero());
      if (auto a = action_on_basis(pd, q, g.tau())) expected[a->second.index()] = g.field().from_int(a->first);
      bool s_ok = true, v_ok = true;
      for (int k = 0; k < 7; ++k) {
        if (!(sm(k, q.index()) == expected[k])) s_ok = false;
        if (!(vm(k, q.index()) == expected[k])) v_ok = false;
      }
      if (!s_ok) ++r.spinor_mismatches;
      if (!v_ok) ++r.vector_mismatches;
    }
  }
  return r;
}

struct CartanReport {
  std::size_t dimension = 0;
  bool abelian = false;
  bool self_centralizing = false;
  bool ok() const { return dimension == 2 && abelian && self_centralizing; }
};

template <ExactField F>
CartanReport cartan(const G2Context<F>& g, Point p) {
  CartanReport r;
  std::vector<typename G2Context<F>::E> xs;
  for (Line d : lines_through(p)) xs.push_back(g.X(p, d));
  auto h = g.span_of(xs);
  r.dimension = h.size();
  r.abelian = true;
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (!g.bracket(a, b).is_zero()) r.abelian = false;
  auto c = g.centralizer(g.annihilator_of_unit(), xs);
  r.self_centralizing = same_span(c, h);
  return r;
}

struct DecompositionReport {
  std::size_t total_dimension = 0;
  bool direct = false;          // the seven summands together span a space of dimension 14
  bool brackets_ok = false;     // [h_P, h_Q] = h_{P+Q}
  bool orthogonal = false;      // summands orthogonal in the pair basis
  bool equals_g2 = false;
  bool ok() const { return total_dimension == 14 && direct && brackets_ok && orthogonal && equals_g2; }
};

template <ExactField F>
DecompositionReport decomposition_check(const G2Context<F>& g) {
  using E = typename G2Context<F>::E;
  DecompositionReport r;
  std::map<Point, std::vector<E>> gens;
  std::vector<E> all;
  for (Point p : all_points())
    for (Line d : lines_through(p)) {
      gens[p].push_back(g.X(p, d));
      all.push_back(g.X(p, d));
    }
  for (Point p : all_points()) r.total_dimension += g.span_of(gens[p]).size();
  auto span_all = g.span_of(all);
  r.direct = span_all.size() == r.total_dimension;
  r.equals_g2 = same_span(span_all, g.annihilator_of_unit());
  r.brackets_ok = true;
  r.orthogonal = true;
  for (Point p : all_points())
    for (Point q : all_points()) {
      if (p == q) continue;
      std::vector<E> br;
      for (const auto& a : gens[p])
        for (const auto& b : gens[q]) {
          br.push_back(g.bracket(a, b));
          auto ip = g.field().zero();
          for (int k = 0; k < 21; ++k) ip += a[k] * b[k];
          if (!fanolie::is_zero(ip)) r.orthogonal = false;
        }
      if (!same_span(g.span_of(br), g.span_of(gens[third_point(p, q)]))) r.brackets_ok = false;
    }
  return r;
}

// (P, Q, R) on D with eps_PQ = eps_QR = eps_RP = +1.
std::array<Point, 3> eps_cyclic_order(Line d, const CompositionFactor& eps);

struct LineSubalgebraReport {
  std::size_t dimension = 0;
  bool closed = false;
  bool x_relations = false;  // [X_P, X_Q] = 2 X_R
  bool y_relations = false;  // [Y_P, Y_Q] = -2 Y_R
  bool x_y_commute = false;
  bool ideals_span = false;  // I_X + I_Y = g_D, each of dimension 3
  bool stable_subspaces = false;
  bool x_trivial_on_line = false;
  bool ok() const {
    return dimension == 6 && closed && x_relations && y_relations && x_y_commute && ideals_span && stable_subspaces &&
           x_trivial_on_line;
  }
};

template <ExactField F>
LineSubalgebraReport line_subalgebra(const G2Context<F>& g, Line d) {
  using E = typename G2Context<F>::E;
  LineSubalgebraReport r;
  std::vector<E> gens, xs, ys;
  for (Point p : d.points())
    for (Line l : lines_through(p)) gens.push_back(g.X(p, l));
  auto gd = g.span_of(gens);
  r.dimension = gd.size();
  r.closed = g.is_closed(gd);
  auto cyc = eps_cyclic_order(d, g.eps());
  for (Point p : cyc) {
    xs.push_back(g.X(p, d));
    ys.push_back(g.Y(p, d));
  }
  auto two = g.field().from_int(2);
  r.x_relations = r.y_relations = true;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (!(g.bracket(xs[i], xs[j]) == two * xs[k])) r.x_relations = false;
    if (!(g.bracket(ys[i], ys[j]) == -(two * ys[k]))) r.y_relations = false;
  }
  r.x_y_commute = true;
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (!g.bracket(x, y).is_zero()) r.x_y_commute = false;
  auto ix = g.span_of(xs), iy = g.span_of(ys);
  auto both = ix;
  both.insert(both.end(), iy.begin(), iy.end());
  r.ideals_span = ix.size() == 3 && iy.size() == 3 && same_span(both, gd);

  // Stability of span<e_P : P in D> and of span<e_P : P off D> under g_D.
  r.stable_subspaces = true;
  r.x_trivial_on_line = true;
  for (const auto& row : gd) {
    auto m = g.imaginary_action(E(row));
    for (Point q : all_points())
      for (Point t : all_points())
        if (d.contains(q) != d.contains(t) && !fanolie::is_zero(m(t.index(), q.index()))) r.stable_subspaces = false;
  }
  for (const auto& x : xs) {
    auto m = g.imaginary_action(x);
    for (Point q : d.points())
      for (int t = 0; t < 7; ++t)
        if (!fanolie::is_zero(m(t, q.index()))) r.x_trivial_on_line = false;
  }
  return r;
}

template <ExactField F>
struct RootSystemReport {
  std::vector<typename G2Context<F>::E> roots;
  int short_roots = 0;  // squared length 2
  int long_roots = 0;   // squared length 6
  bool in_cartan = false;
  bool pattern = false;  // the twelve combinations of alpha and beta
  bool ok() const { return roots.size() == 12 && short_roots == 6 && long_roots == 6 && in_cartan && pattern; }
};

template <ExactField F>
RootSystemReport<F> root_system(const G2Context<F>& g, Point p) {
  using E = typename G2Context<F>::E;
  RootSystemReport<F> r;
  std::vector<E> xs;
  for (Line d : lines_through(p)) {
    for (const E& v : {g.X(p, d), g.Y(p, d)}) {
      r.roots.push_back(v);
      r.roots.push_back(-v);
    }
    xs.push_back(g.X(p, d));
  }
  auto h = g.span_of(xs);
  r.in_cartan = true;
  for (const auto& v : r.roots) {
    auto len = g.field().zero();
    for (int k = 0; k < 21; ++k) len += v[k] * v[k];
    if (len == g.field().from_int(2)) ++r.short_roots;
    if (len == g.field().from_int(6)) ++r.long_roots;
    if (!in_span(h, v.coeffs())) r.in_cartan = false;
  }
  // alpha = X_{P, D_i}, beta = Y_{P, D_{i-1}} with D_i the line P_i P_{i+1} P_{i+3}.
  Line di = Line::from_label(p.label());
  Line dprev = Line::from_label((p.label() + 5) % 7 + 1);
  E alpha = g.X(p, di), beta = g.Y(p, dprev);
  auto two = g.field().from_int(2), three = g.field().from_int(3);
  std::vector<E> combos = {alpha, beta, alpha + beta, beta + two * alpha, beta + three * alpha, two * beta + three * alpha};
  std::vector<E> pattern;
  for (const auto& c : combos) {
    pattern.push_back(c);
    pattern.push_back(-c);
  }
  auto contains_all = [](const std::vector<E>& a, const std::vector<E>& b) {
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
  };
  r.pattern = contains_all(pattern, r.roots) && contains_all(r.roots, pattern);
  return r;
}

struct PointSubalgebraReport {
  std::size_t dimension = 0;
  bool closed = false;
  bool equals_annihilator = false;  // the 8 generators span the part of g2 killing e_P
  bool has_sqrt_minus_one = false;
  bool relations_checked = false;   // only for P1 and only with sqrt(-1)
  bool relations = false;
  bool ok() const {
    return dimension == 8 && closed && equals_annihilator && (!relations_checked || relations);
  }
};

template <ExactField F>
PointSubalgebraReport point_subalgebra(const G2Context<F>& g, Point p) {
  using E = typename G2Context<F>::E;
  PointSubalgebraReport r;
  std::vector<E> gens;
  for (const auto& pd : all_incident_pairs()) {
    auto x = g.X(pd);
    auto m = g.imaginary_action(x);
    bool kills = true;
    for (int t = 0; t < 7; ++t)
      if (!fanolie::is_zero(m(t, p.index()))) kills = false;
    if (kills) gens.push_back(x);
  }
  auto s = g.span_of(gens);
  r.dimension = s.size();
  r.closed = g.is_closed(s);
  r.equals_annihilator = same_span(s, g.annihilator_of(p.label()));
  auto i = g.field().sqrt_minus_one();
  r.has_sqrt_minus_one = i.has_value();
  if (!i || p != Point::from_label(1)) return r;

  r.relations_checked = true;
  auto P = [](int k) { return Point::from_label(k); };
  auto D = [](int k) { return Line::from_label(k); };
  auto n = [&](long v) { return g.field().from_int(v); };
  E h1 = -(*i * g.X(P(1), D(1)));
  E h2 = -(*i * g.X(P(1), D(7)));
  // index 0 is e+, index 1 is e-; e(+-) = X - (+-) i X'
  auto pm = [&](Point a, Point b, Line d, int sgn) { return g.X(a, d) - n(sgn) * (*i * g.X(b, d)); };
  std::array<E, 2> e1 = {pm(P(2), P(4), D(1), 1), pm(P(2), P(4), D(1), -1)};
  std::array<E, 2> e7 = {pm(P(3), P(7), D(7), 1), pm(P(3), P(7), D(7), -1)};
  // e(+-)_{D5} = X_{P5,D5} +- i X_{P6,D5}
  std::array<E, 2> e5 = {pm(P(5), P(6), D(5), -1), pm(P(5), P(6), D(5), 1)};
  bool ok = true;
  auto expect = [&](const E& lhs, const E& rhs) {
    if (!(lhs == rhs)) ok = false;
  };
  for (int s2 = 0; s2 < 2; ++s2) {
    long sg = s2 == 0 ? 1 : -1;
    expect(g.bracket(h1, e1[s2]), n(2 * sg) * e1[s2]);
    expect(g.bracket(h1, e7[s2]), n(-sg) * e7[s2]);
    expect(g.bracket(h2, e1[s2]), n(-sg) * e1[s2]);
    expect(g.bracket(h2, e7[s2]), n(2 * sg) * e7[s2]);
    expect(g.bracket(e1[s2], e7[s2]), n(-2) * e5[s2]);
    expect(g.bracket(h1, e5[s2]), n(sg) * e5[s2]);
    expect(g.bracket(h2, e5[s2]), n(sg) * e5[s2]);
  }
  expect(g.bracket(e1[0], e1[1]), n(-4) * h1);
  expect(g.bracket(e7[0], e7[1]), n(-4) * h2);
  expect(g.bracket(e1[0], e7[1]), g.zero());
  expect(g.bracket(e7[0], e1[1]), g.zero());
  expect(g.bracket(e5[0], e5[1]), n(-4) * (h1 + h2));
  // Cartan matrix: alpha_j(h_k) read from [h_k, e+_j] = A_kj e+_j.
  std::array<std::array<long, 2>, 2> cartan_matrix{};
  std::array<const E*, 2> hs = {&h1, &h2};
  std::array<const E*, 2> es = {&e1[0], &e7[0]};
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j)
      for (long v : {-1L, 2L})
        if (g.bracket(*hs[k], *es[j]) == n(v) * *es[j]) cartan_matrix[k][j] = v;
  if (cartan_matrix != std::array<std::array<long, 2>, 2>{{{2, -1}, {-1, 2}}}) ok = false;
  r.relations = ok;
  return r;
}

struct AlmostComplexReport {
  bool square_minus_one = false;
  bool isometry = false;
  bool commutes = false;
  std::size_t annihilator_dimension = 0;
  bool ok() const { return square_minus_one && isometry && commutes && annihilator_dimension == 8; }
};

template <ExactField F>
AlmostComplexReport almost_complex(const G2Context<F>& g, Point p) {
  using M = typename G2Context<F>::M;
  AlmostComplexReport r;
  M j(7, 7, g.field().zero());
  for (Point q : all_points())
    if (q != p) j(third_point(q, p).index(), q.index()) = g.field().from_int(g.eps()(q, p));
  // Identity on V = span<e_Q : Q != P>.
  M id_v(7, 7, g.field().zero());
  for (Point q : all_points())
    if (q != p) id_v(q.index(), q.index()) = g.field().one();
  r.square_minus_one = j * j == -id_v;
  // J^T J = Id on V for the standard form.
  M jt(7, 7, g.field().zero());
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) jt(a, b) = j(b, a);
  r.isometry = jt * j == id_v;
  r.commutes = true;
  for (const auto& pd : all_incident_pairs()) {
    auto x = g.X(pd);
    auto m = g.imaginary_action(x);
    bool kills = true;
    for (int t = 0; t < 7; ++t)
      if (!fanolie::is_zero(m(t, p.index()))) kills = false;
    if (kills && !commutator(m, j).is_zero()) r.commutes = false;
  }
  r.annihilator_dimension = g.annihilator_of(p.label()).size();
  return r;
}

template <ExactField F>
std::size_t pair_generated_subalgebra(const G2Context<F>& g, const IncidentPair& a, const IncidentPair& b) {
  return g.lie_closure({g.X(a), g.X(b)}).size();
}

}  // namespace fanolie
