#include "fanolie/compfactor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fanolie {

namespace {

constexpr std::array<std::array<int, 7>, 7> make_pair_index() {
  std::array<std::array<int, 7>, 7> idx{};
  int k = 0;
  for (int i = 0; i < 7; ++i) {
    idx[i][i] = -1;
    for (int j = i + 1; j < 7; ++j) {
      idx[i][j] = k;
      idx[j][i] = k;
      ++k;
    }
  }
  return idx;
}

constexpr auto kPairIndex = make_pair_index();

template <std::size_t N>
bool all_orderings(std::array<Point, N> pts, auto&& pred) {
  std::sort(pts.begin(), pts.end());
  do {
    if (!pred(pts)) return false;
  } while (std::next_permutation(pts.begin(), pts.end()));
  return true;
}

}  // namespace

Norm Norm::one() { return Norm({1, 1, 1, 1, 1, 1, 1}); }

Norm Norm::from_values(const std::array<int, 7>& values) {
  for (int v : values)
    if (v != 1 && v != -1) throw std::invalid_argument("norm values must be +1 or -1");
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q && values[third_point(p, q).index()] != values[p.index()] * values[q.index()])
        throw std::invalid_argument("norm is not multiplicative");
  return Norm(values);
}

std::vector<Norm> Norm::all() {
  std::vector<Norm> out;
  for (unsigned form = 0; form < 8; ++form) {
    std::array<int, 7> v{};
    for (Point p : all_points()) v[p.index()] = parity(form & p.mask()) ? -1 : 1;
    out.push_back(from_values(v));
  }
  return out;
}

std::string Norm::str() const {
  std::string s;
  for (int v : v_) s.push_back(v == 1 ? '+' : '-');
  return s;
}

int pair_index(Point p, Point q) {
  if (p == q) throw std::invalid_argument("pair_index of equal points");
  return kPairIndex[p.index()][q.index()];
}

MultFactor MultFactor::from_code(std::uint32_t code) {
  if (code > kAllPairs) throw std::out_of_range("multiplication factor code out of range");
  return MultFactor(code);
}

MultFactor MultFactor::from_table(const std::array<std::array<int, 7>, 7>& table) {
  std::uint32_t code = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i == j) continue;
      int v = table[i][j];
      if ((v != 1 && v != -1) || v != -table[j][i])
        throw std::invalid_argument("multiplication factor must be an antisymmetric sign table");
      if (i < j && v == -1) code |= 1u << kPairIndex[i][j];
    }
  return MultFactor(code);
}

MultFactor MultFactor::parse(const std::string& text) {
  if (text.size() != 21) throw std::invalid_argument("multiplication factor needs 21 signs");
  std::uint32_t code = 0;
  for (int k = 0; k < 21; ++k) {
    if (text[k] == '-') code |= 1u << k;
    else if (text[k] != '+') throw std::invalid_argument("multiplication factor signs must be '+' or '-'");
  }
  return MultFactor(code);
}

int MultFactor::operator()(Point p, Point q) const {
  int k = pair_index(p, q);
  int upper = (code_ >> k) & 1 ? -1 : 1;
  return p < q ? upper : -upper;
}

std::string MultFactor::str() const {
  std::string s;
  for (int k = 0; k < 21; ++k) s.push_back((code_ >> k) & 1 ? '-' : '+');
  return s;
}

std::array<Point, 3> MultFactor::future(Point p) const {
  std::vector<Point> out;
  for (Point q : all_points())
    if (q != p && (*this)(p, q) == 1) out.push_back(q);
  if (out.size() != 3) throw std::logic_error("future of a point must have 3 elements");
  return {out[0], out[1], out[2]};
}

std::array<Point, 3> MultFactor::past(Point p) const {
  std::vector<Point> out;
  for (Point q : all_points())
    if (q != p && (*this)(q, p) == 1) out.push_back(q);
  if (out.size() != 3) throw std::logic_error("past of a point must have 3 elements");
  return {out[0], out[1], out[2]};
}

std::string to_string(Side s) { return s == Side::Plus ? "O+" : "O-"; }

bool satisfies_line_rule(const MultFactor& eps, const Norm& n) {
  for (Line d : all_lines()) {
    bool ok = all_orderings(d.points(), [&](const std::array<Point, 3>& t) {
      return n(third_point(t[0], t[2])) * eps(t[0], t[1]) * eps(t[1], t[2]) == 1;
    });
    if (!ok) return false;
  }
  return true;
}

bool satisfies_quadrilateral_rule(const MultFactor& eps, const Norm& n) {
  for (Line d : all_lines()) {
    bool ok = all_orderings(d.quadrilateral(), [&](const std::array<Point, 4>& q) {
      const auto& [p, qq, r, s] = q;
      return n(third_point(p, qq)) * eps(p, qq) * eps(qq, r) * eps(r, s) * eps(s, p) * n(third_point(p, s)) == -1;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_composition_factor(const MultFactor& eps, const Norm& n) {
  return satisfies_line_rule(eps, n) && satisfies_quadrilateral_rule(eps, n);
}

CompositionFactor CompositionFactor::from(const MultFactor& eps) {
  if (!is_composition_factor(eps)) throw std::invalid_argument("not a composition factor: " + eps.str());
  bool future_lines = true, past_lines = true;
  for (Point p : all_points()) {
    future_lines = future_lines && line_of(eps.future(p)).has_value();
    past_lines = past_lines && line_of(eps.past(p)).has_value();
  }
  if (future_lines == past_lines) throw std::logic_error("composition factor with no definite side: " + eps.str());
  return CompositionFactor(eps, future_lines ? Side::Plus : Side::Minus);
}

std::array<std::array<int, 7>, 7> canonical_sign_table(const Perm7& sigma, int base) {
  std::array<int, 7> exponent{};  // x = sigma^exponent[x](base)
  int x = base;
  for (int i = 0; i < 7; ++i) {
    exponent[x] = i;
    x = sigma[x];
  }
  if (x != base) throw std::invalid_argument("canonical sign table needs a 7-cycle");
  std::array<std::array<int, 7>, 7> table{};
  for (int r = 0; r < 7; ++r)
    for (int s = 0; s < 7; ++s)
      if (r != s) table[r][s] = legendre7(exponent[s] - exponent[r]);
  return table;
}

CompositionFactor canonical_epsilon(const Collineation& tau, Point base) {
  if (tau.order() != 7) throw std::invalid_argument("canonical_epsilon needs an element of order 7");
  return CompositionFactor::from(MultFactor::from_table(canonical_sign_table(point_perm(tau), base.index())));
}

const std::vector<CompositionFactor>& enumerate_composition_factors() {
  static const std::vector<CompositionFactor> factors = [] {
    std::vector<CompositionFactor> out;
    for (std::uint32_t code = 0; code <= MultFactor::kAllPairs; ++code) {
      MultFactor eps = MultFactor::from_code(code);
      if (is_composition_factor(eps)) out.push_back(CompositionFactor::from(eps));
    }
    return out;
  }();
  return factors;
}

MultFactor act(const Collineation& g, const MultFactor& eps) {
  Collineation gi = g.inverse();
  std::array<std::array<int, 7>, 7> table{};
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q) table[p.index()][q.index()] = eps(gi(p), gi(q));
  return MultFactor::from_table(table);
}

CompositionFactor act(const Collineation& g, const CompositionFactor& eps) {
  return CompositionFactor::from(act(g, eps.eps()));
}

std::vector<std::vector<CompositionFactor>> orbit_decomposition(const std::vector<CompositionFactor>& factors) {
  std::set<CompositionFactor> remaining(factors.begin(), factors.end());
  std::vector<std::vector<CompositionFactor>> orbits;
  while (!remaining.empty()) {
    CompositionFactor seed = *remaining.begin();
    std::set<CompositionFactor> orbit;
    for (const auto& g : all_collineations()) orbit.insert(act(g, seed));
    for (const auto& x : orbit) remaining.erase(x);
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::vector<Collineation> isotropy(const MultFactor& eps) {
  std::vector<Collineation> out;
  for (const auto& g : all_collineations())
    if (act(g, eps) == eps) out.push_back(g);
  return out;
}

std::vector<Collineation> normalizer(const std::vector<Collineation>& subgroup) {
  std::set<Collineation> h(subgroup.begin(), subgroup.end());
  std::vector<Collineation> out;
  for (const auto& g : all_collineations()) {
    bool normalizes = true;
    for (const auto& x : subgroup) normalizes = normalizes && h.count(g * x * g.inverse());
    if (normalizes) out.push_back(g);
  }
  return out;
}

std::vector<Collineation> cyclic_subgroup(const Collineation& g) {
  std::set<Collineation> out;
  for (int k = 0; k < g.order(); ++k) out.insert(g.pow(k));
  return {out.begin(), out.end()};
}

std::vector<std::array<Point, 3>> orientable_triangles(const MultFactor& eps) {
  std::vector<std::array<Point, 3>> out;
  for (const auto& t : all_triangles()) {
    int a = eps(t[0], t[1]), b = eps(t[1], t[2]), c = eps(t[2], t[0]);
    if (a == b && b == c) out.push_back(t);
  }
  return out;
}

MultFactor twist(const MultFactor& eps, LineSigns f) {
  std::array<std::array<int, 7>, 7> table{};
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q) table[p.index()][q.index()] = f(wedge(p, q)) * eps(p, q);
  return MultFactor::from_table(table);
}

unsigned cross(unsigned q, unsigned r) {
  auto bit = [](unsigned x, int i) { return (x >> i) & 1u; };
  unsigned c0 = (bit(q, 1) & bit(r, 2)) ^ (bit(q, 2) & bit(r, 1));
  unsigned c1 = (bit(q, 2) & bit(r, 0)) ^ (bit(q, 0) & bit(r, 2));
  unsigned c2 = (bit(q, 0) & bit(r, 1)) ^ (bit(q, 1) & bit(r, 0));
  return c0 | (c1 << 1) | (c2 << 2);
}

int BilinearForm::operator()(unsigned u, unsigned v) const {
  int s = 0;
  for (int i = 0; i < 3; ++i)
    if ((u >> i) & 1) s ^= parity(rows_[i] & v);
  return s;
}

bool BilinearForm::vanishes_on_diagonal() const {
  for (unsigned v = 0; v < 8; ++v)
    if ((*this)(v, v) != 0) return false;
  return true;
}

BilinearForm point_to_bilinear(unsigned v) {
  if (v >= 8) throw std::out_of_range("V_F vector mask out of range");
  BilinearForm b;
  for (int i = 0; i < 3; ++i) {
    unsigned row = 0;
    for (int j = 0; j < 3; ++j)
      if (parity(cross(1u << i, 1u << j) & v)) row |= 1u << j;
    b.rows_[i] = static_cast<std::uint8_t>(row);
  }
  return b;
}

unsigned apply_linear(const Collineation& g, unsigned v) {
  if (v >= 8) throw std::out_of_range("V_F vector mask out of range");
  return v == 0 ? 0 : g(Point::from_mask(v)).mask();
}

BilinearForm act(const Collineation& g, const BilinearForm& b) {
  Collineation gi = g.inverse();
  BilinearForm out;
  for (int i = 0; i < 3; ++i) {
    unsigned row = 0;
    for (int j = 0; j < 3; ++j)
      if (b(apply_linear(gi, 1u << i), apply_linear(gi, 1u << j))) row |= 1u << j;
    out.rows_[i] = static_cast<std::uint8_t>(row);
  }
  return out;
}

OrientedMap OrientedMap::from_masks(const std::array<unsigned, 7>& masks) {
  for (unsigned m : masks)
    if (m == 0 || m >= 8) throw std::invalid_argument("oriented map forms must be nonzero dual masks");
  OrientedMap alpha(masks);
  for (Point p : all_points()) {
    if (alpha(p, p) != 1) throw std::invalid_argument("oriented map needs alpha_P(P) = 1");
    for (Point q : all_points())
      if (p != q && alpha(p, q) + alpha(q, p) != 1)
        throw std::invalid_argument("oriented map needs alpha_P(Q) + alpha_Q(P) = 1");
  }
  return alpha;
}

std::string OrientedMap::str() const {
  std::string s;
  for (unsigned m : masks_) s.push_back(static_cast<char>('0' + m));
  return s;
}

const std::vector<OrientedMap>& enumerate_oriented_maps() {
  static const std::vector<OrientedMap> maps = [] {
    std::array<std::vector<unsigned>, 7> candidates;
    for (Point p : all_points())
      for (unsigned m = 1; m < 8; ++m)
        if (parity(m & p.mask())) candidates[p.index()].push_back(m);
    std::vector<OrientedMap> out;
    std::array<unsigned, 7> masks{};
    std::array<std::size_t, 7> pos{};
    while (true) {
      for (int i = 0; i < 7; ++i) masks[i] = candidates[i][pos[i]];
      try {
        out.push_back(OrientedMap::from_masks(masks));
      } catch (const std::invalid_argument&) {
      }
      int i = 0;
      while (i < 7 && ++pos[i] == candidates[i].size()) pos[i++] = 0;
      if (i == 7) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return maps;
}

CompositionFactor exponentiate(const OrientedMap& alpha) {
  std::array<std::array<int, 7>, 7> table{};
  for (Point p : all_points())
    for (Point q : all_points())
      if (p != q) table[p.index()][q.index()] = alpha(p, q) ? -1 : 1;
  MultFactor eps = MultFactor::from_table(table);
  if (!is_composition_factor(eps))
    throw ExponentiationError("exponentiation candidate is not a composition factor for " + alpha.str());
  return CompositionFactor::from(eps);
}

OrientedMap act(const Collineation& g, const OrientedMap& alpha) {
  Collineation gi = g.inverse();
  std::array<unsigned, 7> masks{};
  for (Point p : all_points()) {
    unsigned src = alpha.masks()[gi(p).index()], m = 0;
    for (int k = 0; k < 3; ++k)
      if (parity(src & apply_linear(gi, 1u << k))) m |= 1u << k;
    masks[p.index()] = m;
  }
  return OrientedMap::from_masks(masks);
}

}  // namespace fanolie
