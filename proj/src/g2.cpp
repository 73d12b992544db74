#include "fanolie/g2.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fanolie {

namespace {

Point L(int label) { return Point::from_label((label % 7 + 7 - 1) % 7 + 1); }

const std::vector<std::pair<Point, Point>>& pair_table() {
  static const auto table = [] {
    std::vector<std::pair<Point, Point>> t;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) t.emplace_back(Point::from_label(i), Point::from_label(j));
    return t;
  }();
  return table;
}

// Adds sign * e_{pq} to v (zero when p == q).
void add_pair(std::vector<Term>& v, int sign, Point p, Point q) {
  if (p == q) return;
  auto [s, k] = pair_slot(p, q);
  for (auto& t : v)
    if (t.index == k) {
      t.sign += sign * s;
      return;
    }
  v.push_back({sign * s, k});
}

void add_pair(IntElt& v, int coeff, Point p, Point q) {
  auto [s, k] = pair_slot(p, q);
  v[k] += coeff * s;
}

// A, B, C at P_i: e_{P_{i+2} P_{i-1}}, e_{P_{i-3} P_{i-2}}, e_{P_{i+1} P_{i+3}}; the slot of D among
// D_i, D_{i-1}, D_{i-3}.
struct Frame {
  std::array<std::pair<Point, Point>, 3> abc;
  int slot;
};

Frame frame(const IncidentPair& pd) {
  int i = pd.p.label();
  Frame f{{std::pair{L(i + 2), L(i - 1)}, std::pair{L(i - 3), L(i - 2)}, std::pair{L(i + 1), L(i + 3)}}, -1};
  auto pencil = lines_through(pd.p);
  for (int s = 0; s < 3; ++s)
    if (pencil[s] == pd.d) f.slot = s;
  return f;
}

IncidentPair apply(const Collineation& g, const IncidentPair& pd) { return IncidentPair::make(g(pd.p), g(pd.d)); }

}  // namespace

std::pair<Point, Point> pair_points(int k) {
  if (k < 0 || k >= 21) throw std::out_of_range("pair index " + std::to_string(k));
  return pair_table()[k];
}

std::pair<int, int> pair_slot(Point p, Point q) {
  if (p < q) return {1, pair_index(p, q)};
  return {-1, pair_index(q, p)};
}

const std::vector<Term>& so7_structure(int a, int b) {
  static const auto table = [] {
    std::vector<std::vector<Term>> t(21 * 21);
    for (int x = 0; x < 21; ++x)
      for (int y = 0; y < 21; ++y) {
        auto [i, j] = pair_points(x);
        auto [k, l] = pair_points(y);
        std::vector<Term> v;
        // [e_ij, e_kl] = d_ik e_jl - d_jk e_il + d_il e_kj - d_jl e_ki
        if (i == k) add_pair(v, 1, j, l);
        if (j == k) add_pair(v, -1, i, l);
        if (i == l) add_pair(v, 1, k, j);
        if (j == l) add_pair(v, -1, k, i);
        std::erase_if(v, [](const Term& term) { return term.sign == 0; });
        t[x * 21 + y] = v;
      }
    return t;
  }();
  if (a < 0 || a >= 21 || b < 0 || b >= 21) throw std::out_of_range("so(7) basis index");
  return table[a * 21 + b];
}

IncidentPair IncidentPair::make(Point p, Line d) {
  if (!d.contains(p)) throw std::invalid_argument(p.name() + " is not on " + d.name());
  return {p, d};
}

const std::vector<IncidentPair>& all_incident_pairs() {
  static const auto pairs = [] {
    std::vector<IncidentPair> v;
    for (Point p : all_points())
      for (Line d : all_lines())
        if (d.contains(p)) v.push_back({p, d});
    std::sort(v.begin(), v.end());
    return v;
  }();
  return pairs;
}

IntElt x_coords(const IncidentPair& pd) {
  auto f = frame(pd);
  IntElt v{};
  // A - B, B - C, C - A
  int s = f.slot, t = (f.slot + 1) % 3;
  add_pair(v, 1, f.abc[s].first, f.abc[s].second);
  add_pair(v, -1, f.abc[t].first, f.abc[t].second);
  return v;
}

IntElt y_coords(const IncidentPair& pd) {
  auto f = frame(pd);
  IntElt v{};
  // A + B - 2C, B + C - 2A, C + A - 2B
  int s = f.slot, t = (f.slot + 1) % 3, u = (f.slot + 2) % 3;
  add_pair(v, 1, f.abc[s].first, f.abc[s].second);
  add_pair(v, 1, f.abc[t].first, f.abc[t].second);
  add_pair(v, -2, f.abc[u].first, f.abc[u].second);
  return v;
}

std::string to_string(PairOrbit o) {
  switch (o) {
    case PairOrbit::Diagonal: return "D";
    case PairOrbit::O1: return "O1";
    case PairOrbit::O2: return "O2";
    case PairOrbit::O3: return "O3";
    case PairOrbit::O3Prime: return "O3'";
    case PairOrbit::O4: return "O4";
  }
  return "?";
}

PairOrbit classify_pair(const IncidentPair& a, const IncidentPair& b) {
  if (a == b) return PairOrbit::Diagonal;
  if (a.p == b.p) return PairOrbit::O1;
  if (a.d == b.d) return PairOrbit::O2;
  if (b.d.contains(a.p)) return PairOrbit::O3;
  if (a.d.contains(b.p)) return PairOrbit::O3Prime;
  return PairOrbit::O4;
}

std::map<PairOrbit, int> pair_census() {
  std::map<PairOrbit, int> c;
  for (const auto& a : all_incident_pairs())
    for (const auto& b : all_incident_pairs()) ++c[classify_pair(a, b)];
  return c;
}

bool pair_orbits_are_single_orbits() {
  auto [ga, gb] = standard_generators();
  std::map<PairOrbit, std::set<std::pair<IncidentPair, IncidentPair>>> classes;
  for (const auto& a : all_incident_pairs())
    for (const auto& b : all_incident_pairs()) classes[classify_pair(a, b)].insert({a, b});
  for (const auto& [tag, members] : classes) {
    std::set<std::pair<IncidentPair, IncidentPair>> orbit{*members.begin()};
    std::vector<std::pair<IncidentPair, IncidentPair>> todo{*members.begin()};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      for (const auto& g : {ga, gb}) {
        std::pair next{apply(g, cur.first), apply(g, cur.second)};
        if (classify_pair(next.first, next.second) != tag) return false;
        if (orbit.insert(next).second) todo.push_back(next);
      }
    }
    if (orbit != members) return false;
  }
  return true;
}

std::optional<std::pair<int, IncidentPair>> bracket_law(const IncidentPair& a, const IncidentPair& b,
                                                        const CompositionFactor& eps) {
  auto tag = classify_pair(a, b);
  if (tag == PairOrbit::Diagonal) throw std::invalid_argument("bracket law needs distinct pairs");
  if (tag == PairOrbit::O1) return std::nullopt;
  int e = eps(a.p, b.p);
  Point sum = third_point(a.p, b.p);
  switch (tag) {
    case PairOrbit::O2: return std::pair{2 * e, IncidentPair::make(sum, a.d)};
    case PairOrbit::O3:
    case PairOrbit::O3Prime: return std::pair{-e, IncidentPair::make(sum, wedge(a.p, b.p))};
    default: return std::pair{-e, IncidentPair::make(sum, third_line(a.d, b.d))};
  }
}

std::array<std::array<int, 7>, 7> dual_epsilon(const Collineation& tau) {
  return canonical_sign_table(inverse_perm(line_perm(tau)), 0);
}

std::optional<std::pair<int, Point>> action_on_basis(const IncidentPair& pd, Point q, const Collineation& tau) {
  if (pd.d.contains(q)) return std::nullopt;
  auto eps = canonical_epsilon(tau);
  auto star = dual_epsilon(tau);
  int sign = eps(pd.p, q) * star[pd.d.index()][wedge(pd.p, q).index()];
  return std::pair{sign, third_point(pd.p, q)};
}

IntMatrix left_mult_int(const MultiplicationTable& t, int i) {
  IntMatrix m{};
  for (int j = 0; j < 8; ++j) m[t[i][j].index][j] = t[i][j].sign;
  return m;
}

namespace {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c{};
  for (int r = 0; r < 8; ++r)
    for (int k = 0; k < 8; ++k)
      if (a[r][k] != 0)
        for (int s = 0; s < 8; ++s) c[r][s] += a[r][k] * b[k][s];
  return c;
}

}  // namespace

IntMatrix spinor4_basis(const MultiplicationTable& t, int k) {
  auto [p, q] = pair_points(k);
  auto lp = left_mult_int(t, p.label()), lq = left_mult_int(t, q.label());
  auto a = mul(lp, lq), b = mul(lq, lp);
  for (int r = 0; r < 8; ++r)
    for (int s = 0; s < 8; ++s) a[r][s] -= b[r][s];
  return a;
}

IntMatrix spinor4(const MultiplicationTable& t, const IntElt& x) {
  IntMatrix m{};
  for (int k = 0; k < 21; ++k) {
    if (x[k] == 0) continue;
    auto b = spinor4_basis(t, k);
    for (int r = 0; r < 8; ++r)
      for (int s = 0; s < 8; ++s) m[r][s] += x[k] * b[r][s];
  }
  return m;
}

int delta_hat(const AugAut& g, Point p, const MultiplicationTable& t) {
  std::optional<int> result;
  for (Line d : lines_through(p)) {
    auto a = spinor4(t, x_coords({p, d}));
    auto b = spinor4(t, x_coords({g.base()(p), g.base()(d)}));
    IntMatrix conj{};
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        auto ir = g.image(r), ic = g.image(c);
        conj[ir.index][ic.index] = ir.sign * ic.sign * a[r][c];
      }
    int lambda = 0;
    for (int s : {1, -1}) {
      bool match = true;
      for (int r = 0; r < 8 && match; ++r)
        for (int c = 0; c < 8 && match; ++c) match = conj[r][c] == s * b[r][c];
      if (match) lambda = s;
    }
    if (lambda == 0) throw std::logic_error("conjugate of X" + IncidentPair{p, d}.str() + " is not +-X by " + g.str());
    if (result && *result != lambda) throw std::logic_error("delta depends on the line at " + p.name());
    result = lambda;
  }
  return *result;
}

PointSigns delta_hat_fn(const AugAut& g, const MultiplicationTable& t) {
  std::array<int, 7> v{};
  for (Point p : all_points()) v[p.index()] = delta_hat(g, p, t);
  return PointSigns::from_values(v);
}

DeltaHatReport delta_hat_report(const std::vector<AugAut>& group, const CompositionFactor& eps) {
  auto t = multiplication_table(eps);
  DeltaHatReport r;
  r.elements = static_cast<int>(group.size());
  std::map<AugAut, PointSigns> values;
  std::map<PointSigns, int> counts;
  for (const auto& g : group) {
    auto f = delta_hat_fn(g, t);
    values.emplace(g, f);
    ++counts[f];
    int prod = 1;
    for (Point p : all_points()) prod *= f(p);
    if (prod != 1) ++r.product_failures;
    if (multiplicative_radon(f) != delta_star_fn(g.base(), eps)) ++r.radon_failures;
  }
  r.distinct_functions = static_cast<int>(counts.size());
  r.min_multiplicity = counts.empty() ? 0 : r.elements;
  for (const auto& [f, n] : counts) {
    r.min_multiplicity = std::min(r.min_multiplicity, n);
    r.max_multiplicity = std::max(r.max_multiplicity, n);
  }
  // delta(g2 g1, P) = delta(g2, g1 P) delta(g1, P), over every 16th right factor.
  for (std::size_t j = 0; j < group.size(); j += 16) {
    const auto& g1 = group[j];
    const auto& f1 = values.at(g1);
    for (const auto& g2 : group) {
      auto it = values.find(g2 * g1);
      if (it == values.end()) {
        ++r.equivariance_failures;
        continue;
      }
      const auto& f2 = values.at(g2);
      for (Point p : all_points())
        if (it->second(p) != f2(g1.base()(p)) * f1(p)) {
          ++r.equivariance_failures;
          break;
        }
    }
  }
  return r;
}

namespace {

std::map<PointSigns, int> delta_counts(const std::vector<AugAut>& group, const CompositionFactor& eps) {
  auto t = multiplication_table(eps);
  std::map<PointSigns, int> counts;
  for (const auto& g : group) ++counts[delta_hat_fn(g, t)];
  return counts;
}

}  // namespace

std::string delta_diagram_text(const std::vector<AugAut>& group, const CompositionFactor& eps) {
  std::ostringstream os;
  for (const auto& [f, n] : delta_counts(group, eps)) {
    os << "delta " << f.str() << "  " << n << " elements  radon " << multiplicative_radon(f).str() << "\n";
    for (Point p : all_points()) os << "  " << p.name() << " " << (f(p) > 0 ? "+" : "-") << "\n";
  }
  return os.str();
}

std::string delta_diagram_dot(const std::vector<AugAut>& group, const CompositionFactor& eps) {
  std::ostringstream os;
  os << "graph delta {\n  node [shape=circle, style=filled];\n";
  int k = 0;
  for (const auto& [f, n] : delta_counts(group, eps)) {
    os << "  subgraph cluster_" << k << " {\n    label=\"" << f.str() << " (" << n << ")\";\n";
    for (Point p : all_points())
      os << "    d" << k << "_" << p.label() << " [label=\"" << p.name() << "\", fillcolor=" << (f(p) > 0 ? "white" : "gray")
         << "];\n";
    for (Line d : all_lines()) {
      auto pts = d.points();
      for (int i = 0; i < 3; ++i)
        os << "    d" << k << "_" << pts[i].label() << " -- d" << k << "_" << pts[(i + 1) % 3].label() << ";\n";
    }
    os << "  }\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

std::array<Point, 3> eps_cyclic_order(Line d, const CompositionFactor& eps) {
  auto pts = d.points();
  Point p = pts[0];
  Point q = eps(p, pts[1]) == 1 ? pts[1] : pts[2];
  return {p, q, third_point(p, q)};
}

}  // namespace fanolie
