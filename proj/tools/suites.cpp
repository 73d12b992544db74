#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "fanolie/compfactor.hpp"
#include "fanolie/fano.hpp"
#include "fanolie/forms.hpp"
#include "fanolie/g2.hpp"
#include "fanolie/lifting.hpp"
#include "fanolie/octonion.hpp"
#include "fanolie/radon.hpp"

namespace fanolie::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}
  void operator()(std::string id, std::string ac, std::string anchor, std::string observed, std::string expected) {
    bool pass = observed == expected;
    out_.push_back({std::move(id), std::move(ac), std::move(anchor), std::move(observed), std::move(expected), pass});
  }
  void flag(std::string id, std::string ac, std::string anchor, bool ok) {
    (*this)(std::move(id), std::move(ac), std::move(anchor), ok ? "true" : "false", "true");
  }

 private:
  std::vector<Check>& out_;
};

template <class K, class V>
std::string map_str(const std::map<K, V>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ", ") << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string set_str(const std::set<std::size_t>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

const CompositionFactor& canonical_eps() {
  static const CompositionFactor e = canonical_epsilon(canonical_tau());
  return e;
}

// ---- fano ------------------------------------------------------------------

void fano_suite(Recorder& rec) {
  const auto& group = all_collineations();
  rec("fano.group_order", "AC1", "Aut(F) has order 168", std::to_string(group.size()), "168");
  std::map<int, int> hist;
  for (const auto& g : group) ++hist[g.order()];
  rec("fano.order_histogram", "AC1", "elements of order 2, 3, 4, 7: 21, 56, 42, 48", map_str(hist),
      "{1:1, 2:21, 3:56, 4:42, 7:48}");
  auto [a, b] = standard_generators();
  Collineation c = a * b * a.inverse() * b.inverse();
  std::ostringstream rel;
  rel << "|<a,b>|=" << generated_subgroup({a, b}).size() << " a:" << a.order() << " b:" << b.order()
      << " ab:" << (a * b).order() << " [a,b]:" << c.order();
  rec("fano.generators", "AC1", "a, b generate with a^2 = b^3 = (ab)^7 = [a,b]^4 = 1", rel.str(),
      "|<a,b>|=168 a:2 b:3 ab:7 [a,b]:4");

  std::vector<Collineation> order7;
  for (const auto& g : group)
    if (g.order() == 7) order7.push_back(g);
  std::set<std::vector<Collineation>> classes;
  for (const auto& g : order7) classes.insert(conjugacy_class(g));
  std::string sizes;
  for (const auto& cls : classes) sizes += (sizes.empty() ? "" : ",") + std::to_string(cls.size());
  rec("fano.order7_classes", "AC2", "order-7 elements form two conjugacy classes of 24", sizes, "24,24");

  int minpoly_mismatch = 0;
  for (const auto& g : order7) {
    auto cls = conjugacy_class(g);
    for (const auto& h : order7) {
      bool conj = std::binary_search(cls.begin(), cls.end(), h);
      if (conj != (order7_minimal_polynomial(g) == order7_minimal_polynomial(h))) ++minpoly_mismatch;
    }
  }
  rec("fano.minimal_polynomial_tag", "AC2", "minimal polynomial separates the two classes (exhaustive conjugation)",
      std::to_string(minpoly_mismatch) + " mismatches", "0 mismatches");

  int legendre_mismatch = 0;
  for (const auto& g : order7) {
    auto cls = conjugacy_class(g);
    for (int m = 1; m < 7; ++m)
      if (std::binary_search(cls.begin(), cls.end(), g.pow(m)) != (legendre7(m) == 1)) ++legendre_mismatch;
  }
  rec("fano.legendre_rule", "AC2", "g^m is conjugate to g iff m is a square mod 7",
      std::to_string(legendre_mismatch) + " mismatches", "0 mismatches");
}

// ---- compfactor --------------------------------------------------------------

void compfactor_suite(Recorder& rec) {
  const auto& all = enumerate_composition_factors();
  rec("compfactor.count", "AC3", "16 composition factors for N = 1", std::to_string(all.size()), "16");
  auto orbits = orbit_decomposition(all);
  std::string sizes;
  for (const auto& o : orbits) sizes += (sizes.empty() ? "" : ",") + std::to_string(o.size());
  rec("compfactor.orbits", "AC3", "two Aut(F)-orbits of eight", sizes, "8,8");
  auto iso = isotropy(canonical_eps().eps());
  rec("compfactor.isotropy_order", "AC3", "isotropy of eps^tau has order 21", std::to_string(iso.size()), "21");
  auto norm = normalizer(cyclic_subgroup(canonical_tau()));
  std::sort(iso.begin(), iso.end());
  std::sort(norm.begin(), norm.end());
  rec.flag("compfactor.isotropy_is_normalizer", "AC3", "isotropy of eps^tau equals the normalizer of <tau>", iso == norm);
}

// ---- radon -------------------------------------------------------------------

void radon_suite(Recorder& rec) {
  auto kernel = radon_kernel();
  rec("radon.kernel", "AC4", "kernel of the Radon transform has 8 elements", std::to_string(kernel.size()), "8");
  std::set<PointFn> expected{PointFn()};
  for (Line d : all_lines()) expected.insert(PointFn::T(d));
  rec.flag("radon.kernel_elements", "AC4", "kernel is {0} and the seven T_D",
           std::set<PointFn>(kernel.begin(), kernel.end()) == expected);
  rec("radon.image", "AC4", "image of the Radon transform has 16 elements", std::to_string(radon_image().size()), "16");
  rec("radon.R", "AC4", "|R| = 64", std::to_string(all_R().size()), "64");
  rec("radon.Rstar", "AC4", "|R*| = 8", std::to_string(all_Rstar().size()), "8");
}

// ---- lifting -----------------------------------------------------------------

void lifting_suite(Recorder& rec, const VerifyOptions& opts) {
  const auto& eps = canonical_eps();
  auto classes = classify_delta_star(eps);
  std::map<std::size_t, int> mult;
  for (const auto& [f, members] : classes) ++mult[members.size()];
  rec("lifting.delta_star_classes", "AC5", "delta* takes 8 values, each on 21 elements",
      std::to_string(classes.size()) + " functions " + map_str(mult), "8 functions {21:8}");
  auto props = delta_star_properties(eps, false, 2000);
  rec("lifting.delta_star_det", "AC5", "det g = +1 for every g", std::to_string(props.det_failures) + " failures",
      "0 failures");
  rec("lifting.delta_star_pencil", "AC5", "products over pencils are +1",
      std::to_string(props.pencil_failures) + " failures", "0 failures");
  auto [a, b] = standard_generators();
  auto pa = distinguished_point(delta_star_fn(a, eps));
  auto pb = distinguished_point(delta_star_fn(b, eps));
  rec("lifting.delta_star_generators", "AC5", "distinguished points of delta*(a) and delta*(b)",
      (pa ? pa->name() : "none") + "," + (pb ? pb->name() : "none"), "P4,P3");

  auto group = enumerate_aug_group(eps, opts.cache_dir).elements;
  rec("lifting.aug_group_order", "AC6", "|Aut(F^_eps)| = 1344", std::to_string(group.size()), "1344");
  std::set<AugAut> kernel;
  std::map<Collineation, int> fiber;
  for (const auto& g : group) {
    ++fiber[g.base()];
    if (g.base().is_identity()) kernel.insert(g);
  }
  std::set<AugAut> expected_kernel{AugAut::identity()};
  for (Line d : all_lines()) expected_kernel.insert(t_map(d));
  rec.flag("lifting.kernel", "AC6", "ker pi = {Id} and the seven t_D", kernel == expected_kernel);
  std::map<int, int> fiber_sizes;
  for (const auto& [g, n] : fiber) ++fiber_sizes[n];
  rec("lifting.fibers", "AC6", "every fiber has 8 elements", map_str(fiber_sizes), "{8:168}");
  std::map<int, std::set<std::string>> profiles;
  for (const auto& g : all_collineations()) {
    auto prof = fiber_order_profile(g, eps);
    std::map<int, int> counts;
    for (int o : prof) ++counts[o];
    profiles[g.order()].insert(map_str(counts));
  }
  std::string prof_str;
  for (int ord : {2, 3, 4, 7}) {
    prof_str += (prof_str.empty() ? "" : " ") + std::to_string(ord) + "->";
    for (const auto& s : profiles[ord]) prof_str += s;
  }
  rec("lifting.fiber_profiles", "AC6", "fiber order profiles certify non-splitting", prof_str,
      "2->{2:4, 4:4} 3->{3:4, 6:4} 4->{8:8} 7->{7:8}");
}

// ---- g2 ------------------------------------------------------------------------

template <ExactField F>
void g2_suite(Recorder& rec, const F& field, const VerifyOptions& opts) {
  G2Context<F> g(field);
  using S = typename F::value_type;
  std::vector<Vec<S>> rows;
  for (const auto& pd : all_incident_pairs()) rows.push_back(g.X(pd).coeffs());
  rec("g2.dimension", "AC7", "the 21 X_{P,D} span a 14-dim algebra", std::to_string(rank(rows)), "14");
  // Relations among the X's: kernel of the 21 x 21 coordinate matrix (columns are X's).
  std::vector<Vec<S>> cols(21, Vec<S>(21, field.zero()));
  for (int i = 0; i < 21; ++i)
    for (int k = 0; k < 21; ++k) cols[k][i] = rows[i][k];
  auto relations = nullspace(field, cols, 21);
  std::vector<Vec<S>> point_relations;
  for (Point p : all_points()) {
    Vec<S> v(21, field.zero());
    for (std::size_t i = 0; i < 21; ++i)
      if (all_incident_pairs()[i].p == p) v[i] = field.one();
    point_relations.push_back(v);
  }
  rec("g2.point_relations", "AC7", "the only relations are sum_D X_{P,D} = 0, one per point",
      std::to_string(relations.size()) + (same_span(relations, point_relations) ? " point relations" : " other"),
      "7 point relations");
  rec.flag("g2.annihilator", "AC7", "annihilator of 1 in so(7) equals the span of the X's",
           same_span(g.annihilator_of_unit(), span_basis(rows)));

  auto law = bracket_law_report(g);
  rec("g2.bracket_law", "AC8", "bracket law on all 441 ordered pairs",
      std::to_string(law.pairs) + " pairs, " + std::to_string(law.law_mismatches) + " mismatches", "441 pairs, 0 mismatches");
  rec("g2.bracket_paths", "AC8", "structure constants agree with spinor and vector commutators",
      std::to_string(law.matrix_mismatches + law.vector_mismatches) + " mismatches", "0 mismatches");
  auto I = [](int p, int d) { return IncidentPair::make(Point::from_label(p), Line::from_label(d)); };
  rec.flag("g2.anchor_P1D1_P3D7", "AC8", "[X_{P1,D1}, X_{P3,D7}] = -X_{P7,D7}",
           g.bracket(g.X(I(1, 1)), g.X(I(3, 7))) == -g.X(I(7, 7)));
  rec.flag("g2.anchor_P4D1_P5D2", "AC8", "[X_{P4,D1}, X_{P5,D2}] = -X_{P7,D6}",
           g.bracket(g.X(I(4, 1)), g.X(I(5, 2))) == -g.X(I(7, 6)));
  auto basis = g.annihilator_of_unit();
  int jacobi = 0;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        So7Elt<S> x(a), y(b), z(c);
        if (!(g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y))).is_zero())
          ++jacobi;
      }
  rec("g2.jacobi", "AC8", "Jacobi identity on all basis triples", std::to_string(jacobi) + " failures", "0 failures");

  std::map<std::string, int> census;
  for (const auto& [tag, n] : pair_census()) census[to_string(tag)] = n;
  rec("g2.incidence_census", "AC9", "orbits on pairs of incident pairs", map_str(census),
      "{D:21, O1:42, O2:42, O3:84, O3':84, O4:168}");
  rec.flag("g2.incidence_single_orbits", "AC9", "each class is one orbit under a and b", pair_orbits_are_single_orbits());

  auto group = enumerate_aug_group(g.eps(), opts.cache_dir).elements;
  auto dh = delta_hat_report(group, g.eps());
  int outside_R = 0;
  auto table = g.table();
  for (const auto& x : group)
    if (!in_R(delta_hat_fn(x, table))) ++outside_R;
  rec("g2.delta_in_R", "AC10", "delta(g^,.) is independent of D and lies in R",
      std::to_string(dh.elements) + " elements, " + std::to_string(outside_R) + " outside R", "1344 elements, 0 outside R");
  rec("g2.delta_radon", "AC10", "multiplicative Radon transform of delta equals delta*",
      std::to_string(dh.radon_failures) + " failures", "0 failures");
  rec("g2.delta_functions", "AC10", "sixty-four functions, each 21 times",
      std::to_string(dh.distinct_functions) + " x [" + std::to_string(dh.min_multiplicity) + "," +
          std::to_string(dh.max_multiplicity) + "]",
      "64 x [21,21]");
  rec("g2.delta_equivariance", "AC10", "delta(g2 g1, P) = delta(g2, g1 P) delta(g1, P)",
      std::to_string(dh.equivariance_failures) + " failures", "0 failures");
}

// ---- subalgebras -----------------------------------------------------------------

template <ExactField F>
void subalgebra_suite(Recorder& rec, const F& field) {
  G2Context<F> g(field);
  int cartan_ok = 0, line_ok = 0;
  for (Point p : all_points()) cartan_ok += cartan(g, p).ok();
  rec("subalgebras.cartan", "AC11", "h_P abelian, 2-dim and self-centralizing", std::to_string(cartan_ok) + "/7", "7/7");
  rec.flag("subalgebras.decomposition", "AC11", "g2 is the direct sum of the h_P with [h_P, h_Q] = h_{P+Q}",
           decomposition_check(g).ok());
  for (Line d : all_lines()) line_ok += line_subalgebra(g, d).ok();
  rec("subalgebras.line", "AC11", "g_D has the so(4) tables and invariant subspaces", std::to_string(line_ok) + "/7",
      "7/7");

  G2Context<GaussianField> gi;
  G2Context<PrimeField> g5(PrimeField(5));
  auto ri = point_subalgebra(gi, Point::from_label(1));
  auto r5 = point_subalgebra(g5, Point::from_label(1));
  rec("subalgebras.point_dimension", "AC11", "s_P closes at dimension 8",
      std::to_string(ri.dimension) + "," + std::to_string(r5.dimension), "8,8");
  rec.flag("subalgebras.chevalley", "AC11", "Chevalley relations and Cartan matrix over Q(i) and F5",
           ri.relations_checked && ri.relations && r5.relations_checked && r5.relations);
  auto rq = point_subalgebra(G2Context<RationalField>(), Point::from_label(1));
  auto r3 = point_subalgebra(G2Context<PrimeField>(PrimeField(3)), Point::from_label(1));
  rec("subalgebras.sqrt_branch", "AC11", "sqrt(-1) branch over Q, F3, Q(i), F5",
      std::string(rq.has_sqrt_minus_one ? "T" : "F") + (r3.has_sqrt_minus_one ? "T" : "F") +
          (ri.has_sqrt_minus_one ? "T" : "F") + (r5.has_sqrt_minus_one ? "T" : "F"),
      "FFTT");
  std::set<std::size_t> o4;
  for (const auto& a : all_incident_pairs())
    for (const auto& b : all_incident_pairs())
      if (classify_pair(a, b) == PairOrbit::O4) o4.insert(pair_generated_subalgebra(g, a, b));
  rec("subalgebras.o4_generates", "AC11", "every O4 pair generates the 14-dim algebra", set_str(o4), "{14}");

  int roots_ok = 0;
  for (Point p : all_points()) roots_ok += root_system(G2Context<RationalField>(), p).ok();
  rec("subalgebras.root_system", "AC12", "12 roots per point, 6 of length^2 2 and 6 of length^2 6, G2 pattern",
      std::to_string(roots_ok) + "/7", "7/7");
}

// ---- forms ---------------------------------------------------------------------------

void forms_suite(Recorder& rec) {
  auto r = invariance_check();
  rec("forms.terms", "AC13", "omega and Omega have 7 ordering-independent terms",
      std::to_string(r.omega_terms) + "," + std::to_string(r.Omega_terms), "7,7");
  rec("forms.invariant_dimension", "AC13", "the invariant 3-forms form a line", std::to_string(r.invariant_dimension), "1");
  rec("forms.generators_kill", "AC13", "every X_{P,D} kills omega and Omega", std::to_string(r.killed_by_generators), "21");
  rec("forms.contraction_identity", "AC13", "i_v omega ^ i_w omega ^ omega = -6 B(v,w) vol",
      std::to_string(r.contraction_failures) + " failures", "0 failures");
  rec("forms.volume", "AC13", "Omega ^ omega = -7 vol", r.volume_ratio.str(), "-7");
  rec("forms.normalization", "AC13", "<omega,omega> and <Omega,Omega> with sorted subsets orthonormal",
      r.omega_norm.str() + "," + r.Omega_norm.str(), "7,7");
}

// ---- octonion ------------------------------------------------------------------------

const char* kTable[8][8] = {
    {"1", "e_P1", "e_P2", "e_P3", "e_P4", "e_P5", "e_P6", "e_P7"},
    {"e_P1", "-1", "e_P4", "e_P7", "-e_P2", "e_P6", "-e_P5", "-e_P3"},
    {"e_P2", "-e_P4", "-1", "e_P5", "e_P1", "-e_P3", "e_P7", "-e_P6"},
    {"e_P3", "-e_P7", "-e_P5", "-1", "e_P6", "e_P2", "-e_P4", "e_P1"},
    {"e_P4", "e_P2", "-e_P1", "-e_P6", "-1", "e_P7", "e_P3", "-e_P5"},
    {"e_P5", "-e_P6", "e_P3", "-e_P2", "-e_P7", "-1", "e_P1", "e_P4"},
    {"e_P6", "e_P5", "-e_P7", "e_P4", "-e_P3", "-e_P1", "-1", "e_P2"},
    {"e_P7", "e_P3", "e_P6", "-e_P1", "e_P5", "-e_P4", "-e_P2", "-1"},
};

template <ExactField F>
void octonion_suite(Recorder& rec, const F& field) {
  AlgebraContext<F> A(canonical_eps(), field);
  int diff = 0;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (basis_label(A.table()[r][c]) != kTable[r][c]) ++diff;
  rec("octonion.table", "AC14", "multiplication table cell for cell", std::to_string(diff) + " differing cells",
      "0 differing cells");
  auto n = A.norm_multiplicativity_check(100, 20261017, false);
  rec("octonion.norm_sampled", "AC14", "N(xy) = N(x) N(y) on random integer pairs",
      std::to_string(n.sampled_pairs - n.sampled_failures) + "/" + std::to_string(n.sampled_pairs), "100/100");
  rec.flag("octonion.norm_structural", "AC14", "line and quadrilateral rules for N = 1", n.structural);
  int assoc_failures = 0;
  for (Line d : all_lines()) {
    try {
      A.quaternion_subalgebra(d);
    } catch (const std::exception&) {
      ++assoc_failures;
    }
  }
  rec("octonion.quaternions", "AC14", "each line spans an associative quaternion subalgebra",
      std::to_string(7 - assoc_failures) + "/7", "7/7");
  std::map<std::size_t, int> dims;
  for (Point p : all_points())
    for (Point q : all_points())
      for (Point r : all_points())
        if (p < q && q < r && !collinear(p, q, r)) ++dims[A.subalgebra_generated({p, q, r})];
  rec("octonion.non_aligned", "AC14", "non-aligned triples generate dimension 8", map_str(dims), "{8:28}");
}

template <class Fn>
void with_field(const FieldDescriptor& d, Fn fn) {
  switch (d.kind) {
    case FieldKind::Rational: fn(RationalField{}); break;
    case FieldKind::Gaussian: fn(GaussianField{}); break;
    case FieldKind::Prime: fn(PrimeField(d.p)); break;
  }
}

}  // namespace

bool SuiteResult::pass() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fano", "compfactor", "radon", "lifting", "g2", "subalgebras", "forms",
                                                 "octonion"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  SuiteResult res;
  res.name = name;
  Recorder rec(res.checks);
  auto start = std::chrono::steady_clock::now();
  try {
    if (name == "fano")
      fano_suite(rec);
    else if (name == "compfactor")
      compfactor_suite(rec);
    else if (name == "radon")
      radon_suite(rec);
    else if (name == "lifting")
      lifting_suite(rec, opts);
    else if (name == "g2")
      with_field(opts.field, [&](const auto& f) { g2_suite(rec, f, opts); });
    else if (name == "subalgebras")
      with_field(opts.field, [&](const auto& f) { subalgebra_suite(rec, f); });
    else if (name == "forms")
      forms_suite(rec);
    else if (name == "octonion")
      with_field(opts.field, [&](const auto& f) { octonion_suite(rec, f); });
    else
      throw std::invalid_argument("unknown suite " + name);
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& opts) {
  std::vector<std::future<SuiteResult>> futures;
  for (const auto& n : names) futures.push_back(std::async(std::launch::async, run_suite, n, opts));
  std::vector<SuiteResult> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace fanolie::cli
