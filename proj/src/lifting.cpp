#include "fanolie/lifting.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fanolie {

namespace {

constexpr int kCacheVersion = 1;

int pair_value(const Collineation& g, Point p, Point q, const CompositionFactor& eps) { return eps(p, q) * eps(g(p), g(q)); }

}  // namespace

int delta_star(const Collineation& g, Line d, const CompositionFactor& eps) {
  auto pts = d.points();
  int v = pair_value(g, pts[0], pts[1], eps);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && pair_value(g, pts[i], pts[j], eps) != v)
        throw std::logic_error("delta* depends on the chosen pair on " + d.name());
  return v;
}

LineSigns delta_star_fn(const Collineation& g, const CompositionFactor& eps) {
  std::array<int, 7> v{};
  for (Line d : all_lines()) v[d.index()] = delta_star(g, d, eps);
  return LineSigns::from_values(v);
}

DeltaStarReport delta_star_properties(const CompositionFactor& eps, bool all_pairs, int sample_pairs) {
  DeltaStarReport r;
  const auto& group = all_collineations();
  std::vector<LineSigns> table;
  for (const auto& g : group) table.push_back(delta_star_fn(g, eps));
  for (std::size_t k = 0; k < group.size(); ++k) {
    const LineSigns& f = table[k];
    ++r.elements;
    int det = 1;
    for (Line d : all_lines()) det *= f(d);
    if (det != 1) ++r.det_failures;
    for (Point p : all_points()) {
      int prod = 1;
      for (Line d : lines_through(p)) prod *= f(d);
      if (prod != 1) ++r.pencil_failures;
    }
    for (Line l : all_lines()) {
      auto quad = l.quadrilateral();
      std::array<int, 4> idx = {0, 1, 2, 3};
      do {
        Point P = quad[idx[0]], Q = quad[idx[1]], R = quad[idx[2]], S = quad[idx[3]];
        if (f(wedge(P, Q)) * f(wedge(Q, R)) != f(wedge(P, S)) * f(wedge(S, R))) ++r.quadrilateral_failures;
      } while (std::next_permutation(idx.begin(), idx.end()));
      // Opposite sides of the quadrilateral meet on l.
      std::vector<int> products;
      for (Point p : l.points()) {
        int prod = 1;
        for (Line d : lines_through(p))
          if (d != l) prod *= f(d);
        products.push_back(prod);
      }
      if (products[0] != products[1] || products[1] != products[2]) ++r.opposite_side_failures;
    }
  }
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const auto& g2 = group[i];
    const auto& g1 = group[j];
    ++r.multiplier_pairs;
    LineSigns composite = delta_star_fn(g2 * g1, eps);
    for (Line d : all_lines())
      if (composite(d) != table[i](g1(d)) * table[j](d)) {
        ++r.multiplier_failures;
        return;
      }
  };
  if (all_pairs) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = 0; j < group.size(); ++j) check_pair(i, j);
  } else {
    std::mt19937 rng(168);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int s = 0; s < sample_pairs; ++s) check_pair(pick(rng), pick(rng));
  }
  return r;
}

std::map<LineSigns, std::vector<Collineation>> classify_delta_star(const CompositionFactor& eps) {
  std::map<LineSigns, std::vector<Collineation>> classes;
  for (const auto& g : all_collineations()) classes[delta_star_fn(g, eps)].push_back(g);
  return classes;
}

AugAut AugAut::parse(const std::string& text) {
  std::istringstream is(text);
  std::array<int, 7> images{}, signs{};
  for (int i = 0; i < 7; ++i) {
    long v = 0;
    if (!(is >> v) || v == 0 || v < -7 || v > 7) throw std::invalid_argument("bad signed image list: " + text);
    images[i] = static_cast<int>(v < 0 ? -v : v);
    signs[i] = v < 0 ? -1 : 1;
  }
  std::string rest;
  if (is >> rest) throw std::invalid_argument("bad signed image list: " + text);
  return {Collineation::from_images(images), PointSigns::from_values(signs)};
}

std::string AugAut::str() const {
  std::string s;
  for (Point p : all_points()) {
    if (!s.empty()) s += ' ';
    if (signs_(p) < 0) s += '-';
    s += std::to_string(base_(p).label());
  }
  return s;
}

AugAut operator*(const AugAut& g2, const AugAut& g1) {
  std::array<int, 7> s{};
  for (Point p : all_points()) s[p.index()] = g2.signs_(g1.base_(p)) * g1.signs_(p);
  return {g2.base_ * g1.base_, PointSigns::from_values(s)};
}

AugAut AugAut::inverse() const {
  Collineation inv = base_.inverse();
  std::array<int, 7> s{};
  // g^-1 e_{gP} = s(P) e_P.
  for (Point p : all_points()) s[base_(p).index()] = signs_(p);
  return {inv, PointSigns::from_values(s)};
}

int AugAut::order() const {
  AugAut x = *this;
  for (int n = 1; n <= 1344; ++n) {
    if (x == identity()) return n;
    x = x * *this;
  }
  throw std::logic_error("augmented automorphism of unbounded order");
}

SignedBasis AugAut::image(int k) const {
  if (k == 0) return {1, 0};
  Point p = Point::from_label(k);
  return {signs_(p), base_(p).label()};
}

std::array<std::array<int, 8>, 8> AugAut::matrix() const {
  std::array<std::array<int, 8>, 8> m{};
  for (int k = 0; k < 8; ++k) {
    auto im = image(k);
    m[im.index][k] = im.sign;
  }
  return m;
}

bool is_lift(const AugAut& g, const CompositionFactor& eps) {
  for (Line d : all_lines()) {
    auto pts = d.points();
    if (delta_star(g.base(), d, eps) != g.signs()(pts[0]) * g.signs()(pts[1]) * g.signs()(pts[2])) return false;
  }
  return true;
}

bool is_algebra_automorphism(const AugAut& g, const MultiplicationTable& t) {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      SignedBasis prod = t[a][b];
      SignedBasis lhs = g.image(prod.index);
      lhs.sign *= prod.sign;
      SignedBasis ga = g.image(a), gb = g.image(b);
      SignedBasis rhs = t[ga.index][gb.index];
      rhs.sign *= ga.sign * gb.sign;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::vector<AugAut> lifts(const Collineation& g, const CompositionFactor& eps) {
  LineSigns target = delta_star_fn(g, eps);
  std::vector<AugAut> out;
  for (PointFn h : preimages(target.log())) out.emplace_back(g, e(h));
  if (out.size() != 8) throw std::logic_error("lift fiber of wrong size");
  std::sort(out.begin(), out.end());
  return out;
}

AugAut t_map(Line d) { return {Collineation::identity(), e(PointFn::T(d))}; }

std::string coordinate_model_tag() {
  std::string s = "cube:";
  for (Point p : all_points()) {
    if (p.index() > 0) s += ',';
    s += std::to_string(p.mask());
  }
  s += ";lines:";
  for (Line d : all_lines()) {
    if (d.index() > 0) s += ',';
    for (Point p : d.points()) s += std::to_string(p.label());
  }
  return s;
}

std::filesystem::path aug_group_cache_file(const std::filesystem::path& dir, const CompositionFactor& eps) {
  return dir / ("aug_group_v" + std::to_string(kCacheVersion) + "_" + std::to_string(eps.eps().code()) + ".json");
}

namespace {

std::vector<AugAut> compute_aug_group(const CompositionFactor& eps) {
  const auto& group = all_collineations();
  constexpr std::size_t kChunks = 4;
  std::vector<std::future<std::vector<AugAut>>> parts;
  for (std::size_t c = 0; c < kChunks; ++c)
    parts.push_back(std::async(std::launch::async, [&, c] {
      std::vector<AugAut> local;
      for (std::size_t i = c; i < group.size(); i += kChunks)
        for (const auto& l : lifts(group[i], eps)) local.push_back(l);
      return local;
    }));
  std::vector<AugAut> all;
  for (auto& f : parts)
    for (const auto& x : f.get()) all.push_back(x);
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<std::vector<AugAut>> read_cache(const std::filesystem::path& file, const CompositionFactor& eps) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
    if (j.at("eps").get<std::string>() != eps.str()) return std::nullopt;
    if (j.at("model").get<std::string>() != coordinate_model_tag()) return std::nullopt;
    std::vector<AugAut> out;
    for (const auto& el : j.at("elements")) {
      AugAut a(Collineation::parse(el.at("perm").get<std::string>()), PointSigns(PointFn::from_bits(el.at("signs").get<unsigned>())));
      if (!is_lift(a, eps)) return std::nullopt;
      out.push_back(a);
    }
    if (out.size() != 1344 || !std::is_sorted(out.begin(), out.end()) ||
        std::adjacent_find(out.begin(), out.end()) != out.end())
      return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void write_cache(const std::filesystem::path& file, const CompositionFactor& eps, const std::vector<AugAut>& group) {
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["eps"] = eps.str();
  j["model"] = coordinate_model_tag();
  auto& els = j["elements"] = nlohmann::json::array();
  for (const auto& a : group) els.push_back({{"perm", a.base().str()}, {"signs", a.signs().log().bits()}});
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // an unwritable cache is not an error
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

AugGroup enumerate_aug_group(const CompositionFactor& eps, const std::optional<std::filesystem::path>& cache_dir) {
  if (cache_dir) {
    auto file = aug_group_cache_file(*cache_dir, eps);
    if (auto cached = read_cache(file, eps)) return {std::move(*cached), true};
    auto group = compute_aug_group(eps);
    write_cache(file, eps, group);
    return {std::move(group), false};
  }
  return {compute_aug_group(eps), false};
}

std::vector<int> fiber_order_profile(const Collineation& g, const CompositionFactor& eps) {
  std::vector<int> orders;
  for (const auto& l : lifts(g, eps)) orders.push_back(l.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::array<Point, 3> line_cycle(const Collineation& t, Line d) {
  if (t.order() != 7) throw std::invalid_argument("line_cycle needs an element of order 7");
  int step = orientation_type(t) == OrientationType::T013 ? 1 : 2;
  for (Point p : d.points()) {
    std::array<Point, 3> c = {p, t.pow(step)(p), t.pow(3)(p)};
    if (d.contains(c[1]) && d.contains(c[2])) return c;
  }
  throw std::logic_error("no cyclic reading of " + d.name());
}

bool order7_same_orientation(const Collineation& tau_prime, const Collineation& tau) {
  if (tau_prime.order() != 7) throw std::invalid_argument("order7_same_orientation needs an element of order 7");
  for (Line d : all_lines())
    if (!same_cycle(line_cycle(tau_prime, d), line_cycle(tau, d))) return false;
  return true;
}

std::string delta_star_diagram_text(const CompositionFactor& eps) {
  std::ostringstream os;
  for (const auto& [f, members] : classify_delta_star(eps)) {
    auto p = distinguished_point(f);
    os << (p ? "e(T_" + p->name() + ")" : std::string("1")) << "  " << members.size() << " elements\n";
    for (Line d : all_lines()) {
      os << "  " << d.name() << " {";
      auto pts = d.points();
      os << pts[0].label() << pts[1].label() << pts[2].label() << "} " << (f(d) > 0 ? '+' : '-') << "\n";
    }
  }
  return os.str();
}

std::string delta_star_diagram_dot(const CompositionFactor& eps) {
  std::ostringstream os;
  os << "graph delta_star {\n  node [shape=circle];\n";
  int k = 0;
  for (const auto& [f, members] : classify_delta_star(eps)) {
    auto p = distinguished_point(f);
    os << "  subgraph cluster_" << k << " {\n    label=\"" << (p ? "e(T_" + p->name() + ")" : std::string("1")) << " ("
       << members.size() << ")\";\n";
    for (Point q : all_points()) os << "    c" << k << "_" << q.label() << " [label=\"" << q.name() << "\"];\n";
    for (Line d : all_lines()) {
      auto pts = d.points();
      const char* style = f(d) > 0 ? "solid" : "dashed";
      for (int i = 0; i < 3; ++i)
        os << "    c" << k << "_" << pts[i].label() << " -- c" << k << "_" << pts[(i + 1) % 3].label() << " [style=" << style
           << ", label=\"" << d.name() << "\"];\n";
    }
    os << "  }\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

}  // namespace fanolie
