#include "fanolie/forms.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "fanolie/g2.hpp"

namespace fanolie {

namespace {

// Number of pairs (i in a, j in b) with i > j.
int inversions(unsigned a, unsigned b) {
  int n = 0;
  for (int j = 0; j < 7; ++j)
    if (b >> j & 1) n += std::popcount(a >> (j + 1));
  return n;
}

int sign_of(int parity) { return parity % 2 ? -1 : 1; }

}  // namespace

ExteriorForm::ExteriorForm(int grade) : grade_(grade) {
  if (grade < 0 || grade > 7) throw std::invalid_argument("form grade " + std::to_string(grade));
}

ExteriorForm ExteriorForm::monomial(const std::vector<int>& labels) {
  ExteriorForm f(static_cast<int>(labels.size()));
  unsigned mask = 0;
  int parity = 0;
  for (int l : labels) {
    if (l < 1 || l > 7) throw std::invalid_argument("form index " + std::to_string(l));
    unsigned bit = 1u << (l - 1);
    if (mask & bit) return f;
    parity += std::popcount(mask >> l);  // earlier labels larger than l
    mask |= bit;
  }
  f.add_term(mask, Rational(sign_of(parity)));
  return f;
}

Rational ExteriorForm::coeff(unsigned mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorForm::add_term(unsigned mask, const Rational& c) {
  if (std::popcount(mask) != grade_) throw std::invalid_argument("term of the wrong grade");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string ExteriorForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : terms_) {
    bool neg = c < Rational(0);
    Rational a = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (grade_ == 0) {
      out += a.str();
      continue;
    }
    if (!(a == Rational(1))) out += a.str() + " ";
    out += "e";
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1) out += std::to_string(i + 1);
  }
  return out;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (o.grade_ != grade_) throw std::invalid_argument("adding forms of different grades");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) { return *this += -o; }

ExteriorForm operator*(const Rational& s, ExteriorForm a) {
  ExteriorForm out(a.grade_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.grade() + b.grade() > 7) throw std::invalid_argument("wedge exceeds grade 7");
  ExteriorForm out(a.grade() + b.grade());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      out.add_term(ma | mb, Rational(sign_of(inversions(ma, mb))) * ca * cb);
    }
  return out;
}

ExteriorForm contract(const Vector7& v, const ExteriorForm& a) {
  if (a.grade() == 0) throw std::invalid_argument("contraction of a 0-form");
  ExteriorForm out(a.grade() - 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (int i = 0; i < 7; ++i) {
      if (!(m >> i & 1)) continue;
      if (!v[i].is_zero()) out.add_term(m & ~(1u << i), Rational(sign_of(pos)) * v[i] * c);
      ++pos;
    }
  }
  return out;
}

Vector7 basis_vector(int label) {
  Vector7 v{};
  v.at(label - 1) = Rational(1);
  return v;
}

Rational inner(const ExteriorForm& a, const ExteriorForm& b) {
  Rational s(0);
  if (a.grade() != b.grade()) return s;
  for (const auto& [m, c] : a.terms()) s += c * b.coeff(m);
  return s;
}

namespace {

// Sums term(order) over one permutation per line/quadrilateral, checking every other permutation agrees.
template <std::size_t N, class Term>
ExteriorForm sum_over(const std::vector<std::array<Point, N>>& blocks, Term term, const char* what) {
  ExteriorForm out(static_cast<int>(N));
  for (auto pts : blocks) {
    std::sort(pts.begin(), pts.end());
    std::optional<ExteriorForm> first;
    do {
      ExteriorForm t = term(pts);
      if (!first)
        first = t;
      else if (!(t == *first))
        throw std::logic_error(std::string(what) + " term depends on the point order");
    } while (std::next_permutation(pts.begin(), pts.end()));
    out += *first;
  }
  return out;
}

template <std::size_t N>
ExteriorForm monomial_of(const std::array<Point, N>& pts) {
  std::vector<int> labels;
  for (Point p : pts) labels.push_back(p.label());
  return ExteriorForm::monomial(labels);
}

}  // namespace

ExteriorForm omega(const CompositionFactor& eps) {
  std::vector<std::array<Point, 3>> lines;
  for (Line d : all_lines()) lines.push_back(d.points());
  return sum_over(lines, [&](const std::array<Point, 3>& x) {
    return Rational(eps(x[0], x[1]) * eps(x[1], x[2]) * eps(x[2], x[0])) * monomial_of(x);
  }, "omega");
}

ExteriorForm Omega(const CompositionFactor& eps) {
  std::vector<std::array<Point, 4>> quads;
  for (Line d : all_lines()) quads.push_back(d.quadrilateral());
  return sum_over(quads, [&](const std::array<Point, 4>& x) {
    return Rational(eps(x[0], x[1]) * eps(x[2], x[3])) * monomial_of(x);
  }, "Omega");
}

ExteriorForm derivation(const Matrix<Rational>& m, const ExteriorForm& a) {
  // On 1-forms: m.e^k = -sum_c m(k, c) e^c; extended as a derivation.
  ExteriorForm out(a.grade());
  for (const auto& [mask, c] : a.terms()) {
    std::vector<int> labels;
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1) labels.push_back(i + 1);
    for (std::size_t slot = 0; slot < labels.size(); ++slot) {
      int k = labels[slot] - 1;
      for (int col = 0; col < 7; ++col) {
        if (m(k, col).is_zero()) continue;
        auto replaced = labels;
        replaced[slot] = col + 1;
        out += (-(m(k, col) * c)) * ExteriorForm::monomial(replaced);
      }
    }
  }
  return out;
}

FormsReport invariance_check(const Collineation& tau) {
  FormsReport r;
  G2Context<RationalField> g({}, tau);
  auto w = omega(g.eps());
  auto W = Omega(g.eps());
  r.omega_terms = w.terms().size();
  r.Omega_terms = W.terms().size();
  r.omega_norm = inner(w, w);
  r.Omega_norm = inner(W, W);
  r.volume_ratio = wedge(W, w).coeff(0x7f);

  std::vector<Matrix<Rational>> actions;
  for (const auto& pd : all_incident_pairs()) {
    auto m = g.imaginary_action(g.X(pd));
    actions.push_back(m);
    if (derivation(m, w).is_zero() && derivation(m, W).is_zero()) ++r.killed_by_generators;
  }

  // Invariant 3-forms: kernel of the stacked derivation maps on the 35 basis 3-forms.
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < 128; ++m)
    if (std::popcount(m) == 3) masks.push_back(m);
  std::vector<Vec<Rational>> rows;
  for (const auto& m : actions) {
    std::vector<ExteriorForm> images;
    for (unsigned mask : masks) {
      ExteriorForm basis(3);
      basis.add_term(mask, Rational(1));
      images.push_back(derivation(m, basis));
    }
    for (unsigned target : masks) {
      Vec<Rational> row;
      for (const auto& im : images) row.push_back(im.coeff(target));
      rows.push_back(row);
    }
  }
  r.invariant_dimension = nullspace(RationalField{}, rows, masks.size()).size();

  for (int v = 1; v <= 7; ++v)
    for (int u = 1; u <= 7; ++u) {
      auto lhs = wedge(wedge(contract(basis_vector(v), w), contract(basis_vector(u), w)), w);
      auto rhs = Rational(v == u ? -6 : 0) * ExteriorForm::volume();
      if (!(lhs == rhs)) ++r.contraction_failures;
    }
  return r;
}

}  // namespace fanolie
