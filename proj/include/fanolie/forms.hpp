#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fanolie/compfactor.hpp"
#include "fanolie/linalg.hpp"
#include "fanolie/scalars.hpp"

namespace fanolie {

// Homogeneous k-form on a 7-dim space with dual basis e^1..e^7. Terms are keyed by the bitmask of
// the sorted index subset (bit i-1 for e^i).
class ExteriorForm {
 public:
  explicit ExteriorForm(int grade);
  // e^{i1} ^ ... ^ e^{ik} in the given order (any order; repeated labels give zero).
  static ExteriorForm monomial(const std::vector<int>& labels);
  static ExteriorForm e(int label) { return monomial({label}); }
  static ExteriorForm volume() { return monomial({1, 2, 3, 4, 5, 6, 7}); }

  int grade() const { return grade_; }
  const std::map<unsigned, Rational>& terms() const { return terms_; }
  Rational coeff(unsigned mask) const;
  bool is_zero() const { return terms_.empty(); }
  // "e124 + e235 - 2 e1467"; "0" when empty.
  std::string str() const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(const Rational& s, ExteriorForm a);
  ExteriorForm operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

  void add_term(unsigned mask, const Rational& c);

 private:
  int grade_;
  std::map<unsigned, Rational> terms_;
};

using Vector7 = std::array<Rational, 7>;

// Throws std::invalid_argument when the grades add up to more than 7.
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
// Interior product; throws for a 0-form.
ExteriorForm contract(const Vector7& v, const ExteriorForm& a);
Vector7 basis_vector(int label);
// Sorted subsets orthonormal.
Rational inner(const ExteriorForm& a, const ExteriorForm& b);

// Sum over lines of eps_PQ eps_QR eps_RP e^P ^ e^Q ^ e^R. Throws std::logic_error if a term depends on
// the order of its points.
ExteriorForm omega(const CompositionFactor& eps);
// Sum over quadrilaterals {P,Q,R,S} of eps_PQ eps_RS e^P ^ e^Q ^ e^R ^ e^S; same check over 24 orders.
ExteriorForm Omega(const CompositionFactor& eps);

// Derivation action of a 7x7 endomorphism m (column c is the image of e_c) on forms:
// (m.a)(v1..vk) = -sum_i a(v1..m vi..vk).
ExteriorForm derivation(const Matrix<Rational>& m, const ExteriorForm& a);

struct FormsReport {
  std::size_t omega_terms = 0;
  std::size_t Omega_terms = 0;
  Rational omega_norm;  // <omega, omega>
  Rational Omega_norm;
  Rational volume_ratio;  // Omega ^ omega = volume_ratio * vol
  int killed_by_generators = 0;  // X_{P,D} with X.omega = 0 and X.Omega = 0
  std::size_t invariant_dimension = 0;
  int contraction_failures = 0;  // i_v omega ^ i_w omega ^ omega != -6 delta_vw vol
  bool ok() const {
    return omega_terms == 7 && Omega_terms == 7 && omega_norm == Rational(7) && Omega_norm == Rational(7) &&
           volume_ratio == Rational(-7) && killed_by_generators == 21 && invariant_dimension == 1 &&
           contraction_failures == 0;
  }
};

FormsReport invariance_check(const Collineation& tau = canonical_tau());

}  // namespace fanolie
