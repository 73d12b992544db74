#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fanolie {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_{0};
};

// a + b i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// Residue modulo an odd prime. Mixing moduli throws.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  PrimeFieldElement inverse() const;
  std::string str() const { return std::to_string(v_); }

  PrimeFieldElement operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_, Raw{}}; }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o);
  PrimeFieldElement& operator-=(const PrimeFieldElement& o);
  PrimeFieldElement& operator*=(const PrimeFieldElement& o);
  PrimeFieldElement& operator/=(const PrimeFieldElement& o);

  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b);

 private:
  struct Raw {};
  PrimeFieldElement(std::uint32_t v, std::uint32_t p, Raw) : v_(v), p_(p) {}
  void same_field(const PrimeFieldElement& o) const;

  std::uint32_t v_;
  std::uint32_t p_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(const PrimeFieldElement& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const GaussianRational& x) { return x.str(); }
inline std::string to_string(const PrimeFieldElement& x) { return x.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const GaussianRational& x);
std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x);

bool is_odd_prime(std::uint64_t p);

enum class FieldKind { Rational, Gaussian, Prime };

// Runtime name of a supported field, as accepted by --field.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;

  static FieldDescriptor parse(const std::string& text);  // "q", "qi", "fp:<p>"
  std::string name() const;
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool has_sqrt_minus_one(const FieldDescriptor& field);

struct RationalField {
  using value_type = Rational;
  Rational from_int(long n) const { return Rational(n); }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  std::optional<Rational> sqrt_minus_one() const { return std::nullopt; }
  FieldDescriptor descriptor() const { return {FieldKind::Rational, 0}; }
};

struct GaussianField {
  using value_type = GaussianRational;
  GaussianRational from_int(long n) const { return GaussianRational(n); }
  GaussianRational zero() const { return GaussianRational(0); }
  GaussianRational one() const { return GaussianRational(1); }
  std::optional<GaussianRational> sqrt_minus_one() const { return GaussianRational::i(); }
  FieldDescriptor descriptor() const { return {FieldKind::Gaussian, 0}; }
};

struct PrimeField {
  explicit PrimeField(std::uint32_t prime);
  using value_type = PrimeFieldElement;
  PrimeFieldElement from_int(long n) const { return {n, p}; }
  PrimeFieldElement zero() const { return {0, p}; }
  PrimeFieldElement one() const { return {1, p}; }
  std::optional<PrimeFieldElement> sqrt_minus_one() const;
  FieldDescriptor descriptor() const { return {FieldKind::Prime, p}; }

  std::uint32_t p;
};

template <class F>
concept ExactField = requires(const F& f, long n, const typename F::value_type& a) {
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.sqrt_minus_one() } -> std::same_as<std::optional<typename F::value_type>>;
  { f.descriptor() } -> std::same_as<FieldDescriptor>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a - a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { a / a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a == a } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<GaussianField>);
static_assert(ExactField<PrimeField>);

}  // namespace fanolie
