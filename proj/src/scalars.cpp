#include "fanolie/scalars.hpp"

#include <charconv>

namespace fanolie {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) imag = "i";
  else if (im_ == Rational(-1)) imag = "-i";
  else imag = im_.str() + "i";
  if (re_.is_zero()) return imag;
  if (imag[0] == '-') return re_.str() + imag;
  return re_.str() + "+" + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

void PrimeFieldElement::same_field(const PrimeFieldElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed prime field moduli");
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
  same_field(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
  same_field(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
  same_field(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
  return *this;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero");
  // Fermat: v^(p-2).
  std::uint64_t result = 1, base = v_, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(result), p_, Raw{}};
}

PrimeFieldElement& PrimeFieldElement::operator/=(const PrimeFieldElement& o) {
  same_field(o);
  return *this *= o.inverse();
}

bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  a.same_field(b);
  return a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << x.str(); }

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
  if (text == "q") return {FieldKind::Rational, 0};
  if (text == "qi") return {FieldKind::Gaussian, 0};
  if (text.rfind("fp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last)
      throw std::invalid_argument("bad prime in field descriptor: " + text);
    if (!is_odd_prime(p)) throw std::invalid_argument("field descriptor needs an odd prime: " + text);
    return {FieldKind::Prime, p};
  }
  throw std::invalid_argument("unsupported field descriptor: " + text);
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case FieldKind::Rational: return "q";
    case FieldKind::Gaussian: return "qi";
    case FieldKind::Prime: return "fp:" + std::to_string(p);
  }
  return "?";
}

bool has_sqrt_minus_one(const FieldDescriptor& field) {
  switch (field.kind) {
    case FieldKind::Rational: return false;
    case FieldKind::Gaussian: return true;
    case FieldKind::Prime:
      if (!is_odd_prime(field.p)) throw std::invalid_argument("unsupported field descriptor");
      return field.p % 4 == 1;
  }
  throw std::invalid_argument("unsupported field descriptor");
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_odd_prime(prime)) throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(prime));
}

std::optional<PrimeFieldElement> PrimeField::sqrt_minus_one() const {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((std::uint64_t{x} * x) % p == p - 1) return PrimeFieldElement(x, p);
  return std::nullopt;
}

}  // namespace fanolie
