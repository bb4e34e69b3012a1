#include "stackzeta/algnum.hpp"

#include <cmath>

namespace stackzeta {

std::string QuadField::str() const {
  return "x^2-" + std::to_string(a) + "x+" + std::to_string(q);
}

std::optional<QuadField> common_field(const AlgNum& x, const AlgNum& y) {
  if (!x.field()) return y.field();
  if (!y.field()) return x.field();
  if (*x.field() != *y.field())
    throw FieldMismatchError("AlgNum: operands live in different quadratic fields");
  return x.field();
}

AlgNum operator+(const AlgNum& x, const AlgNum& y) {
  auto f = common_field(x, y);
  if (!f) return AlgNum(x.c0() + y.c0());
  return AlgNum(*f, x.c0() + y.c0(), x.c1() + y.c1());
}

AlgNum operator-(const AlgNum& x, const AlgNum& y) {
  auto f = common_field(x, y);
  if (!f) return AlgNum(x.c0() - y.c0());
  return AlgNum(*f, x.c0() - y.c0(), x.c1() - y.c1());
}

// (c0 + c1 a)(d0 + d1 a) with a^2 = A a - q.
AlgNum operator*(const AlgNum& x, const AlgNum& y) {
  auto f = common_field(x, y);
  if (!f) return AlgNum(x.c0() * y.c0());
  Rat A(f->a), q(f->q);
  Rat cross = x.c1() * y.c1();
  Rat c0 = x.c0() * y.c0() - q * cross;
  Rat c1 = x.c0() * y.c1() + x.c1() * y.c0() + A * cross;
  return AlgNum(*f, std::move(c0), std::move(c1));
}

AlgNum AlgNum::conj() const {
  if (!field_) return *this;
  // alpha -> a - alpha
  return AlgNum(*field_, c0_ + Rat(field_->a) * c1_, -c1_);
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw std::domain_error("AlgNum: division by zero");
  if (!field_) return AlgNum(Rat(1) / c0_);
  // x * conj(x) = c0^2 + a c0 c1 + q c1^2 is the (rational) norm.
  Rat norm = c0_ * c0_ + Rat(field_->a) * c0_ * c1_ + Rat(field_->q) * c1_ * c1_;
  AlgNum cj = conj();
  return AlgNum(*field_, cj.c0() / norm, cj.c1() / norm);
}

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum base = *this;
  AlgNum acc = field_ ? AlgNum(*field_, Rat(1), Rat(0)) : AlgNum(Rat(1));
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const AlgNum& x, const AlgNum& y) {
  if (x.c0() != y.c0() || x.c1() != y.c1()) return false;
  if (x.c1().is_zero()) return true;  // both rational-valued, tags may differ
  return x.field() && y.field() && *x.field() == *y.field();
}

bool operator<(const AlgNum& x, const AlgNum& y) {
  if (x.c0() != y.c0()) return x.c0() < y.c0();
  if (x.c1() != y.c1()) return x.c1() < y.c1();
  long xa = x.field() ? x.field()->a : 0, xq = x.field() ? x.field()->q : 0;
  long ya = y.field() ? y.field()->a : 0, yq = y.field() ? y.field()->q : 0;
  if (x.c1().is_zero()) return false;  // equal rational values
  return std::pair(xa, xq) < std::pair(ya, yq);
}

std::complex<double> AlgNum::embed() const {
  if (!field_) return {c0_.to_double(), 0.0};
  double a = static_cast<double>(field_->a);
  double q = static_cast<double>(field_->q);
  std::complex<double> alpha(a / 2.0, std::sqrt(4.0 * q - a * a) / 2.0);
  return c0_.to_double() + c1_.to_double() * alpha;
}

std::string AlgNum::str() const {
  if (!field_) return c0_.str();
  return "(" + c0_.str() + ") + (" + c1_.str() + ")*alpha[" + field_->str() + "]";
}

}  // namespace stackzeta
