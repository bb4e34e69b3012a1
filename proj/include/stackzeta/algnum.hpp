#ifndef STACKZETA_ALGNUM_HPP
#define STACKZETA_ALGNUM_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "stackzeta/rational.hpp"

namespace stackzeta {

struct FieldMismatchError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The quadratic field Q[x]/(x^2 - a x + q). The discriminant a^2 - 4q must be
/// negative, so the polynomial is irreducible and both roots have absolute
/// value q^(1/2).
struct QuadField {
  long a;
  long q;

  QuadField(long a_, long q_) : a(a_), q(q_) {
    if (!is_prime_power(q)) throw std::domain_error("QuadField: q must be a prime power");
    if (a * a - 4 * q >= 0)
      throw std::domain_error("QuadField: discriminant a^2-4q must be negative");
  }

  friend bool operator==(const QuadField& x, const QuadField& y) {
    return x.a == y.a && x.q == y.q;
  }
  friend bool operator!=(const QuadField& x, const QuadField& y) { return !(x == y); }

  std::string str() const;  // "x^2-<a>x+<q>"
};

/// Element of Q or of a fixed quadratic field, stored as c0 + c1*alpha on the
/// basis {1, alpha}. Rational elements have no field tag and c1 = 0.
class AlgNum {
public:
  AlgNum() : c0_(0), c1_(0) {}
  AlgNum(Rat r) : c0_(std::move(r)), c1_(0) {}
  AlgNum(long n) : c0_(n), c1_(0) {}
  AlgNum(QuadField f, Rat c0, Rat c1)
      : field_(f), c0_(std::move(c0)), c1_(std::move(c1)) {}

  /// The root alpha of x^2 - a x + q.
  static AlgNum generator(const QuadField& f) { return AlgNum(f, Rat(0), Rat(1)); }

  const std::optional<QuadField>& field() const { return field_; }
  const Rat& c0() const { return c0_; }
  const Rat& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  AlgNum operator-() const { return AlgNum(field_, -c0_, -c1_); }
  friend AlgNum operator+(const AlgNum& x, const AlgNum& y);
  friend AlgNum operator-(const AlgNum& x, const AlgNum& y);
  friend AlgNum operator*(const AlgNum& x, const AlgNum& y);
  friend AlgNum operator/(const AlgNum& x, const AlgNum& y) { return x * y.inverse(); }

  AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
  AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
  AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
  AlgNum& operator/=(const AlgNum& o) { return *this = *this / o; }

  AlgNum inverse() const;

  /// Galois conjugation alpha -> a - alpha (identity on rationals).
  AlgNum conj() const;

  /// The value as a Rat exactly when c1 = 0.
  std::optional<Rat> is_rational() const {
    if (c1_.is_zero()) return c0_;
    return std::nullopt;
  }

  AlgNum pow(long e) const;

  friend bool operator==(const AlgNum& x, const AlgNum& y);
  friend bool operator!=(const AlgNum& x, const AlgNum& y) { return !(x == y); }

  /// Total order (field tag, then c0, c1); used for sorting multisets.
  friend bool operator<(const AlgNum& x, const AlgNum& y);

  /// Complex embedding with Im(alpha) > 0. Diagnostics only, never feeds back
  /// into exact computations.
  std::complex<double> embed() const;

  std::string str() const;

private:
  AlgNum(std::optional<QuadField> f, Rat c0, Rat c1)
      : field_(f), c0_(std::move(c0)), c1_(std::move(c1)) {}

  std::optional<QuadField> field_;
  Rat c0_, c1_;
};

/// Checks field compatibility of two operands and returns the common field
/// (rationals coerce into any quadratic field).
std::optional<QuadField> common_field(const AlgNum& x, const AlgNum& y);

/// Algebraic number tagged with an exact rational weight w: every conjugate
/// has absolute value q^(w/2). Weights are assigned from generator weights
/// (q -> 2, alpha, beta -> 1) and propagated algebraically.
struct WeilNum {
  AlgNum value;
  Rat weight;

  WeilNum() : value(Rat(1)), weight(0) {}
  WeilNum(AlgNum v, Rat w) : value(std::move(v)), weight(std::move(w)) {}

  /// q^e, weight 2e.
  static WeilNum q_power(long q, long e) {
    return WeilNum(AlgNum(stackzeta::pow(Rat(q), e)), Rat(2 * e));
  }
  /// The generator alpha of the field, weight 1.
  static WeilNum root(const QuadField& f) { return WeilNum(AlgNum::generator(f), Rat(1)); }
  /// The conjugate root beta = a - alpha, weight 1.
  static WeilNum conj_root(const QuadField& f) {
    return WeilNum(AlgNum::generator(f).conj(), Rat(1));
  }

  WeilNum inverse() const { return WeilNum(value.inverse(), -weight); }
  WeilNum pow(long e) const { return WeilNum(value.pow(e), weight * Rat(e)); }

  friend WeilNum operator*(const WeilNum& x, const WeilNum& y) {
    return WeilNum(x.value * y.value, x.weight + y.weight);
  }

  friend bool operator==(const WeilNum& x, const WeilNum& y) {
    return x.value == y.value && x.weight == y.weight;
  }
  friend bool operator<(const WeilNum& x, const WeilNum& y) {
    if (x.value < y.value) return true;
    if (y.value < x.value) return false;
    return x.weight < y.weight;
  }
};

}  // namespace stackzeta

#endif
