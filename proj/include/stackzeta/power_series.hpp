#ifndef STACKZETA_POWER_SERIES_HPP
#define STACKZETA_POWER_SERIES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "stackzeta/algnum.hpp"

namespace stackzeta {

/// Truncated formal power series with exact coefficients, for t^0..t^order.
/// Binary operations truncate to the smaller of the two orders.
class PowerSeries {
public:
  PowerSeries(int order, std::optional<QuadField> field = std::nullopt);
  explicit PowerSeries(std::vector<AlgNum> coeffs,
                       std::optional<QuadField> field = std::nullopt);

  static PowerSeries one(int order, std::optional<QuadField> field = std::nullopt);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const AlgNum& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  void set_coeff(int k, AlgNum v) { coeffs_.at(static_cast<size_t>(k)) = std::move(v); }
  const std::optional<QuadField>& field() const { return field_; }
  const std::vector<AlgNum>& coeffs() const { return coeffs_; }

  PowerSeries truncate(int new_order) const;

  /// Substitution t -> lambda * t.
  PowerSeries scale_var(const AlgNum& lambda) const;

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend bool operator==(const PowerSeries& f, const PowerSeries& g);
  friend bool operator!=(const PowerSeries& f, const PowerSeries& g) { return !(f == g); }

private:
  std::optional<QuadField> field_;
  std::vector<AlgNum> coeffs_;
};

/// Multiplicative inverse; requires nonzero constant term.
PowerSeries ps_inv(const PowerSeries& f);

/// log(f) = sum_{m>=1} (-1)^(m+1) (f-1)^m / m; requires constant term 1.
PowerSeries ps_log(const PowerSeries& f);

/// exp(g) = sum_{m>=0} g^m / m!; requires constant term 0.
PowerSeries ps_exp(const PowerSeries& g);

/// One factor (1 - gamma*t)^e of an Euler-type product.
struct Factor {
  WeilNum gamma;
  int exponent;  // +1 or -1
};

/// Ordered, possibly unbounded sequence of factors (1 - gamma*t)^e. Infinite
/// streams must satisfy weight(gamma) < 0 so partial products converge term
/// by term.
class FactorStream {
public:
  /// at(i) yields the i-th factor (0-based) or nullopt past the end.
  explicit FactorStream(std::function<std::optional<Factor>(std::size_t)> at)
      : at_(std::move(at)) {}

  static FactorStream from_vector(std::vector<Factor> factors);

  /// The factors of 1/((1-t/q)(1-t/q^2)...): gamma_n = q^(-n-1), e = -1.
  static FactorStream bgm(long q);

  std::optional<Factor> at(std::size_t i) const { return at_(i); }

private:
  std::function<std::optional<Factor>(std::size_t)> at_;
};

/// Expansion of (1 - gamma*t)^e to the given order.
PowerSeries ps_geom_factor(const WeilNum& gamma, int exponent, int order,
                           std::optional<QuadField> field = std::nullopt);

/// Exact product of the first `depth` factors of the stream (fewer if the
/// stream terminates earlier), truncated at `order`. Factor order is the
/// stream order, so results are reproducible byte for byte.
PowerSeries ps_partial_product(const FactorStream& s, std::size_t depth, int order,
                               std::optional<QuadField> field = std::nullopt);

}  // namespace stackzeta

#endif
