#include "stackzeta/power_series.hpp"

#include <memory>
#include <stdexcept>

namespace stackzeta {

namespace {

std::optional<QuadField> merge_fields(const std::optional<QuadField>& a,
                                      const std::optional<QuadField>& b) {
  if (!a) return b;
  if (!b) return a;
  if (*a != *b)
    throw FieldMismatchError("PowerSeries: series live in different quadratic fields");
  return a;
}

}  // namespace

PowerSeries::PowerSeries(int order, std::optional<QuadField> field)
    : field_(field), coeffs_(static_cast<size_t>(order) + 1, AlgNum(Rat(0))) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
}

PowerSeries::PowerSeries(std::vector<AlgNum> coeffs, std::optional<QuadField> field)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
  for (const auto& c : coeffs_)
    if (c.field()) field_ = merge_fields(field_, c.field());
}

PowerSeries PowerSeries::one(int order, std::optional<QuadField> field) {
  PowerSeries f(order, field);
  f.coeffs_[0] = AlgNum(Rat(1));
  return f;
}

PowerSeries PowerSeries::truncate(int new_order) const {
  if (new_order >= order()) return *this;
  std::vector<AlgNum> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
  return PowerSeries(std::move(c), field_);
}

PowerSeries PowerSeries::scale_var(const AlgNum& lambda) const {
  PowerSeries r(order(), merge_fields(field_, lambda.field()));
  AlgNum p(Rat(1));
  for (int k = 0; k <= order(); ++k) {
    r.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)] * p;
    p *= lambda;
  }
  return r;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  PowerSeries r(n, merge_fields(f.field_, g.field_));
  for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<size_t>(k)] = f.coeff(k) + g.coeff(k);
  return r;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  PowerSeries r(n, merge_fields(f.field_, g.field_));
  for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<size_t>(k)] = f.coeff(k) - g.coeff(k);
  return r;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  PowerSeries r(n, merge_fields(f.field_, g.field_));
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g.coeff(j).is_zero()) continue;
      r.coeffs_[static_cast<size_t>(i + j)] += f.coeff(i) * g.coeff(j);
    }
  }
  return r;
}

bool operator==(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  for (int k = 0; k <= n; ++k)
    if (f.coeff(k) != g.coeff(k)) return false;
  return true;
}

PowerSeries ps_inv(const PowerSeries& f) {
  if (f.coeff(0).is_zero())
    throw std::domain_error("ps_inv: constant term must be nonzero");
  int n = f.order();
  PowerSeries r(n, f.field());
  AlgNum c0inv = f.coeff(0).inverse();
  r.set_coeff(0, c0inv);
  for (int k = 1; k <= n; ++k) {
    AlgNum s(Rat(0));
    for (int j = 1; j <= k; ++j) s += f.coeff(j) * r.coeff(k - j);
    r.set_coeff(k, -(c0inv * s));
  }
  return r;
}

PowerSeries ps_log(const PowerSeries& f) {
  if (f.coeff(0) != AlgNum(Rat(1)))
    throw std::domain_error("ps_log: constant term must be 1");
  int n = f.order();
  PowerSeries g = f - PowerSeries::one(n, f.field());
  PowerSeries acc(n, f.field());
  PowerSeries gp = PowerSeries::one(n, f.field());
  for (int m = 1; m <= n; ++m) {
    gp = gp * g;
    Rat c = Rat((m % 2 == 1) ? 1 : -1, m);
    for (int k = m; k <= n; ++k)
      acc.set_coeff(k, acc.coeff(k) + AlgNum(c) * gp.coeff(k));
  }
  return acc;
}

PowerSeries ps_exp(const PowerSeries& g) {
  if (!g.coeff(0).is_zero())
    throw std::domain_error("ps_exp: constant term must be 0");
  int n = g.order();
  PowerSeries acc = PowerSeries::one(n, g.field());
  PowerSeries gp = PowerSeries::one(n, g.field());
  Rat fact(1);
  for (int m = 1; m <= n; ++m) {
    gp = gp * g;
    fact *= Rat(m);
    Rat c = Rat(1) / fact;
    for (int k = m; k <= n; ++k)
      acc.set_coeff(k, acc.coeff(k) + AlgNum(c) * gp.coeff(k));
  }
  return acc;
}

FactorStream FactorStream::from_vector(std::vector<Factor> factors) {
  auto data = std::make_shared<std::vector<Factor>>(std::move(factors));
  return FactorStream([data](std::size_t i) -> std::optional<Factor> {
    if (i >= data->size()) return std::nullopt;
    return (*data)[i];
  });
}

FactorStream FactorStream::bgm(long q) {
  return FactorStream([q](std::size_t i) -> std::optional<Factor> {
    return Factor{WeilNum::q_power(q, -static_cast<long>(i) - 1), -1};
  });
}

PowerSeries ps_geom_factor(const WeilNum& gamma, int exponent, int order,
                           std::optional<QuadField> field) {
  if (exponent != 1 && exponent != -1)
    throw std::invalid_argument("ps_geom_factor: exponent must be +1 or -1");
  auto f = merge_fields(field, gamma.value.field());
  PowerSeries r = PowerSeries::one(order, f);
  if (gamma.value.is_zero()) return r;
  if (exponent == 1) {
    if (order >= 1) r.set_coeff(1, -gamma.value);
    return r;
  }
  AlgNum p(Rat(1));
  for (int k = 1; k <= order; ++k) {
    p *= gamma.value;
    r.set_coeff(k, p);
  }
  return r;
}

PowerSeries ps_partial_product(const FactorStream& s, std::size_t depth, int order,
                               std::optional<QuadField> field) {
  PowerSeries acc = PowerSeries::one(order, field);
  for (std::size_t i = 0; i < depth; ++i) {
    auto fac = s.at(i);
    if (!fac) break;
    acc = acc * ps_geom_factor(fac->gamma, fac->exponent, order, field);
  }
  return acc;
}

}  // namespace stackzeta
