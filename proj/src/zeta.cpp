#include "stackzeta/zeta.hpp"

#include <algorithm>

namespace stackzeta {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::string to_string(ExistenceVerdict v) {
  switch (v) {
    case ExistenceVerdict::Exists: return "EXISTS";
    case ExistenceVerdict::ExistsInOpenOrbit: return "EXISTS_IN_OPEN_ORBIT";
    case ExistenceVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

PowerSeries zeta_from_counts(const StackDescriptor& stack, int order) {
  if (order < 1) throw std::domain_error("zeta_from_counts: order must be >= 1");
  PowerSeries log_z(order);
  for (int v = 1; v <= order; ++v)
    log_z.set_coeff(v, AlgNum(cv(stack, v) / Rat(v)));
  return ps_exp(log_z);
}

std::vector<Factor> spectrum_factors(const FrobSpectrum& s) {
  std::vector<Factor> out;
  const auto& m = s.entries();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    int n = it->first;
    int e = (n % 2 == 0) ? -1 : +1;  // exponent (-1)^(n+1)
    for (const auto& ev : it->second) out.push_back(Factor{ev, e});
  }
  return out;
}

PowerSeries zeta_from_spectrum(const FrobSpectrum& s, int order) {
  if (s.truncated()) {
    for (const auto& [deg, evs] : s.entries())
      if (deg < 0)
        for (const auto& ev : evs)
          if (ev.weight >= Rat(0))
            throw StreamDivergenceError(
                "zeta_from_spectrum: factor of weight >= 0 in an unbounded spectrum");
  }
  auto factors = spectrum_factors(s);
  return ps_partial_product(FactorStream::from_vector(std::move(factors)),
                            static_cast<std::size_t>(-1), order);
}

ZetaResult compute_zeta(const StackDescriptor& stack, int order, int depth) {
  ZetaResult r{stack, order, depth, zeta_from_counts(stack, order), std::nullopt, {}};
  if (auto spec = spectrum_of(stack, depth)) {
    r.spectrum_side = zeta_from_spectrum(*spec, order);
    for (int k = 0; k <= order; ++k) {
      AlgNum diff = r.counts_side.coeff(k) - r.spectrum_side->coeff(k);
      auto rat = diff.is_rational();
      if (!rat)
        throw GaloisInstabilityError("compute_zeta: non-rational coefficient gap");
      r.gap.push_back(*rat);
    }
  }
  return r;
}

Rat partial_trace(const FrobSpectrum& s, int v) {
  AlgNum acc(Rat(0));
  for (const auto& [deg, evs] : s.entries()) {
    AlgNum sum(Rat(0));
    for (const auto& ev : evs) sum += ev.value.pow(v);
    acc += (deg % 2 == 0) ? sum : -sum;
  }
  auto r = acc.is_rational();
  if (!r)
    throw GaloisInstabilityError("partial_trace: alternating trace is not rational");
  return *r;
}

VerificationReport verify_trace_formula(const StackDescriptor& stack, int V, int depth) {
  VerificationReport rep{"trace", stack.name(), CheckStatus::Pass, {}};
  auto spec = spectrum_of(stack, depth);
  if (!spec) {
    rep.status = CheckStatus::NotApplicable;
    rep.witness["note"] = "no materialized spectrum for this stack";
    return rep;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!spec->truncated()) {
    for (int v = 1; v <= V; ++v) {
      Rat lhs = cv(stack, v);
      Rat rhs = partial_trace(*spec, v);
      nlohmann::ordered_json row;
      row["v"] = v;
      row["cv"] = lhs.str();
      row["trace"] = rhs.str();
      rows.push_back(row);
      if (lhs != rhs) rep.status = CheckStatus::Fail;
    }
  } else {
    auto spec2 = spectrum_of(stack, 2 * depth);
    Rat tail_bound = pow(Rat(1, stack.q()), 2L * depth);  // (q^-D)^2 vs gap^2
    for (int v = 1; v <= V; ++v) {
      Rat lhs = cv(stack, v);
      Rat gap1 = abs(lhs - partial_trace(*spec, v));
      Rat gap2 = abs(lhs - partial_trace(*spec2, v));
      bool shrink = gap2 < gap1 || (gap1 == Rat(0) && gap2 == Rat(0));
      bool small = gap2 * gap2 < tail_bound;
      nlohmann::ordered_json row;
      row["v"] = v;
      row["cv"] = lhs.str();
      row["gap_at_depth"] = gap1.str();
      row["gap_at_double_depth"] = gap2.str();
      rows.push_back(row);
      if (!(shrink && small)) rep.status = CheckStatus::Fail;
    }
  }
  rep.witness["rows"] = rows;
  return rep;
}

// ---- polynomial helpers over Rat --------------------------------------------

namespace {

using Poly = std::vector<Rat>;  // coefficient k is the t^k coefficient

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == Rat(0)) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_scale(Poly p, const Rat& c) {
  for (auto& x : p) x *= c;
  return p;
}

bool poly_eq(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  return x == y;
}

Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == Rat(0))) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.size() == 1 && a[0] == Rat(0)) break;
    if (a.size() >= b.size() && a.back() == Rat(0)) trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!(b.size() == 1 && b[0] == Rat(0))) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // monic
  if (!(a.size() == 1 && a[0] == Rat(0))) a = poly_scale(a, Rat(1) / a.back());
  return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  Poly r = a;
  trim(r);
  while (r.size() >= b.size() && !(r.size() == 1 && r[0] == Rat(0))) {
    Rat c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return q;
}

std::vector<Rat> rational_coeffs(const PowerSeries& f) {
  std::vector<Rat> c;
  c.reserve(static_cast<size_t>(f.order()) + 1);
  for (int k = 0; k <= f.order(); ++k) {
    auto r = f.coeff(k).is_rational();
    if (!r)
      throw std::domain_error("reconstruct_rational: series has non-rational coefficients");
    c.push_back(*r);
  }
  return c;
}

// Reduced row echelon solve of the k x k system A b = rhs; returns nullopt if
// inconsistent. Free variables are set to 0.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> aug, int k) {
  int row = 0;
  std::vector<int> pivot_col(static_cast<size_t>(k), -1);
  for (int col = 0; col < k && row < k; ++col) {
    int piv = -1;
    for (int r = row; r < k; ++r)
      if (!aug[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(aug[static_cast<size_t>(row)], aug[static_cast<size_t>(piv)]);
    Rat inv = Rat(1) / aug[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int c = col; c <= k; ++c) aug[static_cast<size_t>(row)][static_cast<size_t>(c)] *= inv;
    for (int r = 0; r < k; ++r) {
      if (r == row) continue;
      Rat f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = col; c <= k; ++c)
        aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * aug[static_cast<size_t>(row)][static_cast<size_t>(c)];
    }
    pivot_col[static_cast<size_t>(row)] = col;
    ++row;
  }
  for (int r = row; r < k; ++r)
    if (!aug[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) return std::nullopt;
  std::vector<Rat> x(static_cast<size_t>(k), Rat(0));
  for (int r = 0; r < row; ++r)
    x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
        aug[static_cast<size_t>(r)][static_cast<size_t>(k)];
  return x;
}

}  // namespace

PowerSeries RationalFn::expand(int order) const {
  PowerSeries n(order), d(order);
  for (size_t k = 0; k < num.size() && k <= static_cast<size_t>(order); ++k)
    n.set_coeff(static_cast<int>(k), AlgNum(num[k]));
  for (size_t k = 0; k < den.size() && k <= static_cast<size_t>(order); ++k)
    d.set_coeff(static_cast<int>(k), AlgNum(den[k]));
  return n * ps_inv(d);
}

std::optional<RationalFn> reconstruct_rational(const PowerSeries& f, int dmax) {
  if (dmax < 0) throw std::domain_error("reconstruct_rational: dmax must be >= 0");
  if (f.order() < 2 * dmax + 4)
    throw std::domain_error("reconstruct_rational: order must be >= 2*dmax + 4");
  std::vector<Rat> c = rational_coeffs(f);
  int N = f.order();

  for (int k = 0; k <= dmax; ++k) {
    std::vector<Rat> b;
    if (k == 0) {
      b = {};
    } else {
      // equations c_j = sum_i b_i c_{j-i}, j = dmax+1 .. dmax+k
      std::vector<std::vector<Rat>> aug(
          static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
      for (int e = 0; e < k; ++e) {
        int j = dmax + 1 + e;
        for (int i = 1; i <= k; ++i)
          aug[static_cast<size_t>(e)][static_cast<size_t>(i - 1)] = c[static_cast<size_t>(j - i)];
        aug[static_cast<size_t>(e)][static_cast<size_t>(k)] = c[static_cast<size_t>(j)];
      }
      auto sol = solve_linear(std::move(aug), k);
      if (!sol) continue;
      b = *sol;
    }
    // held-out validation on every remaining coefficient
    bool ok = true;
    for (int j = dmax + 1; j <= N && ok; ++j) {
      Rat pred(0);
      for (int i = 1; i <= k && i <= j; ++i)
        pred += b[static_cast<size_t>(i - 1)] * c[static_cast<size_t>(j - i)];
      ok = c[static_cast<size_t>(j)] == pred;
    }
    if (!ok) continue;

    Poly den(static_cast<size_t>(k) + 1, Rat(0));
    den[0] = Rat(1);
    for (int i = 1; i <= k; ++i) den[static_cast<size_t>(i)] = -b[static_cast<size_t>(i - 1)];
    trim(den);
    Poly num(static_cast<size_t>(dmax) + 1, Rat(0));
    for (int j = 0; j <= dmax; ++j) {
      Rat s(0);
      for (size_t i = 0; i < den.size() && static_cast<int>(i) <= j; ++i)
        s += den[i] * c[static_cast<size_t>(j - static_cast<int>(i))];
      num[static_cast<size_t>(j)] = s;
    }
    trim(num);

    Poly g = poly_gcd(num, den);
    if (g.size() > 1) {
      num = poly_divexact(num, g);
      den = poly_divexact(den, g);
    }
    Rat d0inv = Rat(1) / den[0];
    num = poly_scale(num, d0inv);
    den = poly_scale(den, d0inv);

    RationalFn fn{num, den};
    if (fn.expand(N) != f) continue;  // exact agreement on every coefficient
    return fn;
  }
  return std::nullopt;
}

// ---- functional equations ---------------------------------------------------

namespace {

nlohmann::ordered_json series_mismatch_witness(const PowerSeries& lhs, const PowerSeries& rhs) {
  int n = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= n; ++k)
    if (lhs.coeff(k) != rhs.coeff(k)) {
      nlohmann::ordered_json w;
      w["first_mismatch_at"] = k;
      w["lhs"] = lhs.coeff(k).str();
      w["rhs"] = rhs.coeff(k).str();
      return w;
    }
  return nlohmann::ordered_json::object();
}

void check_series_identity(VerificationReport& rep, const std::string& label,
                           const PowerSeries& lhs, const PowerSeries& rhs) {
  if (lhs != rhs) {
    rep.status = CheckStatus::Fail;
    rep.witness[label] = series_mismatch_witness(lhs, rhs);
  } else {
    rep.witness[label] = "exact to order " + std::to_string(std::min(lhs.order(), rhs.order()));
  }
}

PowerSeries one_minus(const AlgNum& gamma, int order) {
  PowerSeries p = PowerSeries::one(order, gamma.field());
  if (order >= 1) p.set_coeff(1, -gamma);
  return p;
}

// exp(sum coeff_fn(v) t^v / v)
PowerSeries exp_log_series(int order, const std::function<AlgNum(int)>& coeff_fn,
                           std::optional<QuadField> field = std::nullopt) {
  PowerSeries log_z(order, field);
  for (int v = 1; v <= order; ++v) log_z.set_coeff(v, coeff_fn(v) * AlgNum(Rat(1, v)));
  return ps_exp(log_z);
}

}  // namespace

VerificationReport functional_equation_check(FunceqKind kind, const FunceqParams& p) {
  int N = p.order;
  switch (kind) {
    case FunceqKind::GmScaling: {
      VerificationReport rep{"funceq", "BGm", CheckStatus::Pass, {}};
      PowerSeries z = zeta_from_counts(make_bgm(p.q), N);
      check_series_identity(rep, "(1-t)*Z(qt) = Z(t)",
                            one_minus(AlgNum(Rat(1)), N) * z.scale_var(AlgNum(Rat(p.q))), z);
      return rep;
    }
    case FunceqKind::GL2Scaling: {
      VerificationReport rep{"funceq", "BGL2", CheckStatus::Pass, {}};
      PowerSeries z = zeta_from_counts(make_bgl(2, p.q), N);
      // log Z_1 has t^v coefficient 1 / (v q^v (q^{2v} - 1))
      PowerSeries z1 = exp_log_series(N, [&](int v) {
        mpz_class qv = ipow(p.q, static_cast<unsigned long>(v));
        return AlgNum(Rat(mpz_class(1), qv * (qv * qv - 1)));
      });
      check_series_identity(rep, "Z(qt) = Z(t)*Z1(t)",
                            z.scale_var(AlgNum(Rat(p.q))), z * z1);
      check_series_identity(rep, "(1-t/q)*Z1(q^2 t) = Z1(t)",
                            one_minus(AlgNum(Rat(1, p.q)), N) *
                                z1.scale_var(AlgNum(Rat(p.q * p.q))),
                            z1);
      return rep;
    }
    case FunceqKind::EllipticScaling: {
      VerificationReport rep{"funceq", "BE", CheckStatus::Pass, {}};
      QuadField f(p.a, p.q);
      AlgNum alpha = AlgNum::generator(f);
      AlgNum beta = alpha.conj();
      PowerSeries z1 = zeta_from_counts(make_belliptic(p.q, p.a), N)
                           .scale_var(AlgNum(Rat(p.q)));
      // log Z_2 has t^v coefficient alpha^v / (v (beta^v - 1))
      PowerSeries z2 = exp_log_series(
          N,
          [&](int v) {
            return alpha.pow(v) * (beta.pow(v) - AlgNum(Rat(1))).inverse();
          },
          f);
      check_series_identity(rep, "(1-alpha*t)*Z1(alpha*t) = Z1(t)*Z2(t)",
                            one_minus(alpha, N) * z1.scale_var(alpha), z1 * z2);
      check_series_identity(rep, "(1-alpha*t)*Z2(beta*t) = Z2(t)",
                            one_minus(alpha, N) * z2.scale_var(beta), z2);
      return rep;
    }
    case FunceqKind::ProperSmooth: {
      VerificationReport rep{"funceq", p.stack.name(), CheckStatus::Pass, {}};
      int order = std::max(N, 2 * p.dmax + 4);
      PowerSeries z = zeta_from_counts(p.stack, order);
      auto fn = reconstruct_rational(z, p.dmax);
      if (!fn) {
        rep.status = CheckStatus::Fail;
        rep.witness["note"] = "zeta is not rational at dmax <= " + std::to_string(p.dmax);
        return rep;
      }
      int chi = static_cast<int>(fn->den.size()) - static_cast<int>(fn->num.size());
      long dchi = static_cast<long>(p.d) * chi;
      if (dchi % 2 != 0) {
        rep.status = CheckStatus::Fail;
        rep.witness["note"] = "d*chi is odd; q^(d chi / 2) is irrational";
        return rep;
      }
      // P(1/(st)) = t^-deg(P) * sum_k p_k s^-k t^(deg P - k), with s = q^d.
      Rat s = pow(Rat(p.q), p.d);
      auto reflect = [&](const Poly& poly) {
        Poly out(poly.size(), Rat(0));
        size_t deg = poly.size() - 1;
        for (size_t k = 0; k < poly.size(); ++k)
          out[deg - k] = poly[k] * pow(s, -static_cast<long>(k));
        return out;
      };
      // Z(1/(st)) = eps q^(d chi/2) t^chi Z(t) reduces to
      // num^(t) * den(t) = eps * q^(d chi/2) * num(t) * den^(t).
      Poly lhs = poly_mul(reflect(fn->num), fn->den);
      Rat factor = pow(Rat(p.q), dchi / 2);
      Poly rhs_base = poly_mul(fn->num, reflect(fn->den));
      int sign = 0;
      if (poly_eq(lhs, poly_scale(rhs_base, factor))) sign = +1;
      else if (poly_eq(lhs, poly_scale(rhs_base, -factor))) sign = -1;
      rep.witness["chi"] = chi;
      if (sign == 0) {
        rep.status = CheckStatus::Fail;
        rep.witness["note"] = "functional equation fails for both signs";
      } else {
        rep.witness["sign"] = sign > 0 ? "+" : "-";
      }
      return rep;
    }
  }
  throw std::logic_error("functional_equation_check: unknown kind");
}

std::vector<PoleEntry> pole_catalog(const FrobSpectrum& s) {
  std::vector<PoleEntry> out;
  const auto& m = s.entries();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    int n = it->first;
    if (n % 2 != 0) continue;  // poles come from exponent -1, i.e. even degrees
    for (const auto& ev : it->second) {
      if (ev.value.is_zero()) continue;
      WeilNum loc = ev.inverse();
      auto found = std::find_if(out.begin(), out.end(),
                                [&](const PoleEntry& e) { return e.location == loc; });
      if (found == out.end())
        out.push_back(PoleEntry{loc, n, 1});
      else
        ++found->multiplicity;
    }
  }
  return out;
}

PointExistenceResult point_existence(ExistenceKind kind, long q) {
  if (!is_prime_power(q)) throw std::domain_error("point_existence: q must be a prime power");
  if (kind == ExistenceKind::FormOfBGm) {
    // #X(F_q) >= q^-1 - q^-1/(q-1), positive exactly when q != 2
    Rat bound = Rat(1, q) - Rat(1, q * (q - 1));
    Rat c1 = cv(make_bnorm_torus(q), 1);
    auto verdict = bound > Rat(0) ? ExistenceVerdict::Exists : ExistenceVerdict::Inconclusive;
    return PointExistenceResult{kind, q, verdict, bound, Rat(0), c1};
  }
  // [P^1/Gm]: lower bound 1 - 2/(q-1); the two closed orbits take at most
  // 2/(q-1) of the count
  Rat lower = Rat(1) - Rat(2, q - 1);
  Rat cap = Rat(2, q - 1);
  Rat c1 = cv(make_quotient_p1_gm(q), 1);
  ExistenceVerdict verdict = ExistenceVerdict::Inconclusive;
  if (lower > cap) verdict = ExistenceVerdict::ExistsInOpenOrbit;
  else if (lower > Rat(0)) verdict = ExistenceVerdict::Exists;
  return PointExistenceResult{kind, q, verdict, lower, cap, c1};
}

}  // namespace stackzeta
