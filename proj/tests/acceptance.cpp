// Acceptance gate: one line of output per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <vector>

#include "stackzeta/zeta.hpp"
#include "support/group_zoo.hpp"

using namespace stackzeta;
using stackzeta::testing::all_automorphisms;
using stackzeta::testing::group_zoo;

namespace {

int failures = 0;

void run(int id, const char* title, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  const char* error = nullptr;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[%s] %d. %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", id, title,
              static_cast<long long>(ms), error ? " — " : "", error ? error : "");
  if (!ok) ++failures;
}

Rat rc(const PowerSeries& f, int k) { return *f.coeff(k).is_rational(); }

bool criterion_trace_finite() {
  for (const auto& [name, g] : group_zoo()) {
    for (const auto& sigma : all_automorphisms(g)) {
      GroupTable t = g;
      t.sigma = sigma;
      t.validate();
      StackDescriptor stack = make_bfinite(2, t);
      auto spec = spectrum_of(stack, 1);
      if (!spec) return false;
      for (int v = 1; v <= 6; ++v) {
        if (cv(stack, v) != Rat(1)) return false;
        if (partial_trace(*spec, v) != Rat(1)) return false;
      }
    }
  }
  return true;
}

bool criterion_bgm_product() {
  const int N = 16, D = 64;
  for (long q : {2L, 3L, 5L}) {
    PowerSeries exact = zeta_from_counts(make_bgm(q), N);
    PowerSeries partial = ps_partial_product(FactorStream::bgm(q), D, N);
    Rat bound = pow(Rat(q), -48);
    for (int k = 0; k <= N; ++k) {
      Rat gap = rc(exact, k) - rc(partial, k);
      if (abs(gap) >= bound) return false;
    }
    PowerSeries deeper = ps_partial_product(FactorStream::bgm(q), D + 1, N);
    Rat g1 = rc(exact, 1) - rc(partial, 1);
    Rat g2 = rc(exact, 1) - rc(deeper, 1);
    if (g1 != g2 * Rat(q)) return false;
  }
  return true;
}

bool criterion_bgl2_multiplicities() {
  const long q = 2;
  BorelData b = borel_data_gl(2, q);
  FrobSpectrum s = borel_spectrum(b, q, 20);
  // independent oracle: t^(2r) coefficient of 1/((1-x^2)(1-x^4))
  const int order = 40;
  PowerSeries f2(order), f4(order);
  f2.set_coeff(0, AlgNum(1));
  f2.set_coeff(2, AlgNum(-1));
  f4.set_coeff(0, AlgNum(1));
  f4.set_coeff(4, AlgNum(-1));
  PowerSeries gf = ps_inv(f2) * ps_inv(f4);
  for (int n = 0; n <= 20; ++n) {
    const auto* evs = s.at(-8 - 2 * n);
    if (!evs || evs->size() != size_t(n / 2 + 1)) return false;
    if (Rat(long(enumerate_partitions({2, 4}, 2 * n).size())) != rc(gf, 2 * n))
      return false;
    if (Rat(long(evs->size())) != rc(gf, 2 * n)) return false;
    for (const auto& ev : *evs)
      if (ev.value.is_rational() != pow(Rat(q), -(n + 4))) return false;
  }
  return true;
}

bool criterion_be() {
  const long qs[] = {5, 2, 7};
  const long as[] = {2, 1, 3};
  for (int k = 0; k < 3; ++k) {
    QuadField f(as[k], qs[k]);
    FrobSpectrum s = abelian_spectrum(f, 40);
    for (const auto& [deg, evs] : s.entries()) (void)charpoly(s, deg);
    StackDescriptor stack = make_belliptic(qs[k], as[k]);
    if (verify_trace_formula(stack, 4, 32).status != CheckStatus::Pass) return false;
    WeightAuditReport audit = weight_audit(s, Rat(-1), Rat(0), false);
    if (!audit.pass) return false;
    for (const auto& e : audit.entries)
      if (!e.sharp || e.min_slack != Rat(0)) return false;
    FunceqParams p;
    p.q = qs[k];
    p.a = as[k];
    p.order = 12;
    if (functional_equation_check(FunceqKind::EllipticScaling, p).status !=
        CheckStatus::Pass)
      return false;
  }
  return true;
}

bool criterion_rationality() {
  const int N = 20;
  const StackDescriptor rational_stacks[] = {
      make_point(3), make_gm(3), make_p1(2),
      make_bfinite(2, GroupTable::symmetric3()),
      make_bfinite(3, GroupTable::dihedral4())};
  for (const auto& s : rational_stacks) {
    auto r = reconstruct_rational(zeta_from_counts(s, N), 4);
    if (!r) return false;
    if (r->expand(N) != zeta_from_counts(s, N)) return false;
  }
  const StackDescriptor irrational_stacks[] = {make_bgm(2), make_belliptic(5, 2)};
  for (const auto& s : irrational_stacks)
    for (int dmax = 1; dmax <= 6; ++dmax)
      if (reconstruct_rational(zeta_from_counts(s, N), dmax)) return false;
  return true;
}

bool criterion_funceq_p1() {
  for (long q : {2L, 3L, 5L}) {
    FunceqParams p;
    p.q = q;
    p.stack = make_p1(q);
    p.d = 1;
    p.order = 20;
    auto rep = functional_equation_check(FunceqKind::ProperSmooth, p);
    if (rep.status != CheckStatus::Pass) return false;
    if (rep.witness.at("sign").get<std::string>() != "+") return false;
    if (rep.witness.at("chi").get<int>() != 2) return false;
  }
  return true;
}

bool criterion_weight_audit() {
  const int depth = 40;
  const long q = 2;
  struct Entry {
    FrobSpectrum spec;
    Rat dim;
    bool affine;
  };
  QuadField f(1, 2);
  const Entry entries[] = {
      {borel_spectrum(borel_data_gm(q), q, depth), Rat(-1), true},
      {borel_spectrum(borel_data_norm_torus(q), q, depth), Rat(-1), true},
      {borel_spectrum(borel_data_gl(2, q), q, depth), Rat(-4), true},
      {borel_spectrum(borel_data_gl(3, q), q, depth), Rat(-9), true},
      {abelian_spectrum(f, depth), Rat(-1), false},
  };
  for (const auto& e : entries) {
    if (!weight_audit(e.spec, e.dim, Rat(0), false).pass) return false;
    if (e.affine && !weight_audit(e.spec, e.dim, Rat(0), true).pass) return false;
  }
  return true;
}

bool criterion_existence() {
  if (point_existence(ExistenceKind::FormOfBGm, 2).verdict !=
      ExistenceVerdict::Inconclusive)
    return false;
  for (long q : {3L, 4L, 5L, 7L, 8L, 9L})
    if (point_existence(ExistenceKind::FormOfBGm, q).verdict != ExistenceVerdict::Exists)
      return false;
  for (long q : {2L, 3L})
    if (point_existence(ExistenceKind::QuotientP1Gm, q).verdict !=
        ExistenceVerdict::Inconclusive)
      return false;
  for (long q : {4L, 5L})
    if (point_existence(ExistenceKind::QuotientP1Gm, q).verdict !=
        ExistenceVerdict::Exists)
      return false;
  for (long q : {7L, 8L, 9L, 11L, 13L})
    if (point_existence(ExistenceKind::QuotientP1Gm, q).verdict !=
        ExistenceVerdict::ExistsInOpenOrbit)
      return false;
  return true;
}

bool criterion_property_suites() {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  auto random_series = [&](Rat constant) {
    PowerSeries f(12);
    f.set_coeff(0, AlgNum(constant));
    for (int k = 1; k <= 12; ++k) f.set_coeff(k, AlgNum(Rat(num(rng), den(rng))));
    return f;
  };
  for (int iter = 0; iter < 200; ++iter) {
    PowerSeries f = random_series(Rat(1));
    PowerSeries g = random_series(Rat(1));
    if (ps_exp(ps_log(f)) != f) return false;
    if (ps_log(f * g) != ps_log(f) + ps_log(g)) return false;
  }

  for (const auto& [name, g] : group_zoo())
    for (int v = 1; v <= 6; ++v)
      if (count_bg_finite(g, v) != Rat(1)) return false;

  QuadField f(2, 5);
  auto random_elem = [&] {
    return AlgNum(f, Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  };
  for (int iter = 0; iter < 1000; ++iter) {
    AlgNum x = random_elem(), y = random_elem(), z = random_elem();
    if ((x + y) * z != x * z + y * z) return false;
    if ((x * y) * z != x * (y * z)) return false;
    if (x.conj().conj() != x) return false;
    if ((x * y).conj() != x.conj() * y.conj()) return false;
    if (!x.is_zero() && x * x.inverse() != AlgNum(1)) return false;
  }

  const int depth = 20;
  if (!poincare_check(borel_spectrum(borel_data_gm(3), 3, depth),
                      borel_ordinary_spectrum(borel_data_gm(3), depth), 3, 1, depth)
           .pass)
    return false;
  if (!poincare_check(borel_spectrum(borel_data_gl(2, 2), 2, depth),
                      borel_ordinary_spectrum(borel_data_gl(2, 2), depth), 2, 4, depth)
           .pass)
    return false;
  if (!poincare_check(abelian_spectrum(f, depth), abelian_ordinary_spectrum(f, depth), 5,
                      1, depth)
           .pass)
    return false;
  return true;
}

}  // namespace

int main() {
  run(1, "trace formula, finite case: all groups of order <= 8, all sigma, v <= 6",
      criterion_trace_finite);
  run(2, "BGm product identity: gap < q^-48 at D=64, t^1 gap ratio exactly q",
      criterion_bgm_product);
  run(3, "BGL2 multiplicities: floor(n/2)+1 vs generating-function oracle, n <= 20",
      criterion_bgl2_multiplicities);
  run(4, "BE: charpoly rational to D=40, trace gap, sharp weights, functional equations",
      criterion_be);
  run(5, "rationality detection with exact held-out validation",
      criterion_rationality);
  run(6, "proper-smooth functional equation on P1: sign +, chi = 2",
      criterion_funceq_p1);
  run(7, "weight theorem audit: five spectra to depth 40, zero violations",
      criterion_weight_audit);
  run(8, "point existence verdict tables", criterion_existence);
  run(9, "property suites: exp/log, orbit-stabilizer, nf axioms, Poincare duality",
      criterion_property_suites);
  return failures == 0 ? 0 : 1;
}
