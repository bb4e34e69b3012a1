#include <doctest.h>

#include <vector>

#include "stackzeta/zeta.hpp"
#include "support/group_zoo.hpp"

using namespace stackzeta;

namespace {

Rat rc(const PowerSeries& f, int k) { return *f.coeff(k).is_rational(); }

PowerSeries expand_rational(std::vector<Rat> num, std::vector<Rat> den, int order) {
  PowerSeries n(order), d(order);
  for (size_t i = 0; i < num.size(); ++i) n.set_coeff(int(i), AlgNum(num[i]));
  for (size_t i = 0; i < den.size(); ++i) d.set_coeff(int(i), AlgNum(den[i]));
  return n * ps_inv(d);
}

}  // namespace

TEST_CASE("zeta_from_counts pinned examples") {
  const int N = 16;
  PowerSeries point = zeta_from_counts(make_point(5), N);
  for (int k = 0; k <= N; ++k) CHECK(rc(point, k) == Rat(1));

  // Gm: (1-t)/(1-qt)
  PowerSeries gm = zeta_from_counts(make_gm(3), N);
  CHECK(gm == expand_rational({Rat(1), Rat(-1)}, {Rat(1), Rat(-3)}, N));

  // B of a finite group: always 1/(1-t)
  for (const auto& [name, g] : stackzeta::testing::group_zoo()) {
    CAPTURE(name);
    PowerSeries z = zeta_from_counts(make_bfinite(2, g), 8);
    for (int k = 0; k <= 8; ++k) CHECK(rc(z, k) == Rat(1));
  }
}

TEST_CASE("zeta multiplicativity over disjoint unions") {
  const int N = 12;
  StackDescriptor a = make_gm(3);
  StackDescriptor b = make_bgm(3);
  PowerSeries za = zeta_from_counts(a, N);
  PowerSeries zb = zeta_from_counts(b, N);
  PowerSeries zu = zeta_from_counts(make_disjoint_union({a, b}), N);
  CHECK(zu == za * zb);
}

TEST_CASE("quotient stack consistency: Z([P1/Gm]) = Z(pt) Z(BGm)^2") {
  const int N = 12;
  for (long q : {2L, 3L, 5L}) {
    PowerSeries lhs = zeta_from_counts(make_quotient_p1_gm(q), N);
    PowerSeries zp = zeta_from_counts(make_point(q), N);
    PowerSeries zb = zeta_from_counts(make_bgm(q), N);
    CHECK(lhs == zp * zb * zb);
  }
}

TEST_CASE("zeta_from_spectrum pinned examples") {
  // BFinite: single degree 0, eigenvalue 1, product exactly 1/(1-t)
  auto s3 = spectrum_of(make_bfinite(2, GroupTable::symmetric3()), 8);
  REQUIRE(s3.has_value());
  PowerSeries z = zeta_from_spectrum(*s3, 8);
  for (int k = 0; k <= 8; ++k) CHECK(rc(z, k) == Rat(1));

  // BGm q=3, two factors (spectrum depth 1), order 1: t coefficient 4/9
  FrobSpectrum bgm = borel_spectrum(borel_data_gm(3), 3, 1);
  PowerSeries p = zeta_from_spectrum(bgm, 1);
  CHECK(rc(p, 1) == Rat(4, 9));
  CHECK(rc(zeta_from_counts(make_bgm(3), 1), 1) - rc(p, 1) == Rat(1, 18));

  // BE factors through degree -4: (1-t/q)^-1 (1-(a/q^2)t+q^-3 t^2)^-1
  QuadField f(2, 5);
  FrobSpectrum be = abelian_spectrum(f, 1);
  PowerSeries zbe = zeta_from_spectrum(be, 6);
  PowerSeries expect =
      expand_rational({Rat(1)}, {Rat(1), Rat(-1, 5)}, 6) *
      expand_rational({Rat(1)}, {Rat(1), Rat(-2, 25), Rat(1, 125)}, 6);
  CHECK(zbe == expect);

  // a truncated spectrum with a non-shrinking factor diverges
  FrobSpectrum bad(Rat(-1), -2, 0, true);
  bad.add(-2, WeilNum::q_power(2, 1));
  bad.sort_entries();
  CHECK_THROWS_AS(zeta_from_spectrum(bad, 4), StreamDivergenceError);
}

TEST_CASE("partial_trace matches the geometric partial sum for BGm") {
  const long q = 3;
  for (int D : {4, 8}) {
    FrobSpectrum s = borel_spectrum(borel_data_gm(q), q, D);
    for (int v = 1; v <= 3; ++v) {
      Rat sum(0);
      for (int n = 0; n <= D; ++n) sum += pow(Rat(q), -long(v) * (n + 1));
      CHECK(partial_trace(s, v) == sum);
      // exact geometric tail: c_v - partial = q^(-v(D+1)) * c_v
      Rat exact = Rat(1) / Rat(mpz_class(ipow(q, size_t(v)) - 1));
      CHECK(exact - sum == pow(Rat(q), -long(v) * (D + 1)) * exact);
    }
  }
}

TEST_CASE("verify_trace_formula across the catalog") {
  CHECK(verify_trace_formula(make_bfinite(2, GroupTable::symmetric3()), 6, 16).status ==
        CheckStatus::Pass);
  CHECK(verify_trace_formula(make_point(3), 6, 16).status == CheckStatus::Pass);
  CHECK(verify_trace_formula(make_bgm(3), 4, 32).status == CheckStatus::Pass);
  CHECK(verify_trace_formula(make_bgl(2, 2), 4, 32).status == CheckStatus::Pass);
  CHECK(verify_trace_formula(make_bnorm_torus(3), 4, 32).status == CheckStatus::Pass);
  CHECK(verify_trace_formula(make_belliptic(5, 2), 4, 32).status == CheckStatus::Pass);
  CHECK(verify_trace_formula(make_gl(2, 2), 4, 32).status == CheckStatus::NotApplicable);
}

TEST_CASE("reconstruct_rational pinned examples") {
  const int N = 20;
  SUBCASE("1/(1-t)") {
    auto r = reconstruct_rational(zeta_from_counts(make_point(5), N), 3);
    REQUIRE(r.has_value());
    CHECK(r->num == std::vector<Rat>{Rat(1)});
    CHECK(r->den == std::vector<Rat>{Rat(1), Rat(-1)});
  }
  SUBCASE("Gm: (1-t)/(1-qt)") {
    auto r = reconstruct_rational(zeta_from_counts(make_gm(3), N), 3);
    REQUIRE(r.has_value());
    CHECK(r->num == std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK(r->den == std::vector<Rat>{Rat(1), Rat(-3)});
  }
  SUBCASE("P1: 1/((1-t)(1-qt))") {
    auto r = reconstruct_rational(zeta_from_counts(make_p1(2), N), 3);
    REQUIRE(r.has_value());
    CHECK(r->num == std::vector<Rat>{Rat(1)});
    CHECK(r->den == std::vector<Rat>{Rat(1), Rat(-3), Rat(2)});
  }
  SUBCASE("BFinite: 1/(1-t)") {
    auto r = reconstruct_rational(
        zeta_from_counts(make_bfinite(3, GroupTable::quaternion()), N), 4);
    REQUIRE(r.has_value());
    CHECK(r->num == std::vector<Rat>{Rat(1)});
    CHECK(r->den == std::vector<Rat>{Rat(1), Rat(-1)});
  }
  SUBCASE("BGm is not rational at small dmax") {
    PowerSeries z = zeta_from_counts(make_bgm(2), N);
    for (int dmax = 1; dmax <= 6; ++dmax)
      CHECK_FALSE(reconstruct_rational(z, dmax).has_value());
  }
  SUBCASE("BE is not rational at small dmax") {
    PowerSeries z = zeta_from_counts(make_belliptic(5, 2), N);
    for (int dmax = 1; dmax <= 6; ++dmax)
      CHECK_FALSE(reconstruct_rational(z, dmax).has_value());
  }
  SUBCASE("order precondition") {
    CHECK_THROWS(reconstruct_rational(zeta_from_counts(make_point(2), 8), 3));
  }
  SUBCASE("GL2 round trip through expand") {
    // c_v(GL2) = q^4v + q^v - q^3v - q^2v, so the zeta is rational of degree 2/2
    auto r = reconstruct_rational(zeta_from_counts(make_gl(2, 3), N), 4);
    REQUIRE(r.has_value());
    CHECK(r->expand(N) == zeta_from_counts(make_gl(2, 3), N));
    CHECK(r->den == std::vector<Rat>{Rat(1), Rat(-84), Rat(243)});  // (1-3t)(1-81t)
    CHECK(r->num == std::vector<Rat>{Rat(1), Rat(-36), Rat(243)});  // (1-9t)(1-27t)
  }
  SUBCASE("[P1/Gm] inherits BGm's poles and is not rational") {
    CHECK_FALSE(reconstruct_rational(zeta_from_counts(make_quotient_p1_gm(3), N), 6)
                    .has_value());
  }
}

TEST_CASE("functional equations") {
  SUBCASE("Gm scaling: (1-t) Z(BGm, qt) = Z(BGm, t)") {
    for (long q : {2L, 3L, 5L}) {
      FunceqParams p;
      p.q = q;
      p.order = 16;
      CHECK(functional_equation_check(FunceqKind::GmScaling, p).status ==
            CheckStatus::Pass);
    }
  }
  SUBCASE("GL2 scaling") {
    for (long q : {2L, 3L}) {
      FunceqParams p;
      p.q = q;
      p.order = 12;
      CHECK(functional_equation_check(FunceqKind::GL2Scaling, p).status ==
            CheckStatus::Pass);
    }
  }
  SUBCASE("elliptic scaling in Q(alpha)") {
    const long qs[] = {5, 2, 7};
    const long as[] = {2, 1, 3};
    for (int k = 0; k < 3; ++k) {
      FunceqParams p;
      p.q = qs[k];
      p.a = as[k];
      p.order = 12;
      CHECK(functional_equation_check(FunceqKind::EllipticScaling, p).status ==
            CheckStatus::Pass);
    }
  }
  SUBCASE("proper smooth: P1 has sign +") {
    for (long q : {2L, 3L, 5L}) {
      FunceqParams p;
      p.q = q;
      p.stack = make_p1(q);
      p.d = 1;
      p.order = 20;
      auto rep = functional_equation_check(FunceqKind::ProperSmooth, p);
      CHECK(rep.status == CheckStatus::Pass);
      CHECK(rep.witness.at("sign").get<std::string>() == "+");
      CHECK(rep.witness.at("chi").get<int>() == 2);
    }
  }
}

TEST_CASE("pole catalog pinned examples") {
  SUBCASE("BGm: simple poles at q^n with even weights") {
    const long q = 3;
    auto poles = pole_catalog(borel_spectrum(borel_data_gm(q), q, 8));
    REQUIRE(poles.size() == 9);
    for (size_t n = 0; n < poles.size(); ++n) {
      CHECK(poles[n].location.value.is_rational() == pow(Rat(q), long(n) + 1));
      CHECK(poles[n].location.weight == Rat(2 * (long(n) + 1)));
      CHECK(poles[n].multiplicity == 1);
    }
  }
  SUBCASE("BFinite: single pole at t=1") {
    auto s = spectrum_of(make_bfinite(2, GroupTable::cyclic(4)), 8);
    REQUIRE(s.has_value());
    auto poles = pole_catalog(*s);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].location.value == AlgNum(1));
    CHECK(poles[0].multiplicity == 1);
  }
  SUBCASE("BE: poles are alpha^n beta^m, n,m >= 1") {
    QuadField f(2, 5);
    AlgNum alpha = AlgNum::generator(f);
    AlgNum beta = alpha.conj();
    auto poles = pole_catalog(abelian_spectrum(f, 6));
    CHECK_FALSE(poles.empty());
    for (const auto& p : poles) {
      // every pole location is some alpha^n beta^m with n+m = weight
      bool found = false;
      long w = p.location.weight.num().get_si();
      for (long n = 1; n < w && !found; ++n) {
        long m = w - n;
        if (m < 1) continue;
        if (alpha.pow(n) * beta.pow(m) == p.location.value) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("point existence verdict tables") {
  SUBCASE("form of BGm") {
    auto r2 = point_existence(ExistenceKind::FormOfBGm, 2);
    CHECK(r2.verdict == ExistenceVerdict::Inconclusive);
    CHECK(r2.lower_bound == Rat(0));
    CHECK(r2.exact_c1 == Rat(1, 3));  // 1/(q+1)
    for (long q : {3L, 4L, 5L, 7L, 8L, 9L}) {
      auto r = point_existence(ExistenceKind::FormOfBGm, q);
      CHECK(r.verdict == ExistenceVerdict::Exists);
      CHECK(r.lower_bound == Rat(1, q) - Rat(1, q * (q - 1)));
      CHECK(r.lower_bound > Rat(0));
      CHECK(r.exact_c1 == Rat(1, q + 1));
    }
  }
  SUBCASE("[P1/Gm]") {
    for (long q : {2L, 3L}) {
      CHECK(point_existence(ExistenceKind::QuotientP1Gm, q).verdict ==
            ExistenceVerdict::Inconclusive);
    }
    for (long q : {4L, 5L}) {
      auto r = point_existence(ExistenceKind::QuotientP1Gm, q);
      CHECK(r.verdict == ExistenceVerdict::Exists);
      CHECK(r.lower_bound == Rat(1) - Rat(2, q - 1));
      CHECK(r.closed_orbit_cap == Rat(2, q - 1));
    }
    for (long q : {7L, 8L, 9L}) {
      auto r = point_existence(ExistenceKind::QuotientP1Gm, q);
      CHECK(r.verdict == ExistenceVerdict::ExistsInOpenOrbit);
      CHECK(r.lower_bound > r.closed_orbit_cap);
    }
  }
}

TEST_CASE("compute_zeta gap column is exact") {
  ZetaResult z = compute_zeta(make_bgm(3), 4, 16);
  REQUIRE(z.spectrum_side.has_value());
  REQUIRE(z.gap.size() == 5);
  for (size_t k = 0; k <= 4; ++k)
    CHECK(z.gap[k] == rc(z.counts_side, int(k)) - rc(*z.spectrum_side, int(k)));
  CHECK(z.gap[0] == Rat(0));
  CHECK(z.gap[1] > Rat(0));
}
