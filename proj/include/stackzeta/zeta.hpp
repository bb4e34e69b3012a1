#ifndef STACKZETA_ZETA_HPP
#define STACKZETA_ZETA_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stackzeta/catalog.hpp"
#include "stackzeta/power_series.hpp"
#include "stackzeta/spectrum.hpp"

namespace stackzeta {

struct StreamDivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class CheckStatus { Pass, Fail, Inconclusive, NotApplicable };

std::string to_string(CheckStatus s);

/// Outcome of one verification; a fail always carries a witness.
struct VerificationReport {
  std::string check;
  std::string stack;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::ordered_json witness;
};

/// Z(X_0,t) = exp(sum_{v=1}^N c_v t^v / v), exact and truncated at N.
PowerSeries zeta_from_counts(const StackDescriptor& stack, int order);

/// Factors of the alternating product over degrees, top degree first; within
/// a degree, eigenvalues in sorted order.
std::vector<Factor> spectrum_factors(const FrobSpectrum& s);

/// Partial product over the materialized spectrum, each degree n contributing
/// its charpoly factors with exponent (-1)^(n+1). Throws StreamDivergenceError
/// if a truncated spectrum carries a factor with weight >= 0 in a degree < 0.
PowerSeries zeta_from_spectrum(const FrobSpectrum& s, int order);

/// Both sides of the zeta function of one stack plus their exact coefficient gap.
struct ZetaResult {
  StackDescriptor stack;
  int order;
  int depth;
  PowerSeries counts_side;
  std::optional<PowerSeries> spectrum_side;
  std::vector<Rat> gap;  // counts minus spectrum side, per coefficient
};

ZetaResult compute_zeta(const StackDescriptor& stack, int order, int depth);

/// Alternating trace sum_n (-1)^n sum_gamma gamma^v over the materialized
/// degrees. Throws GaloisInstabilityError if the sum is not rational.
Rat partial_trace(const FrobSpectrum& s, int v);

/// Compares c_v against the alternating trace for v <= V. Finite spectra must
/// match exactly; truncated spectra must show a strictly shrinking exact gap
/// when the depth doubles, with the final squared gap below q^-(2D).
VerificationReport verify_trace_formula(const StackDescriptor& stack, int V, int depth);

/// Rational function with coprime numerator/denominator over Q, denominator
/// constant term 1.
struct RationalFn {
  std::vector<Rat> num;
  std::vector<Rat> den;

  PowerSeries expand(int order) const;
};

/// Finds the minimal linear recurrence of order <= dmax on the coefficients,
/// fitted inside the first 2*dmax+1 coefficients; the induced rational
/// function must predict every held-out coefficient exactly (at least 4 of
/// them), else nullopt. Requires order >= 2*dmax + 4.
std::optional<RationalFn> reconstruct_rational(const PowerSeries& f, int dmax);

enum class FunceqKind {
  GmScaling,        // (1 - t) Z(BGm, qt) = Z(BGm, t)
  GL2Scaling,       // Z(BGL2, qt) = Z(BGL2, t) Z_1(t), and Z_1(q^2 t)(1 - t/q)= Z_1(t)
  EllipticScaling,  // Z_1(alpha t)(1 - alpha t) = Z_1(t) Z_2(t), Z_2(beta t)(1 - alpha t) = Z_2(t)
  ProperSmooth      // Z(1/(q^d t)) = +- q^(d chi/2) t^chi Z(t) as rational functions
};

struct FunceqParams {
  long q = 2;
  long a = 0;          // elliptic trace, EllipticScaling only
  int order = 16;
  StackDescriptor stack = make_p1(2);  // ProperSmooth only
  int d = 1;           // equidimension, ProperSmooth only
  int dmax = 6;        // reconstruction bound, ProperSmooth only
};

VerificationReport functional_equation_check(FunceqKind kind, const FunceqParams& p);

struct PoleEntry {
  WeilNum location;  // gamma^-1
  int degree;        // first contributing cohomological degree
  int multiplicity;  // aggregated across degrees
};

/// Candidate poles: inverse eigenvalues from even degrees (exponent -1),
/// aggregated by location, ordered by first appearance in the factor stream.
std::vector<PoleEntry> pole_catalog(const FrobSpectrum& s);

enum class ExistenceVerdict { Exists, ExistsInOpenOrbit, Inconclusive };

std::string to_string(ExistenceVerdict v);

enum class ExistenceKind { FormOfBGm, QuotientP1Gm };

struct PointExistenceResult {
  ExistenceKind kind;
  long q;
  ExistenceVerdict verdict;
  Rat lower_bound;       // exact evaluation of the trace-formula bound
  Rat closed_orbit_cap;  // QuotientP1Gm only; 0 otherwise
  Rat exact_c1;          // cross-check from the counting side
};

PointExistenceResult point_existence(ExistenceKind kind, long q);

}  // namespace stackzeta

#endif
