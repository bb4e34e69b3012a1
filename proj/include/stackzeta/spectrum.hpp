#ifndef STACKZETA_SPECTRUM_HPP
#define STACKZETA_SPECTRUM_HPP

#include <map>
#include <optional>
#include <vector>

#include "stackzeta/algnum.hpp"
#include "stackzeta/catalog.hpp"

namespace stackzeta {

struct GaloisInstabilityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Transgressive generator data for a connected group: one entry per odd
/// cohomology degree of the group, with the Frobenius eigenvalues there.
struct BorelGenerator {
  int degree;                       // odd, positive
  std::vector<WeilNum> eigenvalues; // each of weight >= degree
};

struct BorelData {
  int dim;  // dimension of the group
  std::vector<BorelGenerator> gens;

  void validate() const;
};

BorelData borel_data_gm(long q);
BorelData borel_data_gl(int n, long q);
// Generator eigenvalue -q; the sign is validated by reproducing the
// counts of the norm-one torus through the trace formula.
BorelData borel_data_norm_torus(long q);

/// Monomial exponent assignment over the flattened generator slots, subject
/// to sum m_j * (degree_j + 1) = 2r.
struct Partition121 {
  std::vector<int> m;
};

/// All exponent assignments with sum m_j * weight_j = target (weights even,
/// positive). Deterministic lexicographic order.
std::vector<Partition121> enumerate_partitions(const std::vector<int>& weights, int target);

/// Frobenius eigenvalues on compact-support (or ordinary) cohomology, as a
/// map from degree to a sorted multiset of weight-tagged numbers.
class FrobSpectrum {
public:
  FrobSpectrum(Rat dim, int top_degree, int depth, bool truncated = false)
      : dim_(std::move(dim)), top_degree_(top_degree), depth_(depth), truncated_(truncated) {}

  void add(int degree, WeilNum w);
  void sort_entries();

  const std::map<int, std::vector<WeilNum>>& entries() const { return entries_; }
  const std::vector<WeilNum>* at(int degree) const;
  const Rat& dim() const { return dim_; }
  int top_degree() const { return top_degree_; }
  int depth() const { return depth_; }
  /// True when the spectrum continues below the generated depth.
  bool truncated() const { return truncated_; }

private:
  std::map<int, std::vector<WeilNum>> entries_;
  Rat dim_;
  int top_degree_;
  int depth_;
  bool truncated_;
};

/// Compact-support spectrum of BG_0 for a connected group with the given
/// generator data: degree -2r-2d holds q^{-d} * prod alpha_j^{-m_j} over all
/// partitions of 2r, for r = 0..depth.
FrobSpectrum borel_spectrum(const BorelData& b, long q, int depth);

/// Ordinary-cohomology side of the same data: degree 2r holds
/// prod alpha_j^{+m_j}.
FrobSpectrum borel_ordinary_spectrum(const BorelData& b, int depth);

/// Compact-support spectrum of BE for g = 1: degree -2-2n holds
/// q^{-1} alpha^{-j} beta^{-(n-j)}, j = 0..n.
FrobSpectrum abelian_spectrum(const QuadField& f, int depth);
FrobSpectrum abelian_ordinary_spectrum(const QuadField& f, int depth);

/// Split variant with two rational Frobenius roots on H^1 (both weight 1).
FrobSpectrum abelian_spectrum_split(const Rat& alpha, const Rat& beta, long q, int depth);

/// Compact-support spectrum of a catalog stack, when one is materialized.
/// QuotientP1Gm and GL variety entries are handled only through zeta
/// multiplicativity and return nullopt.
std::optional<FrobSpectrum> spectrum_of(const StackDescriptor& stack, int depth);

/// Ordinary side for the classifying stacks (BGm, BGL_N, FormOfBGm, BE).
std::optional<FrobSpectrum> ordinary_spectrum_of(const StackDescriptor& stack, int depth);

/// P_n(t) = prod_gamma (1 - gamma t), expanded in the quadratic field and
/// asserted rational coefficient by coefficient. Empty degree gives {1}.
std::vector<Rat> charpoly(const FrobSpectrum& s, int degree);

struct PoincareReport {
  bool pass = true;
  std::vector<int> mismatched_degrees;  // compact-side degrees -2r-2d
};

/// Verifies eigenvalues(H_c^{-2r-2d}) = { q^{-d} gamma^{-1} : gamma in
/// eigenvalues(H^{2r}) } as multisets, for r = 0..depth.
PoincareReport poincare_check(const FrobSpectrum& compact, const FrobSpectrum& ordinary,
                              long q, int dim_d, int depth);

struct WeightAuditEntry {
  int degree;
  Rat min_slack;      // bound minus the largest weight in the degree
  bool sharp;         // slack exactly 0
  bool violation;     // some eigenvalue exceeds the bound
};

struct WeightAuditReport {
  bool pass = true;
  std::vector<WeightAuditEntry> entries;
};

/// Audits weight(gamma) <= dim + n/2 + w in every populated degree n, and
/// <= n + w additionally when affine_stabilizers is set.
WeightAuditReport weight_audit(const FrobSpectrum& s, const Rat& dim, const Rat& w,
                               bool affine_stabilizers);

}  // namespace stackzeta

#endif
