#ifndef STACKZETA_CATALOG_HPP
#define STACKZETA_CATALOG_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "stackzeta/group_table.hpp"
#include "stackzeta/rational.hpp"

namespace stackzeta {

struct StackDescriptor;

// The closed catalog. Every entry carries the base field size q; extension
// beyond these families is documented but unimplemented.
struct PointStack { long q; };
struct AffineLineStack { long q; };
struct GmStack { long q; };
struct P1Stack { long q; };
struct GLStack { int n; long q; };          // the group variety GL_n
struct BGmStack { long q; };                // B of the split torus
struct BGLStack { int n; long q; };         // B GL_n via Borel data
struct BNormTorusStack { long q; };         // B of the norm-one torus (nontrivial form of BGm)
struct BEllipticStack {                     // BE for an elliptic curve with trace a
  long q;
  long a;
};
struct BFiniteStack {                       // B of a finite etale group scheme
  long q;
  GroupTable table;
};
struct QuotientP1GmStack { long q; };       // [P^1 / Gm]
struct DisjointUnionStack {
  long q;
  std::vector<StackDescriptor> parts;
};

struct StackDescriptor {
  std::variant<PointStack, AffineLineStack, GmStack, P1Stack, GLStack, BGmStack,
               BGLStack, BNormTorusStack, BEllipticStack, BFiniteStack,
               QuotientP1GmStack, DisjointUnionStack>
      v;

  long q() const;
  std::string name() const;

  /// Dimension of the stack (negative for classifying stacks).
  Rat dimension() const;

  /// True when all automorphism groups are affine (every catalog entry except BE).
  bool affine_stabilizers() const;
};

StackDescriptor make_point(long q);
StackDescriptor make_affine_line(long q);
StackDescriptor make_gm(long q);
StackDescriptor make_p1(long q);
StackDescriptor make_gl(int n, long q);
StackDescriptor make_bgm(long q);
StackDescriptor make_bgl(int n, long q);
StackDescriptor make_bnorm_torus(long q);
StackDescriptor make_belliptic(long q, long a);
StackDescriptor make_bfinite(long q, GroupTable table);
StackDescriptor make_quotient_p1_gm(long q);
StackDescriptor make_disjoint_union(std::vector<StackDescriptor> parts);

/// #GL_N(F_{q^v}) = prod_{i=0}^{N-1} (q^{vN} - q^{vi}), exact.
mpz_class count_gl(int N, long q, int v);

/// #E(F_{q^v}) = 1 - s_v + q^v where s_v = alpha^v + beta^v follows the
/// integer recurrence s_0 = 2, s_1 = a, s_{v+1} = a s_v - q s_{v-1}.
mpz_class count_elliptic(long q, long a, int v);

/// alpha^v + beta^v via the same recurrence (can be negative).
mpz_class frobenius_power_sum(long q, long a, int v);

/// Exact groupoid point count c_v of a catalog stack over F_{q^v}.
Rat cv(const StackDescriptor& stack, int v);

}  // namespace stackzeta

#endif
