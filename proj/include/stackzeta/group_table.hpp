#ifndef STACKZETA_GROUP_TABLE_HPP
#define STACKZETA_GROUP_TABLE_HPP

#include <stdexcept>
#include <vector>

#include "stackzeta/rational.hpp"

namespace stackzeta {

struct InvalidGroupError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A finite group as a multiplication table, together with a Frobenius
/// automorphism sigma. Elements are indices 0..n-1.
struct GroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;    // derived in validate() if empty
  std::vector<int> sigma;  // identity if empty
  int identity = -1;       // found in validate()

  /// Checks associativity, identity, inverses, and that sigma is a bijective
  /// automorphism. Fills `inv`, `sigma` and `identity` when absent.
  void validate();

  int op(int g, int h) const { return mul[static_cast<size_t>(g)][static_cast<size_t>(h)]; }

  /// sigma^v applied to g.
  int frob(int g, int v) const;

  static GroupTable cyclic(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  static GroupTable symmetric3();
  static GroupTable dihedral4();   // order 8
  static GroupTable quaternion();  // order 8
};

/// Groupoid count of BG_0 over F_{q^v}: orbits of the twisted conjugation
/// h: g -> sigma^v(h^-1) g h, summing 1/#Stab over orbits. Always 1 for a
/// valid table, but computed honestly from the orbit decomposition.
Rat count_bg_finite(const GroupTable& g, int v);

}  // namespace stackzeta

#endif
