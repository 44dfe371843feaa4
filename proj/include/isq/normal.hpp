#ifndef ISQ_NORMAL_HPP_
#define ISQ_NORMAL_HPP_

#include <vector>

#include "isq/bitset.hpp"
#include "isq/green.hpp"
#include "isq/partition.hpp"
#include "isq/semigroup.hpp"

namespace isq {

// An inverse subsemigroup of a fixed parent, as a bitset over its elements.
// Holds a reference: the parent must outlive the handle.
struct Subsemigroup {
  const FiniteInvSemigroup* parent;
  Bitset members;

  bool contains(elem s) const { return members.test(static_cast<std::size_t>(s)); }
  std::size_t size() const { return members.count(); }
};

// Validates nonemptiness and closure under mul and inv.
Subsemigroup make_subsemigroup(const FiniteInvSemigroup& S, Bitset members);
Subsemigroup make_subsemigroup(const FiniteInvSemigroup& S,
                               const std::vector<elem>& members);

bool is_closed_under_ops(const FiniteInvSemigroup& S, const Bitset& members);

// E(S) is contained in N.
bool is_full(const Subsemigroup& N);

// Full and closed under conjugation s^{-1} n s.
bool is_normal(const Subsemigroup& N);

// Least normal inverse subsemigroup containing A (and E(S)): the fixed point
// of {mul, inv, conjugation, adjoin E(S)}.
Subsemigroup normal_closure(const FiniteInvSemigroup& S, const Bitset& A);
Subsemigroup normal_closure(const FiniteInvSemigroup& S,
                            const std::vector<elem>& A);

// st in N and n in N imply s n t in N.
bool has_kernel_property(const Subsemigroup& N);

// Every member has equal domain and range idempotents.
bool is_clifford(const Subsemigroup& N);

// { s : exists a in A with a <= s } under the natural partial order.
Bitset upward_closure(const FiniteInvSemigroup& S, const Bitset& A);
bool is_closed_subset(const FiniteInvSemigroup& S, const Bitset& A);
inline bool is_closed(const Subsemigroup& N) {
  return is_closed_subset(*N.parent, N.members);
}

struct NormalLattice {
  std::vector<Subsemigroup> normals;  // canonically ordered
  // includes[i][j]: normals[i] is contained in normals[j].
  std::vector<std::vector<bool>> includes;
};

// All normal inverse subsemigroups, by iterated one-element extension and
// re-closure starting from E(S). Throws SizeLimitError above the cap.
NormalLattice enumerate_normal(const FiniteInvSemigroup& S);

// Green's J-relation of the subsemigroup N, restricted to E(S) = E(N),
// as a partition of the parent's idempotent list (positions follow
// S.idempotents()).
Partition green_j_on_idempotents(const Subsemigroup& N);

}  // namespace isq

#endif  // ISQ_NORMAL_HPP_
