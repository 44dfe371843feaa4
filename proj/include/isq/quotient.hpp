#ifndef ISQ_QUOTIENT_HPP_
#define ISQ_QUOTIENT_HPP_

#include <vector>

#include "isq/bitset.hpp"
#include "isq/normal.hpp"
#include "isq/ogroupoid.hpp"
#include "isq/partition.hpp"
#include "isq/semigroup.hpp"

namespace isq {

// s <=_N t iff there are a, b in N with the trace products a.s and (as).b
// defined and a s b <= t in the natural order. Validates that N is normal.
bool leq_N(const FiniteInvSemigroup& S, const Bitset& N, elem s, elem t);

// The full <=_N relation as bitset rows (row[s].test(t) iff s <=_N t).
// Rows are computed in parallel for large semigroups; the result is
// deterministic. Validates that N is normal.
std::vector<Bitset> leq_N_matrix(const FiniteInvSemigroup& S, const Bitset& N);

// The equivalence obtained by symmetrizing <=_N.
Partition simeq_N(const FiniteInvSemigroup& S, const Bitset& N);

// The quotient S // N: classes of simeq_N carrying an ordered groupoid
// structure. Class indices are canonical (sorted by least member id);
// groupoid element c corresponds to classes.cls(c).
struct NQuotient {
  const FiniteInvSemigroup* source;
  Bitset N;
  Partition classes;
  OrderedGroupoid groupoid;
  // witness[c][d] = the canonical composition witness a in N (least in
  // element order with a a^{-1} <= s^{-1}s, a^{-1}a = t t^{-1}), or -1 when
  // [c][d] is not composable.
  std::vector<std::vector<elem>> witness;

  int class_of(elem s) const { return classes.class_of(s); }
  elem rep(int c) const { return classes.cls(c).front(); }
};

// Builds S // N per the quotient construction:
//   identities = classes of idempotents, dom [s] = [s s^{-1}],
//   comp([s],[t]) = [s a t] via the canonical witness,
//   class order induced by <=_N.
// When `verify` is set (default) and the quotient is small, the full OG
// axiom audit runs post-build and any failure raises InternalError.
NQuotient build_quotient(const FiniteInvSemigroup& S, const Bitset& N,
                         bool verify = true);

// The identity poset of the quotient is a meet-semilattice.
bool is_inductive_quotient(const NQuotient& q);

// esn_to on the quotient groupoid; throws NotInductiveError otherwise.
FiniteInvSemigroup quotient_inverse_semigroup(const NQuotient& q);

// Over enumerate_normal(S): N -> <=_N is injective, and N included in M iff
// <=_N included in <=_M (the poset embedding).
bool preorder_embedding_check(const FiniteInvSemigroup& S);

}  // namespace isq

#endif  // ISQ_QUOTIENT_HPP_
