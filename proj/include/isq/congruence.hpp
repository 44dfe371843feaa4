#ifndef ISQ_CONGRUENCE_HPP_
#define ISQ_CONGRUENCE_HPP_

#include <utility>
#include <vector>

#include "isq/bitset.hpp"
#include "isq/normal.hpp"
#include "isq/ogroupoid.hpp"
#include "isq/partition.hpp"
#include "isq/quotient.hpp"
#include "isq/report.hpp"
#include "isq/semigroup.hpp"

namespace isq {

// A congruence on a finite inverse semigroup: a partition compatible with
// multiplication on both sides. Holds a reference to the semigroup.
class Congruence {
 public:
  // Verifies compatibility; throws InputError otherwise.
  static Congruence from_partition(const FiniteInvSemigroup& S, Partition p);
  static Congruence identity(const FiniteInvSemigroup& S);
  static Congruence universal(const FiniteInvSemigroup& S);

  const FiniteInvSemigroup& semigroup() const { return *S_; }
  const Partition& partition() const { return p_; }
  bool related(elem s, elem t) const { return p_.related(s, t); }
  std::size_t num_classes() const { return p_.num_classes(); }

  // ker = elements related to some idempotent, as an element set.
  Bitset kernel() const;
  // tr = restriction to E(S), as a partition of idempotent positions
  // (indexing follows semigroup().idempotents()).
  Partition trace() const;

  // The quotient inverse semigroup; element c is the class with index c.
  FiniteInvSemigroup quotient() const;
  // s -> class index; the projection onto quotient().
  std::vector<elem> quotient_map() const;

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.S_ == b.S_ && a.p_ == b.p_;
  }

 private:
  Congruence(const FiniteInvSemigroup& S, Partition p)
      : S_(&S), p_(std::move(p)) {}
  const FiniteInvSemigroup* S_;
  Partition p_;
};

bool is_congruence_partition(const FiniteInvSemigroup& S, const Partition& p);

// Least congruence containing the given pairs (closure under symmetry,
// transitivity and left/right translation).
Congruence congruence_from_pairs(
    const FiniteInvSemigroup& S,
    const std::vector<std::pair<elem, elem>>& pairs);

// nu is a congruence on the semilattice E(S), stable under conjugation
// e -> s^{-1} e s. nu partitions idempotent positions.
bool is_normal_idempotent_congruence(const FiniteInvSemigroup& S,
                                     const Partition& nu);

// A congruence pair: a normal inverse subsemigroup K and a normal
// congruence nu on E(S) subject to
//   CP1:  se in K and s^{-1}s nu e  imply  s in K,
//   CP2:  u in K  implies  u u^{-1} nu u^{-1} u.
struct CongruencePair {
  Bitset kernel;
  Partition trace;
};

// Empty report iff (K, nu) is a congruence pair; violations name the
// failed condition.
Report validate_pair(const FiniteInvSemigroup& S, const Bitset& K,
                     const Partition& nu);

// rho_{(K,nu)}: s rho t iff s t^{-1} in K and s^{-1}s nu t^{-1}t.
// Throws InputError listing the violated condition when (K, nu) is not a
// congruence pair; the result is asserted to be a congruence with kernel K
// and trace nu.
Congruence rho_from_pair(const FiniteInvSemigroup& S, const Bitset& K,
                         const Partition& nu);

// s sigma t iff es = et for some idempotent e; the quotient is the maximal
// group image (asserted).
Congruence minimal_group_congruence(const FiniteInvSemigroup& S);

// a == b iff a b^{-1} in N, for a closed normal N. Contains sigma and has
// kernel N (both asserted). Throws when N is not closed or not normal.
Congruence coset_congruence(const FiniteInvSemigroup& S, const Bitset& N);

// Whether the simeq_N partition is compatible with multiplication. When N
// is full with the kernel property, the result is cross-checked against
// "J_N is a normal congruence on E(S)" (the two are equivalent).
bool is_simeq_congruence(const FiniteInvSemigroup& S, const Bitset& N);

// simeq_N refines every congruence with kernel N.
bool minimality_check(const FiniteInvSemigroup& S, const Bitset& N);

// For a normal Clifford kernel K: builds the idempotent-separating
// congruence rho (s rho t iff st^{-1} in K and s^{-1}s = t^{-1}t) and checks
// rho = simeq_K and that [s]_K -> rho(s) is an isomorphism of inverse
// semigroups. Throws when K is not normal or not Clifford; returns the
// violations found (empty = the proposition holds).
Report idempotent_separating_check(const FiniteInvSemigroup& S,
                                   const Bitset& K);

// Given a surjective star-injective functor psi from S // N to an inverse
// semigroup Q (as esn_from(Q)), returns the congruence pair (N, nu) where
// nu is induced on E(S) by e -> psi([e]). Asserts that rho_{(N,nu)} equals
// the congruence induced by the composite S -> S // N -> Q.
CongruencePair induced_pair_from_functor(const FiniteInvSemigroup& S,
                                         const NQuotient& q,
                                         const OGFunctor& psi,
                                         const FiniteInvSemigroup& Q);

struct CongruenceLattice {
  std::vector<Congruence> congruences;  // canonically ordered
  // refines[i][j]: congruences[i] refines congruences[j].
  std::vector<std::vector<bool>> refines;
};

// All congruences by principal-congruence generation and iterated binary
// joins. Throws SizeLimitError above the cap.
CongruenceLattice all_congruences(const FiniteInvSemigroup& S,
                                  std::size_t cap = 200);

}  // namespace isq

#endif  // ISQ_CONGRUENCE_HPP_
