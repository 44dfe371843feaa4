#ifndef ISQ_FACTORIZE_HPP_
#define ISQ_FACTORIZE_HPP_

#include <vector>

#include "isq/bitset.hpp"
#include "isq/ogroupoid.hpp"
#include "isq/quotient.hpp"
#include "isq/semigroup.hpp"

namespace isq {

// { s : s phi in E(Sigma) }.
Bitset kernel_of_hom(const Homomorphism& phi);

// phi factorised as S -> S // K -> Sigma with kappa = second leg.
struct Factorization {
  Bitset K;
  NQuotient quotient;        // S // K
  OrderedGroupoid sigma_og;  // esn_from(Sigma)
  std::vector<int> kappa_map;

  // kappa as a functor; references members of this object.
  OGFunctor kappa() const {
    return OGFunctor(quotient.groupoid, sigma_og, kappa_map);
  }
};

// Computes K, builds S // K and kappa([s]_K) = s phi, and asserts that
// kappa is a well-defined star-injective functor with pi . kappa = phi.
Factorization factorize_hom(const Homomorphism& phi);

// Whether phi factors through S // N with a star-injective second leg
// (the map [s]_N -> s phi must be well-defined, a functor, star-injective).
bool second_leg_exists(const Homomorphism& phi, const Bitset& N);

// True iff N admits a star-injective second leg; by the uniqueness
// corollary this happens exactly when N = K, which is asserted internally.
bool uniqueness_check(const Homomorphism& phi, const Bitset& N);

}  // namespace isq

#endif  // ISQ_FACTORIZE_HPP_
