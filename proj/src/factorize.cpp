#include "isq/factorize.hpp"

#include "isq/errors.hpp"
#include "isq/normal.hpp"

namespace isq {

Bitset kernel_of_hom(const Homomorphism& phi) {
  const FiniteInvSemigroup& S = phi.source();
  const FiniteInvSemigroup& Sigma = phi.target();
  Bitset K(static_cast<std::size_t>(S.size()));
  for (elem s = 0; s < S.size(); ++s) {
    if (Sigma.is_idempotent(phi(s))) {
      K.set(static_cast<std::size_t>(s));
    }
  }
  return K;
}

Factorization factorize_hom(const Homomorphism& phi) {
  const FiniteInvSemigroup& S = phi.source();
  const FiniteInvSemigroup& Sigma = phi.target();
  Factorization out;
  out.K = kernel_of_hom(phi);
  if (!is_normal(Subsemigroup{&S, out.K})) {
    throw InternalError("the kernel of a homomorphism must be normal");
  }
  out.quotient = build_quotient(S, out.K);
  out.sigma_og = esn_from(Sigma);
  std::size_t k = out.quotient.classes.num_classes();
  out.kappa_map.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cls = out.quotient.classes.cls(static_cast<int>(c));
    out.kappa_map[c] = phi(cls.front());
    for (elem m : cls) {
      if (phi(m) != out.kappa_map[c]) {
        throw InternalError("kappa is not constant on a simeq_K class");
      }
    }
  }
  // constructing the functor validates functoriality and order preservation
  OGFunctor kappa = out.kappa();
  if (!is_star_injective(kappa)) {
    throw InternalError("kappa is not star-injective");
  }
  return out;
}

bool second_leg_exists(const Homomorphism& phi, const Bitset& N) {
  const FiniteInvSemigroup& S = phi.source();
  NQuotient q = build_quotient(S, N);
  std::size_t k = q.classes.num_classes();
  std::vector<int> leg(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cls = q.classes.cls(static_cast<int>(c));
    leg[c] = phi(cls.front());
    for (elem m : cls) {
      if (phi(m) != leg[c]) {
        return false;  // not well-defined on classes
      }
    }
  }
  OrderedGroupoid sigma_og = esn_from(phi.target());
  try {
    OGFunctor psi(q.groupoid, sigma_og, leg);
    return is_star_injective(psi);
  } catch (const InputError&) {
    return false;  // not a functor
  }
}

bool uniqueness_check(const Homomorphism& phi, const Bitset& N) {
  bool exists = second_leg_exists(phi, N);
  if (exists != (N == kernel_of_hom(phi))) {
    throw InternalError(
        "a star-injective second leg exists through N != ker phi");
  }
  return exists;
}

}  // namespace isq
