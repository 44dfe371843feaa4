#ifndef ISQ_GREEN_HPP_
#define ISQ_GREEN_HPP_

#include <vector>

#include "isq/bitset.hpp"
#include "isq/partition.hpp"
#include "isq/semigroup.hpp"

namespace isq {

// Green's relations of a finite inverse semigroup, plus the J-preorder on
// J-classes (inclusion of principal two-sided ideals).
struct GreenRelations {
  Partition r, l, d, j;
  // j_class_leq[a][b]: every element of J-class a lies in the ideal of
  // J-class b.
  std::vector<std::vector<bool>> j_class_leq;

  bool j_preorder(elem s, elem t) const {
    return j_class_leq[static_cast<std::size_t>(j.class_of(s))]
                      [static_cast<std::size_t>(j.class_of(t))];
  }
};

GreenRelations green_relations(const FiniteInvSemigroup& S);

// The principal two-sided ideal S^1 s S^1 as an element set.
Bitset principal_ideal(const FiniteInvSemigroup& S, elem s);

}  // namespace isq

#endif  // ISQ_GREEN_HPP_
