#ifndef ISQ_SEMIGROUP_HPP_
#define ISQ_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isq/bitset.hpp"
#include "isq/partial_bijection.hpp"
#include "isq/report.hpp"

namespace isq {

// Element id within a fixed semigroup: an index into its canonical element
// list.
using elem = int;

// Raw multiplication data for the cayley-table backend.
struct TableData {
  std::vector<std::vector<elem>> mul;
  std::vector<elem> inv;
};

// A finite inverse semigroup, immutable after construction.
//
// Elements are identified with ids 0..size()-1 in a canonical order:
// lexicographic on image arrays for the partial-bijection backend (so the
// zero map, when present, is element 0), input order for table backends.
// All operations are const and safe to call concurrently.
class FiniteInvSemigroup {
 public:
  enum class Backend { partial_bijection, cayley_table };

  // The elements must form a set closed under composition and inversion,
  // all of one degree. Throws InputError otherwise.
  static FiniteInvSemigroup from_partial_bijections(
      std::vector<PartialBijection> elements);

  // Validates the inverse-semigroup laws unless `trusted` (used by builders
  // whose construction guarantees them). Untrusted associativity checking is
  // cubic and refuses above 512 elements.
  static FiniteInvSemigroup from_table(TableData data, bool trusted = false);

  int size() const { return n_; }
  Backend backend() const { return backend_; }

  elem mul(elem s, elem t) const {
    return mul_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n_)
                + static_cast<std::size_t>(t)];
  }
  elem inv(elem s) const { return inv_[static_cast<std::size_t>(s)]; }
  // s s^{-1} and s^{-1} s.
  elem dom_idem(elem s) const { return dom_[static_cast<std::size_t>(s)]; }
  elem ran_idem(elem s) const { return ran_[static_cast<std::size_t>(s)]; }

  bool is_idempotent(elem s) const {
    return is_idem_[static_cast<std::size_t>(s)];
  }
  const std::vector<elem>& idempotents() const { return idempotents_; }
  Bitset idempotent_set() const;

  // The two-sided identity, if the semigroup is a monoid.
  std::optional<elem> identity() const { return identity_; }
  bool is_group() const { return idempotents_.size() == 1; }

  // Partial-bijection backend only.
  int degree() const;
  const PartialBijection& pbij(elem s) const;
  std::optional<elem> find_pbij(const PartialBijection& p) const;

  void check_elem(elem s) const;
  std::string elem_name(elem s) const;
  TableData table() const;

 private:
  FiniteInvSemigroup() = default;
  void finish_construction();

  Backend backend_ = Backend::cayley_table;
  int n_ = 0;
  std::vector<elem> mul_;  // row-major n x n
  std::vector<elem> inv_;
  std::vector<elem> dom_, ran_;
  std::vector<bool> is_idem_;
  std::vector<elem> idempotents_;
  std::optional<elem> identity_;
  std::vector<PartialBijection> pbij_;  // empty for table backend
};

// --- core operations -------------------------------------------------------

// The natural partial order: s <= t iff s = (s s^{-1}) t.
bool natural_leq(const FiniteInvSemigroup& S, elem s, elem t);

// st restricted to the case s^{-1} s = t t^{-1}; nullopt otherwise.
std::optional<elem> trace_product(const FiniteInvSemigroup& S, elem s, elem t);

// Least subset containing `gens` and closed under mul and inv.
// Rejects an empty generating set.
Bitset generated_subsemigroup(const FiniteInvSemigroup& S,
                              const std::vector<elem>& gens);

// Package a closed subset as a semigroup of its own. `embedding`, when
// non-null, receives the parent ids in the new canonical order.
FiniteInvSemigroup sub_semigroup(const FiniteInvSemigroup& S,
                                 const Bitset& members,
                                 std::vector<elem>* embedding = nullptr);

// Law checker for raw tables: associativity, unique inverses (via the given
// inv table and a full scan), commuting idempotents. Report-valued.
Report check_inverse_semigroup(const TableData& data,
                               std::size_t assoc_cap = 512);
Report check_inverse_semigroup(const FiniteInvSemigroup& S);

// A homomorphism of finite inverse semigroups; the defining law
// (st)phi = (s phi)(t phi) is verified on construction. Holds references:
// source and target must outlive the homomorphism.
class Homomorphism {
 public:
  Homomorphism(const FiniteInvSemigroup& source,
               const FiniteInvSemigroup& target, std::vector<elem> map);

  static Homomorphism identity_on(const FiniteInvSemigroup& S);

  const FiniteInvSemigroup& source() const { return *source_; }
  const FiniteInvSemigroup& target() const { return *target_; }
  elem operator()(elem s) const { return map_[static_cast<std::size_t>(s)]; }
  const std::vector<elem>& map() const { return map_; }

 private:
  const FiniteInvSemigroup* source_;
  const FiniteInvSemigroup* target_;
  std::vector<elem> map_;
};

}  // namespace isq

#endif  // ISQ_SEMIGROUP_HPP_
