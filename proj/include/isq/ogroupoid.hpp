#ifndef ISQ_OGROUPOID_HPP_
#define ISQ_OGROUPOID_HPP_

#include <optional>
#include <vector>

#include "isq/bitset.hpp"
#include "isq/report.hpp"
#include "isq/semigroup.hpp"

namespace isq {

// An ordered groupoid: elements with partial composition (defined exactly
// when ran(g) = dom(h)), an involution, domain/range identities, and a
// partial order satisfying
//
//   OG1  g <= h implies g^{-1} <= h^{-1},
//   OG2  the order is compatible with defined compositions,
//   OG3  for every identity x <= dom(g) there is a unique restriction
//        (x|g) <= g with domain x.
//
// Construction normalizes the order relation (reflexive-transitive closure)
// but accepts raw structures; verify_axioms reports all law violations.
class OrderedGroupoid {
 public:
  struct Data {
    std::vector<bool> is_identity;
    std::vector<int> dom, ran, inv;
    std::vector<std::vector<int>> comp;  // -1 = undefined
    std::vector<Bitset> leq;             // leq[g].test(h) iff g <= h
    // When set, the order is taken as already reflexively and transitively
    // closed (internal constructions).
    bool leq_closed = false;
  };

  static OrderedGroupoid from_data(Data d);

  int size() const { return n_; }
  bool is_identity(int g) const {
    return is_identity_[static_cast<std::size_t>(g)];
  }
  const std::vector<int>& identities() const { return identities_; }
  int dom(int g) const { return dom_[static_cast<std::size_t>(g)]; }
  int ran(int g) const { return ran_[static_cast<std::size_t>(g)]; }
  int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
  // -1 when undefined.
  int comp(int g, int h) const {
    return comp_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
  }
  bool leq(int g, int h) const {
    return leq_[static_cast<std::size_t>(g)].test(static_cast<std::size_t>(h));
  }

  void check_elem(int g) const;

  // Full axiom audit: groupoid laws, partial-order laws, OG1-OG3
  // (restriction existence and uniqueness included).
  Report verify_axioms() const;

  // The unique (x|g) with dom = x, (x|g) <= g. Throws InputError
  // "no restriction" when x is not an identity below dom(g).
  int restriction(int x, int g) const;
  // Dual: the unique (g|y) with ran = y, (g|y) <= g.
  int corestriction(int g, int y) const;

  // Greatest lower bound of two identities within the identity poset;
  // nullopt when none exists.
  std::optional<int> meet_of_identities(int x, int y) const;

  // a (x) b = (a|l)(l|b) where l = meet(ran(a), dom(b)); nullopt when the
  // meet does not exist.
  std::optional<int> pseudoproduct(int a, int b) const;

  // Identities form a meet-semilattice.
  bool is_inductive() const;

 private:
  int n_ = 0;
  std::vector<bool> is_identity_;
  std::vector<int> identities_;
  std::vector<int> dom_, ran_, inv_;
  std::vector<std::vector<int>> comp_;
  std::vector<Bitset> leq_;
};

// An inverse semigroup viewed as an ordered groupoid: composition restricted
// to trace products, order = natural partial order.
OrderedGroupoid esn_from(const FiniteInvSemigroup& S);

// The inverse semigroup obtained from an inductive ordered groupoid via the
// pseudoproduct. Element ids are preserved. Throws NotInductiveError when
// the identities do not form a meet-semilattice.
FiniteInvSemigroup esn_to(const OrderedGroupoid& G);

// A functor of ordered groupoids; preservation of identities, dom/ran,
// inversion, composition and order is verified on construction.
// Holds references: source and target must outlive the functor.
class OGFunctor {
 public:
  OGFunctor(const OrderedGroupoid& source, const OrderedGroupoid& target,
            std::vector<int> map);

  static OGFunctor identity_on(const OrderedGroupoid& G);

  const OrderedGroupoid& source() const { return *source_; }
  const OrderedGroupoid& target() const { return *target_; }
  int operator()(int g) const { return map_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& map() const { return map_; }

  bool is_surjective() const;

 private:
  const OrderedGroupoid* source_;
  const OrderedGroupoid* target_;
  std::vector<int> map_;
};

// star_G(e) = { g : dom(g) = e }.
std::vector<int> star_of(const OrderedGroupoid& G, int e);

// Injective on every star.
bool is_star_injective(const OGFunctor& F);

// Isomorphism search for small groupoids: a bijective functor whose inverse
// is also a functor, preserving and reflecting the order.
bool og_isomorphic(const OrderedGroupoid& G, const OrderedGroupoid& H);

}  // namespace isq

#endif  // ISQ_OGROUPOID_HPP_
