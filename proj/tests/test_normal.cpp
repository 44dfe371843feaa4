#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "isq/builders.hpp"
#include "isq/errors.hpp"
#include "isq/normal.hpp"
#include "isq/semigroup.hpp"

using namespace isq;

namespace {

// Exhaustive oracle: all normal inverse subsemigroups of S by filtering
// every subset (fixtures here have at most 7 elements).
std::set<std::set<elem>> normals_oracle(const FiniteInvSemigroup& S) {
  std::set<std::set<elem>> out;
  int n = S.size();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::set<elem> sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) sub.insert(i);
    }
    bool ok = true;
    for (elem e : S.idempotents()) {
      ok = ok && sub.count(e);
    }
    for (elem x : sub) {
      if (!ok) break;
      ok = ok && sub.count(S.inv(x));
      for (elem y : sub) {
        ok = ok && sub.count(S.mul(x, y));
      }
      for (elem s = 0; s < n; ++s) {
        ok = ok && sub.count(S.mul(S.mul(S.inv(s), x), s));
      }
    }
    if (ok) out.insert(sub);
  }
  return out;
}

// Independent fixpoint oracle for the normal closure.
std::set<elem> normal_closure_oracle(const FiniteInvSemigroup& S,
                                     std::set<elem> acc) {
  for (elem e : S.idempotents()) acc.insert(e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<elem> next = acc;
    for (elem x : acc) {
      next.insert(S.inv(x));
      for (elem y : acc) next.insert(S.mul(x, y));
      for (elem s = 0; s < S.size(); ++s) {
        next.insert(S.mul(S.mul(S.inv(s), x), s));
      }
    }
    if (next != acc) {
      acc = std::move(next);
      grew = true;
    }
  }
  return acc;
}

std::set<elem> as_set(const Bitset& b) {
  auto v = b.to_indices();
  return {v.begin(), v.end()};
}

Bitset idset(const FiniteInvSemigroup& S, const std::vector<elem>& v) {
  return Bitset::from_indices(static_cast<std::size_t>(S.size()), v);
}

}  // namespace

TEST_CASE("fullness") {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  CHECK(is_full(make_subsemigroup(i2, i2.idempotents())));
  // {0, id_1} is closed but misses id_2 and id_12
  elem id1 = *i2.find_pbij(PartialBijection(2, {1, 0}));
  CHECK(!is_full(make_subsemigroup(i2, std::vector<elem>{0, id1})));

  elem f = *i2.find_pbij(PartialBijection(2, {2, 0}));
  std::vector<elem> n1 = i2.idempotents();
  n1.push_back(f);
  n1.push_back(i2.inv(f));
  CHECK(is_full(make_subsemigroup(i2, n1)));
}

TEST_CASE("normality") {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  FiniteInvSemigroup s6 = example_S6();
  CHECK(is_normal(make_subsemigroup(i2, i2.idempotents())));
  CHECK(is_normal(make_subsemigroup(s6, s6.idempotents())));

  elem f = *i2.find_pbij(PartialBijection(2, {2, 0}));
  std::vector<elem> n1 = i2.idempotents();
  n1.push_back(f);
  n1.push_back(i2.inv(f));
  Subsemigroup N1 = make_subsemigroup(i2, n1);
  CHECK(is_normal(N1));
  // the conjugation witness: tau^{-1} f tau = f^{-1}
  elem tau = *i2.find_pbij(PartialBijection(2, {2, 1}));
  CHECK(i2.mul(i2.mul(i2.inv(tau), f), tau) == i2.inv(f));

  elem id1 = *i2.find_pbij(PartialBijection(2, {1, 0}));
  CHECK(!is_normal(make_subsemigroup(i2, std::vector<elem>{0, id1})));
}

TEST_CASE("normal closure against the oracle") {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  elem f = *i2.find_pbij(PartialBijection(2, {2, 0}));
  elem tau = *i2.find_pbij(PartialBijection(2, {2, 1}));

  CHECK(as_set(normal_closure(i2, std::vector<elem>{}).members)
        == normal_closure_oracle(i2, {}));
  CHECK(normal_closure(i2, std::vector<elem>{}).members.count() == 4);

  std::set<elem> n1 = normal_closure_oracle(i2, {f});
  CHECK(n1.size() == 6);  // E together with f and f^{-1}
  CHECK(as_set(normal_closure(i2, std::vector<elem>{f}).members) == n1);

  CHECK(as_set(normal_closure(i2, std::vector<elem>{tau}).members).size() == 7);

  // closure operator laws: extensive, monotone, idempotent
  FiniteInvSemigroup s6 = example_S6();
  for (elem x = 0; x < s6.size(); ++x) {
    Bitset a = idset(s6, {x});
    Bitset ca = normal_closure(s6, a).members;
    CHECK(a.is_subset_of(ca));
    CHECK(normal_closure(s6, ca).members == ca);
    for (elem y = 0; y < s6.size(); ++y) {
      Bitset b = idset(s6, {x, y});
      CHECK(ca.is_subset_of(normal_closure(s6, b).members));
    }
  }
}

TEST_CASE("kernel property and clifford") {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  FiniteInvSemigroup s6 = example_S6();
  CHECK(has_kernel_property(make_subsemigroup(s6, s6.idempotents())));

  elem f = *i2.find_pbij(PartialBijection(2, {2, 0}));
  std::vector<elem> n1v = i2.idempotents();
  n1v.push_back(f);
  n1v.push_back(i2.inv(f));
  Subsemigroup N1 = make_subsemigroup(i2, n1v);

  CHECK(is_clifford(make_subsemigroup(i2, i2.idempotents())));
  // f witnesses both failures below: ff^{-1} != f^{-1}f
  CHECK(!is_clifford(N1));
  CHECK(i2.dom_idem(f) != i2.ran_idem(f));

  std::vector<elem> all_ids(static_cast<std::size_t>(i2.size()));
  for (int i = 0; i < i2.size(); ++i) all_ids[static_cast<std::size_t>(i)] = i;
  CHECK(!is_clifford(make_subsemigroup(i2, all_ids)));

  // kernel property implies normal, over every enumerated normal candidate
  for (const auto& S : {i2, s6}) {
    for (const auto& N : enumerate_normal(S).normals) {
      if (has_kernel_property(N)) {
        CHECK(is_normal(N));
      }
    }
  }
}

TEST_CASE("upward closure and closed subsets") {
  FiniteInvSemigroup s6 = example_S6();
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);

  // 0 lies below everything, so its upward closure is all of S6
  Bitset zero_up = upward_closure(s6, idset(s6, {0}));
  CHECK(zero_up.count() == static_cast<std::size_t>(s6.size()));

  // E(I_2) contains 0 and 0 <= f, so E is not closed
  CHECK(!is_closed_subset(i2, i2.idempotent_set()));

  CHECK(upward_closure(i2, Bitset(static_cast<std::size_t>(i2.size()))).none());

  // a principal up-set is closed
  elem id1 = *i2.find_pbij(PartialBijection(2, {1, 0}));
  Bitset up = upward_closure(i2, idset(i2, {id1}));
  CHECK(is_closed_subset(i2, up));
}

TEST_CASE("enumerate_normal matches the exhaustive oracle") {
  for (const auto& S : {symmetric_inverse_monoid(2), example_S6(),
                        brandt_semigroup(1), cyclic_group(4)}) {
    auto lattice = enumerate_normal(S);
    std::set<std::set<elem>> got;
    for (const auto& N : lattice.normals) {
      CHECK(is_normal(N));
      got.insert(as_set(N.members));
    }
    CHECK(got.size() == lattice.normals.size());
    CHECK(got == normals_oracle(S));
  }

  // I_2 has exactly E, N1 = E u {f, f^{-1}}, and I_2
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  auto lattice = enumerate_normal(i2);
  REQUIRE(lattice.normals.size() == 3);
  CHECK(lattice.normals[0].size() == 4);
  CHECK(lattice.normals[1].size() == 6);
  CHECK(lattice.normals[2].size() == 7);
  // inclusion chain
  CHECK(lattice.includes[0][1]);
  CHECK(lattice.includes[1][2]);
  CHECK(!lattice.includes[2][1]);

  // groups: normal inverse subsemigroups = normal subgroups
  FiniteInvSemigroup z4 = cyclic_group(4);
  CHECK(enumerate_normal(z4).normals.size() == 3);  // {0}, {0,2}, Z_4
}

TEST_CASE("green J on idempotents of a subsemigroup") {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  // within E itself, J is trivial on idempotents
  Partition p = green_j_on_idempotents(
      make_subsemigroup(i2, i2.idempotents()));
  CHECK(p == Partition::identity(i2.idempotents().size()));

  // within N1, id_1 and id_2 become J-related through f
  elem f = *i2.find_pbij(PartialBijection(2, {2, 0}));
  std::vector<elem> n1v = i2.idempotents();
  n1v.push_back(f);
  n1v.push_back(i2.inv(f));
  Partition q = green_j_on_idempotents(make_subsemigroup(i2, n1v));
  elem id1 = *i2.find_pbij(PartialBijection(2, {1, 0}));
  elem id2 = *i2.find_pbij(PartialBijection(2, {0, 2}));
  auto pos = [&](elem e) {
    const auto& ids = i2.idempotents();
    return static_cast<int>(std::find(ids.begin(), ids.end(), e) - ids.begin());
  };
  CHECK(q.related(pos(id1), pos(id2)));
  CHECK(!q.related(pos(id1), pos(0)));
}
