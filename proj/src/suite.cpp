#include "isq/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "isq/builders.hpp"
#include "isq/congruence.hpp"
#include "isq/errors.hpp"
#include "isq/factorize.hpp"
#include "isq/green.hpp"
#include "isq/munn.hpp"
#include "isq/normal.hpp"
#include "isq/ogroupoid.hpp"
#include "isq/poly.hpp"
#include "isq/quotient.hpp"
#include "isq/semigroup.hpp"

namespace isq {

namespace {

Bitset full_set(const FiniteInvSemigroup& S) {
  Bitset b(static_cast<std::size_t>(S.size()));
  for (int i = 0; i < S.size(); ++i) b.set(static_cast<std::size_t>(i));
  return b;
}

// Failure collector: expect() records a message when the condition fails.
struct Checker {
  std::ostringstream detail;
  bool pass = true;
  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      if (!pass) detail << "; ";
      pass = false;
      detail << msg;
    }
  }
};

elem pbe(const FiniteInvSemigroup& S, const PartialBijection& p) {
  auto id = S.find_pbij(p);
  if (!id) {
    throw InternalError("fixture element missing: " + p.to_string());
  }
  return *id;
}

// (chain of `levels` identities) x Z_m as an ordered groupoid.
OrderedGroupoid poset_chain_times_group(int levels, int m) {
  std::size_t n = static_cast<std::size_t>(levels * m);
  auto id = [m](int p, int g) { return p * m + g; };
  OrderedGroupoid::Data d;
  d.is_identity.assign(n, false);
  d.dom.resize(n);
  d.ran.resize(n);
  d.inv.resize(n);
  d.comp.assign(n, std::vector<int>(n, -1));
  d.leq.assign(n, Bitset(n));
  for (int p = 0; p < levels; ++p) {
    for (int g = 0; g < m; ++g) {
      int x = id(p, g);
      d.is_identity[static_cast<std::size_t>(x)] = g == 0;
      d.dom[static_cast<std::size_t>(x)] = id(p, 0);
      d.ran[static_cast<std::size_t>(x)] = id(p, 0);
      d.inv[static_cast<std::size_t>(x)] = id(p, (m - g) % m);
      for (int h = 0; h < m; ++h) {
        d.comp[static_cast<std::size_t>(x)]
              [static_cast<std::size_t>(id(p, h))] = id(p, (g + h) % m);
      }
      for (int q = p; q < levels; ++q) {
        d.leq[static_cast<std::size_t>(x)].set(
            static_cast<std::size_t>(id(q, g)));
      }
    }
  }
  d.leq_closed = true;
  return OrderedGroupoid::from_data(std::move(d));
}

FiniteInvSemigroup symmetric_group_s3() {
  FiniteInvSemigroup i3 = symmetric_inverse_monoid(3);
  Bitset perms(static_cast<std::size_t>(i3.size()));
  for (elem s = 0; s < i3.size(); ++s) {
    if (i3.pbij(s).is_permutation()) {
      perms.set(static_cast<std::size_t>(s));
    }
  }
  return sub_semigroup(i3, perms);
}

FiniteInvSemigroup i2_times_z2() {
  return direct_product_with_group(symmetric_inverse_monoid(2),
                                   cyclic_group(2));
}

// --- criterion 1 -----------------------------------------------------------

void criterion_example_a(Checker& c) {
  FiniteInvSemigroup s6 = example_S6();
  elem zero = pbe(s6, PartialBijection(4));
  elem id13 = pbe(s6, PartialBijection::partial_identity(4, {1, 3}));
  elem id1 = pbe(s6, PartialBijection::partial_identity(4, {1}));
  elem id2 = pbe(s6, PartialBijection::partial_identity(4, {2}));
  elem f = pbe(s6, PartialBijection::point_map(4, 1, 2));
  elem finv = s6.inv(f);

  Partition p = simeq_N(s6, full_set(s6));
  c.expect(p.num_classes() == 3, "simeq_S must have 3 classes");
  c.expect(p.related(id1, id2) && p.related(id1, f) && p.related(id1, finv),
           "rank-one elements must form one class");
  c.expect(!p.related(id13, id1) && !p.related(zero, id1)
               && !p.related(id13, zero),
           "{id13} and {0} must be singleton classes");

  NQuotient q = build_quotient(s6, full_set(s6));
  int c0 = q.class_of(zero), cm = q.class_of(id1), ct = q.class_of(id13);
  c.expect(q.groupoid.leq(c0, cm) && q.groupoid.leq(cm, ct)
               && !q.groupoid.leq(ct, cm) && !q.groupoid.leq(cm, c0),
           "classes must form a 3-chain");

  c.expect(s6.mul(id13, id1) == id1, "id13 . id1 = id1");
  c.expect(s6.mul(id13, id2) == zero, "id13 . id2 = 0");
  c.expect(!p.related(s6.mul(id13, id1), s6.mul(id13, id2)),
           "id1 and 0 must not be simeq-related");
  c.expect(!is_simeq_congruence(s6, full_set(s6)),
           "simeq_S must not be a congruence");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_example_b(Checker& c) {
  FiniteInvSemigroup t = example_T();
  c.expect(t.size() == 11, "T must have 11 elements");

  GreenRelations g = green_relations(t);
  std::size_t nj = g.j.num_classes();
  bool meet_semilattice = true;
  for (std::size_t a = 0; a < nj && meet_semilattice; ++a) {
    for (std::size_t b = 0; b < nj && meet_semilattice; ++b) {
      std::vector<std::size_t> lower;
      for (std::size_t x = 0; x < nj; ++x) {
        if (g.j_class_leq[x][a] && g.j_class_leq[x][b]) lower.push_back(x);
      }
      bool has_greatest = false;
      for (std::size_t m : lower) {
        bool greatest = true;
        for (std::size_t x : lower) {
          greatest = greatest && g.j_class_leq[x][m];
        }
        has_greatest = has_greatest || greatest;
      }
      meet_semilattice = has_greatest;
    }
  }
  c.expect(!meet_semilattice, "J-class poset of T must not be a semilattice");

  NQuotient q = build_quotient(t, full_set(t));
  c.expect(!is_inductive_quotient(q), "T // T must not be inductive");
  bool threw = false;
  std::string msg;
  try {
    quotient_inverse_semigroup(q);
  } catch (const NotInductiveError& e) {
    threw = true;
    msg = e.what();
  }
  c.expect(threw && msg == "not inductive",
           "esn_to on T // T must error \"not inductive\"");
}

// --- criterion 3 -----------------------------------------------------------

void criterion_in_mod_sn(Checker& c, int n) {
  FiniteInvSemigroup in = symmetric_inverse_monoid(n);
  elem id = pbe(in, PartialBijection::identity(n));
  Bitset N(static_cast<std::size_t>(in.size()));
  std::vector<elem> perms;
  for (elem s = 0; s < in.size(); ++s) {
    if (!in.pbij(s).is_permutation() || s == id) {
      N.set(static_cast<std::size_t>(s));
    }
    if (in.pbij(s).is_permutation()) {
      perms.push_back(s);
    }
  }
  NQuotient q = build_quotient(in, N);
  int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  c.expect(static_cast<int>(q.classes.num_classes()) == fact + n,
           "quotient must have n! + n classes");

  // permutation classes are singletons and multiply as S_n
  std::set<int> perm_classes;
  for (elem s : perms) {
    int cs = q.class_of(s);
    perm_classes.insert(cs);
    c.expect(q.classes.cls(cs).size() == 1,
             "permutation classes must be singletons");
  }
  c.expect(static_cast<int>(perm_classes.size()) == fact,
           "distinct classes per permutation");
  for (elem s : perms) {
    for (elem t : perms) {
      int comp = q.groupoid.comp(q.class_of(s), q.class_of(t));
      c.expect(comp == q.class_of(in.mul(s, t)),
               "composition of permutation classes is the group product");
    }
  }
  // the canonical bijection s -> [s] is a group isomorphism onto the
  // permutation classes; for n = 3 confirm non-commutativity as well
  if (n == 3) {
    bool abelian = true;
    for (elem s : perms) {
      for (elem t : perms) {
        abelian = abelian && in.mul(s, t) == in.mul(t, s);
      }
    }
    c.expect(!abelian, "S_3 part must be non-abelian");
  }

  // defect identities: classes of non-identity members of N keyed by rank,
  // forming a chain of length n below [id]
  std::set<int> defect;
  N.for_each([&](std::size_t i) {
    elem s = static_cast<elem>(i);
    if (s != id) defect.insert(q.class_of(s));
  });
  c.expect(static_cast<int>(defect.size()) == n,
           "defect classes must be a chain of length n");
  N.for_each([&](std::size_t i) {
    elem s = static_cast<elem>(i);
    N.for_each([&](std::size_t j) {
      elem t = static_cast<elem>(j);
      if (s != id && t != id) {
        c.expect((q.class_of(s) == q.class_of(t))
                     == (in.pbij(s).rank() == in.pbij(t).rank()),
                 "defect classes must be rank classes");
      }
    });
  });
  std::vector<int> chain(defect.begin(), defect.end());
  for (int a : chain) {
    c.expect(q.groupoid.leq(a, q.class_of(id)),
             "defect identities lie below [id]");
    c.expect(q.groupoid.is_identity(a), "defect classes are identities");
    for (int b : chain) {
      c.expect(q.groupoid.leq(a, b) || q.groupoid.leq(b, a),
               "defect identities must be totally ordered");
    }
  }
}

// --- criterion 4 -----------------------------------------------------------

void criterion_gauge(Checker& c) {
  using namespace poly;
  c.expect(gauge_is_normal(2, 4), "G_2 must pass the normality scan at L=4");

  std::vector<PolyElem> elems{PolyElem::zero_elem()};
  for (const auto& u : all_words(2, 4)) {
    for (const auto& v : all_words(2, 4)) {
      elems.push_back(PolyElem::pair(u, v));
    }
  }
  long contradictions = 0;
  long inconclusive = 0;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      Tri got = gauge_leq_search(2, x, y, 4);
      if (got == Tri::unknown) {
        ++inconclusive;
        continue;
      }
      if ((got == Tri::yes) != gauge_leq(x, y)) {
        ++contradictions;
      }
    }
  }
  c.expect(contradictions == 0, "closed form must agree with the search");
  c.expect(inconclusive == 0, "all pairs within L=4 must be conclusive");

  // class composition on indices <= 3 against the Brandt fixture
  FiniteInvSemigroup b = brandt_semigroup(3);
  int m = 4;
  auto decode = [&](elem x) {
    if (x == 0) return GaugeClass{true, 0, 0};
    return GaugeClass{false, (x - 1) / m, (x - 1) % m};
  };
  auto encode = [&](const GaugeClass& g) {
    return g.zero ? 0 : 1 + g.i * m + g.j;
  };
  for (elem x = 0; x < b.size(); ++x) {
    for (elem y = 0; y < b.size(); ++y) {
      auto comp = quotient_class_compose(decode(x), decode(y));
      elem want = b.mul(x, y);
      c.expect(comp ? encode(*comp) == want : want == 0,
               "class table must match the Brandt fixture");
    }
  }
}

// --- criterion 5 -----------------------------------------------------------

void criterion_congruence_theory(Checker& c) {
  for (const auto& [name, S] : small_fixtures()) {
    CongruenceLattice lattice = all_congruences(S);
    for (const auto& rho : lattice.congruences) {
      Bitset k = rho.kernel();
      Partition t = rho.trace();
      c.expect(validate_pair(S, k, t).ok(),
               name + ": (ker, tr) must validate");
      c.expect(rho_from_pair(S, k, t).partition() == rho.partition(),
               name + ": kernel-trace round trip must be exact");
    }
    NormalLattice normals = enumerate_normal(S);
    for (const auto& N : normals.normals) {
      bool kp = has_kernel_property(N);
      if (kp) {
        bool jn_normal = is_normal_idempotent_congruence(
            S, green_j_on_idempotents(N));
        bool simeq_cong = is_simeq_congruence(S, N.members);
        c.expect(simeq_cong == jn_normal,
                 name + ": simeq congruence iff J_N normal congruence");
        c.expect(minimality_check(S, N.members),
                 name + ": simeq_N must refine every congruence with kernel N");
      }
      if (is_clifford(N)) {
        c.expect(idempotent_separating_check(S, N.members).ok(),
                 name + ": idempotent-separating proposition");
      }
    }
  }
}

// --- criterion 6 -----------------------------------------------------------

void criterion_factorization(Checker& c) {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  FiniteInvSemigroup i3 = symmetric_inverse_monoid(3);
  FiniteInvSemigroup s6 = example_S6();
  FiniteInvSemigroup z2 = cyclic_group(2);
  FiniteInvSemigroup prod = i2_times_z2();

  Congruence sig2 = minimal_group_congruence(i2);
  Congruence sig3 = minimal_group_congruence(i3);
  FiniteInvSemigroup q2 = sig2.quotient();
  FiniteInvSemigroup q3 = sig3.quotient();
  std::vector<elem> proj(static_cast<std::size_t>(prod.size()));
  for (elem x = 0; x < prod.size(); ++x) {
    proj[static_cast<std::size_t>(x)] = x % 2;
  }

  std::vector<std::pair<std::string, Homomorphism>> homs;
  homs.emplace_back("id_{I_2}", Homomorphism::identity_on(i2));
  homs.emplace_back("id_{S6}", Homomorphism::identity_on(s6));
  homs.emplace_back("sigma_{I_2}", Homomorphism(i2, q2, sig2.quotient_map()));
  homs.emplace_back("sigma_{I_3}", Homomorphism(i3, q3, sig3.quotient_map()));
  homs.emplace_back("proj_{I_2 x Z_2}", Homomorphism(prod, z2, proj));

  for (const auto& [name, phi] : homs) {
    Factorization f = factorize_hom(phi);
    for (elem s = 0; s < phi.source().size(); ++s) {
      c.expect(f.kappa_map[static_cast<std::size_t>(f.quotient.class_of(s))]
                   == phi(s),
               name + ": pi . kappa must equal phi");
    }
    c.expect(is_star_injective(f.kappa()), name + ": kappa star-injective");
    std::set<elem> image(phi.map().begin(), phi.map().end());
    if (image.size() == static_cast<std::size_t>(phi.target().size())) {
      c.expect(f.kappa().is_surjective(),
               name + ": kappa surjective for surjective phi");
    }

    NormalLattice normals = enumerate_normal(phi.source());
    for (const auto& N : normals.normals) {
      bool accepted = second_leg_exists(phi, N.members);
      c.expect(accepted == (N.members == f.K),
               name + ": star-injective second leg iff N = K");
      c.expect(uniqueness_check(phi, N.members) == accepted,
               name + ": uniqueness check consistency");
    }
  }
}

// --- criterion 7 -----------------------------------------------------------

void criterion_product_example(Checker& c) {
  FiniteInvSemigroup prod = i2_times_z2();
  Bitset N(static_cast<std::size_t>(prod.size()));
  for (elem x = 0; x < prod.size(); ++x) {
    if (x % 2 == 0) N.set(static_cast<std::size_t>(x));  // I_2 x {1}
  }
  Subsemigroup handle{&prod, N};
  c.expect(is_normal(handle) && is_closed(handle),
           "I_2 x {1} must be closed and normal");

  Congruence coset = coset_congruence(prod, N);
  c.expect(coset.num_classes() == 2, "coset classes must biject with Z_2");
  FiniteInvSemigroup g = coset.quotient();
  c.expect(g.is_group() && g.size() == 2, "S/==_N must be Z_2");

  NQuotient q = build_quotient(prod, N);
  c.expect(q.classes.num_classes() == 6, "S // N must have 6 classes");
  c.expect(og_isomorphic(q.groupoid, poset_chain_times_group(3, 2)),
           "S // N must be (I_2/J) x Z_2 as ordered groupoids");

  // kappa: S // N -> S/==_N is surjective and star-injective but not
  // injective, since I_2 is not simple
  Homomorphism phi(prod, g, coset.quotient_map());
  Factorization f = factorize_hom(phi);
  c.expect(f.K == N, "ker phi must be N");
  c.expect(is_star_injective(f.kappa()), "kappa star-injective");
  c.expect(f.kappa().is_surjective(), "kappa surjective");
  std::set<int> images(f.kappa_map.begin(), f.kappa_map.end());
  c.expect(images.size() < f.kappa_map.size(), "kappa must not be injective");
}

// --- criterion 8 -----------------------------------------------------------

void criterion_presentations(Checker& c, unsigned seed) {
  FiniteInvSemigroup i2 = symmetric_inverse_monoid(2);
  elem tau = pbe(i2, PartialBijection(2, {2, 1}));
  elem eps = pbe(i2, PartialBijection(2, {1, 0}));
  elem id2 = pbe(i2, PartialBijection(2, {0, 2}));
  elem f = pbe(i2, PartialBijection(2, {2, 0}));

  std::map<char, elem> first{{'t', tau}, {'e', eps}};
  c.expect(evaluate(i2, first, "Eete") == 0, "(e^{-1}ete) must evaluate to 0");
  c.expect(evaluate(i2, first, "te") == f, "(te) must evaluate to 1 -> 2");

  std::map<char, elem> second{{'a', eps}, {'b', id2}};
  c.expect(evaluate(i2, second, "babAB") == 0, "u must evaluate to 0");
  c.expect(evaluate(i2, second, "b") == id2, "v must evaluate to id_{2}");

  Presentation P = parse_presentation("ab=ba");
  MembershipResult r = bounded_n_membership(P, "babABB", 4);
  c.expect(r.yes, "babABB must be certified in N(P) at L <= 4");
  if (r.yes) {
    MunnTree acc = MunnTree::identity(P.alphabet);
    for (const auto& fw : r.certificate) {
      acc = munn_mul(acc, MunnTree::from_word(P.alphabet, fw));
    }
    c.expect(acc == MunnTree::from_word(P.alphabet, "babABB"),
             "certificate product must equal the element");
    for (const auto& fw : r.certificate) {
      c.expect(i2.is_idempotent(evaluate(i2, second, fw)),
               "certificate factors must land in the kernel");
    }
  }

  // Munn-model law suite on 1000 seeded random words
  std::mt19937 rng(seed);
  static const std::string symbols = "abAB";
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<MunnTree> trees;
  trees.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    std::string w;
    int l = len(rng);
    for (int j = 0; j < l; ++j) {
      w.push_back(symbols[static_cast<std::size_t>(pick(rng))]);
    }
    trees.push_back(MunnTree::from_word("ab", w));
  }
  bool laws = true;
  for (const auto& x : trees) {
    MunnTree xi = munn_inv(x);
    laws = laws && munn_mul(munn_mul(x, xi), x) == x;
    laws = laws && (x.is_idempotent() == x.endpoint().empty());
    laws = laws && (!x.is_idempotent() || munn_mul(x, x) == x);
  }
  for (std::size_t i = 0; i + 2 < trees.size(); i += 3) {
    laws = laws
           && munn_mul(munn_mul(trees[i], trees[i + 1]), trees[i + 2])
                  == munn_mul(trees[i], munn_mul(trees[i + 1], trees[i + 2]));
  }
  c.expect(laws, "Munn model laws must hold on 1000 seeded words");
}

// --- criterion 9 -----------------------------------------------------------

void criterion_property_suites(Checker& c) {
  for (const auto& [name, S] : small_fixtures()) {
    GreenRelations green = green_relations(S);
    auto rows_e = leq_N_matrix(S, S.idempotent_set());
    auto rows_s = leq_N_matrix(S, full_set(S));
    for (elem s = 0; s < S.size(); ++s) {
      for (elem t = 0; t < S.size(); ++t) {
        c.expect(rows_e[static_cast<std::size_t>(s)].test(
                     static_cast<std::size_t>(t))
                     == natural_leq(S, s, t),
                 name + ": leq_E coincides with the natural order");
        c.expect(rows_s[static_cast<std::size_t>(s)].test(
                     static_cast<std::size_t>(t))
                     == green.j_preorder(s, t),
                 name + ": leq_S coincides with the J-preorder");
      }
    }

    NormalLattice normals = enumerate_normal(S);
    for (const auto& N : normals.normals) {
      auto rows = leq_N_matrix(S, N.members);
      auto leq = [&](elem s, elem t) {
        return rows[static_cast<std::size_t>(s)].test(
            static_cast<std::size_t>(t));
      };
      for (elem s = 0; s < S.size(); ++s) {
        c.expect(leq(s, s), name + ": leq_N reflexive");
        bool below_idem = false;
        for (elem e : S.idempotents()) below_idem = below_idem || leq(s, e);
        c.expect(below_idem == N.contains(s), name + ": below an idempotent iff in N");
        if (leq(s, S.mul(s, s))) {
          c.expect(N.contains(s), name + ": s below s^2 forces s in N");
        }
        for (elem t = 0; t < S.size(); ++t) {
          if (natural_leq(S, s, t)) {
            c.expect(leq(s, t), name + ": natural order lies inside leq_N");
          }
          if (leq(s, t)) {
            c.expect(N.contains(S.mul(s, S.inv(t))), name + ": leq_N pushes s t^{-1} into N");
            c.expect(rows[static_cast<std::size_t>(t)].is_subset_of(
                         rows[static_cast<std::size_t>(s)]),
                     name + ": leq_N transitive");
          }
        }
      }

      Partition p = simeq_N(S, N.members);
      N.members.for_each([&](std::size_t ni) {
        elem m = static_cast<elem>(ni);
        c.expect(p.related(m, S.dom_idem(m)) && p.related(m, S.inv(m))
                     && p.related(m, S.ran_idem(m)),
                 name + ": members meet their idempotents");
      });
      Bitset from_classes(static_cast<std::size_t>(S.size()));
      for (elem e : S.idempotents()) {
        for (int m : p.cls(p.class_of(e))) {
          from_classes.set(static_cast<std::size_t>(m));
        }
      }
      c.expect(from_classes == N.members, name + ": N is the union of idempotent classes");
      for (elem s = 0; s < S.size(); ++s) {
        for (elem t = 0; t < S.size(); ++t) {
          if (!p.related(s, t)) continue;
          c.expect(p.related(S.inv(s), S.inv(t))
                       && p.related(S.dom_idem(s), S.dom_idem(t))
                       && p.related(S.ran_idem(s), S.ran_idem(t)),
                   name + ": simeq respects inv and dom/ran");
        }
      }
      Partition jn = green_j_on_idempotents(N);
      const auto& idems = S.idempotents();
      for (std::size_t i = 0; i < idems.size(); ++i) {
        for (std::size_t j = 0; j < idems.size(); ++j) {
          c.expect(p.related(idems[i], idems[j])
                       == jn.related(static_cast<int>(i), static_cast<int>(j)),
                   name + ": simeq on E(S) is J_N");
        }
      }

      // OG axioms and composition-witness independence on the quotient
      NQuotient q = build_quotient(S, N.members);
      c.expect(q.groupoid.verify_axioms().ok(), name + ": OG axioms");
      std::size_t k = q.classes.num_classes();
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          int comp = q.groupoid.comp(static_cast<int>(a), static_cast<int>(b));
          if (comp == -1) continue;
          elem s = q.rep(static_cast<int>(a));
          elem t = q.rep(static_cast<int>(b));
          N.members.for_each([&](std::size_t wi) {
            elem w = static_cast<elem>(wi);
            if (S.ran_idem(w) == S.dom_idem(t)
                && natural_leq(S, S.dom_idem(w), S.ran_idem(s))) {
              c.expect(q.class_of(S.mul(S.mul(s, w), t)) == comp,
                       name + ": witness independence");
            }
          });
        }
      }
    }
    // simeq_S is Green's J; simeq_E is trivial
    c.expect(simeq_N(S, full_set(S)) == green.j, name + ": simeq_S is Green's J");
    c.expect(simeq_N(S, S.idempotent_set())
                 == Partition::identity(static_cast<std::size_t>(S.size())),
             name + ": simeq_E is trivial");

    c.expect(preorder_embedding_check(S), name + ": poset embedding");
  }
}

CriterionResult run_one(int id, const std::string& name, double budget,
                        const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail << "exception: " << e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  return CriterionResult{id, name, c.pass, secs, budget, c.detail.str()};
}

}  // namespace

std::vector<std::pair<std::string, FiniteInvSemigroup>> small_fixtures() {
  std::vector<std::pair<std::string, FiniteInvSemigroup>> out;
  out.emplace_back("I_2", symmetric_inverse_monoid(2));
  out.emplace_back("I_3", symmetric_inverse_monoid(3));
  out.emplace_back("S6", example_S6());
  out.emplace_back("T", example_T());
  out.emplace_back("B_1", brandt_semigroup(1));
  out.emplace_back("B_3", brandt_semigroup(3));
  out.emplace_back("I_2xZ_2", i2_times_z2());
  out.emplace_back("S_3", symmetric_group_s3());
  out.emplace_back("Z_4", cyclic_group(4));
  out.emplace_back("E_4", chain_semilattice(4));
  return out;
}

std::vector<CriterionResult> run_paper_suite(unsigned seed) {
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "simeq classes and failed congruence on S6",
                            1.0, criterion_example_a));
  results.push_back(run_one(2, "T: J-classes are not a semilattice", 1.0,
                            criterion_example_b));
  results.push_back(run_one(3, "I_n // S_n for n = 2, 3", 5.0, [](Checker& c) {
    criterion_in_mod_sn(c, 2);
    criterion_in_mod_sn(c, 3);
  }));
  results.push_back(
      run_one(4, "gauge monoid in P_2 at L = 4", 30.0, criterion_gauge));
  results.push_back(run_one(5, "congruence theory over small fixtures", 60.0,
                            criterion_congruence_theory));
  results.push_back(
      run_one(6, "homomorphism factorization suite", 30.0,
              criterion_factorization));
  results.push_back(run_one(7, "I_2 x Z_2 modulo I_2 x {1}", 5.0,
                            criterion_product_example));
  results.push_back(run_one(8, "free inverse monoid examples", 30.0,
                            [seed](Checker& c) {
                              criterion_presentations(c, seed);
                            }));
  results.push_back(run_one(9, "order, class and groupoid property suites", 120.0,
                            criterion_property_suites));
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.ok(); });
}

}  // namespace isq
