#include "isq/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "isq/errors.hpp"

namespace isq {

namespace {

// Position of an idempotent within S.idempotents().
std::vector<int> idempotent_positions(const FiniteInvSemigroup& S) {
  std::vector<int> pos(static_cast<std::size_t>(S.size()), -1);
  const auto& ids = S.idempotents();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  }
  return pos;
}

}  // namespace

bool is_congruence_partition(const FiniteInvSemigroup& S, const Partition& p) {
  if (p.size() != static_cast<std::size_t>(S.size())) {
    return false;
  }
  for (const auto& cls : p.classes()) {
    elem s = cls.front();
    for (elem t : cls) {
      if (t == s) continue;
      for (elem u = 0; u < S.size(); ++u) {
        if (!p.related(S.mul(u, s), S.mul(u, t))
            || !p.related(S.mul(s, u), S.mul(t, u))) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence Congruence::from_partition(const FiniteInvSemigroup& S,
                                      Partition p) {
  if (p.size() != static_cast<std::size_t>(S.size())) {
    throw InputError("congruence partition size mismatch");
  }
  if (!is_congruence_partition(S, p)) {
    throw InputError("partition is not compatible with multiplication");
  }
  return Congruence(S, std::move(p));
}

Congruence Congruence::identity(const FiniteInvSemigroup& S) {
  return Congruence(S, Partition::identity(static_cast<std::size_t>(S.size())));
}

Congruence Congruence::universal(const FiniteInvSemigroup& S) {
  return Congruence(S,
                    Partition::universal(static_cast<std::size_t>(S.size())));
}

Bitset Congruence::kernel() const {
  Bitset k(static_cast<std::size_t>(S_->size()));
  for (elem e : S_->idempotents()) {
    for (elem m : p_.cls(p_.class_of(e))) {
      k.set(static_cast<std::size_t>(m));
    }
  }
  return k;
}

Partition Congruence::trace() const {
  const auto& ids = S_->idempotents();
  std::vector<int> labels(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    labels[i] = p_.class_of(ids[i]);
  }
  return Partition::from_labels(labels);
}

FiniteInvSemigroup Congruence::quotient() const {
  std::size_t k = p_.num_classes();
  TableData data;
  data.mul.assign(k, std::vector<elem>(k));
  data.inv.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    elem s = p_.cls(static_cast<int>(c)).front();
    data.inv[c] = p_.class_of(S_->inv(s));
    for (std::size_t d = 0; d < k; ++d) {
      elem t = p_.cls(static_cast<int>(d)).front();
      data.mul[c][d] = p_.class_of(S_->mul(s, t));
    }
  }
  return FiniteInvSemigroup::from_table(std::move(data),
                                        /*trusted=*/k > 512);
}

std::vector<elem> Congruence::quotient_map() const {
  std::vector<elem> map(static_cast<std::size_t>(S_->size()));
  for (elem s = 0; s < S_->size(); ++s) {
    map[static_cast<std::size_t>(s)] = p_.class_of(s);
  }
  return map;
}

Congruence congruence_from_pairs(
    const FiniteInvSemigroup& S,
    const std::vector<std::pair<elem, elem>>& pairs) {
  std::size_t n = static_cast<std::size_t>(S.size());
  UnionFind uf(n);
  std::deque<std::pair<elem, elem>> work(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) {
    S.check_elem(a);
    S.check_elem(b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) {
      continue;
    }
    // every merge propagates through both translations
    for (elem u = 0; u < S.size(); ++u) {
      work.emplace_back(S.mul(u, a), S.mul(u, b));
      work.emplace_back(S.mul(a, u), S.mul(b, u));
    }
  }
  return Congruence::from_partition(S, uf.to_partition());
}

bool is_normal_idempotent_congruence(const FiniteInvSemigroup& S,
                                     const Partition& nu) {
  const auto& ids = S.idempotents();
  if (nu.size() != ids.size()) {
    return false;
  }
  std::vector<int> pos = idempotent_positions(S);
  auto related = [&](elem e, elem f) {
    return nu.related(pos[static_cast<std::size_t>(e)],
                      pos[static_cast<std::size_t>(f)]);
  };
  for (elem e : ids) {
    for (elem f : ids) {
      if (!related(e, f)) continue;
      // a congruence on the semilattice E(S)
      for (elem g : ids) {
        if (!related(S.mul(e, g), S.mul(f, g))) {
          return false;
        }
      }
      // stability under conjugation
      for (elem s = 0; s < S.size(); ++s) {
        elem ce = S.mul(S.mul(S.inv(s), e), s);
        elem cf = S.mul(S.mul(S.inv(s), f), s);
        if (!related(ce, cf)) {
          return false;
        }
      }
    }
  }
  return true;
}

Report validate_pair(const FiniteInvSemigroup& S, const Bitset& K,
                     const Partition& nu) {
  Report rep;
  Subsemigroup handle{&S, K};
  if (!is_closed_under_ops(S, K) || K.none()) {
    rep.add("K is not an inverse subsemigroup");
    return rep;
  }
  if (!is_normal(handle)) {
    rep.add("K is not normal");
  }
  if (!is_normal_idempotent_congruence(S, nu)) {
    rep.add("nu is not a normal congruence on E(S)");
  }
  std::vector<int> pos = idempotent_positions(S);
  auto related = [&](elem e, elem f) {
    return nu.related(pos[static_cast<std::size_t>(e)],
                      pos[static_cast<std::size_t>(f)]);
  };
  // CP1: se in K and s^{-1}s nu e imply s in K
  for (elem s = 0; s < S.size(); ++s) {
    for (elem e : S.idempotents()) {
      if (K.test(static_cast<std::size_t>(S.mul(s, e)))
          && related(S.ran_idem(s), e)
          && !K.test(static_cast<std::size_t>(s))) {
        rep.add("condition CP1 fails at s=" + S.elem_name(s)
                + ", e=" + S.elem_name(e));
      }
    }
  }
  // CP2: u in K implies u u^{-1} nu u^{-1} u
  K.for_each([&](std::size_t ui) {
    elem u = static_cast<elem>(ui);
    if (!related(S.dom_idem(u), S.ran_idem(u))) {
      rep.add("condition CP2 fails at u=" + S.elem_name(u));
    }
  });
  return rep;
}

Congruence rho_from_pair(const FiniteInvSemigroup& S, const Bitset& K,
                         const Partition& nu) {
  Report rep = validate_pair(S, K, nu);
  if (!rep.ok()) {
    throw InputError("not a congruence pair:\n" + rep.summary());
  }
  std::vector<int> pos = idempotent_positions(S);
  std::size_t n = static_cast<std::size_t>(S.size());
  UnionFind uf(n);
  for (elem s = 0; s < S.size(); ++s) {
    for (elem t = 0; t < S.size(); ++t) {
      if (K.test(static_cast<std::size_t>(S.mul(s, S.inv(t))))
          && nu.related(pos[static_cast<std::size_t>(S.ran_idem(s))],
                        pos[static_cast<std::size_t>(S.ran_idem(t))])) {
        uf.unite(s, t);
      }
    }
  }
  Congruence rho = Congruence::from_partition(S, uf.to_partition());
  if (rho.kernel() != K || !(rho.trace() == nu)) {
    throw InternalError("rho_{(K,nu)} does not recover its kernel and trace");
  }
  return rho;
}

Congruence minimal_group_congruence(const FiniteInvSemigroup& S) {
  std::size_t n = static_cast<std::size_t>(S.size());
  UnionFind uf(n);
  for (elem s = 0; s < S.size(); ++s) {
    for (elem t = 0; t < S.size(); ++t) {
      for (elem e : S.idempotents()) {
        if (S.mul(e, s) == S.mul(e, t)) {
          uf.unite(s, t);
          break;
        }
      }
    }
  }
  Congruence sigma = Congruence::from_partition(S, uf.to_partition());
  FiniteInvSemigroup q = sigma.quotient();
  if (!q.is_group()) {
    throw InternalError("S/sigma is not a group");
  }
  return sigma;
}

Congruence coset_congruence(const FiniteInvSemigroup& S, const Bitset& N) {
  Subsemigroup handle = make_subsemigroup(S, N);
  if (!is_normal(handle)) {
    throw NotNormalError("coset_congruence: N is not normal");
  }
  if (!is_closed(handle)) {
    throw InputError("coset_congruence: N is not closed");
  }
  std::size_t n = static_cast<std::size_t>(S.size());
  UnionFind uf(n);
  for (elem a = 0; a < S.size(); ++a) {
    for (elem b = 0; b < S.size(); ++b) {
      if (N.test(static_cast<std::size_t>(S.mul(a, S.inv(b))))) {
        uf.unite(a, b);
      }
    }
  }
  Congruence c = Congruence::from_partition(S, uf.to_partition());
  if (!minimal_group_congruence(S).partition().refines(c.partition())) {
    throw InternalError("coset congruence does not contain sigma");
  }
  if (c.kernel() != N) {
    throw InternalError("coset congruence kernel is not N");
  }
  return c;
}

bool is_simeq_congruence(const FiniteInvSemigroup& S, const Bitset& N) {
  Partition p = simeq_N(S, N);
  bool compatible = is_congruence_partition(S, p);
  Subsemigroup handle{&S, N};
  if (is_full(handle) && has_kernel_property(handle)) {
    // theorem: compatibility iff J_N is a normal congruence on E(S)
    bool jn_normal =
        is_normal_idempotent_congruence(S, green_j_on_idempotents(handle));
    if (compatible != jn_normal) {
      throw InternalError(
          "simeq congruence test disagrees with the J_N criterion");
    }
  }
  return compatible;
}

bool minimality_check(const FiniteInvSemigroup& S, const Bitset& N) {
  Partition p = simeq_N(S, N);
  CongruenceLattice lattice = all_congruences(S);
  for (const auto& rho : lattice.congruences) {
    if (rho.kernel() == N && !p.refines(rho.partition())) {
      return false;
    }
  }
  return true;
}

Report idempotent_separating_check(const FiniteInvSemigroup& S,
                                   const Bitset& K) {
  Subsemigroup handle = make_subsemigroup(S, K);
  if (!is_normal(handle)) {
    throw NotNormalError("idempotent_separating_check: K is not normal");
  }
  if (!is_clifford(handle)) {
    throw InputError("idempotent_separating_check: K is not Clifford");
  }
  Report rep;
  // s rho t iff s t^{-1} in K and s^{-1}s = t^{-1}t
  std::size_t n = static_cast<std::size_t>(S.size());
  UnionFind uf(n);
  for (elem s = 0; s < S.size(); ++s) {
    for (elem t = 0; t < S.size(); ++t) {
      if (K.test(static_cast<std::size_t>(S.mul(s, S.inv(t))))
          && S.ran_idem(s) == S.ran_idem(t)) {
        uf.unite(s, t);
      }
    }
  }
  Partition p = uf.to_partition();
  if (!is_congruence_partition(S, p)) {
    rep.add("the idempotent-separating relation is not a congruence");
    return rep;
  }
  Congruence rho = Congruence::from_partition(S, p);
  if (!(rho.trace() == Partition::identity(S.idempotents().size()))) {
    rep.add("rho is not idempotent separating");
  }
  if (rho.kernel() != K) {
    rep.add("rho has kernel different from K");
  }
  if (!(simeq_N(S, K) == p)) {
    rep.add("rho and simeq_K differ as partitions");
  }
  // kappa: S // K -> S / rho is an isomorphism of inverse semigroups
  NQuotient q = build_quotient(S, K);
  if (!is_inductive_quotient(q)) {
    rep.add("S // K is not inductive");
    return rep;
  }
  FiniteInvSemigroup q1 = quotient_inverse_semigroup(q);
  FiniteInvSemigroup q2 = rho.quotient();
  if (q1.size() != q2.size()) {
    rep.add("S // K and S / rho have different sizes");
    return rep;
  }
  // [s]_K and rho(s) classes coincide elementwise, so the map is the
  // identity on class indices once both are canonically labelled
  for (elem s = 0; s < S.size(); ++s) {
    if (q.class_of(s) != p.class_of(s)) {
      rep.add("kappa is not well-defined as a bijection");
      return rep;
    }
  }
  for (elem c = 0; c < q1.size(); ++c) {
    for (elem d = 0; d < q1.size(); ++d) {
      if (q1.mul(c, d) != q2.mul(c, d)) {
        rep.add("kappa is not multiplicative");
        return rep;
      }
    }
  }
  return rep;
}

CongruencePair induced_pair_from_functor(const FiniteInvSemigroup& S,
                                         const NQuotient& q,
                                         const OGFunctor& psi,
                                         const FiniteInvSemigroup& Q) {
  if (&psi.source() != &q.groupoid) {
    throw InputError("psi must have S // N as its source");
  }
  if (psi.target().size() != Q.size()) {
    throw InputError("psi's target does not match Q");
  }
  for (elem x = 0; x < Q.size(); ++x) {
    if (psi.target().is_identity(x) != Q.is_idempotent(x)) {
      throw InputError("psi's target does not match Q's idempotents");
    }
  }
  if (!psi.is_surjective()) {
    throw InputError("psi is not surjective");
  }
  if (!is_star_injective(psi)) {
    throw InputError("psi is not star-injective");
  }
  const auto& ids = S.idempotents();
  std::vector<int> labels(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    labels[i] = psi(q.class_of(ids[i]));
  }
  CongruencePair pair{q.N, Partition::from_labels(labels)};
  Report rep = validate_pair(S, pair.kernel, pair.trace);
  if (!rep.ok()) {
    throw InternalError("(N, nu) fails the congruence pair conditions:\n"
                        + rep.summary());
  }
  // rho_{(N,nu)} is the congruence of the composite s -> psi([s]_N)
  Congruence rho = rho_from_pair(S, pair.kernel, pair.trace);
  std::vector<int> composite(static_cast<std::size_t>(S.size()));
  for (elem s = 0; s < S.size(); ++s) {
    composite[static_cast<std::size_t>(s)] = psi(q.class_of(s));
  }
  if (!(Partition::from_labels(composite) == rho.partition())) {
    throw InternalError(
        "rho_{(N,nu)} differs from the congruence of the composite");
  }
  return pair;
}

CongruenceLattice all_congruences(const FiniteInvSemigroup& S,
                                  std::size_t cap) {
  std::size_t n = static_cast<std::size_t>(S.size());
  if (n > cap) {
    throw SizeLimitError("all_congruences: size cap of " + std::to_string(cap)
                         + " exceeded");
  }
  std::set<Partition> seen;
  std::deque<Partition> fresh;
  auto add = [&](const Partition& p) {
    if (seen.insert(p).second) {
      fresh.push_back(p);
    }
  };
  add(Partition::identity(n));
  for (elem a = 0; a < S.size(); ++a) {
    for (elem b = a + 1; b < S.size(); ++b) {
      add(congruence_from_pairs(S, {{a, b}}).partition());
    }
  }
  // iterated binary joins to a fixed point
  std::vector<Partition> stable;
  while (!fresh.empty()) {
    Partition p = fresh.front();
    fresh.pop_front();
    std::vector<Partition> against(stable.begin(), stable.end());
    stable.push_back(p);
    for (const auto& other : against) {
      std::vector<std::pair<elem, elem>> pairs;
      for (const auto& cls : p.classes()) {
        for (int x : cls) pairs.emplace_back(cls.front(), x);
      }
      for (const auto& cls : other.classes()) {
        for (int x : cls) pairs.emplace_back(cls.front(), x);
      }
      add(congruence_from_pairs(S, pairs).partition());
    }
  }
  std::vector<Partition> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  CongruenceLattice lattice;
  for (auto& p : sorted) {
    lattice.congruences.push_back(Congruence::from_partition(S, p));
  }
  std::size_t k = lattice.congruences.size();
  lattice.refines.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      lattice.refines[i][j] = lattice.congruences[i].partition().refines(
          lattice.congruences[j].partition());
    }
  }
  return lattice;
}

}  // namespace isq
