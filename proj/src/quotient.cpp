#include "isq/quotient.hpp"

#include <algorithm>
#include <thread>

#include "isq/errors.hpp"

namespace isq {

namespace {

void require_normal(const FiniteInvSemigroup& S, const Bitset& N) {
  Subsemigroup handle = make_subsemigroup(S, N);
  if (!is_normal(handle)) {
    throw NotNormalError("subset is not a normal inverse subsemigroup");
  }
}

// Witness lists per idempotent: members of N grouped by their range and
// domain idempotents.
struct WitnessIndex {
  std::vector<std::vector<elem>> by_ran;  // a with a^{-1}a = e
  std::vector<std::vector<elem>> by_dom;  // b with b b^{-1} = e
};

WitnessIndex index_witnesses(const FiniteInvSemigroup& S, const Bitset& N) {
  WitnessIndex w;
  std::size_t n = static_cast<std::size_t>(S.size());
  w.by_ran.assign(n, {});
  w.by_dom.assign(n, {});
  N.for_each([&](std::size_t i) {
    elem a = static_cast<elem>(i);
    w.by_ran[static_cast<std::size_t>(S.ran_idem(a))].push_back(a);
    w.by_dom[static_cast<std::size_t>(S.dom_idem(a))].push_back(a);
  });
  return w;
}

// Row s of <=_N: values a s b over admissible witnesses, then the upward
// cone of those values in the natural order.
Bitset leq_row(const FiniteInvSemigroup& S, const WitnessIndex& w, elem s) {
  std::size_t n = static_cast<std::size_t>(S.size());
  Bitset vals(n);
  const auto& as = w.by_ran[static_cast<std::size_t>(S.dom_idem(s))];
  const auto& bs = w.by_dom[static_cast<std::size_t>(S.ran_idem(s))];
  for (elem a : as) {
    elem as_prod = S.mul(a, s);
    for (elem b : bs) {
      vals.set(static_cast<std::size_t>(S.mul(as_prod, b)));
    }
  }
  Bitset row(n);
  vals.for_each([&](std::size_t v) {
    for (elem t = 0; t < S.size(); ++t) {
      if (natural_leq(S, static_cast<elem>(v), t)) {
        row.set(static_cast<std::size_t>(t));
      }
    }
  });
  return row;
}

std::vector<Bitset> leq_matrix_unchecked(const FiniteInvSemigroup& S,
                                         const Bitset& N) {
  std::size_t n = static_cast<std::size_t>(S.size());
  WitnessIndex w = index_witnesses(S, N);
  std::vector<Bitset> rows(n);
  std::size_t workers =
      n >= 128 ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
               : 1;
  if (workers <= 1) {
    for (std::size_t s = 0; s < n; ++s) {
      rows[s] = leq_row(S, w, static_cast<elem>(s));
    }
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t s = t; s < n; s += workers) {
          rows[s] = leq_row(S, w, static_cast<elem>(s));
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  return rows;
}

}  // namespace

bool leq_N(const FiniteInvSemigroup& S, const Bitset& N, elem s, elem t) {
  S.check_elem(s);
  S.check_elem(t);
  require_normal(S, N);
  WitnessIndex w = index_witnesses(S, N);
  return leq_row(S, w, s).test(static_cast<std::size_t>(t));
}

std::vector<Bitset> leq_N_matrix(const FiniteInvSemigroup& S,
                                 const Bitset& N) {
  require_normal(S, N);
  return leq_matrix_unchecked(S, N);
}

Partition simeq_N(const FiniteInvSemigroup& S, const Bitset& N) {
  std::vector<Bitset> rows = leq_N_matrix(S, N);
  std::size_t n = rows.size();
  UnionFind uf(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (rows[s].test(t) && rows[t].test(s)) {
        uf.unite(static_cast<int>(s), static_cast<int>(t));
      }
    }
  }
  return uf.to_partition();
}

NQuotient build_quotient(const FiniteInvSemigroup& S, const Bitset& N,
                         bool verify) {
  require_normal(S, N);
  std::vector<Bitset> rows = leq_matrix_unchecked(S, N);
  std::size_t n = rows.size();

  UnionFind uf(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (rows[s].test(t) && rows[t].test(s)) {
        uf.unite(static_cast<int>(s), static_cast<int>(t));
      }
    }
  }
  Partition classes = uf.to_partition();
  std::size_t k = classes.num_classes();

  // simeq_N saturates N: idempotent classes stay inside N
  for (elem e : S.idempotents()) {
    for (elem m : classes.cls(classes.class_of(e))) {
      if (!N.test(static_cast<std::size_t>(m))) {
        throw InternalError("simeq_N does not saturate N");
      }
    }
  }

  OrderedGroupoid::Data d;
  d.is_identity.assign(k, false);
  d.dom.resize(k);
  d.ran.resize(k);
  d.inv.resize(k);
  d.comp.assign(k, std::vector<int>(k, -1));
  d.leq.assign(k, Bitset(k));
  for (elem e : S.idempotents()) {
    d.is_identity[static_cast<std::size_t>(classes.class_of(e))] = true;
  }

  for (std::size_t c = 0; c < k; ++c) {
    elem s = classes.cls(static_cast<int>(c)).front();
    d.dom[c] = classes.class_of(S.dom_idem(s));
    d.ran[c] = classes.class_of(S.ran_idem(s));
    d.inv[c] = classes.class_of(S.inv(s));
    if (verify) {
      // dom/ran/inv are class invariants (well-definedness of the structure)
      for (elem m : classes.cls(static_cast<int>(c))) {
        if (classes.class_of(S.dom_idem(m)) != d.dom[c]
            || classes.class_of(S.ran_idem(m)) != d.ran[c]
            || classes.class_of(S.inv(m)) != d.inv[c]) {
          throw InternalError("quotient dom/ran/inv not class-invariant");
        }
      }
    }
  }

  // class order induced by <=_N
  for (std::size_t c = 0; c < k; ++c) {
    elem s = classes.cls(static_cast<int>(c)).front();
    for (std::size_t e = 0; e < k; ++e) {
      elem t = classes.cls(static_cast<int>(e)).front();
      if (rows[static_cast<std::size_t>(s)].test(static_cast<std::size_t>(t))) {
        d.leq[c].set(e);
      }
    }
  }

  // composition witnesses
  NQuotient q;
  q.witness.assign(k, std::vector<elem>(k, -1));
  std::vector<elem> n_members = N.to_indices();
  for (std::size_t c = 0; c < k; ++c) {
    elem s = classes.cls(static_cast<int>(c)).front();
    for (std::size_t e = 0; e < k; ++e) {
      if (d.ran[c] != d.dom[e]) {
        continue;
      }
      elem t = classes.cls(static_cast<int>(e)).front();
      elem witness = -1;
      for (elem a : n_members) {
        if (S.ran_idem(a) == S.dom_idem(t)
            && natural_leq(S, S.dom_idem(a), S.ran_idem(s))) {
          witness = a;
          break;
        }
      }
      if (witness < 0) {
        throw InternalError("no composition witness for composable classes");
      }
      q.witness[c][e] = witness;
      d.comp[c][e] =
          classes.class_of(S.mul(S.mul(s, witness), t));
    }
  }

  d.leq_closed = true;  // quotient of a preorder by its symmetrization
  q.source = &S;
  q.N = N;
  q.classes = std::move(classes);
  q.groupoid = OrderedGroupoid::from_data(std::move(d));

  if (verify && k <= 400) {
    Report rep = q.groupoid.verify_axioms();
    if (!rep.ok()) {
      throw InternalError("quotient fails the ordered groupoid axioms:\n"
                          + rep.summary());
    }
  }
  return q;
}

bool is_inductive_quotient(const NQuotient& q) {
  return q.groupoid.is_inductive();
}

FiniteInvSemigroup quotient_inverse_semigroup(const NQuotient& q) {
  return esn_to(q.groupoid);
}

bool preorder_embedding_check(const FiniteInvSemigroup& S) {
  NormalLattice lattice = enumerate_normal(S);
  std::vector<std::vector<Bitset>> matrices;
  matrices.reserve(lattice.normals.size());
  for (const auto& N : lattice.normals) {
    matrices.push_back(leq_matrix_unchecked(S, N.members));
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = 0; j < matrices.size(); ++j) {
      if (i == j) continue;
      bool rel_contained = true;
      for (std::size_t s = 0; s < matrices[i].size(); ++s) {
        if (!matrices[i][s].is_subset_of(matrices[j][s])) {
          rel_contained = false;
          break;
        }
      }
      bool set_contained = lattice.includes[i][j];
      // injectivity: distinct N never share their relation
      if (matrices[i] == matrices[j]) {
        return false;
      }
      // order embedding in both directions
      if (set_contained != rel_contained) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace isq
