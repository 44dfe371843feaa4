#include "isq/green.hpp"

#include <deque>

namespace isq {

Bitset principal_ideal(const FiniteInvSemigroup& S, elem s) {
  S.check_elem(s);
  std::size_t n = static_cast<std::size_t>(S.size());
  Bitset ideal(n);
  std::deque<elem> queue{s};
  ideal.set(static_cast<std::size_t>(s));
  while (!queue.empty()) {
    elem x = queue.front();
    queue.pop_front();
    for (elem u = 0; u < S.size(); ++u) {
      for (elem y : {S.mul(u, x), S.mul(x, u)}) {
        if (!ideal.test(static_cast<std::size_t>(y))) {
          ideal.set(static_cast<std::size_t>(y));
          queue.push_back(y);
        }
      }
    }
  }
  return ideal;
}

GreenRelations green_relations(const FiniteInvSemigroup& S) {
  std::size_t n = static_cast<std::size_t>(S.size());
  GreenRelations g;

  // In an inverse semigroup R and L are determined by the domain and range
  // idempotents.
  std::vector<int> r_label(n), l_label(n);
  for (std::size_t s = 0; s < n; ++s) {
    r_label[s] = S.dom_idem(static_cast<elem>(s));
    l_label[s] = S.ran_idem(static_cast<elem>(s));
  }
  g.r = Partition::from_labels(r_label);
  g.l = Partition::from_labels(l_label);

  UnionFind d_uf(n);
  for (std::size_t s = 0; s < n; ++s) {
    d_uf.unite(static_cast<int>(s), r_label[s]);
    d_uf.unite(static_cast<int>(s), l_label[s]);
  }
  g.d = d_uf.to_partition();

  // J via principal ideals, computed once per D-class representative
  // (D refines J, so members of one D-class share their ideal).
  std::size_t nd = g.d.num_classes();
  std::vector<Bitset> ideal_of_d(nd);
  for (std::size_t c = 0; c < nd; ++c) {
    ideal_of_d[c] = principal_ideal(S, g.d.cls(static_cast<int>(c)).front());
  }
  UnionFind j_uf(n);
  for (std::size_t a = 0; a < nd; ++a) {
    for (std::size_t b = a + 1; b < nd; ++b) {
      if (ideal_of_d[a] == ideal_of_d[b]) {
        j_uf.unite(g.d.cls(static_cast<int>(a)).front(),
                   g.d.cls(static_cast<int>(b)).front());
      }
    }
  }
  for (std::size_t c = 0; c < nd; ++c) {
    const auto& cls = g.d.cls(static_cast<int>(c));
    for (int x : cls) {
      j_uf.unite(cls.front(), x);
    }
  }
  g.j = j_uf.to_partition();

  std::size_t nj = g.j.num_classes();
  std::vector<Bitset> ideal_of_j(nj);
  for (std::size_t c = 0; c < nj; ++c) {
    ideal_of_j[c] = principal_ideal(S, g.j.cls(static_cast<int>(c)).front());
  }
  g.j_class_leq.assign(nj, std::vector<bool>(nj, false));
  for (std::size_t a = 0; a < nj; ++a) {
    for (std::size_t b = 0; b < nj; ++b) {
      g.j_class_leq[a][b] = ideal_of_j[a].is_subset_of(ideal_of_j[b]);
    }
  }
  return g;
}

}  // namespace isq
