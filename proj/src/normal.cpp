#include "isq/normal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "isq/errors.hpp"

namespace isq {

bool is_closed_under_ops(const FiniteInvSemigroup& S, const Bitset& members) {
  std::vector<elem> ids = members.to_indices();
  for (elem x : ids) {
    if (!members.test(static_cast<std::size_t>(S.inv(x)))) {
      return false;
    }
    for (elem y : ids) {
      if (!members.test(static_cast<std::size_t>(S.mul(x, y)))) {
        return false;
      }
    }
  }
  return true;
}

Subsemigroup make_subsemigroup(const FiniteInvSemigroup& S, Bitset members) {
  if (members.size() != static_cast<std::size_t>(S.size())) {
    throw InputError("subsemigroup bitset size mismatch");
  }
  if (members.none()) {
    throw InputError("an inverse subsemigroup is nonempty");
  }
  if (!is_closed_under_ops(S, members)) {
    throw InputError("subset is not closed under mul and inv");
  }
  return Subsemigroup{&S, std::move(members)};
}

Subsemigroup make_subsemigroup(const FiniteInvSemigroup& S,
                               const std::vector<elem>& members) {
  for (elem x : members) {
    S.check_elem(x);
  }
  return make_subsemigroup(
      S, Bitset::from_indices(static_cast<std::size_t>(S.size()), members));
}

bool is_full(const Subsemigroup& N) {
  for (elem e : N.parent->idempotents()) {
    if (!N.contains(e)) {
      return false;
    }
  }
  return true;
}

bool is_normal(const Subsemigroup& N) {
  if (!is_full(N)) {
    return false;
  }
  const FiniteInvSemigroup& S = *N.parent;
  std::vector<elem> ids = N.members.to_indices();
  for (elem n : ids) {
    for (elem s = 0; s < S.size(); ++s) {
      if (!N.contains(S.mul(S.mul(S.inv(s), n), s))) {
        return false;
      }
    }
  }
  return true;
}

Subsemigroup normal_closure(const FiniteInvSemigroup& S, const Bitset& A) {
  if (A.size() != static_cast<std::size_t>(S.size())) {
    throw InputError("normal_closure: bitset size mismatch");
  }
  std::size_t n = static_cast<std::size_t>(S.size());
  Bitset members(n);
  std::deque<elem> queue;
  auto push = [&](elem x) {
    if (!members.test(static_cast<std::size_t>(x))) {
      members.set(static_cast<std::size_t>(x));
      queue.push_back(x);
    }
  };
  for (elem e : S.idempotents()) {
    push(e);
  }
  A.for_each([&](std::size_t i) { push(static_cast<elem>(i)); });
  std::vector<elem> seen;
  while (!queue.empty()) {
    elem x = queue.front();
    queue.pop_front();
    push(S.inv(x));
    for (elem s = 0; s < S.size(); ++s) {
      push(S.mul(S.mul(S.inv(s), x), s));
    }
    for (elem y : seen) {
      push(S.mul(x, y));
      push(S.mul(y, x));
    }
    push(S.mul(x, x));
    seen.push_back(x);
  }
  return Subsemigroup{&S, std::move(members)};
}

Subsemigroup normal_closure(const FiniteInvSemigroup& S,
                            const std::vector<elem>& A) {
  for (elem x : A) {
    S.check_elem(x);
  }
  return normal_closure(
      S, Bitset::from_indices(static_cast<std::size_t>(S.size()), A));
}

bool has_kernel_property(const Subsemigroup& N) {
  const FiniteInvSemigroup& S = *N.parent;
  std::vector<elem> ids = N.members.to_indices();
  for (elem s = 0; s < S.size(); ++s) {
    for (elem t = 0; t < S.size(); ++t) {
      if (!N.contains(S.mul(s, t))) {
        continue;
      }
      for (elem m : ids) {
        if (!N.contains(S.mul(S.mul(s, m), t))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_clifford(const Subsemigroup& N) {
  const FiniteInvSemigroup& S = *N.parent;
  bool ok = true;
  N.members.for_each([&](std::size_t i) {
    elem a = static_cast<elem>(i);
    if (S.dom_idem(a) != S.ran_idem(a)) {
      ok = false;
    }
  });
  return ok;
}

Bitset upward_closure(const FiniteInvSemigroup& S, const Bitset& A) {
  std::size_t n = static_cast<std::size_t>(S.size());
  Bitset up(n);
  A.for_each([&](std::size_t i) {
    for (elem s = 0; s < S.size(); ++s) {
      if (natural_leq(S, static_cast<elem>(i), s)) {
        up.set(static_cast<std::size_t>(s));
      }
    }
  });
  return up;
}

bool is_closed_subset(const FiniteInvSemigroup& S, const Bitset& A) {
  return upward_closure(S, A) == A;
}

NormalLattice enumerate_normal(const FiniteInvSemigroup& S) {
  std::size_t n = static_cast<std::size_t>(S.size());
  std::size_t cap = default_size_cap();
  if (n > cap) {
    throw SizeLimitError("enumerate_normal: size limit exceeded");
  }
  std::set<Bitset> found;
  std::deque<Bitset> queue;
  Bitset base = normal_closure(S, Bitset(n)).members;
  found.insert(base);
  queue.push_back(base);
  while (!queue.empty()) {
    Bitset cur = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (cur.test(x)) continue;
      Bitset ext = cur;
      ext.set(x);
      Bitset closed = normal_closure(S, ext).members;
      if (found.insert(closed).second) {
        queue.push_back(closed);
      }
    }
  }
  NormalLattice lattice;
  std::vector<Bitset> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  for (auto& b : sorted) {
    lattice.normals.push_back(Subsemigroup{&S, b});
  }
  std::size_t k = lattice.normals.size();
  lattice.includes.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      lattice.includes[i][j] =
          lattice.normals[i].members.is_subset_of(lattice.normals[j].members);
    }
  }
  return lattice;
}

Partition green_j_on_idempotents(const Subsemigroup& N) {
  const FiniteInvSemigroup& S = *N.parent;
  std::vector<elem> embedding;
  FiniteInvSemigroup sub = sub_semigroup(S, N.members, &embedding);
  GreenRelations g = green_relations(sub);
  std::vector<int> where(static_cast<std::size_t>(S.size()), -1);
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    where[static_cast<std::size_t>(embedding[i])] = static_cast<int>(i);
  }
  const auto& idems = S.idempotents();
  std::vector<int> labels(idems.size());
  for (std::size_t i = 0; i < idems.size(); ++i) {
    int sub_id = where[static_cast<std::size_t>(idems[i])];
    if (sub_id < 0) {
      throw InputError("green_j_on_idempotents requires a full subsemigroup");
    }
    labels[i] = g.j.class_of(sub_id);
  }
  return Partition::from_labels(labels);
}

}  // namespace isq
