#include "isq/builders.hpp"

#include <vector>

#include "isq/errors.hpp"

namespace isq {

namespace {

// All partial bijections of degree n, by direct recursion over the image of
// each point.
void enumerate_pbij(int n, int x, std::vector<int>& img,
                    std::vector<bool>& used,
                    std::vector<PartialBijection>& out) {
  if (x > n) {
    out.emplace_back(n, img);
    return;
  }
  img[static_cast<std::size_t>(x - 1)] = 0;
  enumerate_pbij(n, x + 1, img, used, out);
  for (int y = 1; y <= n; ++y) {
    if (!used[static_cast<std::size_t>(y)]) {
      used[static_cast<std::size_t>(y)] = true;
      img[static_cast<std::size_t>(x - 1)] = y;
      enumerate_pbij(n, x + 1, img, used, out);
      img[static_cast<std::size_t>(x - 1)] = 0;
      used[static_cast<std::size_t>(y)] = false;
    }
  }
}

}  // namespace

FiniteInvSemigroup symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 5) {
    throw InputError("symmetric_inverse_monoid: n must be in 1..5");
  }
  std::vector<PartialBijection> elems;
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  enumerate_pbij(n, 1, img, used, elems);
  return FiniteInvSemigroup::from_partial_bijections(std::move(elems));
}

FiniteInvSemigroup example_S6() {
  const int d = 4;
  PartialBijection f = PartialBijection::point_map(d, 1, 2);
  std::vector<PartialBijection> elems = {
      PartialBijection::partial_identity(d, {1, 3}),
      PartialBijection::partial_identity(d, {1}),
      PartialBijection::partial_identity(d, {2}),
      f,
      f.inverse(),
      PartialBijection(d),  // the zero map
  };
  return FiniteInvSemigroup::from_partial_bijections(std::move(elems));
}

FiniteInvSemigroup example_T() {
  FiniteInvSemigroup i4 = symmetric_inverse_monoid(4);
  std::vector<elem> gens = {
      *i4.find_pbij(PartialBijection::partial_identity(4, {1, 3})),
      *i4.find_pbij(PartialBijection::partial_identity(4, {2, 4})),
      *i4.find_pbij(PartialBijection::point_map(4, 1, 2)),
      *i4.find_pbij(PartialBijection::point_map(4, 3, 4)),
  };
  Bitset members = generated_subsemigroup(i4, gens);
  return sub_semigroup(i4, members);
}

FiniteInvSemigroup direct_product_with_group(const FiniteInvSemigroup& T,
                                             const FiniteInvSemigroup& G) {
  if (!G.is_group()) {
    throw InputError("direct_product_with_group: second factor is not a group");
  }
  std::size_t nt = static_cast<std::size_t>(T.size());
  std::size_t ng = static_cast<std::size_t>(G.size());
  std::size_t n = nt * ng;
  TableData data;
  data.mul.assign(n, std::vector<elem>(n));
  data.inv.resize(n);
  auto id = [&](elem t, elem g) {
    return static_cast<elem>(static_cast<std::size_t>(t) * ng
                             + static_cast<std::size_t>(g));
  };
  for (elem t1 = 0; t1 < T.size(); ++t1) {
    for (elem g1 = 0; g1 < G.size(); ++g1) {
      data.inv[static_cast<std::size_t>(id(t1, g1))] =
          id(T.inv(t1), G.inv(g1));
      for (elem t2 = 0; t2 < T.size(); ++t2) {
        for (elem g2 = 0; g2 < G.size(); ++g2) {
          data.mul[static_cast<std::size_t>(id(t1, g1))]
                  [static_cast<std::size_t>(id(t2, g2))] =
              id(T.mul(t1, t2), G.mul(g1, g2));
        }
      }
    }
  }
  return FiniteInvSemigroup::from_table(std::move(data), /*trusted=*/true);
}

FiniteInvSemigroup brandt_semigroup(int max_index) {
  if (max_index < 0) {
    throw InputError("brandt_semigroup: max_index must be >= 0");
  }
  int m = max_index + 1;
  std::size_t n = 1 + static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  auto id = [&](int i, int j) { return static_cast<elem>(1 + i * m + j); };
  TableData data;
  data.mul.assign(n, std::vector<elem>(n, 0));
  data.inv.resize(n);
  data.inv[0] = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      data.inv[static_cast<std::size_t>(id(i, j))] = id(j, i);
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          if (j == k) {
            data.mul[static_cast<std::size_t>(id(i, j))]
                    [static_cast<std::size_t>(id(k, l))] = id(i, l);
          }
        }
      }
    }
  }
  bool small = n <= 512;
  return FiniteInvSemigroup::from_table(std::move(data), /*trusted=*/!small);
}

FiniteInvSemigroup cyclic_group(int n) {
  if (n < 1) {
    throw InputError("cyclic_group: n must be positive");
  }
  std::size_t m = static_cast<std::size_t>(n);
  TableData data;
  data.mul.assign(m, std::vector<elem>(m));
  data.inv.resize(m);
  for (int a = 0; a < n; ++a) {
    data.inv[static_cast<std::size_t>(a)] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      data.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          (a + b) % n;
    }
  }
  return FiniteInvSemigroup::from_table(std::move(data),
                                        /*trusted=*/m > 512);
}

FiniteInvSemigroup chain_semilattice(int n) {
  if (n < 1) {
    throw InputError("chain_semilattice: n must be positive");
  }
  std::size_t m = static_cast<std::size_t>(n);
  TableData data;
  data.mul.assign(m, std::vector<elem>(m));
  data.inv.resize(m);
  for (int a = 0; a < n; ++a) {
    data.inv[static_cast<std::size_t>(a)] = a;
    for (int b = 0; b < n; ++b) {
      data.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          std::min(a, b);
    }
  }
  return FiniteInvSemigroup::from_table(std::move(data));
}

}  // namespace isq
