#include "isq/ogroupoid.hpp"

#include <algorithm>

#include "isq/errors.hpp"

namespace isq {

OrderedGroupoid OrderedGroupoid::from_data(Data d) {
  OrderedGroupoid G;
  std::size_t n = d.is_identity.size();
  if (d.dom.size() != n || d.ran.size() != n || d.inv.size() != n
      || d.comp.size() != n || d.leq.size() != n) {
    throw InputError("ordered groupoid: field length mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.comp[i].size() != n || d.leq[i].size() != n) {
      throw InputError("ordered groupoid: matrix shape mismatch");
    }
  }
  auto in_range = [&](int x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_range(d.dom[i]) || !in_range(d.ran[i]) || !in_range(d.inv[i])) {
      throw InputError("ordered groupoid: element id out of range");
    }
    for (int v : d.comp[i]) {
      if (v != -1 && !in_range(v)) {
        throw InputError("ordered groupoid: comp entry out of range");
      }
    }
  }
  if (!d.leq_closed) {
    for (std::size_t i = 0; i < n; ++i) {
      d.leq[i].set(i);
    }
    // Warshall closure with bitset rows.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (d.leq[i].test(k)) {
          d.leq[i] |= d.leq[k];
        }
      }
    }
  }
  G.n_ = static_cast<int>(n);
  G.is_identity_ = std::move(d.is_identity);
  for (std::size_t i = 0; i < n; ++i) {
    if (G.is_identity_[i]) {
      G.identities_.push_back(static_cast<int>(i));
    }
  }
  G.dom_ = std::move(d.dom);
  G.ran_ = std::move(d.ran);
  G.inv_ = std::move(d.inv);
  G.comp_ = std::move(d.comp);
  G.leq_ = std::move(d.leq);
  return G;
}

void OrderedGroupoid::check_elem(int g) const {
  if (g < 0 || g >= n_) {
    throw InputError("unknown groupoid element id " + std::to_string(g));
  }
}

Report OrderedGroupoid::verify_axioms() const {
  Report rep;
  std::size_t n = static_cast<std::size_t>(n_);

  // identity bookkeeping and the involution
  for (std::size_t g = 0; g < n; ++g) {
    int gi = static_cast<int>(g);
    if (!is_identity_[static_cast<std::size_t>(dom_[g])]) {
      rep.add("dom(" + std::to_string(gi) + ") is not flagged as an identity");
    }
    if (!is_identity_[static_cast<std::size_t>(ran_[g])]) {
      rep.add("ran(" + std::to_string(gi) + ") is not flagged as an identity");
    }
    if (is_identity_[g]) {
      if (dom_[g] != gi || ran_[g] != gi || inv_[g] != gi) {
        rep.add("identity " + std::to_string(gi)
                + " has dom/ran/inv different from itself");
      }
    }
    if (inv_[static_cast<std::size_t>(inv_[g])] != gi) {
      rep.add("inv is not an involution at " + std::to_string(gi));
    }
    if (dom_[static_cast<std::size_t>(inv_[g])] != ran_[g]
        || ran_[static_cast<std::size_t>(inv_[g])] != dom_[g]) {
      rep.add("inv does not swap dom/ran at " + std::to_string(gi));
    }
  }

  // composition defined exactly on matching range/domain, with groupoid laws
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      int c = comp_[g][h];
      bool matches = ran_[g] == dom_[h];
      if (matches != (c != -1)) {
        rep.add("comp(" + std::to_string(g) + "," + std::to_string(h)
                + ") defined iff ran=dom violated");
        continue;
      }
      if (c != -1) {
        if (dom_[static_cast<std::size_t>(c)] != dom_[g]
            || ran_[static_cast<std::size_t>(c)] != ran_[h]) {
          rep.add("comp(" + std::to_string(g) + "," + std::to_string(h)
                  + ") has wrong dom/ran");
        }
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    int gi = static_cast<int>(g);
    if (comp(gi, inv(gi)) != dom(gi)) {
      rep.add("g g^{-1} != dom(g) at " + std::to_string(gi));
    }
    if (comp(inv(gi), gi) != ran(gi)) {
      rep.add("g^{-1} g != ran(g) at " + std::to_string(gi));
    }
    if (comp(dom(gi), gi) != gi || comp(gi, ran(gi)) != gi) {
      rep.add("identity composition laws fail at " + std::to_string(gi));
    }
  }
  // associativity over composable triples
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (ran_[g] != dom_[h]) continue;
      int gh = comp_[g][h];
      for (std::size_t k = 0; k < n; ++k) {
        if (ran_[h] != dom_[k]) continue;
        int hk = comp_[h][k];
        if (gh == -1 || hk == -1) continue;  // already reported above
        if (comp(gh, static_cast<int>(k)) != comp(static_cast<int>(g), hk)) {
          rep.add("associativity fails at (" + std::to_string(g) + ","
                  + std::to_string(h) + "," + std::to_string(k) + ")");
        }
      }
    }
  }

  // order: reflexivity and antisymmetry (transitivity holds by closure)
  for (std::size_t g = 0; g < n; ++g) {
    if (!leq_[g].test(g)) {
      rep.add("order not reflexive at " + std::to_string(g));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (g != h && leq_[g].test(h) && leq_[h].test(g)) {
        rep.add("order not antisymmetric at (" + std::to_string(g) + ","
                + std::to_string(h) + ")");
      }
    }
  }

  // OG1
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (leq_[g].test(h)
          && !leq(inv(static_cast<int>(g)), inv(static_cast<int>(h)))) {
        rep.add("OG1 fails at (" + std::to_string(g) + "," + std::to_string(h)
                + ")");
      }
    }
  }
  // OG2
  for (std::size_t g1 = 0; g1 < n; ++g1) {
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      if (!leq_[g1].test(g2)) continue;
      for (std::size_t h1 = 0; h1 < n; ++h1) {
        if (ran_[g1] != dom_[h1]) continue;
        for (std::size_t h2 = 0; h2 < n; ++h2) {
          if (!leq_[h1].test(h2) || ran_[g2] != dom_[h2]) continue;
          if (!leq(comp_[g1][h1], comp_[g2][h2])) {
            rep.add("OG2 fails at (" + std::to_string(g1) + ","
                    + std::to_string(h1) + ") <= (" + std::to_string(g2) + ","
                    + std::to_string(h2) + ")");
          }
        }
      }
    }
  }
  // OG3: unique restriction for every identity below a domain
  for (std::size_t g = 0; g < n; ++g) {
    for (int x : identities_) {
      if (!leq(x, dom_[g])) continue;
      int count = 0;
      for (std::size_t h = 0; h < n; ++h) {
        if (leq_[h].test(g) && dom_[h] == x) {
          ++count;
        }
      }
      if (count != 1) {
        rep.add("OG3 fails: " + std::to_string(count) + " restrictions of "
                + std::to_string(g) + " to " + std::to_string(x));
      }
    }
  }
  return rep;
}

int OrderedGroupoid::restriction(int x, int g) const {
  check_elem(x);
  check_elem(g);
  if (!is_identity(x) || !leq(x, dom(g))) {
    throw InputError("no restriction: x is not an identity below dom(g)");
  }
  int found = -1;
  for (int h = 0; h < n_; ++h) {
    if (leq(h, g) && dom(h) == x) {
      if (found != -1) {
        throw InputError("restriction not unique (structure violates OG3)");
      }
      found = h;
    }
  }
  if (found == -1) {
    throw InputError("no restriction exists (structure violates OG3)");
  }
  return found;
}

int OrderedGroupoid::corestriction(int g, int y) const {
  return inv(restriction(y, inv(g)));
}

std::optional<int> OrderedGroupoid::meet_of_identities(int x, int y) const {
  check_elem(x);
  check_elem(y);
  std::vector<int> lower;
  for (int e : identities_) {
    if (leq(e, x) && leq(e, y)) {
      lower.push_back(e);
    }
  }
  for (int m : lower) {
    bool greatest = true;
    for (int e : lower) {
      if (!leq(e, m)) {
        greatest = false;
        break;
      }
    }
    if (greatest) {
      return m;
    }
  }
  return std::nullopt;
}

std::optional<int> OrderedGroupoid::pseudoproduct(int a, int b) const {
  check_elem(a);
  check_elem(b);
  auto l = meet_of_identities(ran(a), dom(b));
  if (!l) {
    return std::nullopt;
  }
  return comp(corestriction(a, *l), restriction(*l, b));
}

bool OrderedGroupoid::is_inductive() const {
  for (int x : identities_) {
    for (int y : identities_) {
      if (!meet_of_identities(x, y)) {
        return false;
      }
    }
  }
  return true;
}

OrderedGroupoid esn_from(const FiniteInvSemigroup& S) {
  std::size_t n = static_cast<std::size_t>(S.size());
  OrderedGroupoid::Data d;
  d.is_identity.assign(n, false);
  for (elem e : S.idempotents()) {
    d.is_identity[static_cast<std::size_t>(e)] = true;
  }
  d.dom.resize(n);
  d.ran.resize(n);
  d.inv.resize(n);
  d.comp.assign(n, std::vector<int>(n, -1));
  d.leq.assign(n, Bitset(n));
  for (elem s = 0; s < S.size(); ++s) {
    d.dom[static_cast<std::size_t>(s)] = S.dom_idem(s);
    d.ran[static_cast<std::size_t>(s)] = S.ran_idem(s);
    d.inv[static_cast<std::size_t>(s)] = S.inv(s);
    for (elem t = 0; t < S.size(); ++t) {
      if (S.ran_idem(s) == S.dom_idem(t)) {
        d.comp[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
            S.mul(s, t);
      }
      if (natural_leq(S, s, t)) {
        d.leq[static_cast<std::size_t>(s)].set(static_cast<std::size_t>(t));
      }
    }
  }
  d.leq_closed = true;  // the natural order is already a partial order
  return OrderedGroupoid::from_data(std::move(d));
}

FiniteInvSemigroup esn_to(const OrderedGroupoid& G) {
  if (!G.is_inductive()) {
    throw NotInductiveError();
  }
  std::size_t n = static_cast<std::size_t>(G.size());
  TableData data;
  data.mul.assign(n, std::vector<elem>(n));
  data.inv.resize(n);
  for (int a = 0; a < G.size(); ++a) {
    data.inv[static_cast<std::size_t>(a)] = G.inv(a);
    for (int b = 0; b < G.size(); ++b) {
      auto p = G.pseudoproduct(a, b);
      if (!p) {
        throw InternalError("pseudoproduct undefined in an inductive groupoid");
      }
      data.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = *p;
    }
  }
  return FiniteInvSemigroup::from_table(std::move(data),
                                        /*trusted=*/n > 512);
}

OGFunctor::OGFunctor(const OrderedGroupoid& source,
                     const OrderedGroupoid& target, std::vector<int> map)
    : source_(&source), target_(&target), map_(std::move(map)) {
  if (map_.size() != static_cast<std::size_t>(source.size())) {
    throw InputError("functor map length mismatch");
  }
  for (int v : map_) {
    target.check_elem(v);
  }
  for (int g = 0; g < source.size(); ++g) {
    int mg = map_[static_cast<std::size_t>(g)];
    if (source.is_identity(g) && !target.is_identity(mg)) {
      throw InputError("functor does not preserve identities");
    }
    if (map_[static_cast<std::size_t>(source.dom(g))] != target.dom(mg)
        || map_[static_cast<std::size_t>(source.ran(g))] != target.ran(mg)) {
      throw InputError("functor does not preserve dom/ran");
    }
    if (map_[static_cast<std::size_t>(source.inv(g))] != target.inv(mg)) {
      throw InputError("functor does not preserve inversion");
    }
    for (int h = 0; h < source.size(); ++h) {
      if (source.comp(g, h) != -1) {
        int mh = map_[static_cast<std::size_t>(h)];
        int c = target.comp(mg, mh);
        if (c == -1
            || c != map_[static_cast<std::size_t>(source.comp(g, h))]) {
          throw InputError("functor does not preserve composition");
        }
      }
      if (source.leq(g, h)
          && !target.leq(mg, map_[static_cast<std::size_t>(h)])) {
        throw InputError("functor does not preserve order");
      }
    }
  }
}

OGFunctor OGFunctor::identity_on(const OrderedGroupoid& G) {
  std::vector<int> map(static_cast<std::size_t>(G.size()));
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = static_cast<int>(i);
  }
  return OGFunctor(G, G, std::move(map));
}

bool OGFunctor::is_surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_->size()), false);
  for (int v : map_) {
    hit[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<int> star_of(const OrderedGroupoid& G, int e) {
  G.check_elem(e);
  std::vector<int> out;
  for (int g = 0; g < G.size(); ++g) {
    if (G.dom(g) == e) {
      out.push_back(g);
    }
  }
  return out;
}

bool is_star_injective(const OGFunctor& F) {
  const OrderedGroupoid& G = F.source();
  for (int e : G.identities()) {
    std::vector<int> star = star_of(G, e);
    std::vector<int> images;
    images.reserve(star.size());
    for (int g : star) {
      images.push_back(F(g));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      return false;
    }
  }
  return true;
}

namespace {

bool full_iso_check(const OrderedGroupoid& G, const OrderedGroupoid& H,
                    const std::vector<int>& map) {
  for (int g = 0; g < G.size(); ++g) {
    int h = map[static_cast<std::size_t>(g)];
    if (G.is_identity(g) != H.is_identity(h)) return false;
    if (map[static_cast<std::size_t>(G.dom(g))] != H.dom(h)) return false;
    if (map[static_cast<std::size_t>(G.ran(g))] != H.ran(h)) return false;
    if (map[static_cast<std::size_t>(G.inv(g))] != H.inv(h)) return false;
    for (int g2 = 0; g2 < G.size(); ++g2) {
      int h2 = map[static_cast<std::size_t>(g2)];
      if (G.leq(g, g2) != H.leq(h, h2)) return false;
      int cg = G.comp(g, g2);
      int ch = H.comp(h, h2);
      if ((cg == -1) != (ch == -1)) return false;
      if (cg != -1 && map[static_cast<std::size_t>(cg)] != ch) return false;
    }
  }
  return true;
}

// Backtracking search matching element g of G against unused candidates in
// H, pruning on local structure against already-assigned elements.
bool extend_iso(const OrderedGroupoid& G, const OrderedGroupoid& H,
                std::vector<int>& map, std::vector<bool>& used, int g) {
  if (g == G.size()) {
    return full_iso_check(G, H, map);
  }
  for (int h = 0; h < H.size(); ++h) {
    if (used[static_cast<std::size_t>(h)]) continue;
    if (G.is_identity(g) != H.is_identity(h)) continue;
    if ((G.inv(g) == g) != (H.inv(h) == h)) continue;
    bool ok = true;
    for (int g2 = 0; g2 <= g && ok; ++g2) {
      int h2 = (g2 == g) ? h : map[static_cast<std::size_t>(g2)];
      if (G.leq(g, g2) != H.leq(h, h2) || G.leq(g2, g) != H.leq(h2, h)) {
        ok = false;
        break;
      }
      if ((G.dom(g) == g2) != (H.dom(h) == h2)) ok = false;
      if ((G.ran(g) == g2) != (H.ran(h) == h2)) ok = false;
      if ((G.inv(g) == g2) != (H.inv(h) == h2)) ok = false;
      if (!ok) break;
      int cg = G.comp(g, g2), ch = H.comp(h, h2);
      if ((cg == -1) != (ch == -1)) ok = false;
      if (ok && cg != -1 && cg <= g) {
        int want = (cg == g) ? h : map[static_cast<std::size_t>(cg)];
        if (want != ch) ok = false;
      }
      if (!ok) break;
      cg = G.comp(g2, g);
      ch = H.comp(h2, h);
      if ((cg == -1) != (ch == -1)) ok = false;
      if (ok && cg != -1 && cg <= g) {
        int want = (cg == g) ? h : map[static_cast<std::size_t>(cg)];
        if (want != ch) ok = false;
      }
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(g)] = h;
    used[static_cast<std::size_t>(h)] = true;
    if (extend_iso(G, H, map, used, g + 1)) {
      return true;
    }
    used[static_cast<std::size_t>(h)] = false;
    map[static_cast<std::size_t>(g)] = -1;
  }
  return false;
}

}  // namespace

bool og_isomorphic(const OrderedGroupoid& G, const OrderedGroupoid& H) {
  if (G.size() != H.size()
      || G.identities().size() != H.identities().size()) {
    return false;
  }
  std::vector<int> map(static_cast<std::size_t>(G.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(H.size()), false);
  return extend_iso(G, H, map, used, 0);
}

}  // namespace isq
