#include "isq/semigroup.hpp"

#include <algorithm>
#include <deque>

#include "isq/errors.hpp"

namespace isq {

namespace {

void enforce_size_cap(std::size_t n, const char* what) {
  std::size_t cap = default_size_cap();
  if (n > cap) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(n)
                         + " elements exceeds the cap of " + std::to_string(cap)
                         + " (set ISQ_MAX_ELEMENTS to override)");
  }
}

}  // namespace

FiniteInvSemigroup FiniteInvSemigroup::from_partial_bijections(
    std::vector<PartialBijection> elements) {
  if (elements.empty()) {
    throw InputError("an inverse semigroup is nonempty");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  enforce_size_cap(elements.size(), "partial-bijection semigroup");
  int degree = elements.front().degree();
  for (const auto& p : elements) {
    if (p.degree() != degree) {
      throw InputError("all elements must share one degree");
    }
  }

  FiniteInvSemigroup S;
  S.backend_ = Backend::partial_bijection;
  S.n_ = static_cast<int>(elements.size());
  S.pbij_ = std::move(elements);

  auto find = [&S](const PartialBijection& p) -> elem {
    auto it = std::lower_bound(S.pbij_.begin(), S.pbij_.end(), p);
    if (it == S.pbij_.end() || !(*it == p)) {
      return -1;
    }
    return static_cast<elem>(it - S.pbij_.begin());
  };
  std::size_t n = static_cast<std::size_t>(S.n_);
  S.mul_.resize(n * n);
  S.inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    elem ii = find(S.pbij_[i].inverse());
    if (ii < 0) {
      throw InputError("element set not closed under inversion: missing "
                       + S.pbij_[i].inverse().to_string());
    }
    S.inv_[i] = ii;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      elem k = find(S.pbij_[i] * S.pbij_[j]);
      if (k < 0) {
        throw InputError("element set not closed under composition: missing "
                         + (S.pbij_[i] * S.pbij_[j]).to_string());
      }
      S.mul_[i * n + j] = k;
    }
  }
  S.finish_construction();
  return S;
}

FiniteInvSemigroup FiniteInvSemigroup::from_table(TableData data,
                                                  bool trusted) {
  std::size_t n = data.mul.size();
  if (n == 0) {
    throw InputError("an inverse semigroup is nonempty");
  }
  enforce_size_cap(n, "table semigroup");
  if (data.inv.size() != n) {
    throw InputError("inv table length mismatch");
  }
  for (const auto& row : data.mul) {
    if (row.size() != n) {
      throw InputError("mul table is not square");
    }
    for (elem x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw InputError("mul table entry out of range");
      }
    }
  }
  for (elem x : data.inv) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw InputError("inv table entry out of range");
    }
  }
  if (!trusted) {
    Report r = check_inverse_semigroup(data);
    if (!r.ok()) {
      throw InputError("not an inverse semigroup:\n" + r.summary());
    }
  }
  FiniteInvSemigroup S;
  S.backend_ = Backend::cayley_table;
  S.n_ = static_cast<int>(n);
  S.mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      S.mul_[i * n + j] = data.mul[i][j];
    }
  }
  S.inv_ = std::move(data.inv);
  S.finish_construction();
  return S;
}

void FiniteInvSemigroup::finish_construction() {
  std::size_t n = static_cast<std::size_t>(n_);
  dom_.resize(n);
  ran_.resize(n);
  is_idem_.assign(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    dom_[s] = mul(static_cast<elem>(s), inv_[s]);
    ran_[s] = mul(inv_[s], static_cast<elem>(s));
    if (mul(static_cast<elem>(s), static_cast<elem>(s))
        == static_cast<elem>(s)) {
      is_idem_[s] = true;
      idempotents_.push_back(static_cast<elem>(s));
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    bool ident = true;
    for (std::size_t x = 0; x < n && ident; ++x) {
      ident = mul(static_cast<elem>(e), static_cast<elem>(x))
                  == static_cast<elem>(x)
              && mul(static_cast<elem>(x), static_cast<elem>(e))
                     == static_cast<elem>(x);
    }
    if (ident) {
      identity_ = static_cast<elem>(e);
      break;
    }
  }
}

Bitset FiniteInvSemigroup::idempotent_set() const {
  Bitset b(static_cast<std::size_t>(n_));
  for (elem e : idempotents_) {
    b.set(static_cast<std::size_t>(e));
  }
  return b;
}

int FiniteInvSemigroup::degree() const {
  if (backend_ != Backend::partial_bijection) {
    throw InputError("degree: not a partial-bijection semigroup");
  }
  return pbij_.front().degree();
}

const PartialBijection& FiniteInvSemigroup::pbij(elem s) const {
  check_elem(s);
  if (backend_ != Backend::partial_bijection) {
    throw InputError("pbij: not a partial-bijection semigroup");
  }
  return pbij_[static_cast<std::size_t>(s)];
}

std::optional<elem> FiniteInvSemigroup::find_pbij(
    const PartialBijection& p) const {
  if (backend_ != Backend::partial_bijection) {
    return std::nullopt;
  }
  auto it = std::lower_bound(pbij_.begin(), pbij_.end(), p);
  if (it == pbij_.end() || !(*it == p)) {
    return std::nullopt;
  }
  return static_cast<elem>(it - pbij_.begin());
}

void FiniteInvSemigroup::check_elem(elem s) const {
  if (s < 0 || s >= n_) {
    throw InputError("unknown element id " + std::to_string(s));
  }
}

std::string FiniteInvSemigroup::elem_name(elem s) const {
  check_elem(s);
  if (backend_ == Backend::partial_bijection) {
    return pbij_[static_cast<std::size_t>(s)].to_string();
  }
  return "#" + std::to_string(s);
}

TableData FiniteInvSemigroup::table() const {
  TableData data;
  std::size_t n = static_cast<std::size_t>(n_);
  data.mul.assign(n, std::vector<elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      data.mul[i][j] = mul_[i * n + j];
    }
  }
  data.inv = inv_;
  return data;
}

// --- core operations -------------------------------------------------------

bool natural_leq(const FiniteInvSemigroup& S, elem s, elem t) {
  S.check_elem(s);
  S.check_elem(t);
  return S.mul(S.dom_idem(s), t) == s;
}

std::optional<elem> trace_product(const FiniteInvSemigroup& S, elem s,
                                  elem t) {
  S.check_elem(s);
  S.check_elem(t);
  if (S.ran_idem(s) != S.dom_idem(t)) {
    return std::nullopt;
  }
  return S.mul(s, t);
}

Bitset generated_subsemigroup(const FiniteInvSemigroup& S,
                              const std::vector<elem>& gens) {
  if (gens.empty()) {
    throw InputError(
        "generated_subsemigroup: empty generating set (inverse semigroups "
        "are nonempty)");
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
  for (elem g : gens) {
    S.check_elem(g);
    push(g);
  }
  std::vector<elem> seen;
  while (!queue.empty()) {
    elem x = queue.front();
    queue.pop_front();
    push(S.inv(x));
    for (elem y : seen) {
      push(S.mul(x, y));
      push(S.mul(y, x));
    }
    push(S.mul(x, x));
    seen.push_back(x);
  }
  return members;
}

FiniteInvSemigroup sub_semigroup(const FiniteInvSemigroup& S,
                                 const Bitset& members,
                                 std::vector<elem>* embedding) {
  if (members.none()) {
    throw InputError("sub_semigroup: empty subset");
  }
  std::vector<elem> ids = members.to_indices();
  std::vector<int> new_id(static_cast<std::size_t>(S.size()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    new_id[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  }
  if (embedding != nullptr) {
    *embedding = ids;
  }
  if (S.backend() == FiniteInvSemigroup::Backend::partial_bijection) {
    std::vector<PartialBijection> elems;
    elems.reserve(ids.size());
    for (elem s : ids) {
      elems.push_back(S.pbij(s));
    }
    return FiniteInvSemigroup::from_partial_bijections(std::move(elems));
  }
  TableData data;
  data.mul.assign(ids.size(), std::vector<elem>(ids.size()));
  data.inv.resize(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    elem ii = S.inv(ids[i]);
    if (new_id[static_cast<std::size_t>(ii)] < 0) {
      throw InputError("sub_semigroup: subset not closed under inversion");
    }
    data.inv[i] = new_id[static_cast<std::size_t>(ii)];
    for (std::size_t j = 0; j < ids.size(); ++j) {
      elem p = S.mul(ids[i], ids[j]);
      if (new_id[static_cast<std::size_t>(p)] < 0) {
        throw InputError("sub_semigroup: subset not closed under products");
      }
      data.mul[i][j] = new_id[static_cast<std::size_t>(p)];
    }
  }
  return FiniteInvSemigroup::from_table(std::move(data), /*trusted=*/true);
}

Report check_inverse_semigroup(const TableData& data, std::size_t assoc_cap) {
  Report report;
  std::size_t n = data.mul.size();
  if (n == 0) {
    report.add("empty element set");
    return report;
  }
  if (data.inv.size() != n) {
    report.add("inv table length mismatch");
    return report;
  }
  for (const auto& row : data.mul) {
    if (row.size() != n) {
      report.add("mul table is not square");
      return report;
    }
    for (elem x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        report.add("mul table entry out of range");
        return report;
      }
    }
  }
  auto mul = [&](elem a, elem b) {
    return data.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };

  if (n > assoc_cap) {
    throw SizeLimitError("associativity check refused above "
                         + std::to_string(assoc_cap) + " elements");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      elem ab = mul(static_cast<elem>(a), static_cast<elem>(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(ab, static_cast<elem>(c))
            != mul(static_cast<elem>(a),
                   mul(static_cast<elem>(b), static_cast<elem>(c)))) {
          report.add("associativity fails at (" + std::to_string(a) + ","
                     + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  // Each s must have exactly one weak inverse t (s t s = s, t s t = t), and
  // it must be inv[s].
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<elem> inverses;
    for (std::size_t t = 0; t < n; ++t) {
      if (mul(mul(static_cast<elem>(s), static_cast<elem>(t)),
              static_cast<elem>(s))
              == static_cast<elem>(s)
          && mul(mul(static_cast<elem>(t), static_cast<elem>(s)),
                 static_cast<elem>(t))
                 == static_cast<elem>(t)) {
        inverses.push_back(static_cast<elem>(t));
      }
    }
    if (inverses.empty()) {
      report.add("element " + std::to_string(s) + " has no inverse");
    } else if (inverses.size() > 1) {
      report.add("element " + std::to_string(s) + " has "
                 + std::to_string(inverses.size()) + " inverses");
    } else if (inverses.front() != data.inv[s]) {
      report.add("inv table wrong at element " + std::to_string(s));
    }
  }

  std::vector<elem> idems;
  for (std::size_t e = 0; e < n; ++e) {
    if (mul(static_cast<elem>(e), static_cast<elem>(e))
        == static_cast<elem>(e)) {
      idems.push_back(static_cast<elem>(e));
    }
  }
  for (elem e : idems) {
    for (elem f : idems) {
      if (mul(e, f) != mul(f, e)) {
        report.add("idempotents " + std::to_string(e) + " and "
                   + std::to_string(f) + " do not commute");
      }
    }
  }
  return report;
}

Report check_inverse_semigroup(const FiniteInvSemigroup& S) {
  return check_inverse_semigroup(S.table(),
                                 static_cast<std::size_t>(S.size()));
}

// --- homomorphisms ---------------------------------------------------------

Homomorphism::Homomorphism(const FiniteInvSemigroup& source,
                           const FiniteInvSemigroup& target,
                           std::vector<elem> map)
    : source_(&source), target_(&target), map_(std::move(map)) {
  if (map_.size() != static_cast<std::size_t>(source.size())) {
    throw InputError("homomorphism map length mismatch");
  }
  for (elem x : map_) {
    target.check_elem(x);
  }
  for (elem s = 0; s < source.size(); ++s) {
    for (elem t = 0; t < source.size(); ++t) {
      if (map_[static_cast<std::size_t>(source.mul(s, t))]
          != target.mul(map_[static_cast<std::size_t>(s)],
                        map_[static_cast<std::size_t>(t)])) {
        throw InputError("not a homomorphism: fails at ("
                         + source.elem_name(s) + ", " + source.elem_name(t)
                         + ")");
      }
    }
  }
}

Homomorphism Homomorphism::identity_on(const FiniteInvSemigroup& S) {
  std::vector<elem> map(static_cast<std::size_t>(S.size()));
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = static_cast<elem>(i);
  }
  return Homomorphism(S, S, std::move(map));
}

}  // namespace isq
