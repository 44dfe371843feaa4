#include "isq/poly.hpp"

#include <algorithm>

#include "isq/errors.hpp"

namespace isq {
namespace poly {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size()
         && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string PolyElem::to_string() const {
  if (zero) return "0";
  return "(" + u + "," + v + ")";
}

void check_alphabet(int n, const PolyElem& x) {
  if (n < 1 || n > 26) {
    throw InputError("alphabet size must be in 1..26");
  }
  if (x.zero) return;
  for (const std::string* w : {&x.u, &x.v}) {
    for (char c : *w) {
      if (c < 'a' || c >= static_cast<char>('a' + n)) {
        throw InputError("letter out of alphabet: " + std::string(1, c));
      }
    }
  }
}

PolyElem poly_mul(int n, const PolyElem& x, const PolyElem& y) {
  check_alphabet(n, x);
  check_alphabet(n, y);
  if (x.zero || y.zero) {
    return PolyElem::zero_elem();
  }
  // (s,t)(u,v) with t = pu: result (s, pv)
  if (ends_with(x.v, y.u)) {
    std::string p = x.v.substr(0, x.v.size() - y.u.size());
    return PolyElem::pair(x.u, p + y.v);
  }
  // u = pt: result (ps, v)
  if (ends_with(y.u, x.v)) {
    std::string p = y.u.substr(0, y.u.size() - x.v.size());
    return PolyElem::pair(p + x.u, y.v);
  }
  return PolyElem::zero_elem();
}

PolyElem poly_inv(const PolyElem& x) {
  if (x.zero) return x;
  return PolyElem::pair(x.v, x.u);
}

bool poly_is_idempotent(const PolyElem& x) {
  return x.zero || x.u == x.v;
}

bool poly_natural_leq(const PolyElem& x, const PolyElem& y) {
  if (x.zero) return true;
  if (y.zero) return false;
  if (x.u.size() < y.u.size() || x.v.size() < y.v.size()) {
    return false;
  }
  std::size_t k = x.u.size() - y.u.size();
  if (x.v.size() - y.v.size() != k) {
    return false;
  }
  // x = (p s, p t) for the shared prefix p of length k
  return ends_with(x.u, y.u) && ends_with(x.v, y.v)
         && x.u.compare(0, k, x.v, 0, k) == 0;
}

bool gauge_membership(const PolyElem& x) {
  return x.zero || x.u.size() == x.v.size();
}

std::vector<std::string> all_words(int n, int maxlen) {
  if (n < 1 || n > 26) {
    throw InputError("alphabet size must be in 1..26");
  }
  std::vector<std::string> out{""};
  std::size_t level_begin = 0;
  for (int len = 1; len <= maxlen; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int c = 0; c < n; ++c) {
        out.push_back(out[i] + static_cast<char>('a' + c));
      }
    }
    level_begin = level_end;
  }
  return out;
}

bool normal_scan(int n, int maxlen,
                 const std::function<bool(const PolyElem&)>& member) {
  std::vector<std::string> words = all_words(n, maxlen);
  std::vector<PolyElem> members;
  for (const auto& q1 : words) {
    for (const auto& q2 : words) {
      PolyElem q = PolyElem::pair(q1, q2);
      if (member(q)) {
        members.push_back(q);
      }
    }
  }
  for (const auto& w1 : words) {
    for (const auto& w2 : words) {
      PolyElem x = PolyElem::pair(w1, w2);
      PolyElem xi = poly_inv(x);
      for (const auto& q : members) {
        if (!member(poly_mul(n, poly_mul(n, xi, q), x))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool gauge_is_normal(int n, int maxlen) {
  if (!normal_scan(n, maxlen, gauge_membership)) {
    return false;
  }
  // bounded closure under products and inverses, and fullness
  std::vector<std::string> words = all_words(n, maxlen);
  std::vector<PolyElem> members;
  for (const auto& q1 : words) {
    for (const auto& q2 : words) {
      if (q1.size() == q2.size()) {
        members.push_back(PolyElem::pair(q1, q2));
      }
    }
  }
  for (const auto& x : members) {
    if (!gauge_membership(poly_inv(x))) {
      return false;
    }
    for (const auto& y : members) {
      if (!gauge_membership(poly_mul(n, x, y))) {
        return false;
      }
    }
  }
  for (const auto& p : words) {
    if (!gauge_membership(PolyElem::pair(p, p))) {
      return false;
    }
  }
  return true;
}

bool gauge_leq(const PolyElem& x, const PolyElem& y) {
  if (x.zero) return true;
  if (y.zero) return false;
  long du = static_cast<long>(x.u.size()) - static_cast<long>(y.u.size());
  long dv = static_cast<long>(x.v.size()) - static_cast<long>(y.v.size());
  return du == dv && du >= 0;
}

Tri gauge_leq_search(int n, const PolyElem& x, const PolyElem& y,
                     int maxlen) {
  check_alphabet(n, x);
  check_alphabet(n, y);
  if (x.zero) {
    return Tri::yes;  // a = b = 0 exhibits 0 <= y
  }
  if (y.zero) {
    // a x b is a nonzero pair for every admissible witness, never <= 0
    return Tri::no;
  }
  // witnesses are forced: a = (p, u) and b = (v, w) with |p| = |u|,
  // |w| = |v|; then a x b = (p, w) and the condition is (p, w) <= y
  bool complete = static_cast<int>(x.u.size()) <= maxlen
                  && static_cast<int>(x.v.size()) <= maxlen;
  std::vector<std::string> ps, ws;
  for (const auto& w : all_words(n, std::min<int>(maxlen, 30))) {
    if (w.size() == x.u.size()) ps.push_back(w);
    if (w.size() == x.v.size()) ws.push_back(w);
  }
  for (const auto& p : ps) {
    PolyElem a = PolyElem::pair(p, x.u);
    // trace products by construction: a^{-1}a = (u,u) = x x^{-1}
    PolyElem ax = poly_mul(n, a, x);
    for (const auto& w : ws) {
      PolyElem b = PolyElem::pair(x.v, w);
      PolyElem axb = poly_mul(n, ax, b);
      if (poly_natural_leq(axb, y)) {
        return Tri::yes;
      }
    }
  }
  return complete ? Tri::no : Tri::unknown;
}

std::optional<GaugeClass> quotient_class_compose(const GaugeClass& a,
                                                 const GaugeClass& b) {
  if (a.zero && b.zero) {
    return GaugeClass{true, 0, 0};
  }
  if (a.zero || b.zero) {
    return std::nullopt;
  }
  if (a.j != b.i) {
    return std::nullopt;
  }
  return GaugeClass{false, a.i, b.j};
}

}  // namespace poly
}  // namespace isq
