#ifndef ISQ_POLY_HPP_
#define ISQ_POLY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace isq {
namespace poly {

// An element of the polycyclic monoid P_n: zero, or a pair (u, v) of words
// over the alphabet {a, b, ...} (first n lowercase letters).
struct PolyElem {
  bool zero = false;
  std::string u, v;

  static PolyElem zero_elem() { return PolyElem{true, "", ""}; }
  static PolyElem pair(std::string u, std::string v) {
    return PolyElem{false, std::move(u), std::move(v)};
  }
  static PolyElem one() { return pair("", ""); }

  friend bool operator==(const PolyElem& a, const PolyElem& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const PolyElem& a, const PolyElem& b) {
    if (a.zero != b.zero) return a.zero < b.zero;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }

  std::string to_string() const;
};

// Letters must come from the first n lowercase letters.
void check_alphabet(int n, const PolyElem& x);

// The multiplication of P_n:
//   (s,t)(u,v) = (s,pv) if t = pu,  (ps,v) if u = pt,  0 otherwise,
// with 0 absorbing.
PolyElem poly_mul(int n, const PolyElem& x, const PolyElem& y);

PolyElem poly_inv(const PolyElem& x);  // (s,t) -> (t,s)
bool poly_is_idempotent(const PolyElem& x);

// Natural partial order: (u,v) <= (s,t) iff u = ps and v = pt for one p;
// 0 lies below everything.
bool poly_natural_leq(const PolyElem& x, const PolyElem& y);

// Membership in the gauge monoid G_n = { (s,t) : |s|=|t| } u {0}.
bool gauge_membership(const PolyElem& x);

// All words of length <= maxlen over the first n letters, by length then
// lexicographic.
std::vector<std::string> all_words(int n, int maxlen);

// Conjugation scan: member(x^{-1} q x) for every member q and every
// conjugator x with word lengths <= maxlen. `member` must accept zero.
bool normal_scan(int n, int maxlen,
                 const std::function<bool(const PolyElem&)>& member);

// The gauge monoid scan plus bounded closure under products and inverses.
bool gauge_is_normal(int n, int maxlen);

enum class Tri { yes, no, unknown };

// Closed form: (u,v) <=_{G_n} (s,t) iff |u|-|s| = |v|-|t| >= 0
// (plus the zero cases).
bool gauge_leq(const PolyElem& x, const PolyElem& y);

// Bounded witness search for the defining condition: a, b in G_n with the
// trace products a.x and (ax).b defined and a x b <= y. Witness shapes are
// forced to a = (p, u), b = (v, w); the search enumerates p, w up to the
// length bound and is conclusive when |u|, |v| <= maxlen.
Tri gauge_leq_search(int n, const PolyElem& x, const PolyElem& y, int maxlen);

// A simeq_{G_n} class of nonzero elements, indexed by (|u|, |v|); the zero
// class stands alone.
struct GaugeClass {
  bool zero = false;
  int i = 0, j = 0;

  friend bool operator==(const GaugeClass&, const GaugeClass&) = default;
};

// Groupoid composition of classes: (i,j) . (k,l) = (i,l) when j = k,
// undefined otherwise; [0].[0] = [0].
std::optional<GaugeClass> quotient_class_compose(const GaugeClass& a,
                                                 const GaugeClass& b);

}  // namespace poly
}  // namespace isq

#endif  // ISQ_POLY_HPP_
