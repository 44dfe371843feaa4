#ifndef ISQ_MUNN_HPP_
#define ISQ_MUNN_HPP_

#include <map>
#include <string>
#include <vector>

#include "isq/semigroup.hpp"

namespace isq {

// Word syntax: lowercase letter = generator, the same letter in uppercase =
// its inverse. "babAB" denotes b a b a^{-1} b^{-1}.

// Free-group reduction (cancel adjacent x x^{-1}).
std::string reduce_word(const std::string& w);
// Formal inverse: reverse and toggle case.
std::string invert_word(const std::string& w);

// An element of the free inverse monoid FIM(X) in Munn's model: the finite
// subtree of the free-group Cayley graph spanned by the prefixes of a word,
// with the word's reduction as marked endpoint. Vertices are reduced words,
// stored sorted; the set is closed under reduced prefixes and contains the
// empty word.
class MunnTree {
 public:
  // alphabet: the generator letters (lowercase, distinct).
  static MunnTree from_word(const std::string& alphabet,
                            const std::string& word);
  static MunnTree identity(const std::string& alphabet);

  const std::string& alphabet() const { return alphabet_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& endpoint() const { return endpoint_; }

  bool is_idempotent() const { return endpoint_.empty(); }

  friend bool operator==(const MunnTree&, const MunnTree&) = default;
  friend bool operator<(const MunnTree& a, const MunnTree& b) {
    if (a.endpoint_ != b.endpoint_) return a.endpoint_ < b.endpoint_;
    return a.vertices_ < b.vertices_;
  }

  std::string to_string() const;

 private:
  std::string alphabet_;
  std::vector<std::string> vertices_;
  std::string endpoint_;

  friend MunnTree munn_mul(const MunnTree& x, const MunnTree& y);
  friend MunnTree munn_inv(const MunnTree& x);
};

// Translate the second tree by the first endpoint, take the union, compose
// endpoints.
MunnTree munn_mul(const MunnTree& x, const MunnTree& y);
// Translate by the inverse endpoint; the endpoint inverts.
MunnTree munn_inv(const MunnTree& x);

// x <= y iff vertices(y) is contained in vertices(x) and endpoints agree.
bool munn_natural_leq(const MunnTree& x, const MunnTree& y);

// Image of a word under the homomorphism sending each generator to its
// assigned element; the empty word maps to the identity of M (which must
// exist). Uppercase letters map to inverses.
elem evaluate(const FiniteInvSemigroup& M, const std::map<char, elem>& assign,
              const std::string& word);

// An inverse monoid presentation <X : R>.
struct Presentation {
  std::string alphabet;
  std::vector<std::pair<std::string, std::string>> relations;
};

// "ab=ba; aa=a" with ';' or ',' separating relations. When alphabet_hint is
// empty, the alphabet is inferred from the letters used.
Presentation parse_presentation(const std::string& text,
                                const std::string& alphabet_hint = "");

// Q(R) = { l^{-1} r, l r^{-1} : (l, r) in R } as Munn trees.
std::vector<MunnTree> q_of_relations(const Presentation& P);

struct MembershipResult {
  bool yes = false;
  // When yes: factor words (conjugated relators / idempotents) whose
  // product in FIM(X) equals the queried element.
  std::vector<std::string> certificate;
};

// Semidecision for membership in N(P), the least normal inverse
// subsemigroup of FIM(X) containing Q(R): searches products of at most
// maxlen factors w^{-1} q w (q in Q(R) or an inverse, |w| <= maxlen) and
// idempotents u u^{-1} (|u| <= maxlen). Never answers "no".
MembershipResult bounded_n_membership(const Presentation& P,
                                      const std::string& word, int maxlen);

}  // namespace isq

#endif  // ISQ_MUNN_HPP_
