#include "isq/munn.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "isq/errors.hpp"

namespace isq {

namespace {

char toggle(char c) {
  return std::isupper(static_cast<unsigned char>(c))
             ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
             : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

void check_alphabet_string(const std::string& alphabet) {
  if (alphabet.empty()) {
    throw InputError("alphabet must be nonempty");
  }
  std::set<char> seen;
  for (char c : alphabet) {
    if (!std::islower(static_cast<unsigned char>(c))) {
      throw InputError("alphabet letters must be lowercase");
    }
    if (!seen.insert(c).second) {
      throw InputError("alphabet letters must be distinct");
    }
  }
}

void check_word(const std::string& alphabet, const std::string& word) {
  for (char c : word) {
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (alphabet.find(low) == std::string::npos
        || !std::isalpha(static_cast<unsigned char>(c))) {
      throw InputError("bad symbol '" + std::string(1, c) + "' in word");
    }
  }
}

// Reduced concatenation of a reduced word and one more symbol.
void push_symbol(std::string& w, char c) {
  if (!w.empty() && w.back() == toggle(c)) {
    w.pop_back();
  } else {
    w.push_back(c);
  }
}

}  // namespace

std::string reduce_word(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    push_symbol(out, c);
  }
  return out;
}

std::string invert_word(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) {
    c = toggle(c);
  }
  return out;
}

MunnTree MunnTree::from_word(const std::string& alphabet,
                             const std::string& word) {
  check_alphabet_string(alphabet);
  check_word(alphabet, word);
  MunnTree t;
  t.alphabet_ = alphabet;
  std::string cur;
  std::set<std::string> verts{""};
  for (char c : word) {
    push_symbol(cur, c);
    verts.insert(cur);
  }
  t.endpoint_ = cur;
  t.vertices_.assign(verts.begin(), verts.end());
  return t;
}

MunnTree MunnTree::identity(const std::string& alphabet) {
  return from_word(alphabet, "");
}

std::string MunnTree::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ",";
    out += vertices_[i].empty() ? "1" : vertices_[i];
  }
  out += "}@";
  out += endpoint_.empty() ? "1" : endpoint_;
  return out;
}

MunnTree munn_mul(const MunnTree& x, const MunnTree& y) {
  if (x.alphabet_ != y.alphabet_) {
    throw InputError("alphabet mismatch in Munn multiplication");
  }
  MunnTree t;
  t.alphabet_ = x.alphabet_;
  std::set<std::string> verts(x.vertices_.begin(), x.vertices_.end());
  for (const auto& w : y.vertices_) {
    verts.insert(reduce_word(x.endpoint_ + w));
  }
  t.vertices_.assign(verts.begin(), verts.end());
  t.endpoint_ = reduce_word(x.endpoint_ + y.endpoint_);
  return t;
}

MunnTree munn_inv(const MunnTree& x) {
  MunnTree t;
  t.alphabet_ = x.alphabet_;
  std::string e = invert_word(x.endpoint_);
  std::set<std::string> verts;
  for (const auto& w : x.vertices_) {
    verts.insert(reduce_word(e + w));
  }
  t.vertices_.assign(verts.begin(), verts.end());
  t.endpoint_ = e;
  return t;
}

bool munn_natural_leq(const MunnTree& x, const MunnTree& y) {
  if (x.alphabet() != y.alphabet()) {
    throw InputError("alphabet mismatch");
  }
  if (x.endpoint() != y.endpoint()) {
    return false;
  }
  return std::includes(x.vertices().begin(), x.vertices().end(),
                       y.vertices().begin(), y.vertices().end());
}

elem evaluate(const FiniteInvSemigroup& M, const std::map<char, elem>& assign,
              const std::string& word) {
  auto image = [&](char c) -> elem {
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = assign.find(low);
    if (it == assign.end() || !std::isalpha(static_cast<unsigned char>(c))) {
      throw InputError("bad symbol '" + std::string(1, c) + "' in word");
    }
    M.check_elem(it->second);
    return std::isupper(static_cast<unsigned char>(c)) ? M.inv(it->second)
                                                       : it->second;
  };
  if (word.empty()) {
    auto e = M.identity();
    if (!e) {
      throw InputError("empty word needs a monoid (no identity in target)");
    }
    return *e;
  }
  elem acc = image(word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = M.mul(acc, image(word[i]));
  }
  return acc;
}

Presentation parse_presentation(const std::string& text,
                                const std::string& alphabet_hint) {
  Presentation P;
  std::set<char> letters(alphabet_hint.begin(), alphabet_hint.end());
  std::vector<std::string> chunks;
  std::string cur;
  for (char c : text) {
    if (c == ';' || c == ',') {
      chunks.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  chunks.push_back(cur);
  for (const auto& chunk : chunks) {
    if (chunk.empty()) continue;
    auto eq = chunk.find('=');
    if (eq == std::string::npos) {
      throw InputError("relation must have the form lhs=rhs: " + chunk);
    }
    std::string l = chunk.substr(0, eq);
    std::string r = chunk.substr(eq + 1);
    for (const std::string* w : {&l, &r}) {
      for (char c : *w) {
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw InputError("bad symbol in relation: " + std::string(1, c));
        }
        letters.insert(
            static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    P.relations.emplace_back(l, r);
  }
  P.alphabet.assign(letters.begin(), letters.end());
  if (P.alphabet.empty()) {
    throw InputError("presentation needs an alphabet");
  }
  return P;
}

std::vector<MunnTree> q_of_relations(const Presentation& P) {
  std::vector<MunnTree> out;
  for (const auto& [l, r] : P.relations) {
    out.push_back(MunnTree::from_word(P.alphabet, invert_word(l) + r));
    out.push_back(MunnTree::from_word(P.alphabet, l + invert_word(r)));
  }
  return out;
}

MembershipResult bounded_n_membership(const Presentation& P,
                                      const std::string& word, int maxlen) {
  MunnTree target = MunnTree::from_word(P.alphabet, word);
  std::set<std::string> target_verts(target.vertices().begin(),
                                     target.vertices().end());
  auto fits = [&](const MunnTree& t) {
    for (const auto& v : t.vertices()) {
      if (!target_verts.count(v)) return false;
    }
    return true;
  };

  // all reduced words of length <= maxlen over the doubled alphabet
  std::vector<std::string> conjugators{""};
  {
    std::vector<std::string> symbols;
    for (char c : P.alphabet) {
      symbols.push_back(std::string(1, c));
      symbols.push_back(std::string(1, toggle(c)));
    }
    std::size_t level_begin = 0;
    for (int len = 1; len <= maxlen; ++len) {
      std::size_t level_end = conjugators.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (const auto& s : symbols) {
          std::string ext = conjugators[i] + s;
          if (reduce_word(ext) == ext) {
            conjugators.push_back(ext);
          }
        }
      }
      level_begin = level_end;
    }
  }

  // relator words and their formal inverses
  std::vector<std::string> q_words;
  for (const auto& [l, r] : P.relations) {
    q_words.push_back(invert_word(l) + r);
    q_words.push_back(l + invert_word(r));
    q_words.push_back(invert_word(r) + l);
    q_words.push_back(r + invert_word(l));
  }

  // candidate factors, pruned to the target tree
  std::vector<std::pair<MunnTree, std::string>> factors;
  std::set<MunnTree> seen_factors;
  auto add_factor = [&](const std::string& fw) {
    MunnTree t = MunnTree::from_word(P.alphabet, fw);
    if (seen_factors.insert(t).second) {
      factors.emplace_back(std::move(t), fw);
    }
  };
  for (const auto& w : conjugators) {
    std::string wi = invert_word(w);
    for (const auto& q : q_words) {
      add_factor(wi + q + w);
    }
    add_factor(w + wi);  // idempotent factors u u^{-1}
  }

  struct State {
    MunnTree tree;
    std::vector<std::string> cert;
  };
  std::set<MunnTree> visited;
  std::deque<State> queue;
  MunnTree one = MunnTree::identity(P.alphabet);
  visited.insert(one);
  queue.push_back(State{one, {}});
  if (one == target) {
    return MembershipResult{true, {}};
  }
  while (!queue.empty()) {
    State st = queue.front();
    queue.pop_front();
    if (static_cast<int>(st.cert.size()) >= maxlen) {
      continue;
    }
    for (const auto& [ft, fw] : factors) {
      MunnTree next = munn_mul(st.tree, ft);
      if (!fits(next) || visited.count(next)) {
        continue;
      }
      std::vector<std::string> cert = st.cert;
      cert.push_back(fw);
      if (next == target) {
        return MembershipResult{true, std::move(cert)};
      }
      visited.insert(next);
      queue.push_back(State{std::move(next), std::move(cert)});
    }
  }
  return MembershipResult{false, {}};
}

}  // namespace isq
