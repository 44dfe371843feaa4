#include "isq/json_io.hpp"

#include <fstream>
#include <iostream>

#include "isq/errors.hpp"

namespace isq {

json semigroup_to_json(const FiniteInvSemigroup& S) {
  json j;
  if (S.backend() == FiniteInvSemigroup::Backend::partial_bijection) {
    j["kind"] = "pbij";
    j["degree"] = S.degree();
    json elems = json::array();
    for (elem s = 0; s < S.size(); ++s) {
      elems.push_back(S.pbij(s).images());
    }
    j["elements"] = std::move(elems);
  } else {
    TableData data = S.table();
    j["kind"] = "table";
    j["n"] = S.size();
    j["mul"] = data.mul;
    j["inv"] = data.inv;
  }
  return j;
}

FiniteInvSemigroup semigroup_from_json(const json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "pbij") {
      int degree = j.at("degree").get<int>();
      std::vector<PartialBijection> elems;
      for (const auto& img : j.at("elements")) {
        elems.emplace_back(degree, img.get<std::vector<int>>());
      }
      return FiniteInvSemigroup::from_partial_bijections(std::move(elems));
    }
    if (kind == "table") {
      TableData data;
      data.mul = j.at("mul").get<std::vector<std::vector<elem>>>();
      data.inv = j.at("inv").get<std::vector<elem>>();
      if (j.contains("n")
          && j.at("n").get<std::size_t>() != data.mul.size()) {
        throw InputError("semigroup JSON: n does not match the table");
      }
      return FiniteInvSemigroup::from_table(std::move(data));
    }
    throw InputError("semigroup JSON: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("semigroup JSON: ") + e.what());
  }
}

json subset_to_json(const Bitset& b) {
  return json{{"indices", b.to_indices()}};
}

Bitset subset_from_json(const json& j, std::size_t n) {
  try {
    Bitset b(n);
    for (int i : j.at("indices").get<std::vector<int>>()) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) {
        throw InputError("subset JSON: index out of range");
      }
      b.set(static_cast<std::size_t>(i));
    }
    return b;
  } catch (const json::exception& e) {
    throw InputError(std::string("subset JSON: ") + e.what());
  }
}

json hom_map_to_json(const std::vector<elem>& map) {
  return json{{"map", map}};
}

std::vector<elem> hom_map_from_json(const json& j) {
  try {
    return j.at("map").get<std::vector<elem>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("homomorphism JSON: ") + e.what());
  }
}

json og_to_json(const OrderedGroupoid& G) {
  json j;
  std::vector<int> elements, identities, dom, ran, inv;
  for (int g = 0; g < G.size(); ++g) {
    elements.push_back(g);
    if (G.is_identity(g)) identities.push_back(g);
    dom.push_back(G.dom(g));
    ran.push_back(G.ran(g));
    inv.push_back(G.inv(g));
  }
  json comp = json::array();
  json leq = json::array();
  for (int g = 0; g < G.size(); ++g) {
    for (int h = 0; h < G.size(); ++h) {
      if (G.comp(g, h) != -1) {
        comp.push_back(json::array({g, h, G.comp(g, h)}));
      }
      if (G.leq(g, h)) {
        leq.push_back(json::array({g, h}));
      }
    }
  }
  j["elements"] = std::move(elements);
  j["identities"] = std::move(identities);
  j["dom"] = std::move(dom);
  j["ran"] = std::move(ran);
  j["inv"] = std::move(inv);
  j["comp"] = std::move(comp);
  j["leq"] = std::move(leq);
  return j;
}

json partition_to_json(const Partition& p) {
  return json{{"classes", p.classes()}};
}

json quotient_to_json(const NQuotient& q) {
  json j;
  j["classes"] = q.classes.classes();
  j["groupoid"] = og_to_json(q.groupoid);
  json witness = json::array();
  std::size_t k = q.classes.num_classes();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (q.witness[a][b] >= 0) {
        witness.push_back(json::array(
            {static_cast<int>(a), static_cast<int>(b), q.witness[a][b]}));
      }
    }
  }
  j["witness"] = std::move(witness);
  j["inductive"] = is_inductive_quotient(q);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_output(const json& j, const std::string& out_path, bool pretty) {
  std::string text = pretty ? j.dump(2) : j.dump();
  text += '\n';
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw InputError("cannot open output file: " + out_path);
    }
    out << text;
  }
}

}  // namespace isq
