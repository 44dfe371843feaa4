// isq: compute with finite inverse semigroups: normal inverse
// subsemigroups, quotient ordered groupoids, congruences, factorizations,
// plus symbolic polycyclic/gauge and free-inverse-monoid checks.
//
// Exit codes: 0 = success / property holds, 1 = property fails or an
// assertion is refuted, 2 = input or usage error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isq/builders.hpp"
#include "isq/congruence.hpp"
#include "isq/errors.hpp"
#include "isq/factorize.hpp"
#include "isq/green.hpp"
#include "isq/json_io.hpp"
#include "isq/munn.hpp"
#include "isq/normal.hpp"
#include "isq/ogroupoid.hpp"
#include "isq/poly.hpp"
#include "isq/quotient.hpp"
#include "isq/semigroup.hpp"
#include "isq/suite.hpp"

namespace {

using isq::json;

struct Options {
  std::string out;
  bool pretty = false;
};

void emit(const json& j, const Options& opt) {
  isq::write_output(j, opt.out, opt.pretty);
}

int cmd_builder(const std::string& which, int n, const std::string& left,
                const std::string& group, int k, const Options& opt) {
  isq::FiniteInvSemigroup S = [&]() {
    if (which == "in") return isq::symmetric_inverse_monoid(n);
    if (which == "example-a") return isq::example_S6();
    if (which == "example-b") return isq::example_T();
    if (which == "brandt") return isq::brandt_semigroup(k);
    if (which == "cyclic") return isq::cyclic_group(n);
    if (which == "product") {
      isq::FiniteInvSemigroup t =
          isq::semigroup_from_json(isq::load_json_file(left));
      isq::FiniteInvSemigroup g =
          isq::semigroup_from_json(isq::load_json_file(group));
      return isq::direct_product_with_group(t, g);
    }
    throw isq::InputError("unknown builder: " + which);
  }();
  emit(isq::semigroup_to_json(S), opt);
  return 0;
}

int cmd_verify(const std::string& path, const Options& opt) {
  json j = isq::load_json_file(path);
  isq::Report rep;
  if (j.contains("kind") && j["kind"] == "table") {
    // raw tables get the report even when they fail the laws
    isq::TableData data;
    try {
      data.mul = j.at("mul").get<std::vector<std::vector<isq::elem>>>();
      data.inv = j.at("inv").get<std::vector<isq::elem>>();
    } catch (const json::exception& e) {
      throw isq::InputError(std::string("semigroup JSON: ") + e.what());
    }
    rep = isq::check_inverse_semigroup(data);
  } else {
    isq::FiniteInvSemigroup S = isq::semigroup_from_json(j);
    rep = isq::check_inverse_semigroup(S);
  }
  emit(json{{"ok", rep.ok()}, {"violations", rep.violations()}}, opt);
  return rep.ok() ? 0 : 1;
}

int cmd_green(const std::string& path, const Options& opt) {
  isq::FiniteInvSemigroup S =
      isq::semigroup_from_json(isq::load_json_file(path));
  isq::GreenRelations g = isq::green_relations(S);
  json leq = json::array();
  for (std::size_t a = 0; a < g.j.num_classes(); ++a) {
    for (std::size_t b = 0; b < g.j.num_classes(); ++b) {
      if (g.j_class_leq[a][b]) {
        leq.push_back(json::array({static_cast<int>(a), static_cast<int>(b)}));
      }
    }
  }
  emit(json{{"r", g.r.classes()},
            {"l", g.l.classes()},
            {"d", g.d.classes()},
            {"j", g.j.classes()},
            {"j_preorder", std::move(leq)}},
       opt);
  return 0;
}

int cmd_normal(const std::string& path, const std::string& check,
               const std::string& closure, const Options& opt) {
  isq::FiniteInvSemigroup S =
      isq::semigroup_from_json(isq::load_json_file(path));
  std::size_t n = static_cast<std::size_t>(S.size());
  if (!check.empty()) {
    isq::Bitset N = isq::subset_from_json(isq::load_json_file(check), n);
    bool closed_ops = N.any() && isq::is_closed_under_ops(S, N);
    json j{{"subsemigroup", closed_ops}};
    bool normal = false;
    if (closed_ops) {
      isq::Subsemigroup handle{&S, N};
      normal = isq::is_normal(handle);
      j["full"] = isq::is_full(handle);
      j["normal"] = normal;
      j["kernel_property"] = isq::has_kernel_property(handle);
      j["clifford"] = isq::is_clifford(handle);
      j["closed"] = isq::is_closed(handle);
    }
    emit(j, opt);
    return normal ? 0 : 1;
  }
  if (!closure.empty()) {
    isq::Bitset A = isq::subset_from_json(isq::load_json_file(closure), n);
    emit(isq::subset_to_json(isq::normal_closure(S, A).members), opt);
    return 0;
  }
  isq::NormalLattice lattice = isq::enumerate_normal(S);
  json normals = json::array();
  json edges = json::array();
  for (std::size_t i = 0; i < lattice.normals.size(); ++i) {
    normals.push_back(isq::subset_to_json(lattice.normals[i].members));
    for (std::size_t j2 = 0; j2 < lattice.normals.size(); ++j2) {
      if (i != j2 && lattice.includes[i][j2]) {
        edges.push_back(
            json::array({static_cast<int>(i), static_cast<int>(j2)}));
      }
    }
  }
  emit(json{{"normals", std::move(normals)}, {"includes", std::move(edges)}},
       opt);
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& by,
                 const Options& opt) {
  isq::FiniteInvSemigroup S =
      isq::semigroup_from_json(isq::load_json_file(path));
  isq::Bitset N = isq::subset_from_json(isq::load_json_file(by),
                                        static_cast<std::size_t>(S.size()));
  isq::NQuotient q = isq::build_quotient(S, N);
  json j = isq::quotient_to_json(q);
  j["congruence"] = isq::is_simeq_congruence(S, N);
  emit(j, opt);
  return 0;
}

int cmd_congruences(const std::string& path, const std::string& kernel,
                    const Options& opt) {
  isq::FiniteInvSemigroup S =
      isq::semigroup_from_json(isq::load_json_file(path));
  isq::CongruenceLattice lattice = isq::all_congruences(S);
  std::optional<isq::Bitset> want;
  if (!kernel.empty()) {
    want = isq::subset_from_json(isq::load_json_file(kernel),
                                 static_cast<std::size_t>(S.size()));
  }
  json out = json::array();
  for (const auto& rho : lattice.congruences) {
    if (want && !(rho.kernel() == *want)) continue;
    out.push_back(json{{"classes", rho.partition().classes()},
                       {"kernel", rho.kernel().to_indices()}});
  }
  emit(json{{"congruences", std::move(out)}}, opt);
  return 0;
}

int cmd_factorize(const std::string& spath, const std::string& sigmapath,
                  const std::string& hompath, const Options& opt) {
  isq::FiniteInvSemigroup S =
      isq::semigroup_from_json(isq::load_json_file(spath));
  isq::FiniteInvSemigroup Sigma =
      isq::semigroup_from_json(isq::load_json_file(sigmapath));
  isq::Homomorphism phi(S, Sigma,
                        isq::hom_map_from_json(isq::load_json_file(hompath)));
  isq::Factorization f = isq::factorize_hom(phi);
  json j;
  j["kernel"] = f.K.to_indices();
  j["classes"] = f.quotient.classes.classes();
  j["kappa"] = f.kappa_map;
  j["star_injective"] = isq::is_star_injective(f.kappa());
  bool unique = true;
  for (const auto& N : isq::enumerate_normal(S).normals) {
    unique = unique
             && isq::second_leg_exists(phi, N.members) == (N.members == f.K);
  }
  j["unique"] = unique;
  emit(j, opt);
  return unique ? 0 : 1;
}

int cmd_poly(int n, const std::string& check, int maxlen, const Options& opt) {
  if (check != "gauge") {
    throw isq::InputError("unknown poly check: " + check);
  }
  using namespace isq::poly;
  bool normal = gauge_is_normal(n, maxlen);
  long contradictions = 0;
  long inconclusive = 0;
  std::vector<PolyElem> elems{PolyElem::zero_elem()};
  for (const auto& u : all_words(n, maxlen)) {
    for (const auto& v : all_words(n, maxlen)) {
      elems.push_back(PolyElem::pair(u, v));
    }
  }
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      Tri got = gauge_leq_search(n, x, y, maxlen);
      if (got == Tri::unknown) {
        ++inconclusive;
      } else if ((got == Tri::yes) != gauge_leq(x, y)) {
        ++contradictions;
      }
    }
  }
  bool ok = normal && contradictions == 0;
  emit(json{{"normal", normal},
            {"leq_pairs_checked",
             static_cast<long>(elems.size() * elems.size())},
            {"leq_contradictions", contradictions},
            {"leq_inconclusive", inconclusive}},
       opt);
  return ok ? 0 : 1;
}

std::map<char, isq::elem> parse_assignment(const std::string& text) {
  std::map<char, isq::elem> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto eq = cur.find('=');
    if (eq != 1 || cur.size() < 3) {
      throw isq::InputError("assignment entries look like a=idx3: " + cur);
    }
    std::string val = cur.substr(2);
    if (val.rfind("idx", 0) == 0) val = val.substr(3);
    try {
      out[cur[0]] = std::stoi(val);
    } catch (const std::exception&) {
      throw isq::InputError("bad element index in assignment: " + cur);
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

int cmd_munn_eval(const std::string& word, const std::string& assign,
                  const std::string& in, const Options& opt) {
  isq::FiniteInvSemigroup M =
      isq::semigroup_from_json(isq::load_json_file(in));
  std::map<char, isq::elem> a = parse_assignment(assign);
  isq::elem result = isq::evaluate(M, a, word);
  json j{{"word", word}, {"element", result}, {"name", M.elem_name(result)}};
  emit(j, opt);
  return 0;
}

int cmd_munn_member(const std::string& pres, const std::string& alphabet,
                    const std::string& word, int maxlen, const Options& opt) {
  isq::Presentation P = isq::parse_presentation(pres, alphabet);
  isq::MembershipResult r = isq::bounded_n_membership(P, word, maxlen);
  json j{{"word", word},
         {"result", r.yes ? "yes" : "inconclusive"},
         {"certificate", r.certificate}};
  emit(j, opt);
  return 0;
}

int cmd_suite(unsigned seed, const Options& opt) {
  auto results = isq::run_paper_suite(seed);
  if (opt.pretty) {
    for (const auto& r : results) {
      std::cout << (r.ok() ? "PASS" : "FAIL") << "  criterion " << r.id
                << ": " << r.name << " (" << r.seconds << "s)"
                << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
    }
    std::cout << (isq::all_pass(results) ? "ALL CRITERIA PASS"
                                         : "CRITERIA FAILED")
              << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back(json{{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"within_budget", r.within_budget()},
                         {"detail", r.detail}});
    }
    emit(json{{"criteria", std::move(arr)},
              {"all_pass", isq::all_pass(results)}},
         opt);
  }
  return isq::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with finite inverse semigroups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out, "write the JSON report to a file");
  app.add_flag("--pretty", opt.pretty, "human-readable output");
  std::size_t max_size = 0;
  app.add_option("--max-size", max_size,
                 "override the element cap for exhaustive algorithms");

  auto* builder = app.add_subcommand("builder", "construct a fixture");
  std::string which;
  builder
      ->add_option("which", which,
                   "in | example-a | example-b | product | brandt | cyclic")
      ->required();
  int n = 2, k = 1;
  std::string left, group;
  builder->add_option("--n", n, "degree / order");
  builder->add_option("--k", k, "largest Brandt index");
  builder->add_option("--left", left, "left factor JSON (product)");
  builder->add_option("--group", group, "group JSON (product)");

  std::string in_path, check_path, closure_path, by_path, kernel_path;
  std::string sigma_path, hom_path;
  auto* verify =
      app.add_subcommand("verify", "check the inverse semigroup laws");
  verify->add_option("semigroup", in_path, "semigroup JSON")->required();

  auto* green =
      app.add_subcommand("green", "Green's relations and J-preorder");
  green->add_option("semigroup", in_path, "semigroup JSON")->required();

  auto* normal = app.add_subcommand(
      "normal", "enumerate normal inverse subsemigroups (default), or "
                "--check / --closure a subset");
  normal->add_option("semigroup", in_path, "semigroup JSON")->required();
  normal->add_option("--check", check_path, "subset JSON to test");
  normal->add_option("--closure", closure_path, "subset JSON to close");

  auto* quotient = app.add_subcommand("quotient", "the quotient S // N");
  quotient->add_option("semigroup", in_path, "semigroup JSON")->required();
  quotient->add_option("--by", by_path, "normal subsemigroup JSON")
      ->required();

  auto* congruences =
      app.add_subcommand("congruences", "all congruences, with kernels");
  congruences->add_option("semigroup", in_path, "semigroup JSON")->required();
  congruences->add_option("--kernel", kernel_path, "filter by kernel JSON");

  auto* factorize =
      app.add_subcommand("factorize", "factor a homomorphism through S // K");
  factorize->add_option("semigroup", in_path, "source JSON")->required();
  factorize->add_option("target", sigma_path, "target JSON")->required();
  factorize->add_option("--hom", hom_path, "map JSON")->required();

  auto* polycmd = app.add_subcommand("poly", "polycyclic/gauge monoid checks");
  int poly_n = 2, maxlen = 4;
  std::string poly_check = "gauge";
  polycmd->add_option("--n", poly_n, "alphabet size");
  polycmd->add_option("--check", poly_check, "check name (gauge)");
  polycmd->add_option("--maxlen", maxlen, "word length bound");

  auto* munncmd = app.add_subcommand("munn", "free inverse monoid tools");
  munncmd->require_subcommand(1);
  auto* eval =
      munncmd->add_subcommand("eval", "evaluate a word in a semigroup");
  std::string word, assign;
  eval->add_option("--word", word, "word (uppercase = inverse)")->required();
  eval->add_option("--assign", assign, "letter=idxN,... assignment")
      ->required();
  eval->add_option("--in", in_path, "semigroup JSON")->required();
  auto* member = munncmd->add_subcommand(
      "member", "bounded search for membership in N(P)");
  std::string pres, alphabet;
  member->add_option("--pres", pres, "relations like 'ab=ba;aab=b'");
  member->add_option("--alphabet", alphabet,
                     "alphabet (inferred from relations if omitted)");
  member->add_option("--word", word, "the element to certify")->required();
  member->add_option("--maxlen", maxlen, "conjugator/product length bound");

  auto* suite = app.add_subcommand("suite", "run verification suites");
  bool paper = false;
  unsigned seed = 1;
  suite->add_flag("--paper", paper, "run the complete verification suite");
  suite->add_option("--seed", seed, "seed for randomized property checks");

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
    sc->fallthrough();
    for (CLI::App* nested :
         sc->get_subcommands([](const CLI::App*) { return true; })) {
      nested->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (max_size > 0) {
    setenv("ISQ_MAX_ELEMENTS", std::to_string(max_size).c_str(), 1);
  }

  try {
    if (*builder) return cmd_builder(which, n, left, group, k, opt);
    if (*verify) return cmd_verify(in_path, opt);
    if (*green) return cmd_green(in_path, opt);
    if (*normal) return cmd_normal(in_path, check_path, closure_path, opt);
    if (*quotient) return cmd_quotient(in_path, by_path, opt);
    if (*congruences) return cmd_congruences(in_path, kernel_path, opt);
    if (*factorize) return cmd_factorize(in_path, sigma_path, hom_path, opt);
    if (*polycmd) return cmd_poly(poly_n, poly_check, maxlen, opt);
    if (*munncmd) {
      if (*eval) return cmd_munn_eval(word, assign, in_path, opt);
      if (*member) return cmd_munn_member(pres, alphabet, word, maxlen, opt);
    }
    if (*suite) {
      if (!paper) {
        std::cerr << "suite: pass --paper to run the verification suite\n";
        return 2;
      }
      return cmd_suite(seed, opt);
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const isq::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const isq::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
