// hoso: command-line front end for the circular / hosohedral-type Garside
// toolkit.
//
// Exit codes:
//   0  success
//   1  negative verdict (not conjugate / not periodic / not isomorphic)
//   2  usage error or violated precondition (bad syntax, unknown label,
//      unequal n-th powers handed to `roots`)
//   3  word-budget exceeded in the brute-force oracle

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoso/conjugacy.hpp"
#include "hoso/element.hpp"
#include "hoso/invariants.hpp"
#include "hoso/oracle.hpp"
#include "hoso/periodic.hpp"
#include "hoso/presentation.hpp"
#include "hoso/roots.hpp"
#include "hoso/word.hpp"

namespace {

using nlohmann::json;

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

hoso::GarsideElement parse_element(const hoso::Presentation& pres, const std::string& text) {
  return hoso::to_left_weighted(pres, hoso::parse_word(pres, text));
}

std::string element_word(const hoso::Presentation& pres, const hoso::GarsideElement& g) {
  return hoso::word_to_string(pres, hoso::element_to_word(pres, g));
}

json abelian_json(const hoso::AbelianGroup& g) {
  return json{{"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

int run_nf(const hoso::Presentation& pres, const std::string& text, bool json_mode) {
  hoso::GarsideElement x = parse_element(pres, text);
  if (!json_mode) std::cout << hoso::to_human(pres, x) << "\n";
  std::cout << hoso::to_json(pres, x) << "\n";
  return 0;
}

int run_conj(const hoso::Presentation& pres, const std::string& first, const std::string& second,
             bool json_mode) {
  hoso::GarsideElement x = parse_element(pres, first);
  hoso::GarsideElement y = parse_element(pres, second);
  std::optional<hoso::GarsideElement> witness = hoso::are_conjugate(pres, x, y);
  if (json_mode) {
    json out{{"conjugate", witness.has_value()}};
    if (witness) {
      out["witness"] = element_word(pres, *witness);
      out["witness_canonical"] = json::parse(hoso::to_json(pres, *witness));
    }
    std::cout << out.dump() << "\n";
  } else if (witness) {
    std::cout << "conjugate\n";
    std::cout << "witness: " << element_word(pres, *witness) << "\n";
  } else {
    std::cout << "not conjugate\n";
  }
  return witness ? 0 : 1;
}

int run_sss(const hoso::Presentation& pres, const std::string& text, const std::string& dot_path,
            bool json_mode) {
  hoso::GarsideElement x = parse_element(pres, text);
  hoso::ConjugacyGraph graph = hoso::super_summit_set(pres, x);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot open DOT output file: " + dot_path);
    out << hoso::to_dot(pres, graph);
  }
  if (json_mode) {
    std::cout << hoso::to_json(pres, graph) << "\n";
    return 0;
  }
  const hoso::GarsideElement& base = graph.vertices.at(graph.base);
  std::cout << "size: " << graph.vertices.size() << "\n";
  std::cout << "inf: " << base.inf() << "\n";
  std::cout << "sup: " << base.sup() << "\n";
  std::cout << "base: " << graph.base << "\n";
  std::cout << "conjugator to base: " << element_word(pres, graph.conjugator_to_base) << "\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    std::cout << "vertex " << i << ": " << hoso::to_human(pres, graph.vertices[i]) << "\n";
  for (const hoso::Arrow& a : graph.arrows)
    std::cout << "arrow: " << a.from << " -> " << a.to << " label " << hoso::to_human(pres, a.label)
              << "\n";
  return 0;
}

int run_periodic(const hoso::Presentation& pres, const std::string& text, bool json_mode) {
  hoso::GarsideElement x = parse_element(pres, text);
  std::optional<hoso::PeriodicInfo> info = hoso::periodicity(pres, x);
  if (json_mode) {
    json out{{"periodic", info.has_value()}};
    if (info) {
      out["p"] = info->p;
      out["q"] = info->q;
      out["factor"] = info->factor ? json(*info->factor + 1) : json(nullptr);
    }
    std::cout << out.dump() << "\n";
  } else if (info) {
    std::cout << "periodic: p=" << info->p << " q=" << info->q << "\n";
    if (info->factor)
      std::cout << "support: factor " << (*info->factor + 1) << "\n";
    else
      std::cout << "support: power of D\n";
  } else {
    std::cout << "not periodic\n";
  }
  return info ? 0 : 1;
}

int run_center(const hoso::Presentation& pres, bool json_mode) {
  hoso::CenterInfo info = hoso::center(pres);
  if (json_mode) {
    json out{{"whole_group", info.whole_group},
             {"generator", hoso::to_human(pres, info.generator)},
             {"generator_canonical", json::parse(hoso::to_json(pres, info.generator))}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (info.whole_group ? "abelian: yes (center is the whole group)\n" : "abelian: no\n");
    std::cout << "central generator: " << hoso::to_human(pres, info.generator) << "\n";
  }
  return 0;
}

int run_homology(const hoso::Presentation& pres, std::optional<int> degree, bool json_mode) {
  if (degree) {
    hoso::AbelianGroup h = hoso::homology(pres, *degree);
    if (json_mode) {
      json out = abelian_json(h);
      out["n"] = *degree;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "H_" << *degree << " = " << h.to_string() << "\n";
    }
    return 0;
  }
  hoso::AbelianGroup h0 = hoso::homology(pres, 0);
  hoso::AbelianGroup h1 = hoso::homology(pres, 1);
  hoso::AbelianGroup h2 = hoso::homology(pres, 2);
  if (json_mode) {
    json out{{"H0", abelian_json(h0)}, {"H1", abelian_json(h1)}, {"H2", abelian_json(h2)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "H_0 = " << h0.to_string() << "\n";
    std::cout << "H_1 = " << h1.to_string() << "\n";
    std::cout << "H_2 = " << h2.to_string() << "\n";
    std::cout << "H_n = 0 for n >= 3\n";
  }
  return 0;
}

int run_roots(const hoso::Presentation& pres, const std::string& first, const std::string& second,
              long long n, bool json_mode) {
  hoso::GarsideElement alpha = parse_element(pres, first);
  hoso::GarsideElement beta = parse_element(pres, second);
  hoso::SamePowerOutcome out = hoso::same_power_conjugate(pres, alpha, beta, n);
  switch (out.kind) {
    case hoso::SamePowerOutcome::Kind::conjugate:
      if (json_mode) {
        json j{{"outcome", "conjugate"},
               {"witness", element_word(pres, *out.witness)},
               {"witness_canonical", json::parse(hoso::to_json(pres, *out.witness))}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "conjugate\n";
        std::cout << "witness: " << element_word(pres, *out.witness) << "\n";
      }
      return 0;
    case hoso::SamePowerOutcome::Kind::nonconjugate_periodic:
      if (json_mode)
        std::cout << json{{"outcome", "nonconjugate_periodic"}}.dump() << "\n";
      else
        std::cout << "not conjugate: periodic roots supported on different factors\n";
      return 1;
    case hoso::SamePowerOutcome::Kind::precondition_failed:
    default:
      if (json_mode) std::cout << json{{"outcome", "precondition_failed"}}.dump() << "\n";
      std::cerr << "error: the two words do not have equal powers for n = " << n << "\n";
      return 2;
  }
}

int run_iso(const hoso::Presentation& p1, const hoso::Presentation& p2,
            const std::string& map_text, bool json_mode) {
  bool isomorphic = hoso::classify_isomorphic(p1, p2);
  std::optional<std::string> image_text;
  if (!map_text.empty() && isomorphic) {
    const hoso::Factor& a = p1.factor(0);
    const hoso::Factor& b = p2.factor(0);
    hoso::Word w = hoso::parse_word(p1, map_text);
    if (a.atoms == b.atoms && a.delta_len == b.delta_len) {
      image_text = hoso::word_to_string(p2, w);
    } else if (a.atoms == b.delta_len && a.delta_len == b.atoms) {
      image_text = hoso::word_to_string(p2, hoso::explicit_iso_map(p1, w));
    } else {
      throw std::invalid_argument(
          "--map needs the target presentation to be (m,l) or (l,m) of the source");
    }
  }
  if (json_mode) {
    json out{{"isomorphic", isomorphic}};
    if (image_text) out["image"] = *image_text;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (isomorphic ? "isomorphic\n" : "not isomorphic\n");
    if (image_text) std::cout << "image: " << *image_text << "\n";
  }
  return isomorphic ? 0 : 1;
}

int run_braid(const std::string& label, bool json_mode) {
  std::pair<int, int> params = hoso::braid_rank2_lookup(label);
  std::string text = std::to_string(params.first) + "," + std::to_string(params.second);
  if (json_mode)
    std::cout << json{{"label", label}, {"presentation", text}}.dump() << "\n";
  else
    std::cout << text << "\n";
  return 0;
}

hoso::Word atoms_to_word(const hoso::AtomWord& w) {
  hoso::Word out;
  for (const hoso::Atom& a : w) out.push_back({false, a.factor, a.index, 1});
  return out;
}

hoso::Word simple_word(const hoso::Presentation& pres, const hoso::Simple& s) {
  return hoso::element_to_word(pres, hoso::simple_element(pres, s));
}

int run_verify(const hoso::Presentation& pres, long long radius, std::size_t max_words,
               bool json_mode) {
  hoso::Ball ball(pres, radius, max_words);
  std::vector<std::string> failures;

  const bool lattice_checked = radius >= pres.delta_len();
  std::size_t simple_count = 0;
  std::size_t pair_count = 0;
  if (lattice_checked) {
    std::vector<hoso::Simple> simples = pres.all_simples();
    simple_count = simples.size();
    hoso::Word delta_word{{true, 0, 0, 1}};
    for (const hoso::Simple& s : simples) {
      hoso::Word left = simple_word(pres, s);
      hoso::Word lc = simple_word(pres, pres.left_complement(s));
      hoso::Word rc = simple_word(pres, pres.right_complement(s));
      hoso::Word s_lc = left;
      s_lc.insert(s_lc.end(), lc.begin(), lc.end());
      hoso::Word rc_s = rc;
      rc_s.insert(rc_s.end(), left.begin(), left.end());
      if (!hoso::oracle_equal(ball, s_lc, delta_word))
        failures.push_back("left complement identity fails for " + hoso::to_human(pres, s));
      if (!hoso::oracle_equal(ball, rc_s, delta_word))
        failures.push_back("right complement identity fails for " + hoso::to_human(pres, s));
    }
    for (const hoso::Simple& s : simples)
      for (const hoso::Simple& t : simples) {
        ++pair_count;
        bool closed_form = pres.left_divides(s, t);
        bool brute = hoso::oracle_left_divides(ball, simple_word(pres, s), simple_word(pres, t));
        if (closed_form != brute)
          failures.push_back("divisibility mismatch: " + hoso::to_human(pres, s) + " vs " +
                             hoso::to_human(pres, t));
      }
  }

  // Normal forms against the oracle: equal oracle class <=> equal normal form.
  std::size_t checked_words = 0;
  std::unordered_map<std::string, std::string> rep_to_nf;
  std::unordered_map<std::string, std::string> nf_to_rep;
  for (long long weight = 1; weight <= radius && failures.empty(); ++weight) {
    for (const hoso::AtomWord& u : ball.words_of_weight(weight)) {
      ++checked_words;
      std::string rep = hoso::atom_word_to_string(pres, ball.representative(u));
      std::string nf =
          hoso::to_json(pres, hoso::normalize_positive(pres, atoms_to_word(u)));
      auto ins1 = rep_to_nf.emplace(rep, nf);
      if (!ins1.second && ins1.first->second != nf) {
        failures.push_back("oracle-equal words got distinct normal forms: " +
                           hoso::atom_word_to_string(pres, u));
        break;
      }
      auto ins2 = nf_to_rep.emplace(nf, rep);
      if (!ins2.second && ins2.first->second != rep) {
        failures.push_back("oracle-distinct words share a normal form: " +
                           hoso::atom_word_to_string(pres, u));
        break;
      }
    }
  }

  if (json_mode) {
    json out{{"words", ball.word_count()},
             {"classes", ball.class_count()},
             {"lattice_checked", lattice_checked},
             {"normal_forms_checked", checked_words},
             {"failures", failures}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "words: " << ball.word_count() << "\n";
    std::cout << "classes: " << ball.class_count() << "\n";
    if (lattice_checked) {
      std::cout << "complement identities: checked (" << simple_count << " simples)\n";
      std::cout << "divisibility lattice: checked (" << pair_count << " pairs)\n";
    } else {
      std::cout << "complement identities: skipped (radius below the weight of D)\n";
      std::cout << "divisibility lattice: skipped (radius below the weight of D)\n";
    }
    std::cout << "normal forms vs oracle: checked (" << checked_words << " words)\n";
    for (const std::string& f : failures) std::cout << "FAILURE: " << f << "\n";
    std::cout << (failures.empty() ? "verify: ok\n" : "verify: FAILED\n");
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside toolkit for circular groups and their Delta-products"};
  app.require_subcommand(1);

  // The iso subcommand accepts the short spellings -p1 / -p2; normalize
  // them to long options before CLI11 sees them.  CLI11's vector overload
  // wants the arguments in reverse order.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a == "-p1") a = "--p1";
    if (a == "-p2") a = "--p2";
    args.push_back(a);
  }

  std::string nf_pres, conj_pres, sss_pres, periodic_pres, center_pres, homology_pres, roots_pres,
      verify_pres;
  std::vector<std::string> nf_word, sss_word, periodic_word;
  std::string conj_w1, conj_w2, roots_w1, roots_w2;
  std::string sss_dot;
  std::string iso_p1, iso_p2, iso_map;
  std::string braid_label;
  long long roots_n = 0;
  int homology_n = -1;
  bool homology_n_set = false;
  long long verify_radius = 0;
  std::size_t verify_max_words = 1000000;
  bool nf_json = false, conj_json = false, sss_json = false, periodic_json = false,
       center_json = false, homology_json = false, roots_json = false, iso_json = false,
       braid_json = false, verify_json = false;

  CLI::App* nf = app.add_subcommand("nf", "left-weighted normal form of a word");
  nf->add_option("-p", nf_pres, "presentation, e.g. 2,3 or 1,2;1,3")->required();
  nf->add_option("word", nf_word, "word, e.g. \"a0 a1 a0^-1 D^2\"")->required();
  nf->add_flag("--json", nf_json, "canonical JSON only");

  CLI::App* conj = app.add_subcommand("conj", "conjugacy verdict with witness");
  conj->add_option("-p", conj_pres, "presentation")->required();
  conj->add_option("first", conj_w1, "first word")->required();
  conj->add_option("second", conj_w2, "second word")->required();
  conj->add_flag("--json", conj_json, "JSON output");

  CLI::App* sss = app.add_subcommand("sss", "super-summit set and conjugacy graph");
  sss->add_option("-p", sss_pres, "presentation")->required();
  sss->add_option("word", sss_word, "word")->required();
  sss->add_option("--dot", sss_dot, "write the conjugacy graph as DOT to this file");
  sss->add_flag("--json", sss_json, "JSON output");

  CLI::App* periodic = app.add_subcommand("periodic", "periodicity report");
  periodic->add_option("-p", periodic_pres, "presentation")->required();
  periodic->add_option("word", periodic_word, "word")->required();
  periodic->add_flag("--json", periodic_json, "JSON output");

  CLI::App* center_cmd = app.add_subcommand("center", "center of the group");
  center_cmd->add_option("-p", center_pres, "presentation")->required();
  center_cmd->add_flag("--json", center_json, "JSON output");

  CLI::App* homology = app.add_subcommand("homology", "integral homology");
  homology->add_option("-p", homology_pres, "presentation")->required();
  homology->add_option("-n", homology_n, "single degree (default: degrees 0..2)")
      ->check(CLI::NonNegativeNumber);
  homology->add_flag("--json", homology_json, "JSON output");

  CLI::App* roots = app.add_subcommand("roots", "conjugacy of two n-th roots of one element");
  roots->add_option("-p", roots_pres, "presentation")->required();
  roots->add_option("first", roots_w1, "first root word")->required();
  roots->add_option("second", roots_w2, "second root word")->required();
  roots->add_option("-n", roots_n, "common power (nonzero integer)")->required();
  roots->add_flag("--json", roots_json, "JSON output");

  CLI::App* iso = app.add_subcommand("iso", "isomorphism classification of circular groups");
  iso->add_option("--p1", iso_p1, "first circular presentation m,l")->required();
  iso->add_option("--p2", iso_p2, "second circular presentation m,l")->required();
  iso->add_option("--map", iso_map, "word of the first group to push through the witness map");
  iso->add_flag("--json", iso_json, "JSON output");

  CLI::App* braid = app.add_subcommand("braid", "circular parameters of a rank-2 braid group");
  braid->add_option("label", braid_label, "label, e.g. G12 or G(4,4,2)")->required();
  braid->add_flag("--json", braid_json, "JSON output");

  CLI::App* verify = app.add_subcommand("verify", "cross-check closed forms against the oracle");
  verify->add_option("-p", verify_pres, "presentation")->required();
  verify->add_option("--radius", verify_radius, "weighted-length radius of the word ball")
      ->required();
  verify->add_option("--max-words", verify_max_words, "word budget (default 1000000)");
  verify->add_flag("--json", verify_json, "JSON output");

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (nf->parsed())
      return run_nf(hoso::Presentation::parse(nf_pres), join_args(nf_word), nf_json);
    if (conj->parsed())
      return run_conj(hoso::Presentation::parse(conj_pres), conj_w1, conj_w2, conj_json);
    if (sss->parsed())
      return run_sss(hoso::Presentation::parse(sss_pres), join_args(sss_word), sss_dot, sss_json);
    if (periodic->parsed())
      return run_periodic(hoso::Presentation::parse(periodic_pres), join_args(periodic_word),
                          periodic_json);
    if (center_cmd->parsed()) return run_center(hoso::Presentation::parse(center_pres), center_json);
    if (homology->parsed()) {
      homology_n_set = homology->count("-n") > 0;
      return run_homology(hoso::Presentation::parse(homology_pres),
                          homology_n_set ? std::optional<int>(homology_n) : std::nullopt,
                          homology_json);
    }
    if (roots->parsed())
      return run_roots(hoso::Presentation::parse(roots_pres), roots_w1, roots_w2, roots_n,
                       roots_json);
    if (iso->parsed())
      return run_iso(hoso::Presentation::parse(iso_p1), hoso::Presentation::parse(iso_p2), iso_map,
                     iso_json);
    if (braid->parsed()) return run_braid(braid_label, braid_json);
    if (verify->parsed())
      return run_verify(hoso::Presentation::parse(verify_pres), verify_radius, verify_max_words,
                        verify_json);
  } catch (const hoso::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
