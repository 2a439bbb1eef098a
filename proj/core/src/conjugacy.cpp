#include "hoso/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hoso {

namespace {

// BFS data shared by the SSS consumers: vertices in canonical order plus, for
// each vertex, a conjugator from the base representative.
struct SssData {
  std::vector<GarsideElement> vertices;        // canonically sorted
  std::vector<GarsideElement> conj_from_base;  // base^{g_v} = v
  int base = 0;                                // index of the send_to_sss image
  GarsideElement conjugator_to_base;           // x^{c} = vertices[base]
};

SssData compute_sss(const Presentation& pres, const GarsideElement& x) {
  auto [rep, to_rep] = send_to_sss(pres, x);
  const long long inf0 = rep.inf();
  const long long sup0 = rep.sup();

  std::map<GarsideElement, int> ids;
  std::vector<GarsideElement> order;  // discovery order
  std::vector<GarsideElement> conj;   // rep^{conj[i]} = order[i]
  order.push_back(rep);
  conj.push_back(GarsideElement());
  ids.emplace(rep, 0);

  const std::vector<Simple> simples = pres.all_simples();
  for (size_t head = 0; head < order.size(); ++head) {
    const GarsideElement v = order[head];
    const GarsideElement gv = conj[head];
    for (const Simple& s : simples) {
      if (s.is_one()) continue;
      GarsideElement g = simple_element(pres, s);
      GarsideElement w = conjugate(pres, v, g);
      if (w.inf() != inf0 || w.sup() != sup0) continue;
      if (ids.emplace(w, static_cast<int>(order.size())).second) {
        order.push_back(w);
        conj.push_back(multiply(pres, gv, g));
      }
    }
  }

  SssData data;
  data.vertices = order;
  std::sort(data.vertices.begin(), data.vertices.end());
  data.conj_from_base.resize(data.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) {
    auto it = std::lower_bound(data.vertices.begin(), data.vertices.end(), order[i]);
    data.conj_from_base[it - data.vertices.begin()] = conj[i];
  }
  auto base_it = std::lower_bound(data.vertices.begin(), data.vertices.end(), rep);
  data.base = static_cast<int>(base_it - data.vertices.begin());
  data.conjugator_to_base = to_rep;
  return data;
}

// Arrows with divisor-minimal labels: s maps `from` into the vertex set and
// no nontrivial proper left-divisor of s does.
std::vector<Arrow> minimal_arrows(const Presentation& pres, const SssData& data) {
  const long long inf0 = data.vertices.empty() ? 0 : data.vertices.front().inf();
  const long long sup0 = data.vertices.empty() ? 0 : data.vertices.front().sup();
  auto vertex_index = [&](const GarsideElement& w) -> int {
    auto it = std::lower_bound(data.vertices.begin(), data.vertices.end(), w);
    if (it == data.vertices.end() || !(*it == w)) return -1;
    return static_cast<int>(it - data.vertices.begin());
  };

  std::vector<Arrow> arrows;
  const std::vector<Simple> simples = pres.all_simples();
  for (int from = 0; from < static_cast<int>(data.vertices.size()); ++from) {
    const GarsideElement& v = data.vertices[from];
    std::set<Simple> stays;  // simples keeping v inside the SSS
    std::map<Simple, int> target;
    for (const Simple& s : simples) {
      if (s.is_one()) continue;
      GarsideElement w = conjugate(pres, v, simple_element(pres, s));
      if (w.inf() != inf0 || w.sup() != sup0) continue;
      int to = vertex_index(w);
      if (to < 0) throw std::logic_error("SSS closure missed a conjugate");
      stays.insert(s);
      target[s] = to;
    }
    for (const Simple& s : stays) {
      bool minimal = true;
      if (s.is_delta()) {
        for (const Simple& t : stays)
          if (t.is_proper()) {
            minimal = false;
            break;
          }
      } else {
        for (int q = 1; q < s.len() && minimal; ++q)
          if (stays.count(pres.simple(s.factor(), s.index(), q))) minimal = false;
      }
      if (minimal) arrows.push_back({from, target[s], s});
    }
  }
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  return arrows;
}

}  // namespace

std::pair<GarsideElement, Simple> cycling(const Presentation& pres, const GarsideElement& x) {
  Simple s = initial_factor(pres, x);  // throws on pure D powers
  return {conjugate(pres, x, simple_element(pres, s)), s};
}

std::pair<GarsideElement, Simple> decycling(const Presentation& pres, const GarsideElement& x) {
  Simple s = final_factor(x);
  return {conjugate(pres, x, inverse(pres, simple_element(pres, s))), s};
}

bool is_rigid(const Presentation& pres, const GarsideElement& x) {
  if (x.is_delta_power()) return true;
  return pres.simple_pair_normalize(final_factor(x), initial_factor(pres, x)).unchanged;
}

std::pair<GarsideElement, GarsideElement> send_to_sss(const Presentation& pres,
                                                      const GarsideElement& x) {
  GarsideElement y = x;
  GarsideElement c;  // identity
  bool improved = true;
  while (improved) {
    improved = false;

    // Cycling phase: walk the deterministic cycling trajectory; accept steps
    // that raise inf (or shrink sup, which merges can do), and stop once the
    // trajectory revisits a form without progress.
    std::set<GarsideElement> seen;
    seen.insert(y);
    GarsideElement z = y;
    GarsideElement cz = c;
    while (!z.is_delta_power()) {
      auto [znext, s] = cycling(pres, z);
      GarsideElement cnext = multiply(pres, cz, simple_element(pres, s));
      if (znext.inf() > y.inf() || (znext.inf() == y.inf() && znext.sup() < y.sup())) {
        y = znext;
        c = cnext;
        improved = true;
        seen.clear();
      } else if (seen.count(znext)) {
        break;
      }
      seen.insert(znext);
      z = znext;
      cz = cnext;
    }

    // Decycling phase, symmetric.
    seen.clear();
    seen.insert(y);
    z = y;
    cz = c;
    while (!z.is_delta_power()) {
      auto [znext, s] = decycling(pres, z);
      GarsideElement cnext = multiply(pres, cz, inverse(pres, simple_element(pres, s)));
      if (znext.sup() < y.sup() || (znext.sup() == y.sup() && znext.inf() > y.inf())) {
        y = znext;
        c = cnext;
        improved = true;
        seen.clear();
      } else if (seen.count(znext)) {
        break;
      }
      seen.insert(znext);
      z = znext;
      cz = cnext;
    }
  }
  return {y, c};
}

ConjugacyGraph super_summit_set(const Presentation& pres, const GarsideElement& x) {
  SssData data = compute_sss(pres, x);
  ConjugacyGraph graph;
  graph.vertices = data.vertices;
  graph.arrows = minimal_arrows(pres, data);
  graph.base = data.base;
  graph.conjugator_to_base = data.conjugator_to_base;
  return graph;
}

std::optional<GarsideElement> are_conjugate(const Presentation& pres, const GarsideElement& x,
                                            const GarsideElement& y) {
  SssData data = compute_sss(pres, x);
  auto [rep_y, cy] = send_to_sss(pres, y);
  auto it = std::lower_bound(data.vertices.begin(), data.vertices.end(), rep_y);
  if (it == data.vertices.end() || !(*it == rep_y)) return std::nullopt;
  const GarsideElement& path = data.conj_from_base[it - data.vertices.begin()];
  // x^{cx} = base, base^{path} = rep_y = y^{cy}.
  GarsideElement w =
      multiply(pres, multiply(pres, data.conjugator_to_base, path), inverse(pres, cy));
  if (!(conjugate(pres, x, w) == y)) throw std::logic_error("conjugacy witness failed to verify");
  return w;
}

std::vector<GarsideElement> centralizer_generators(const Presentation& pres,
                                                   const GarsideElement& x) {
  SssData data = compute_sss(pres, x);
  std::vector<Arrow> arrows = minimal_arrows(pres, data);

  // Undirected spanning tree from the base; tree paths give g_v with
  // base^{g_v} = v, and every non-tree arrow closes a loop at the base.
  const int n = static_cast<int>(data.vertices.size());
  std::vector<GarsideElement> g(n);
  std::vector<char> reached(n, 0);
  std::vector<int> tree_arrow(arrows.size());  // 1 when used by the tree
  std::vector<int> queue{data.base};
  reached[data.base] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (size_t t = 0; t < arrows.size(); ++t) {
      const Arrow& a = arrows[t];
      if (a.from == v && !reached[a.to]) {
        reached[a.to] = 1;
        g[a.to] = multiply(pres, g[v], simple_element(pres, a.label));
        tree_arrow[t] = 1;
        queue.push_back(a.to);
      } else if (a.to == v && !reached[a.from]) {
        reached[a.from] = 1;
        g[a.from] = multiply(pres, g[v], inverse(pres, simple_element(pres, a.label)));
        tree_arrow[t] = 1;
        queue.push_back(a.from);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!reached[v]) throw std::logic_error("SSS graph is not connected");

  std::set<GarsideElement> gens;
  for (size_t t = 0; t < arrows.size(); ++t) {
    if (tree_arrow[t]) continue;
    const Arrow& a = arrows[t];
    GarsideElement loop = multiply(
        pres, multiply(pres, g[a.from], simple_element(pres, a.label)), inverse(pres, g[a.to]));
    // Conjugate the loop at the base back to a loop at x.
    GarsideElement gen =
        multiply(pres, multiply(pres, data.conjugator_to_base, loop),
                 inverse(pres, data.conjugator_to_base));
    if (gen.is_identity()) continue;
    if (!(conjugate(pres, x, gen) == x))
      throw std::logic_error("centralizer generator failed to verify");
    gens.insert(gen);
  }
  return std::vector<GarsideElement>(gens.begin(), gens.end());
}

std::string to_dot(const Presentation& pres, const ConjugacyGraph& graph) {
  std::string out = "digraph conjugacy_graph {\n  rankdir=LR;\n";
  for (size_t i = 0; i < graph.vertices.size(); ++i) {
    std::string label = to_json(pres, graph.vertices[i]);
    std::string escaped;
    for (char ch : label) {
      if (ch == '"') escaped += '\\';
      escaped += ch;
    }
    out += "  v" + std::to_string(i) + " [shape=box";
    if (static_cast<int>(i) == graph.base) out += ", peripheries=2";
    out += ", label=\"" + escaped + "\"];\n";
  }
  for (const Arrow& a : graph.arrows) {
    out += "  v" + std::to_string(a.from) + " -> v" + std::to_string(a.to) + " [label=\"" +
           to_human(pres, a.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const Presentation& pres, const ConjugacyGraph& graph) {
  std::string out = "{\"vertices\":[";
  for (size_t i = 0; i < graph.vertices.size(); ++i) {
    if (i) out += ',';
    out += to_json(pres, graph.vertices[i]);
  }
  out += "],\"arrows\":[";
  for (size_t t = 0; t < graph.arrows.size(); ++t) {
    const Arrow& a = graph.arrows[t];
    if (t) out += ',';
    out += "{\"from\":" + std::to_string(a.from) + ",\"to\":" + std::to_string(a.to) +
           ",\"label\":\"" + to_human(pres, a.label) + "\"}";
  }
  out += "],\"base\":" + std::to_string(graph.base) + ",\"conjugator_to_base\":" +
         to_json(pres, graph.conjugator_to_base) + "}";
  return out;
}

}  // namespace hoso
