#pragma once

// Conjugacy via super summit sets.  SSS(x) is the set of conjugates of x
// with maximal inf and, among those, minimal sup; it is finite, reached by
// cycling then decycling, and closed under conjugation along a connected
// graph of simple-element arrows.  For these presentations every SSS element
// is either a pure D power, rigid, or of the one-simple periodic shape.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoso/element.hpp"
#include "hoso/presentation.hpp"

namespace hoso {

/// conjugate(vertices[from], label) == vertices[to], with `label` minimal:
/// no nontrivial proper left-divisor of it keeps `from` inside the SSS.
struct Arrow {
  int from = 0;
  int to = 0;
  Simple label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// The SSS with its minimal conjugation arrows.  Vertices are sorted
/// canonically; arrows by (from, label).  `base` is the vertex reached from
/// the query element and conjugate(x, conjugator_to_base) == vertices[base].
struct ConjugacyGraph {
  std::vector<GarsideElement> vertices;
  std::vector<Arrow> arrows;
  int base = 0;
  GarsideElement conjugator_to_base;
};

/// cyc(x) = x conjugated by its initial factor.  Throws std::domain_error on
/// pure D powers.  Returns the new element and the conjugating simple.
std::pair<GarsideElement, Simple> cycling(const Presentation& pres, const GarsideElement& x);

/// dec(x) = x conjugated by the inverse of its final factor.  Returns the new
/// element and the final factor (the conjugator is its inverse).
std::pair<GarsideElement, Simple> decycling(const Presentation& pres, const GarsideElement& x);

/// Rigid: the tail is empty, or final * init is already greedy.  Rigid
/// elements sit inside their own SSS and behave like rotating words.
bool is_rigid(const Presentation& pres, const GarsideElement& x);

/// Cycles until inf stops improving (orbit detection), then decycles until
/// sup stops improving; repeats until stable.  Returns (representative, c)
/// with conjugate(x, c) == representative.
std::pair<GarsideElement, GarsideElement> send_to_sss(const Presentation& pres,
                                                      const GarsideElement& x);

ConjugacyGraph super_summit_set(const Presentation& pres, const GarsideElement& x);

/// Witness g with conjugate(x, g) == y, or nullopt when x and y are not
/// conjugate.
std::optional<GarsideElement> are_conjugate(const Presentation& pres, const GarsideElement& x,
                                            const GarsideElement& y);

/// Generators of the centralizer of x: spanning-tree-plus-back-edge loop
/// generators of the SSS graph at the base vertex, conjugated back to x.
std::vector<GarsideElement> centralizer_generators(const Presentation& pres,
                                                   const GarsideElement& x);

/// Graphviz form: vertices labeled by canonical JSON, arrows by simples.
std::string to_dot(const Presentation& pres, const ConjugacyGraph& graph);
/// Machine form of the whole graph.
std::string to_json(const Presentation& pres, const ConjugacyGraph& graph);

}  // namespace hoso
