#include "hoso/element.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hoso {

namespace {

void check_left_weighted(const Presentation& pres, const std::vector<Simple>& tail) {
  for (const Simple& s : tail)
    if (!s.is_proper()) throw std::invalid_argument("canonical tail must consist of proper simples");
  for (size_t t = 0; t + 1 < tail.size(); ++t)
    if (!pres.simple_pair_normalize(tail[t], tail[t + 1]).unchanged)
      throw std::invalid_argument("canonical tail is not left-weighted");
}

}  // namespace

GarsideElement GarsideElement::from_canonical(const Presentation& pres, long long delta_exp,
                                              std::vector<Simple> canonical) {
  check_left_weighted(pres, canonical);
  GarsideElement x;
  x.delta_exp_ = delta_exp;
  x.tail_ = std::move(canonical);
  return x;
}

GarsideElement normalize_simples(const Presentation& pres, long long delta_exp,
                                 std::vector<Simple> items) {
  // Fold D letters to the front (right to left, twisting what they pass).
  std::vector<Simple> tail;
  tail.reserve(items.size());
  long long extracted = 0;
  for (size_t t = items.size(); t-- > 0;) {
    const Simple& s = items[t];
    if (s.is_one()) continue;
    if (s.is_delta()) {
      ++extracted;
      continue;
    }
    tail.push_back(pres.garside_phi(s, extracted));
  }
  std::reverse(tail.begin(), tail.end());
  long long k = delta_exp + extracted;

  // One left-to-right sweep with back-steps.  Each rewrite shrinks the tail,
  // and a back-step rechecks the only junction a rewrite can break.
  size_t pos = 0;
  while (pos + 1 < tail.size()) {
    PairNormalForm res = pres.simple_pair_normalize(tail[pos], tail[pos + 1]);
    if (res.unchanged) {
      ++pos;
      continue;
    }
    if (res.delta_count == 1) {
      for (size_t t = 0; t < pos; ++t) tail[t] = pres.garside_phi(tail[t], 1);
      ++k;
    }
    tail.erase(tail.begin() + pos, tail.begin() + pos + 2);
    tail.insert(tail.begin() + pos, res.simples.begin(), res.simples.end());
    if (pos > 0) --pos;
  }

  check_left_weighted(pres, tail);  // cheap, and guards the uniqueness contract
  GarsideElement x;
  x.delta_exp_ = k;
  x.tail_ = std::move(tail);
  return x;
}

GarsideElement normalize_positive(const Presentation& pres, const Word& w) {
  long long delta_exp = 0;
  std::vector<Simple> items;
  for (const Letter& letter : w) {
    if (letter.exp < 0) throw std::invalid_argument("normalize_positive needs a positive word");
    if (letter.is_delta) {
      delta_exp += letter.exp;  // leading position is irrelevant for counting;
                                // the twist is handled by normalize_simples
      for (size_t t = 0; t < items.size(); ++t) items[t] = pres.garside_phi(items[t], letter.exp);
    } else {
      Simple s = pres.simple(letter.factor, letter.index, 1);
      for (long long rep = 0; rep < letter.exp; ++rep) items.push_back(s);
    }
  }
  return normalize_simples(pres, delta_exp, std::move(items));
}

GarsideElement to_left_weighted(const Presentation& pres, const Word& w) {
  // Expand into simples and signed D powers, replacing each inverse atom by
  // its left complement followed by D^{-1} (a a^{-1} = a abar D^{-1} ... = 1).
  struct Item {
    bool is_delta;
    long long delta_exp;
    Simple simple;
  };
  std::vector<Item> items;
  for (const Letter& letter : w) {
    if (letter.is_delta) {
      if (letter.exp != 0) items.push_back({true, letter.exp, Simple::one()});
      continue;
    }
    Simple s = pres.simple(letter.factor, letter.index, 1);
    if (s.is_delta()) {  // an (m,1) factor: the atom is D itself
      if (letter.exp != 0) items.push_back({true, letter.exp, Simple::one()});
      continue;
    }
    long long reps = letter.exp < 0 ? -letter.exp : letter.exp;
    for (long long rep = 0; rep < reps; ++rep) {
      if (letter.exp > 0) {
        items.push_back({false, 0, s});
      } else {
        items.push_back({false, 0, pres.left_complement(s)});
        items.push_back({true, -1, Simple::one()});
      }
    }
  }

  // Migrate D powers to the front: a simple passed by D^c becomes phi^c of it,
  // so each simple collects phi^(sum of D exponents to its right).
  long long delta_exp = 0;
  std::vector<Simple> simples;
  long long suffix = 0;
  for (size_t t = items.size(); t-- > 0;) {
    if (items[t].is_delta) {
      suffix += items[t].delta_exp;
    } else {
      simples.push_back(pres.garside_phi(items[t].simple, suffix));
    }
  }
  delta_exp = suffix;
  std::reverse(simples.begin(), simples.end());
  return normalize_simples(pres, delta_exp, std::move(simples));
}

GarsideElement multiply(const Presentation& pres, const GarsideElement& x, const GarsideElement& y) {
  // D^a u D^b v = D^{a+b} phi^b(u) v.
  std::vector<Simple> items;
  items.reserve(x.canonical().size() + y.canonical().size());
  for (const Simple& s : x.canonical()) items.push_back(pres.garside_phi(s, y.delta_exp()));
  for (const Simple& s : y.canonical()) items.push_back(s);
  return normalize_simples(pres, x.delta_exp() + y.delta_exp(), std::move(items));
}

GarsideElement inverse(const Presentation& pres, const GarsideElement& x) {
  // (D^k s_1 ... s_r)^{-1} = s_r^{-1} ... s_1^{-1} D^{-k} with s^{-1} =
  // sbar D^{-1}.  Migrating all D powers to the front twists the t-th item
  // from the left (which is sbar of s_{r-t}) by phi^{-(k + r - t)}.
  const auto& tail = x.canonical();
  long long r = static_cast<long long>(tail.size());
  std::vector<Simple> simples;
  simples.reserve(tail.size());
  for (long long t = 0; t < r; ++t) {
    const Simple& s = tail[tail.size() - 1 - t];
    simples.push_back(pres.garside_phi(pres.left_complement(s), -(x.delta_exp() + r - t)));
  }
  return normalize_simples(pres, -x.delta_exp() - r, std::move(simples));
}

GarsideElement power(const Presentation& pres, const GarsideElement& x, long long n) {
  if (n < 0) return power(pres, inverse(pres, x), -n);
  GarsideElement acc;  // identity
  GarsideElement base = x;
  while (n > 0) {
    if (n & 1) acc = multiply(pres, acc, base);
    n >>= 1;
    if (n) base = multiply(pres, base, base);
  }
  return acc;
}

GarsideElement conjugate(const Presentation& pres, const GarsideElement& x, const GarsideElement& g) {
  return multiply(pres, multiply(pres, inverse(pres, g), x), g);
}

GarsideElement phi_element(const Presentation& pres, const GarsideElement& x, long long t) {
  std::vector<Simple> tail;
  tail.reserve(x.canonical().size());
  for (const Simple& s : x.canonical()) tail.push_back(pres.garside_phi(s, t));
  return GarsideElement::from_canonical(pres, x.delta_exp(), std::move(tail));
}

Simple initial_factor(const Presentation& pres, const GarsideElement& x) {
  if (x.is_delta_power()) throw std::domain_error("initial_factor of a pure D power");
  return pres.garside_phi(x.canonical().front(), -x.delta_exp());
}

Simple final_factor(const GarsideElement& x) {
  if (x.is_delta_power()) throw std::domain_error("final_factor of a pure D power");
  return x.canonical().back();
}

GarsideElement simple_element(const Presentation& pres, const Simple& s) {
  if (s.is_one()) return GarsideElement();
  if (s.is_delta()) return GarsideElement::delta_power(1);
  return GarsideElement::from_canonical(pres, 0, {s});
}

Word element_to_word(const Presentation& pres, const GarsideElement& x) {
  Word w;
  if (x.delta_exp() != 0) w.push_back({true, 0, 0, x.delta_exp()});
  for (const Simple& s : x.canonical()) {
    const Factor& f = pres.factor(s.factor());
    for (int t = 0; t < s.len(); ++t)
      w.push_back({false, s.factor(), (s.index() + t) % f.atoms, 1});
  }
  return w;
}

long long weighted_length(const Presentation& pres, const GarsideElement& x) {
  long long total = x.delta_exp() * pres.delta_len();
  for (const Simple& s : x.canonical()) total += pres.simple_weight(s);
  return total;
}

std::string to_json(const Presentation&, const GarsideElement& x) {
  std::string out = "{\"delta_exp\":" + std::to_string(x.delta_exp()) + ",\"simples\":[";
  bool first = true;
  for (const Simple& s : x.canonical()) {
    if (!first) out += ',';
    first = false;
    out += "{\"factor\":" + std::to_string(s.factor() + 1) + ",\"i\":" + std::to_string(s.index()) +
           ",\"p\":" + std::to_string(s.len()) + "}";
  }
  out += "]}";
  return out;
}

std::string to_human(const Presentation& pres, const GarsideElement& x) {
  std::string out = "D^" + std::to_string(x.delta_exp());
  for (const Simple& s : x.canonical()) out += " " + to_human(pres, s);
  return out;
}

}  // namespace hoso
