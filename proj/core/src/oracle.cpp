#include "hoso/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hoso {

namespace {

std::string encode(const Presentation& pres, const AtomWord& w) {
  std::string key;
  key.reserve(w.size());
  for (const Atom& a : w) key.push_back(static_cast<char>(pres.atom_offset(a.factor) + a.index));
  return key;
}

// Relation pairs (u, v): cyclic rotations of each factor's relation word and
// the cross-factor D glue.  All sides have weighted length L.
std::vector<std::pair<AtomWord, AtomWord>> relation_pairs(const Presentation& pres) {
  auto relation_word = [&](int j, int start) {
    AtomWord w;
    const Factor& f = pres.factor(j);
    for (int t = 0; t < f.delta_len; ++t) w.push_back({j, (start + t) % f.atoms});
    return w;
  };
  std::vector<std::pair<AtomWord, AtomWord>> rel;
  for (int j = 0; j < pres.factor_count(); ++j) {
    const Factor& f = pres.factor(j);
    for (int i = 0; i < f.atoms; ++i) rel.emplace_back(relation_word(j, i), relation_word(j, i + 1));
    if (j > 0) rel.emplace_back(relation_word(j, 0), relation_word(0, 0));
  }
  return rel;
}

}  // namespace

Ball::Ball(const Presentation& pres, long long radius, std::size_t max_words)
    : pres_(pres), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  if (pres.atom_count() > 200) throw BudgetExceeded("too many atoms for the word oracle");

  // Count before enumerating: c[w] = number of words of weighted length w.
  std::vector<unsigned long long> count(static_cast<size_t>(radius) + 1, 0);
  count[0] = 1;
  unsigned long long total = 0;
  for (long long w = 1; w <= radius; ++w) {
    for (int j = 0; j < pres_.factor_count(); ++j) {
      long long unit = pres_.atom_weight(j);
      if (unit <= w)
        count[w] += static_cast<unsigned long long>(pres_.factor(j).atoms) * count[w - unit];
      if (count[w] > max_words) break;
    }
    total += count[w];
    if (total > max_words)
      throw BudgetExceeded("word ball of radius " + std::to_string(radius) + " over " +
                           pres_.to_string() + " exceeds the budget of " +
                           std::to_string(max_words) + " words");
  }

  // Breadth-first enumeration is shortlex as long as atoms extend in order.
  std::deque<int> queue;
  words_.push_back({});
  index_[encode(pres_, {})] = 0;
  queue.push_back(0);
  std::vector<long long> weight_of(1, 0);
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    AtomWord base = words_[id];
    long long base_weight = weight_of[id];
    for (int j = 0; j < pres_.factor_count(); ++j) {
      long long next_weight = base_weight + pres_.atom_weight(j);
      if (next_weight > radius_) continue;
      for (int i = 0; i < pres_.factor(j).atoms; ++i) {
        AtomWord w = base;
        w.push_back({j, i});
        int nid = static_cast<int>(words_.size());
        words_.push_back(std::move(w));
        weight_of.push_back(next_weight);
        index_[encode(pres_, words_.back())] = nid;
        queue.push_back(nid);
      }
    }
  }

  parent_.resize(words_.size());
  std::iota(parent_.begin(), parent_.end(), 0);

  // Close the congruence: apply every relation at every position of every
  // word.  All words of a stratum are present, so one pass over all single
  // rewrite steps plus union-find transitivity is the full closure.
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // keep the shortlex-smaller id as representative
  };
  const auto rels = relation_pairs(pres_);
  for (size_t id = 0; id < words_.size(); ++id) {
    const AtomWord& w = words_[id];
    for (const auto& [lhs, rhs] : rels) {
      if (lhs.size() > w.size()) continue;
      for (size_t pos = 0; pos + lhs.size() <= w.size(); ++pos) {
        if (!std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) continue;
        AtomWord rewritten;
        rewritten.reserve(w.size() - lhs.size() + rhs.size());
        rewritten.insert(rewritten.end(), w.begin(), w.begin() + pos);
        rewritten.insert(rewritten.end(), rhs.begin(), rhs.end());
        rewritten.insert(rewritten.end(), w.begin() + pos + lhs.size(), w.end());
        int other = lookup(rewritten);
        if (other < 0) throw std::logic_error("oracle rewrite left the ball");
        unite(static_cast<int>(id), other);
      }
    }
  }
}

int Ball::lookup(const AtomWord& w) const {
  auto it = index_.find(encode(pres_, w));
  return it == index_.end() ? -1 : it->second;
}

int Ball::find(int id) const {
  while (parent_[id] != id) {
    parent_[id] = parent_[parent_[id]];
    id = parent_[id];
  }
  return id;
}

std::size_t Ball::class_count() const {
  std::size_t n = 0;
  for (size_t id = 1; id < parent_.size(); ++id)
    if (find(static_cast<int>(id)) == static_cast<int>(id)) ++n;
  return n;
}

long long Ball::atom_word_weight(const AtomWord& w) const { return weighted_length(pres_, w); }

bool Ball::equal(const AtomWord& u, const AtomWord& v) const {
  long long wu = atom_word_weight(u);
  long long wv = atom_word_weight(v);
  if (wu != wv) return false;  // relations are homogeneous
  if (wu > radius_)
    throw std::invalid_argument("word outside the oracle ball (weighted length " +
                                std::to_string(wu) + " > radius " + std::to_string(radius_) + ")");
  int a = lookup(u);
  int b = lookup(v);
  if (a < 0 || b < 0) throw std::logic_error("word missing from the oracle ball");
  return find(a) == find(b);
}

AtomWord Ball::representative(const AtomWord& w) const {
  int id = lookup(w);
  if (id < 0) throw std::invalid_argument("word outside the oracle ball");
  return words_[find(id)];
}

std::vector<AtomWord> Ball::words_of_weight(long long weight) const {
  std::vector<AtomWord> out;
  for (const AtomWord& w : words_)
    if (atom_word_weight(w) == weight) out.push_back(w);
  return out;
}

std::size_t Ball::word_count() const { return words_.size() - 1; }  // excl. empty

Ball build_ball(const Presentation& pres, long long radius, std::size_t max_words) {
  return Ball(pres, radius, max_words);
}

bool oracle_equal(const Presentation& pres, const Word& u, const Word& v, std::size_t max_words) {
  AtomWord au = to_atom_word(pres, u);
  AtomWord av = to_atom_word(pres, v);
  long long radius = std::max(weighted_length(pres, au), weighted_length(pres, av));
  Ball ball(pres, radius, max_words);
  return ball.equal(au, av);
}

bool oracle_equal(const Ball& ball, const Word& u, const Word& v) {
  return ball.equal(to_atom_word(ball.presentation(), u), to_atom_word(ball.presentation(), v));
}

bool oracle_left_divides(const Ball& ball, const Word& u, const Word& v) {
  const Presentation& pres = ball.presentation();
  AtomWord au = to_atom_word(pres, u);
  AtomWord av = to_atom_word(pres, v);
  long long wu = ball.atom_word_weight(au);
  long long wv = ball.atom_word_weight(av);
  if (wu > wv) return false;
  if (wu == wv) return ball.equal(au, av);
  for (const AtomWord& c : ball.words_of_weight(wv - wu)) {
    AtomWord uc = au;
    uc.insert(uc.end(), c.begin(), c.end());
    if (ball.equal(uc, av)) return true;
  }
  return false;
}

bool oracle_left_divides(const Presentation& pres, const Word& u, const Word& v,
                         std::size_t max_words) {
  Ball ball(pres, weighted_length(pres, to_atom_word(pres, v)), max_words);
  return oracle_left_divides(ball, u, v);
}

}  // namespace hoso
