#pragma once

// Brute-force word oracle, independent of the Garside machinery: enumerate
// every positive atom word up to a weighted-length radius and close the
// defining relations with a union-find.  Deliberately naive; it exists so the
// normal-form code has something to disagree with.
//
// The defining relations are homogeneous for the atom weights L / l_j
// (L = lcm of the l_j), so equality never crosses weighted-length strata and
// each stratum closes independently.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hoso/presentation.hpp"
#include "hoso/word.hpp"

namespace hoso {

/// Thrown when a requested enumeration would exceed the word budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class Ball {
 public:
  /// Enumerates and closes all nonempty positive words of weighted length
  /// <= radius.  Throws BudgetExceeded when the count would pass max_words.
  Ball(const Presentation& pres, long long radius, std::size_t max_words = 1000000);

  const Presentation& presentation() const { return pres_; }
  long long radius() const { return radius_; }

  /// Nonempty words within the radius, and their equivalence classes.
  std::size_t word_count() const;
  std::size_t class_count() const;

  /// Equality in the monoid; weighted lengths must both be within the radius.
  bool equal(const AtomWord& u, const AtomWord& v) const;
  /// Shortlex-minimal member of the word's class.
  AtomWord representative(const AtomWord& w) const;
  /// All words of exactly this weighted length, in shortlex order.
  std::vector<AtomWord> words_of_weight(long long weight) const;

  long long atom_word_weight(const AtomWord& w) const;

 private:
  int lookup(const AtomWord& w) const;  // -1 when absent
  int find(int id) const;

  Presentation pres_;
  long long radius_;
  std::vector<AtomWord> words_;                 // id -> word, shortlex order
  std::unordered_map<std::string, int> index_;  // encoded word -> id
  mutable std::vector<int> parent_;             // union-find over ids
};

Ball build_ball(const Presentation& pres, long long radius, std::size_t max_words = 1000000);

/// One-shot equality of two positive words (builds a ball of the needed
/// radius; use Ball directly for batches).
bool oracle_equal(const Presentation& pres, const Word& u, const Word& v,
                  std::size_t max_words = 1000000);
bool oracle_equal(const Ball& ball, const Word& u, const Word& v);

/// Left divisibility u <= v in the monoid: some positive word c has uc = v.
/// Searches every candidate c of the complementary weighted length.
bool oracle_left_divides(const Presentation& pres, const Word& u, const Word& v,
                         std::size_t max_words = 1000000);
bool oracle_left_divides(const Ball& ball, const Word& u, const Word& v);

}  // namespace hoso
