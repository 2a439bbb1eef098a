#pragma once

// Circular presentations and their Garside-product ("hosohedral type") variants.
//
// A circular factor with parameters (m, l) has m atoms a_0, ..., a_{m-1}
// arranged on a cycle, and one defining relation per starting point: every
// product of l consecutive atoms (indices mod m) is equal to the same Garside
// element D.  A presentation is an ordered list of such factors glued along D:
// the free product of the factor monoids modulo identifying all the factor
// Garside elements.
//
// The simple elements (divisors of D) of a factor are the products
// s(i, p) = a_i a_{i+1} ... a_{i+p-1} of p <= l consecutive atoms.  s(i, 0) is
// the identity and s(i, l) = D for every i; for 0 < p < l the pair
// (i mod m, p) classifies the simple uniquely.  Across factors the only shared
// simples are 1 and D.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hoso {

/// One circular factor: `atoms` generators, relation words of length `delta_len`.
struct Factor {
  int atoms = 1;
  int delta_len = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A divisor of the Garside element D.  Identity and D are shared across
/// factors; every other ("proper") simple s(i, p) lives in a single factor and
/// has 0 < p < delta_len of that factor.  The comparison order is the
/// canonical one used everywhere for determinism: 1 first, then proper
/// simples by (factor, index, len), then D.
class Simple {
 public:
  enum class Kind : std::uint8_t { identity = 0, proper = 1, delta = 2 };

  constexpr Simple() = default;
  static constexpr Simple one() { return Simple{}; }
  static constexpr Simple delta() {
    Simple s;
    s.kind_ = Kind::delta;
    return s;
  }

  Kind kind() const { return kind_; }
  bool is_one() const { return kind_ == Kind::identity; }
  bool is_delta() const { return kind_ == Kind::delta; }
  bool is_proper() const { return kind_ == Kind::proper; }

  /// Factor/index/len of a proper simple; zero for identity and D.
  int factor() const { return factor_; }
  int index() const { return index_; }
  int len() const { return len_; }

  auto operator<=>(const Simple&) const = default;

 private:
  friend class Presentation;
  Simple(int factor, int index, int len)
      : kind_(Kind::proper), factor_(factor), index_(index), len_(len) {}

  Kind kind_ = Kind::identity;
  std::int32_t factor_ = 0;
  std::int32_t index_ = 0;
  std::int32_t len_ = 0;
};

/// Result of putting a product of two proper simples into left-weighted form.
/// The product equals D^delta_count * simples[0] * simples[1] * ... with at
/// most one simple after a rewrite and exactly the input pair when it was
/// already greedy (`unchanged`).
struct PairNormalForm {
  int delta_count = 0;
  std::vector<Simple> simples;
  bool unchanged = false;
};

/// An ordered list of circular factors glued along their Garside elements.
/// All simple-level arithmetic lives here; elements and words are layered on
/// top (element.hpp, word.hpp).  Immutable after construction.
class Presentation {
 public:
  /// Throws std::invalid_argument on an empty list, non-positive parameters,
  /// or a (1,1) factor inside a product of two or more factors (such a factor
  /// collapses onto D and breaks atom/weight bookkeeping).
  explicit Presentation(std::vector<Factor> factors);

  /// Parses "m,l" or "m1,l1;m2,l2;...".  Digits, commas and semicolons only.
  static Presentation parse(std::string_view text);
  std::string to_string() const;

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int j) const { return factors_.at(j); }
  bool circular() const { return factors_.size() == 1; }

  /// Weighted length of D: lcm of the factor delta_len values.  Atoms of
  /// factor j have weight delta_len() / factor(j).delta_len, which makes
  /// every defining relation homogeneous.
  long long delta_len() const { return delta_len_; }
  long long atom_weight(int j) const { return atom_weight_.at(j); }
  int atom_count() const { return atom_count_; }
  /// Position of factor j's atoms in the global atom numbering.
  int atom_offset(int j) const { return atom_offset_.at(j); }

  /// Canonicalizing constructor: reduces index mod m, collapses p == 0 to the
  /// identity and p == delta_len to D.  Throws on p outside [0, delta_len].
  Simple simple(int factor, int index, int len) const;
  Simple atom(int factor, int index) const;

  /// All simples in canonical order: 1, propers by (factor, index, len), D.
  std::vector<Simple> all_simples() const;
  std::vector<Simple> proper_simples() const;
  std::vector<Simple> atoms() const;

  long long simple_weight(const Simple& s) const;

  /// Left complement: s * left_complement(s) = D.
  Simple left_complement(const Simple& s) const;
  /// Right complement: right_complement(s) * s = D.
  Simple right_complement(const Simple& s) const;

  /// The Garside automorphism phi(x) = D^{-1} x D, iterated `power` times
  /// (negative powers allowed).  On simples: s(i, p) -> s(i + l, p).
  Simple garside_phi(const Simple& s, long long power = 1) const;
  /// Order of phi as an automorphism: lcm_j of m_j / gcd(m_j, l_j).
  long long phi_order() const;

  /// Left divisibility of simples inside the monoid.
  bool left_divides(const Simple& s, const Simple& t) const;
  /// Lattice operations for left divisibility.  Two simples are comparable or
  /// meet in 1 and join in D; this is what makes the normal-form automaton a
  /// two-letter rewrite.
  Simple simple_gcd(const Simple& s, const Simple& t) const;
  Simple simple_lcm(const Simple& s, const Simple& t) const;

  /// Left-weighted form of a product of two proper simples.  The pair is
  /// already greedy unless they sit in the same factor and the second starts
  /// where the first ends (i' = i + p mod m); then they fuse into s(i, p+p'),
  /// into D, or into D * s(i+l, p+p'-l) depending on p + p' vs l.
  /// Throws std::invalid_argument if either input is 1 or D.
  PairNormalForm simple_pair_normalize(const Simple& s, const Simple& t) const;

  friend bool operator==(const Presentation&, const Presentation&);

 private:
  void check_factor(int j) const;

  std::vector<Factor> factors_;
  std::vector<long long> atom_weight_;
  std::vector<int> atom_offset_;
  long long delta_len_ = 1;
  int atom_count_ = 0;
};

bool operator==(const Presentation& a, const Presentation& b);

/// Human-readable form: "1", "D", "s(i,p)" (single factor) or "s<j>(i,p)"
/// with 1-based j (product presentations).
std::string to_human(const Presentation& pres, const Simple& s);

}  // namespace hoso
