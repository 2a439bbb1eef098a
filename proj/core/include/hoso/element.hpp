#pragma once

// Group elements in left-weighted factorization D^k s_1 ... s_r: the s_t are
// proper simples, every adjacent pair is greedy, and no D hides in the tail.
// This factorization is unique, so structural equality decides the word
// problem.  inf = k and sup = k + r are conjugacy-relevant invariants.

#include <string>
#include <vector>

#include "hoso/presentation.hpp"
#include "hoso/word.hpp"

namespace hoso {

class GarsideElement {
 public:
  GarsideElement() = default;  // identity

  static GarsideElement delta_power(long long k) {
    GarsideElement x;
    x.delta_exp_ = k;
    return x;
  }

  /// Builds from already left-weighted data, validating the invariants
  /// (throws std::invalid_argument when the tail is not left-weighted).
  static GarsideElement from_canonical(const Presentation& pres, long long delta_exp,
                                       std::vector<Simple> canonical);

  long long delta_exp() const { return delta_exp_; }
  const std::vector<Simple>& canonical() const { return tail_; }

  long long inf() const { return delta_exp_; }
  long long sup() const { return delta_exp_ + static_cast<long long>(tail_.size()); }
  int canonical_length() const { return static_cast<int>(tail_.size()); }

  bool is_identity() const { return delta_exp_ == 0 && tail_.empty(); }
  bool is_delta_power() const { return tail_.empty(); }

  auto operator<=>(const GarsideElement&) const = default;

 private:
  friend GarsideElement normalize_simples(const Presentation&, long long, std::vector<Simple>);

  long long delta_exp_ = 0;
  std::vector<Simple> tail_;
};

/// Core rewrite: D^k times a sequence of simples (identity and D letters
/// allowed) into left-weighted form.  Used by everything below.
GarsideElement normalize_simples(const Presentation& pres, long long delta_exp,
                                 std::vector<Simple> items);

/// Normal form of a positive word.  Throws on negative letters.
GarsideElement normalize_positive(const Presentation& pres, const Word& w);

/// Normal form of an arbitrary word: each inverse atom a^{-1} rewrites to
/// (left complement of a) * D^{-1}, and D powers migrate to the front through
/// the Garside automorphism.
GarsideElement to_left_weighted(const Presentation& pres, const Word& w);

GarsideElement multiply(const Presentation& pres, const GarsideElement& x, const GarsideElement& y);
GarsideElement inverse(const Presentation& pres, const GarsideElement& x);
GarsideElement power(const Presentation& pres, const GarsideElement& x, long long n);
/// g^{-1} x g.
GarsideElement conjugate(const Presentation& pres, const GarsideElement& x, const GarsideElement& g);

/// phi^t(x) = D^{-t} x D^t, computed factor-wise on the tail.
GarsideElement phi_element(const Presentation& pres, const GarsideElement& x, long long t = 1);

/// First/last canonical factor.  init is twisted back below the D power:
/// init(x) = phi^{-k}(s_1), so that x is "x starts with init(x)" after the
/// D prefix is discounted.  Throws std::domain_error on pure D powers.
Simple initial_factor(const Presentation& pres, const GarsideElement& x);
Simple final_factor(const GarsideElement& x);

/// The simple s as a one-factor element (identity/D handled).
GarsideElement simple_element(const Presentation& pres, const Simple& s);

/// D^k as a letter plus each canonical factor expanded into atoms.
Word element_to_word(const Presentation& pres, const GarsideElement& x);

long long weighted_length(const Presentation& pres, const GarsideElement& x);

/// Canonical machine form, e.g. {"delta_exp":1,"simples":[]} with simples
/// as {"factor":j,"i":i,"p":p} (1-based factor).
std::string to_json(const Presentation& pres, const GarsideElement& x);
/// Human form, e.g. "D^1" or "D^0 s(0,1) s(0,2)".
std::string to_human(const Presentation& pres, const GarsideElement& x);

}  // namespace hoso
