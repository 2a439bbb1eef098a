#pragma once

// Shared helpers for the test suites: terse constructors and seeded random
// word/element generators.  Everything deterministic (fixed seeds set by the
// individual tests).

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hoso/element.hpp"
#include "hoso/presentation.hpp"
#include "hoso/word.hpp"

namespace hosotest {

inline hoso::Word wd(const hoso::Presentation& pres, std::string_view text) {
  return hoso::parse_word(pres, text);
}

inline hoso::GarsideElement el(const hoso::Presentation& pres, std::string_view text) {
  return hoso::to_left_weighted(pres, hoso::parse_word(pres, text));
}

/// Uniformly random positive word with `letters` atom letters.
inline hoso::Word random_positive_word(const hoso::Presentation& pres, std::mt19937& rng,
                                       int letters) {
  hoso::Word w;
  std::uniform_int_distribution<int> pick_factor(0, pres.factor_count() - 1);
  for (int t = 0; t < letters; ++t) {
    int j = pick_factor(rng);
    std::uniform_int_distribution<int> pick_atom(0, pres.factor(j).atoms - 1);
    w.push_back({false, j, pick_atom(rng), 1});
  }
  return w;
}

/// Random signed word: `letters` atom letters with exponent +-1, plus an
/// optional leading D power in [-2, 2].
inline hoso::Word random_signed_word(const hoso::Presentation& pres, std::mt19937& rng,
                                     int letters, bool with_delta = true) {
  hoso::Word w;
  if (with_delta) {
    std::uniform_int_distribution<int> dpow(-2, 2);
    int k = dpow(rng);
    if (k != 0) w.push_back({true, 0, 0, k});
  }
  std::uniform_int_distribution<int> pick_factor(0, pres.factor_count() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int t = 0; t < letters; ++t) {
    int j = pick_factor(rng);
    std::uniform_int_distribution<int> pick_atom(0, pres.factor(j).atoms - 1);
    w.push_back({false, j, pick_atom(rng), sign(rng) ? 1 : -1});
  }
  return w;
}

inline hoso::GarsideElement random_element(const hoso::Presentation& pres, std::mt19937& rng,
                                           int letters, bool with_delta = true) {
  return hoso::to_left_weighted(pres, random_signed_word(pres, rng, letters, with_delta));
}

}  // namespace hosotest
