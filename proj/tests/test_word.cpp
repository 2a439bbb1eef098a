#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace hoso;
using hosotest::wd;

TEST_CASE("parsing single-factor words") {
  Presentation pres = Presentation::parse("2,3");
  Word w = wd(pres, "a0 a1^-1 D^3");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter{false, 0, 0, 1});
  CHECK(w[1] == Letter{false, 0, 1, -1});
  CHECK(w[2] == Letter{true, 0, 0, 3});
  CHECK(wd(pres, "").empty());
  CHECK(wd(pres, "   ").empty());
  CHECK(word_to_string(pres, w) == "a0 a1^-1 D^3");
  CHECK(word_to_string(pres, wd(pres, "a0^1")) == "a0");
  CHECK(word_to_string(pres, Word{}) == "D^0");  // canonical spelling of the identity
}

TEST_CASE("parsing product words uses 1-based factor prefixes") {
  Presentation pres = Presentation::parse("2,2;3,3");
  Word w = wd(pres, "a1:1 a2:0^2 D^-1");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter{false, 0, 1, 1});
  CHECK(w[1] == Letter{false, 1, 0, 2});
  CHECK(w[2] == Letter{true, 0, 0, -1});
  CHECK(word_to_string(pres, w) == "a1:1 a2:0^2 D^-1");
}

TEST_CASE("parse errors") {
  Presentation single = Presentation::parse("2,3");
  Presentation prod = Presentation::parse("2,2;3,3");
  CHECK_THROWS_AS(wd(single, "a2"), std::invalid_argument);       // index out of range
  CHECK_THROWS_AS(wd(single, "a1:0"), std::invalid_argument);     // factor prefix on single
  CHECK_THROWS_AS(wd(prod, "a0"), std::invalid_argument);         // missing factor prefix
  CHECK_THROWS_AS(wd(prod, "a0:0"), std::invalid_argument);       // factors are 1-based
  CHECK_THROWS_AS(wd(prod, "a3:0"), std::invalid_argument);       // factor out of range
  CHECK_THROWS_AS(wd(prod, "a2:3"), std::invalid_argument);       // index out of range
  CHECK_THROWS_AS(wd(single, "b0"), std::invalid_argument);       // unknown letter
  CHECK_THROWS_AS(wd(single, "a0^"), std::invalid_argument);      // missing exponent
  CHECK_THROWS_AS(wd(single, "a0^x"), std::invalid_argument);     // junk exponent
  CHECK_THROWS_AS(wd(single, "a"), std::invalid_argument);        // missing index
  CHECK_THROWS_AS(wd(single, "D2"), std::invalid_argument);       // junk after D
}

TEST_CASE("weighted length sums letter weights with signs") {
  Presentation pres = Presentation::parse("1,2;1,3");
  CHECK(weighted_length(pres, wd(pres, "a1:0 a2:0^2")) == 3 + 2 * 2);
  CHECK(weighted_length(pres, wd(pres, "D")) == 6);
  CHECK(weighted_length(pres, wd(pres, "a1:0^-1 D")) == 3);
  CHECK(weighted_length(pres, Word{}) == 0);

  Presentation circ = Presentation::parse("3,4");
  CHECK(weighted_length(circ, wd(circ, "a0 a2^5")) == 6);
}

TEST_CASE("positivity") {
  Presentation pres = Presentation::parse("2,3");
  CHECK(positive(wd(pres, "a0 a1^2 D")));
  CHECK(!positive(wd(pres, "a0 a1^-2")));
  CHECK(positive(Word{}));
}

TEST_CASE("atom expansion of positive words") {
  Presentation pres = Presentation::parse("2,3");
  AtomWord w = to_atom_word(pres, wd(pres, "a1 D"));
  // D expands to the relation word starting at atom 0: a0 a1 a0.
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Atom{0, 1});
  CHECK(w[1] == Atom{0, 0});
  CHECK(w[2] == Atom{0, 1});
  CHECK(w[3] == Atom{0, 0});
  CHECK(atom_word_to_string(pres, w) == "a1 a0 a1 a0");
  CHECK_THROWS_AS(to_atom_word(pres, wd(pres, "a0^-1")), std::invalid_argument);

  Presentation prod = Presentation::parse("1,2;1,3");
  AtomWord dw = to_atom_word(prod, wd(prod, "D"));
  // D expands through the first factor: its relation word a1:0^2.
  REQUIRE(dw.size() == 2);
  CHECK(dw[0] == Atom{0, 0});
  CHECK(dw[1] == Atom{0, 0});
  CHECK(weighted_length(prod, dw) == prod.delta_len());
}

TEST_CASE("word printing round-trips through parsing") {
  Presentation pres = Presentation::parse("2,2;3,3");
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Word w = hosotest::random_signed_word(pres, rng, 6);
    Word back = wd(pres, word_to_string(pres, w));
    CHECK(back == w);
  }
}
