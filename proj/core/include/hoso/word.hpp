#pragma once

// Words in the atoms of a presentation, as typed on the command line and as
// fed to the oracle.  Letter syntax (whitespace separated):
//
//   a<i>         atom i, single-factor presentations only
//   a<j>:<i>     atom i of factor j (1-based j), product presentations only
//   D            the Garside element
//   <letter>^<e> any of the above with an integer exponent (may be negative)

#include <string>
#include <string_view>
#include <vector>

#include "hoso/presentation.hpp"

namespace hoso {

struct Letter {
  bool is_delta = false;
  int factor = 0;  // 0-based
  int index = 0;
  long long exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Throws std::invalid_argument on syntax errors, out-of-range indices, or a
/// factor prefix that does not match the presentation shape.
Word parse_word(const Presentation& pres, std::string_view text);

std::string word_to_string(const Presentation& pres, const Word& w);

/// True when no letter carries a negative exponent.
bool positive(const Word& w);

/// Sum of letter weights times exponents; negative letters count negatively.
long long weighted_length(const Presentation& pres, const Word& w);

/// A single atom occurrence, the oracle's alphabet.
struct Atom {
  int factor = 0;
  int index = 0;
  auto operator<=>(const Atom&) const = default;
};

using AtomWord = std::vector<Atom>;

long long weighted_length(const Presentation& pres, const AtomWord& w);

/// Expands a positive word into a flat atom sequence.  D expands to the
/// first factor's relation word s(0, l).  Throws on negative letters.
AtomWord to_atom_word(const Presentation& pres, const Word& w);

std::string atom_word_to_string(const Presentation& pres, const AtomWord& w);

}  // namespace hoso
