#include "hoso/word.hpp"

#include <cctype>
#include <stdexcept>

namespace hoso {

namespace {

long long parse_int(std::string_view tok, size_t& pos, const char* what) {
  bool neg = false;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
    neg = tok[pos] == '-';
    ++pos;
  }
  size_t start = pos;
  long long v = 0;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
    v = v * 10 + (tok[pos] - '0');
    if (v > 1000000000) throw std::invalid_argument(std::string(what) + " out of range");
    ++pos;
  }
  if (pos == start) throw std::invalid_argument(std::string("expected ") + what);
  return neg ? -v : v;
}

Letter parse_letter(const Presentation& pres, std::string_view tok) {
  Letter letter;
  size_t pos = 0;
  if (tok.empty()) throw std::invalid_argument("empty word letter");
  if (tok[0] == 'D') {
    letter.is_delta = true;
    pos = 1;
  } else if (tok[0] == 'a') {
    pos = 1;
    long long first = parse_int(tok, pos, "atom index");
    if (pos < tok.size() && tok[pos] == ':') {
      ++pos;
      if (pres.circular())
        throw std::invalid_argument("factor prefix 'a<j>:<i>' is only valid for product presentations");
      long long idx = parse_int(tok, pos, "atom index");
      letter.factor = static_cast<int>(first) - 1;
      letter.index = static_cast<int>(idx);
    } else {
      if (!pres.circular())
        throw std::invalid_argument("product presentations need the factor prefix 'a<j>:<i>'");
      letter.factor = 0;
      letter.index = static_cast<int>(first);
    }
    if (letter.factor < 0 || letter.factor >= pres.factor_count())
      throw std::invalid_argument("factor index out of range in word");
    if (letter.index < 0 || letter.index >= pres.factor(letter.factor).atoms)
      throw std::invalid_argument("atom index out of range in word");
  } else {
    throw std::invalid_argument("unrecognized word letter: " + std::string(tok));
  }
  if (pos < tok.size()) {
    if (tok[pos] != '^') throw std::invalid_argument("unrecognized word letter: " + std::string(tok));
    ++pos;
    letter.exp = parse_int(tok, pos, "exponent");
    if (pos != tok.size()) throw std::invalid_argument("trailing characters in word letter");
  }
  return letter;
}

}  // namespace

Word parse_word(const Presentation& pres, std::string_view text) {
  Word out;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    out.push_back(parse_letter(pres, text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

std::string word_to_string(const Presentation& pres, const Word& w) {
  std::string out;
  for (const Letter& letter : w) {
    if (letter.exp == 0) continue;
    if (!out.empty()) out += ' ';
    if (letter.is_delta) {
      out += 'D';
    } else {
      out += 'a';
      if (!pres.circular()) {
        out += std::to_string(letter.factor + 1);
        out += ':';
      }
      out += std::to_string(letter.index);
    }
    if (letter.exp != 1) {
      out += '^';
      out += std::to_string(letter.exp);
    }
  }
  if (out.empty()) out = "D^0";
  return out;
}

bool positive(const Word& w) {
  for (const Letter& letter : w)
    if (letter.exp < 0) return false;
  return true;
}

long long weighted_length(const Presentation& pres, const Word& w) {
  long long total = 0;
  for (const Letter& letter : w) {
    long long unit = letter.is_delta ? pres.delta_len() : pres.atom_weight(letter.factor);
    total += unit * letter.exp;
  }
  return total;
}

long long weighted_length(const Presentation& pres, const AtomWord& w) {
  long long total = 0;
  for (const Atom& a : w) total += pres.atom_weight(a.factor);
  return total;
}

AtomWord to_atom_word(const Presentation& pres, const Word& w) {
  AtomWord out;
  for (const Letter& letter : w) {
    if (letter.exp < 0) throw std::invalid_argument("negative letter in a positive word");
    for (long long rep = 0; rep < letter.exp; ++rep) {
      if (letter.is_delta) {
        const Factor& f = pres.factor(0);
        for (int k = 0; k < f.delta_len; ++k) out.push_back({0, k % f.atoms});
      } else {
        out.push_back({letter.factor, letter.index});
      }
    }
  }
  return out;
}

std::string atom_word_to_string(const Presentation& pres, const AtomWord& w) {
  std::string out;
  for (const Atom& a : w) {
    if (!out.empty()) out += ' ';
    out += 'a';
    if (!pres.circular()) {
      out += std::to_string(a.factor + 1);
      out += ':';
    }
    out += std::to_string(a.index);
  }
  if (out.empty()) out = "(empty)";
  return out;
}

}  // namespace hoso
