#include "hoso/presentation.hpp"

#include <numeric>
#include <stdexcept>

namespace hoso {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace

Presentation::Presentation(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("presentation needs at least one factor");
  for (const Factor& f : factors_) {
    if (f.atoms < 1 || f.delta_len < 1)
      throw std::invalid_argument("factor parameters must be positive");
    if (factors_.size() > 1 && f.atoms == 1 && f.delta_len == 1)
      throw std::invalid_argument("(1,1) factor is not allowed in a product presentation");
  }
  delta_len_ = 1;
  for (const Factor& f : factors_) delta_len_ = std::lcm(delta_len_, (long long)f.delta_len);
  atom_weight_.reserve(factors_.size());
  atom_offset_.reserve(factors_.size());
  for (const Factor& f : factors_) {
    atom_weight_.push_back(delta_len_ / f.delta_len);
    atom_offset_.push_back(atom_count_);
    atom_count_ += f.atoms;
  }
}

Presentation Presentation::parse(std::string_view text) {
  std::vector<Factor> factors;
  size_t pos = 0;
  auto read_int = [&]() -> int {
    size_t start = pos;
    long long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw std::invalid_argument("presentation parameter too large");
      ++pos;
    }
    if (pos == start) throw std::invalid_argument("expected a number in presentation text");
    return static_cast<int>(v);
  };
  while (true) {
    Factor f;
    f.atoms = read_int();
    if (pos >= text.size() || text[pos] != ',')
      throw std::invalid_argument("expected ',' in presentation text");
    ++pos;
    f.delta_len = read_int();
    factors.push_back(f);
    if (pos == text.size()) break;
    if (text[pos] != ';') throw std::invalid_argument("expected ';' between factors");
    ++pos;
  }
  return Presentation(std::move(factors));
}

std::string Presentation::to_string() const {
  std::string out;
  for (size_t j = 0; j < factors_.size(); ++j) {
    if (j) out += ';';
    out += std::to_string(factors_[j].atoms);
    out += ',';
    out += std::to_string(factors_[j].delta_len);
  }
  return out;
}

void Presentation::check_factor(int j) const {
  if (j < 0 || j >= factor_count()) throw std::invalid_argument("factor index out of range");
}

Simple Presentation::simple(int factor, int index, int len) const {
  check_factor(factor);
  const Factor& f = factors_[factor];
  if (len < 0 || len > f.delta_len) throw std::invalid_argument("simple length out of range");
  if (len == 0) return Simple::one();
  if (len == f.delta_len) return Simple::delta();
  return Simple(factor, mod(index, f.atoms), len);
}

Simple Presentation::atom(int factor, int index) const { return simple(factor, index, 1); }

std::vector<Simple> Presentation::all_simples() const {
  std::vector<Simple> out;
  out.push_back(Simple::one());
  for (const Simple& s : proper_simples()) out.push_back(s);
  out.push_back(Simple::delta());
  return out;
}

std::vector<Simple> Presentation::proper_simples() const {
  std::vector<Simple> out;
  for (int j = 0; j < factor_count(); ++j)
    for (int i = 0; i < factors_[j].atoms; ++i)
      for (int p = 1; p < factors_[j].delta_len; ++p) out.push_back(Simple(j, i, p));
  return out;
}

std::vector<Simple> Presentation::atoms() const {
  std::vector<Simple> out;
  for (int j = 0; j < factor_count(); ++j)
    for (int i = 0; i < factors_[j].atoms; ++i) out.push_back(simple(j, i, 1));
  return out;
}

long long Presentation::simple_weight(const Simple& s) const {
  switch (s.kind()) {
    case Simple::Kind::identity: return 0;
    case Simple::Kind::delta: return delta_len_;
    case Simple::Kind::proper: return s.len() * atom_weight_[s.factor()];
  }
  return 0;
}

Simple Presentation::left_complement(const Simple& s) const {
  if (s.is_one()) return Simple::delta();
  if (s.is_delta()) return Simple::one();
  const Factor& f = factors_[s.factor()];
  return simple(s.factor(), s.index() + s.len(), f.delta_len - s.len());
}

Simple Presentation::right_complement(const Simple& s) const {
  if (s.is_one()) return Simple::delta();
  if (s.is_delta()) return Simple::one();
  const Factor& f = factors_[s.factor()];
  return simple(s.factor(), s.index() + s.len() - f.delta_len, f.delta_len - s.len());
}

Simple Presentation::garside_phi(const Simple& s, long long power) const {
  if (!s.is_proper()) return s;
  const Factor& f = factors_[s.factor()];
  long long shift = power % f.atoms * f.delta_len;
  return Simple(s.factor(), mod(s.index() + shift, f.atoms), s.len());
}

long long Presentation::phi_order() const {
  long long n = 1;
  for (const Factor& f : factors_) n = std::lcm(n, (long long)(f.atoms / std::gcd(f.atoms, f.delta_len)));
  return n;
}

bool Presentation::left_divides(const Simple& s, const Simple& t) const {
  if (s.is_one() || t.is_delta()) return true;
  if (s.is_delta() || t.is_one()) return false;
  return s.factor() == t.factor() && s.index() == t.index() && s.len() <= t.len();
}

Simple Presentation::simple_gcd(const Simple& s, const Simple& t) const {
  if (left_divides(s, t)) return s;
  if (left_divides(t, s)) return t;
  return Simple::one();
}

Simple Presentation::simple_lcm(const Simple& s, const Simple& t) const {
  if (left_divides(s, t)) return t;
  if (left_divides(t, s)) return s;
  return Simple::delta();
}

PairNormalForm Presentation::simple_pair_normalize(const Simple& s, const Simple& t) const {
  if (!s.is_proper() || !t.is_proper())
    throw std::invalid_argument("simple_pair_normalize expects proper simples");
  PairNormalForm out;
  if (s.factor() != t.factor()) {
    out.simples = {s, t};
    out.unchanged = true;
    return out;
  }
  const Factor& f = factors_[s.factor()];
  if (mod(s.index() + s.len(), f.atoms) != t.index()) {
    out.simples = {s, t};
    out.unchanged = true;
    return out;
  }
  int total = s.len() + t.len();
  if (total < f.delta_len) {
    out.simples = {Simple(s.factor(), s.index(), total)};
  } else if (total == f.delta_len) {
    out.delta_count = 1;
  } else {
    out.delta_count = 1;
    out.simples = {Simple(s.factor(), mod(s.index() + f.delta_len, f.atoms), total - f.delta_len)};
  }
  return out;
}

bool operator==(const Presentation& a, const Presentation& b) { return a.factors_ == b.factors_; }

std::string to_human(const Presentation& pres, const Simple& s) {
  if (s.is_one()) return "1";
  if (s.is_delta()) return "D";
  std::string out = "s";
  if (!pres.circular()) out += std::to_string(s.factor() + 1);
  out += "(" + std::to_string(s.index()) + "," + std::to_string(s.len()) + ")";
  return out;
}

}  // namespace hoso
