#include "hoso/invariants.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hoso/braid_table_data.hpp"

namespace hoso {

std::string AbelianGroup::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (long long d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out;
}

std::array<long long, 3> dl_cells(const Presentation& pres) {
  long long atoms = pres.atom_count();
  return {1, atoms, atoms - 1};
}

IntMat relator_matrix(const Presentation& pres) {
  const int n = pres.atom_count();
  // Exponent vector of the relation word s_j(start, l_j).
  auto relation_counts = [&](int j, int start) {
    std::vector<long long> v(n, 0);
    const Factor& f = pres.factor(j);
    for (int t = 0; t < f.delta_len; ++t) ++v[pres.atom_offset(j) + (start + t) % f.atoms];
    return v;
  };
  std::vector<std::vector<long long>> columns;
  for (int j = 0; j < pres.factor_count(); ++j) {
    const Factor& f = pres.factor(j);
    for (int i = 0; i < f.atoms; ++i) {
      std::vector<long long> col = relation_counts(j, i);
      std::vector<long long> next = relation_counts(j, i + 1);
      for (int t = 0; t < n; ++t) col[t] -= next[t];
      columns.push_back(std::move(col));
    }
    if (j > 0) {
      std::vector<long long> col = relation_counts(j, 0);
      std::vector<long long> first = relation_counts(0, 0);
      for (int t = 0; t < n; ++t) col[t] -= first[t];
      columns.push_back(std::move(col));
    }
  }
  IntMat a(n, std::vector<long long>(columns.size(), 0));
  for (size_t c = 0; c < columns.size(); ++c)
    for (int r = 0; r < n; ++r) a[r][c] = columns[c][r];
  return a;
}

std::vector<long long> abelianized_vector(const Presentation& pres, const Word& w) {
  std::vector<long long> v(pres.atom_count(), 0);
  for (const Letter& letter : w) {
    if (letter.is_delta) {
      // D abelianizes like any of its relation words; use factor 0's.
      const Factor& f = pres.factor(0);
      for (int t = 0; t < f.delta_len; ++t) v[pres.atom_offset(0) + t % f.atoms] += letter.exp;
    } else {
      v[pres.atom_offset(letter.factor) + letter.index] += letter.exp;
    }
  }
  return v;
}

AbelianGroup abelianization(const Presentation& pres) {
  SmithForm f = smith_normal_form(relator_matrix(pres));
  AbelianGroup g;
  g.free_rank = pres.atom_count() - f.rank;
  for (long long d : f.diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup homology(const Presentation& pres, int n) {
  if (n < 0) throw std::invalid_argument("homology degree must be nonnegative");
  if (n == 0) return {1, {}};
  if (n == 1) return abelianization(pres);
  if (n == 2) return {abelianization(pres).free_rank - 1, {}};
  return {0, {}};
}

bool classify_isomorphic(const Presentation& a, const Presentation& b) {
  if (!a.circular() || !b.circular())
    throw std::invalid_argument("classification only covers circular presentations");
  const Factor& fa = a.factor(0);
  const Factor& fb = b.factor(0);
  const bool a_cyclic = fa.atoms == 1 || fa.delta_len == 1;
  const bool b_cyclic = fb.atoms == 1 || fb.delta_len == 1;
  if (a_cyclic || b_cyclic) return a_cyclic && b_cyclic;
  return (fa.atoms == fb.atoms && fa.delta_len == fb.delta_len) ||
         (fa.atoms == fb.delta_len && fa.delta_len == fb.atoms);
}

namespace {

void append_inverted(Word& out, const Word& w) {
  for (size_t t = w.size(); t-- > 0;) {
    Letter letter = w[t];
    letter.exp = -letter.exp;
    out.push_back(letter);
  }
}

void append_word(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

}  // namespace

Word explicit_iso_map(const Presentation& from, const Word& w) {
  if (!from.circular()) throw std::invalid_argument("explicit_iso_map needs a circular presentation");
  const int m = from.factor(0).atoms;
  const int l = from.factor(0).delta_len;
  if (m == l) return w;

  // Precompute atom images as words of the target G(l, m).
  std::vector<Word> image(m);
  if (m < l) {
    // a_0 -> b_{m-1}; a_i -> w_i^{-1} b_{m-1-i} w_i with w_i = b_{m-i} ... b_{m-1}.
    for (int i = 0; i < m; ++i) {
      Word wi;
      for (int t = m - i; t <= m - 1; ++t) wi.push_back({false, 0, t, 1});
      Word img;
      append_inverted(img, wi);
      img.push_back({false, 0, m - 1 - i, 1});
      append_word(img, wi);
      image[i] = img;
    }
  } else {
    // Inverse direction: write j = l*p + j', k = l - j' - 1, S = b_0 ... b_{l-1};
    // a_j -> S^{-p} (b_0 ... b_{k-1}) b_k (b_0 ... b_{k-1})^{-1} S^p.
    Word S;
    for (int t = 0; t < l; ++t) S.push_back({false, 0, t, 1});
    for (int j = 0; j < m; ++j) {
      int p = j / l;
      int k = l - (j % l) - 1;
      Word prefix;
      for (int t = 0; t < k; ++t) prefix.push_back({false, 0, t, 1});
      Word img;
      for (int rep = 0; rep < p; ++rep) append_inverted(img, S);
      append_word(img, prefix);
      img.push_back({false, 0, k, 1});
      append_inverted(img, prefix);
      for (int rep = 0; rep < p; ++rep) append_word(img, S);
      image[j] = img;
    }
  }

  // Apply letter by letter; D expands to its atom word first.
  Word out;
  for (const Letter& letter : w) {
    Word expansion;
    if (letter.is_delta) {
      for (int t = 0; t < l; ++t) expansion.push_back({false, 0, t % m, 1});
    } else {
      expansion.push_back({false, 0, letter.index, 1});
    }
    long long reps = letter.exp < 0 ? -letter.exp : letter.exp;
    for (long long rep = 0; rep < reps; ++rep) {
      if (letter.exp >= 0) {
        for (const Letter& e : expansion) append_word(out, image[e.index]);
      } else {
        for (size_t t = expansion.size(); t-- > 0;) append_inverted(out, image[expansion[t].index]);
      }
    }
  }
  return out;
}

GmmImage gmm_decompose(const Presentation& pres, const Word& w) {
  if (!pres.circular() || pres.factor(0).atoms != pres.factor(0).delta_len)
    throw std::invalid_argument("gmm_decompose needs a circular presentation with m = l");
  const int m = pres.factor(0).atoms;

  GmmImage out;
  auto push_reduced = [&](int index, int sign) {
    if (!out.word.empty() && out.word.back().index == index && out.word.back().sign == -sign)
      out.word.pop_back();
    else
      out.word.push_back({index, sign});
  };
  // a_i -> x_i for i < m-1; a_{m-1} -> (x_0 ... x_{m-2})^{-1} z; D -> z.
  auto push_atom = [&](int index, int sign) {
    if (index < m - 1) {
      push_reduced(index, sign);
    } else if (sign > 0) {
      for (int t = m - 2; t >= 0; --t) push_reduced(t, -1);
      out.z_exp += 1;
    } else {
      out.z_exp -= 1;
      for (int t = 0; t <= m - 2; ++t) push_reduced(t, 1);
    }
  };
  for (const Letter& letter : w) {
    if (letter.is_delta) {
      out.z_exp += letter.exp;
      continue;
    }
    long long reps = letter.exp < 0 ? -letter.exp : letter.exp;
    for (long long rep = 0; rep < reps; ++rep) push_atom(letter.index, letter.exp < 0 ? -1 : 1);
  }
  return out;
}

std::pair<int, int> braid_rank2_lookup(const std::string& label) {
  std::string trimmed;
  for (char ch : label)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed.empty()) throw std::invalid_argument("empty braid group label");

  // Family form G(de,e,2).
  if (trimmed.size() > 2 && trimmed[0] == 'G' && trimmed[1] == '(') {
    if (trimmed.back() != ')') throw std::invalid_argument("malformed label: " + label);
    std::string inner = trimmed.substr(2, trimmed.size() - 3);
    std::istringstream in(inner);
    long long de = 0, e = 0, rank = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> de >> c1 >> e >> c2 >> rank) || c1 != ',' || c2 != ',' || !in.eof())
      throw std::invalid_argument("malformed label: " + label);
    if (rank != 2) throw std::invalid_argument("only rank 2 is tabulated: " + label);
    if (e < 1 || de < 1 || de % e != 0)
      throw std::invalid_argument("malformed G(de,e,2) parameters: " + label);
    long long d = de / e;
    if (d >= 2) return e % 2 == 1 ? std::pair<int, int>(2, 4) : std::pair<int, int>(3, 3);
    if (e >= 3) return {2, static_cast<int>(e)};
    throw std::invalid_argument(label + " is not an irreducible rank-2 reflection group");
  }

  // Exceptional labels from the embedded table.
  std::istringstream table(detail::kBraidRank2Table);
  std::string line;
  while (std::getline(table, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string name, params;
    if (!(row >> name >> params)) continue;
    if (name != trimmed) continue;
    auto comma = params.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad table row: " + line);
    return {std::stoi(params.substr(0, comma)), std::stoi(params.substr(comma + 1))};
  }
  throw std::invalid_argument("unknown braid group label: " + label);
}

}  // namespace hoso
