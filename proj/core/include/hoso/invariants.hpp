#pragma once

// Group invariants: homology of the Dehornoy-Lafont order complex (which for
// these Garside structures has one 0-cell, one 1-cell per atom, and
// (atoms - 1) 2-cells, nothing higher), abelianization via the Smith form of
// the full relator matrix, isomorphism classification with explicit witness
// maps, the Z x F_{m-1} decomposition at m = l, and the rank-2 braid-group
// table.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hoso/intmat.hpp"
#include "hoso/presentation.hpp"
#include "hoso/word.hpp"

namespace hoso {

/// Z^free_rank plus Z/d for each invariant factor d (each > 1, dividing the
/// next).
struct AbelianGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
};

/// Cell counts (dimensions 0, 1, 2) of the order complex; all higher
/// dimensions are empty.
std::array<long long, 3> dl_cells(const Presentation& pres);

AbelianGroup abelianization(const Presentation& pres);

/// H_n of the group: H_0 = Z, H_1 the abelianization, H_2 free of rank one
/// less than the free rank of H_1, zero beyond.  Throws on n < 0.
AbelianGroup homology(const Presentation& pres, int n);

/// The atom-exponent relator matrix (atoms x relators) whose cokernel is the
/// abelianization; exposed for cross-checking against word images.
IntMat relator_matrix(const Presentation& pres);
/// Exponent vector of a word over the global atom numbering.
std::vector<long long> abelianized_vector(const Presentation& pres, const Word& w);

/// Isomorphism of circular groups: both infinite cyclic (1 in {m,l}), or the
/// parameter pairs match up to swapping m and l.  Throws on product
/// presentations (classification beyond the circular family is out of scope).
bool classify_isomorphic(const Presentation& a, const Presentation& b);

/// Image of a word of G(m,l) under the explicit isomorphism onto G(l,m)
/// (identity when m = l).  Inverse letters map to inverted images, D to the
/// image of its atom expansion.
Word explicit_iso_map(const Presentation& from, const Word& w);

/// Letters of a reduced word in the free group F_{m-1} (generators x_0 ...
/// x_{m-2}), sign +-1.
struct FreeLetter {
  int index = 0;
  int sign = 1;

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Image in the direct decomposition Z x F_{m-1} of G(m,m): a central
/// exponent and a reduced free word.  Structural equality decides equality
/// in the group, independently of normal forms.
struct GmmImage {
  long long z_exp = 0;
  std::vector<FreeLetter> word;

  friend bool operator==(const GmmImage&, const GmmImage&) = default;
};

/// Throws unless the presentation is circular with m = l.
GmmImage gmm_decompose(const Presentation& pres, const Word& w);

/// Circular parameters (m,l) of the braid group of a rank-2 complex
/// reflection group, by its label: "G4" ... "G22" from the shipped table, or
/// the family "G(de,e,2)" resolved parametrically.  Throws
/// std::invalid_argument for unknown or non-irreducible-rank-2 labels.
std::pair<int, int> braid_rank2_lookup(const std::string& label);

}  // namespace hoso
