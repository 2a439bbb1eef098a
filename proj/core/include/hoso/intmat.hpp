#pragma once

// Small integer matrices and their invariant-factor (Smith) normal form.
// Desk scale only: dimensions in the dozens, entries small.

#include <vector>

namespace hoso {

using IntMat = std::vector<std::vector<long long>>;  // row major, rectangular

/// U * A * V = diag(d_1, ..., d_rank, 0, ...) with d_i > 0 and d_i | d_{i+1};
/// only U (the row transform) is tracked, enough to project vectors into the
/// cokernel Z^rows / colspan(A).
struct SmithForm {
  std::vector<long long> diag;  // min(rows, cols) entries, invariant factors then zeros
  IntMat row_transform;         // U, rows x rows, unimodular
  int rank = 0;
};

SmithForm smith_normal_form(IntMat a);

/// Coordinates of v in Z^rows / colspan(A): (U v)_i mod d_i for i < rank
/// (representative in [0, d_i)), exact value on the free coordinates.
std::vector<long long> cokernel_coords(const SmithForm& f, const std::vector<long long>& v);

}  // namespace hoso
