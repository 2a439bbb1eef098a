#include "hoso/intmat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace hoso {

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

}  // namespace

SmithForm smith_normal_form(IntMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix");

  SmithForm f;
  f.row_transform.assign(rows, std::vector<long long>(rows, 0));
  for (int i = 0; i < rows; ++i) f.row_transform[i][i] = 1;

  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(f.row_transform[i], f.row_transform[j]);
  };
  auto add_row = [&](int dst, int src, long long mult) {  // row dst += mult * row src
    for (int c = 0; c < cols; ++c) a[dst][c] += mult * a[src][c];
    for (int c = 0; c < rows; ++c) f.row_transform[dst][c] += mult * f.row_transform[src][c];
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) a[i][c] = -a[i][c];
    for (int c = 0; c < rows; ++c) f.row_transform[i][c] = -f.row_transform[i][c];
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
  };
  auto add_col = [&](int dst, int src, long long mult) {
    for (int r = 0; r < rows; ++r) a[r][dst] += mult * a[r][src];
  };

  const int steps = rows < cols ? rows : cols;
  for (int t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the remaining block as pivot (fixed scan
      // order for determinism).
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr < 0 || abs_ll(a[r][c]) < abs_ll(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) break;  // block is zero; done
      if (pr != t) swap_rows(t, pr);
      if (pc != t) swap_cols(t, pc);
      if (a[t][t] < 0) negate_row(t);

      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        add_row(r, t, -(a[r][t] / a[t][t]));
        if (a[r][t] != 0) clean = false;  // remainder left; next pivot is smaller
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        add_col(c, t, -(a[t][c] / a[t][t]));
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the rest.
      bool divides_all = true;
      for (int r = t + 1; r < rows && divides_all; ++r)
        for (int c = t + 1; c < cols && divides_all; ++c)
          if (a[r][c] % a[t][t] != 0) {
            add_row(t, r, 1);  // pull the bad row up and restart the pivot
            divides_all = false;
          }
      if (divides_all) break;
    }
  }

  f.diag.resize(steps);
  f.rank = 0;
  for (int t = 0; t < steps; ++t) {
    f.diag[t] = a[t][t];
    if (f.diag[t] != 0) ++f.rank;
  }
  return f;
}

std::vector<long long> cokernel_coords(const SmithForm& f, const std::vector<long long>& v) {
  const int rows = static_cast<int>(f.row_transform.size());
  if (static_cast<int>(v.size()) != rows) throw std::invalid_argument("vector/matrix mismatch");
  std::vector<long long> out(rows, 0);
  for (int i = 0; i < rows; ++i) {
    long long acc = 0;
    for (int j = 0; j < rows; ++j) acc += f.row_transform[i][j] * v[j];
    if (i < static_cast<int>(f.diag.size()) && f.diag[i] != 0) {
      acc %= f.diag[i];
      if (acc < 0) acc += f.diag[i];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace hoso
