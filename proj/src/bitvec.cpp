#include "hdx/bitvec.hpp"

namespace hdx {

bool solve_f2(const Mat2& m, const BitVec& b, BitVec& x) {
  const std::size_t rows = m.num_rows(), cols = m.num_cols();
  // Augmented elimination: each working row is (row | b_i) with the augment
  // tracked in a parallel bit list.
  std::vector<BitVec> a;
  std::vector<bool> rhs(rows);
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a.push_back(m.row(i));
    rhs[i] = b.get(i);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = BitVec::npos;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i].get(c)) {
        sel = i;
        break;
      }
    if (sel == BitVec::npos) continue;
    std::swap(a[r], a[sel]);
    std::swap(rhs[r], rhs[sel]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i].get(c)) {
        a[i] ^= a[r];
        rhs[i] = rhs[i] ^ rhs[r];
      }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i]) return false;  // 0 = 1 row
  x = BitVec(cols);
  for (std::size_t i = 0; i < r; ++i)
    if (rhs[i]) x.set(pivot_col[i]);
  return true;
}

std::vector<BitVec> kernel_basis(const Mat2& m) {
  const std::size_t rows = m.num_rows(), cols = m.num_cols();
  std::vector<BitVec> a;
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) a.push_back(m.row(i));
  std::vector<std::size_t> pivot_of_col(cols, BitVec::npos);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = BitVec::npos;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i].get(c)) {
        sel = i;
        break;
      }
    if (sel == BitVec::npos) continue;
    std::swap(a[r], a[sel]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i].get(c)) a[i] ^= a[r];
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<BitVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] != BitVec::npos) continue;
    BitVec v(cols);
    v.set(c);
    for (std::size_t c2 = 0; c2 < cols; ++c2) {
      std::size_t pr = pivot_of_col[c2];
      if (pr != BitVec::npos && a[pr].get(c)) v.set(c2);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hdx
