#pragma once

#include <cstdint>
#include <vector>

namespace webca {

// Dense bit-packed matrix over GF(2). Sized for the rank checks in this
// project (a few thousand columns at most), so plain Gaussian elimination.
class Gf2Matrix {
public:
  Gf2Matrix(int64_t rows, int64_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }

  bool get(int64_t r, int64_t c) const {
    return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(int64_t r, int64_t c, bool v) {
    uint64_t& word = w_[r * stride_ + (c >> 6)];
    if (v) word |= 1ULL << (c & 63);
    else   word &= ~(1ULL << (c & 63));
  }

  void xor_row(int64_t dst, int64_t src) {
    uint64_t* d = &w_[dst * stride_];
    const uint64_t* s = &w_[src * stride_];
    for (int64_t k = 0; k < stride_; ++k) d[k] ^= s[k];
  }

  // rank by elimination on a working copy
  int64_t rank() const {
    Gf2Matrix m = *this;
    int64_t r = 0;
    for (int64_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
      int64_t piv = -1;
      for (int64_t i = r; i < m.rows_; ++i)
        if (m.get(i, c)) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != r) m.swap_rows(piv, r);
      for (int64_t i = r + 1; i < m.rows_; ++i)
        if (m.get(i, c)) m.xor_row(i, r);
      ++r;
    }
    return r;
  }

  void swap_rows(int64_t a, int64_t b) {
    for (int64_t k = 0; k < stride_; ++k)
      std::swap(w_[a * stride_ + k], w_[b * stride_ + k]);
  }

private:
  int64_t rows_, cols_, stride_;
  std::vector<uint64_t> w_;
};

} // namespace webca
