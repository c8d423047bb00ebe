#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace webca {

// Fixed-width bit vector; bit i of word i/64 at position i%64. Out-of-range
// reads are 0, which matches the quiescent background of every CA here.
class Bits {
public:
  Bits() = default;
  explicit Bits(int64_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int64_t size() const { return n_; }
  bool empty_all() const {
    for (uint64_t x : w_) if (x) return false;
    return true;
  }

  bool get(int64_t i) const {
    if (i < 0 || i >= n_) return false;
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int64_t i, bool v) {
    if (v) w_[i >> 6] |= 1ULL << (i & 63);
    else   w_[i >> 6] &= ~(1ULL << (i & 63));
  }

  int64_t popcount() const {
    int64_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  // index of lowest / highest set bit, -1 if none
  int64_t lowest() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int64_t(k) * 64 + std::countr_zero(w_[k]);
    return -1;
  }
  int64_t highest() const {
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k]) return int64_t(k) * 64 + 63 - std::countl_zero(w_[k]);
    return -1;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }

  std::string to_string() const {
    std::string s;
    s.reserve(n_);
    for (int64_t i = 0; i < n_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }

private:
  int64_t n_ = 0;
  std::vector<uint64_t> w_;
};

// dst[i] = src[i-1] ^ src[i] ^ src[i+1], zero outside [0, nbits). Rule "1 Or 3".
inline void step150(const uint64_t* src, uint64_t* dst, size_t nwords) {
  uint64_t prev = 0;
  for (size_t k = 0; k < nwords; ++k) {
    uint64_t cur = src[k];
    uint64_t nextw = (k + 1 < nwords) ? src[k + 1] : 0;
    uint64_t left = (cur << 1) | (prev >> 63);   // src shifted to higher index
    uint64_t right = (cur >> 1) | (nextw << 63); // src shifted to lower index
    dst[k] = left ^ cur ^ right;
    prev = cur;
  }
}

// dst[i] = src[i-1] ^ src[i+1]. Rule "Xor".
inline void step90(const uint64_t* src, uint64_t* dst, size_t nwords) {
  uint64_t prev = 0;
  for (size_t k = 0; k < nwords; ++k) {
    uint64_t cur = src[k];
    uint64_t nextw = (k + 1 < nwords) ? src[k + 1] : 0;
    dst[k] = ((cur << 1) | (prev >> 63)) ^ ((cur >> 1) | (nextw << 63));
    prev = cur;
  }
}

// rotate a width-w bitmask (w <= 64) left by one cell (cell i -> cell i+1)
inline uint64_t rot_up(uint64_t x, int w) {
  uint64_t mask = (w == 64) ? ~0ULL : ((1ULL << w) - 1);
  return ((x << 1) | (x >> (w - 1))) & mask;
}
inline uint64_t rot_down(uint64_t x, int w) {
  uint64_t mask = (w == 64) ? ~0ULL : ((1ULL << w) - 1);
  return ((x >> 1) | (x << (w - 1))) & mask;
}
inline uint64_t rot_by(uint64_t x, int s, int w) {
  uint64_t mask = (w == 64) ? ~0ULL : ((1ULL << w) - 1);
  s %= w;
  if (s < 0) s += w;
  if (s == 0) return x & mask;
  return ((x << s) | (x >> (w - s))) & mask;
}

// one step of "1 Or 3" on a cyclic row of width w <= 64
inline uint64_t step150_cyclic(uint64_t x, int w) {
  return rot_up(x, w) ^ x ^ rot_down(x, w);
}

// cyclic rotation of a wide row (word vector, width nbits), by +1 cell
void rotate_up_wide(const std::vector<uint64_t>& src, std::vector<uint64_t>& dst, int64_t nbits);
void rotate_down_wide(const std::vector<uint64_t>& src, std::vector<uint64_t>& dst, int64_t nbits);

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  const uint8_t* p = static_cast<const uint8_t*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace webca
