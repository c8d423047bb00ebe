#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "webca/bits.hpp"

namespace webca {

enum class ConfigKind { Finite, Periodic };

// One time-row of a binary CA over the integer line. Finite rows are trimmed
// so the first and last stored bits are 1 (the empty row is the quiescent
// state); periodic rows store one period of length sigma >= 1, not
// necessarily minimal.
class BinaryConfig {
public:
  BinaryConfig() : kind_(ConfigKind::Finite), offset_(0) {}

  static BinaryConfig finite(int64_t offset, Bits bits);
  static BinaryConfig periodic(Bits word, int64_t offset = 0);
  static BinaryConfig single(int64_t x = 0);

  // seed grammar: "101@-3", "[4]1", "(110)*"; bare digits default to offset 0
  static BinaryConfig parse(const std::string& text);
  std::string to_string() const;

  ConfigKind kind() const { return kind_; }
  int64_t offset() const { return offset_; }
  const Bits& bits() const { return bits_; }
  int64_t sigma() const { return bits_.size(); } // periodic kind

  bool empty() const { return kind_ == ConfigKind::Finite && bits_.size() == 0; }

  // state at absolute cell x
  bool at(int64_t x) const {
    if (kind_ == ConfigKind::Finite) return bits_.get(x - offset_);
    int64_t s = bits_.size();
    int64_t i = (x - offset_) % s;
    if (i < 0) i += s;
    return bits_.get(i);
  }

  // finite kind: [left, right] support, empty row reports left > right
  int64_t left() const { return offset_; }
  int64_t right() const { return offset_ + bits_.size() - 1; }
  int64_t width() const { return bits_.size(); }

  bool operator==(const BinaryConfig& o) const {
    return kind_ == o.kind_ && offset_ == o.offset_ && bits_ == o.bits_;
  }

private:
  ConfigKind kind_;
  int64_t offset_; // finite: leftmost stored cell; periodic: phase of bit 0
  Bits bits_;
};

// One time-row of a 3-state CA; states are kept as two bitplanes.
class TernaryConfig {
public:
  TernaryConfig() : kind_(ConfigKind::Finite), offset_(0) {}

  static TernaryConfig finite(int64_t offset, Bits ones, Bits twos);
  static TernaryConfig periodic(Bits ones, Bits twos, int64_t offset = 0);
  static TernaryConfig from_binary(const BinaryConfig& b);

  static TernaryConfig parse(const std::string& text);
  std::string to_string() const;

  ConfigKind kind() const { return kind_; }
  int64_t offset() const { return offset_; }
  const Bits& ones() const { return ones_; }
  const Bits& twos() const { return twos_; }
  int64_t sigma() const { return ones_.size(); }
  int64_t width() const { return ones_.size(); }
  int64_t left() const { return offset_; }
  int64_t right() const { return offset_ + ones_.size() - 1; }
  bool empty() const { return kind_ == ConfigKind::Finite && ones_.size() == 0; }

  int at(int64_t x) const {
    int64_t i = x - offset_;
    if (kind_ == ConfigKind::Periodic) {
      int64_t s = ones_.size();
      i %= s;
      if (i < 0) i += s;
    }
    if (ones_.get(i)) return 1;
    if (twos_.get(i)) return 2;
    return 0;
  }

  // first level: 1 where the state is 1
  BinaryConfig delta_projection() const;

  bool operator==(const TernaryConfig& o) const {
    return kind_ == o.kind_ && offset_ == o.offset_ && ones_ == o.ones_ && twos_ == o.twos_;
  }

private:
  ConfigKind kind_;
  int64_t offset_;
  Bits ones_, twos_;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace webca
