#include "webca/config.hpp"

#include <cctype>

namespace webca {
namespace {

// expand "[n]" runs of zeros and check the alphabet; returns digits only
std::string expand_states(const std::string& text, size_t begin, size_t end, bool ternary) {
  std::string out;
  size_t i = begin;
  while (i < end) {
    char c = text[i];
    if (c == '[') {
      size_t j = text.find(']', i);
      if (j == std::string::npos || j >= end) throw ParseError("unterminated [n] in seed");
      int64_t n = 0;
      for (size_t k = i + 1; k < j; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw ParseError("bad [n] count");
        n = n * 10 + (text[k] - '0');
      }
      out.append(n, '0');
      i = j + 1;
    } else if (c == '0' || c == '1' || (ternary && c == '2')) {
      out.push_back(c);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in seed");
    }
  }
  return out;
}

int64_t parse_offset(const std::string& text, size_t at) {
  if (at >= text.size()) throw ParseError("missing offset after '@'");
  size_t pos = 0;
  int64_t v = std::stoll(text.substr(at), &pos);
  if (at + pos != text.size()) throw ParseError("trailing characters after offset");
  return v;
}

struct SeedText {
  std::string states;
  int64_t offset = 0;
  bool periodic = false;
};

SeedText split_seed(const std::string& text, bool ternary) {
  SeedText r;
  std::string body = text;
  size_t at = body.rfind('@');
  if (at != std::string::npos) {
    r.offset = parse_offset(body, at + 1);
    body = body.substr(0, at);
  }
  if (body.size() >= 3 && body.front() == '(' && body.compare(body.size() - 2, 2, ")*") == 0) {
    r.periodic = true;
    r.states = expand_states(body, 1, body.size() - 2, ternary);
    if (r.states.empty()) throw ParseError("empty periodic word");
  } else {
    r.states = expand_states(body, 0, body.size(), ternary);
  }
  return r;
}

} // namespace

BinaryConfig BinaryConfig::finite(int64_t offset, Bits bits) {
  // canonical trim to 1...1
  int64_t lo = bits.lowest(), hi = bits.highest();
  BinaryConfig c;
  c.kind_ = ConfigKind::Finite;
  if (lo < 0) {
    c.offset_ = 0;
    c.bits_ = Bits();
    return c;
  }
  c.offset_ = offset + lo;
  Bits t(hi - lo + 1);
  for (int64_t i = lo; i <= hi; ++i) t.set(i - lo, bits.get(i));
  c.bits_ = std::move(t);
  return c;
}

BinaryConfig BinaryConfig::periodic(Bits word, int64_t offset) {
  if (word.size() < 1) throw ParseError("periodic word must have sigma >= 1");
  BinaryConfig c;
  c.kind_ = ConfigKind::Periodic;
  c.offset_ = offset;
  c.bits_ = std::move(word);
  return c;
}

BinaryConfig BinaryConfig::single(int64_t x) {
  Bits b(1);
  b.set(0, true);
  return finite(x, std::move(b));
}

BinaryConfig BinaryConfig::parse(const std::string& text) {
  SeedText s = split_seed(text, false);
  Bits b(s.states.size());
  for (size_t i = 0; i < s.states.size(); ++i) b.set(i, s.states[i] == '1');
  if (s.periodic) return periodic(std::move(b), s.offset);
  return finite(s.offset, std::move(b));
}

std::string BinaryConfig::to_string() const {
  std::string body = bits_.to_string();
  if (kind_ == ConfigKind::Periodic) {
    body = "(" + body + ")*";
  } else if (body.empty()) {
    body = "0"; // quiescent row
    return body;
  }
  if (offset_ != 0) body += "@" + std::to_string(offset_);
  return body;
}

TernaryConfig TernaryConfig::finite(int64_t offset, Bits ones, Bits twos) {
  TernaryConfig c;
  c.kind_ = ConfigKind::Finite;
  int64_t lo = -1, hi = -1;
  for (int64_t i = 0; i < ones.size(); ++i) {
    if (ones.get(i) || twos.get(i)) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  if (lo < 0) {
    c.offset_ = 0;
    return c;
  }
  c.offset_ = offset + lo;
  Bits o(hi - lo + 1), t(hi - lo + 1);
  for (int64_t i = lo; i <= hi; ++i) {
    o.set(i - lo, ones.get(i));
    t.set(i - lo, twos.get(i));
  }
  c.ones_ = std::move(o);
  c.twos_ = std::move(t);
  return c;
}

TernaryConfig TernaryConfig::periodic(Bits ones, Bits twos, int64_t offset) {
  if (ones.size() < 1 || ones.size() != twos.size())
    throw ParseError("periodic ternary word must have matching sigma >= 1");
  TernaryConfig c;
  c.kind_ = ConfigKind::Periodic;
  c.offset_ = offset;
  c.ones_ = std::move(ones);
  c.twos_ = std::move(twos);
  return c;
}

TernaryConfig TernaryConfig::from_binary(const BinaryConfig& b) {
  Bits twos(b.bits().size());
  if (b.kind() == ConfigKind::Periodic) return periodic(b.bits(), std::move(twos), b.offset());
  return finite(b.offset(), b.bits(), std::move(twos));
}

TernaryConfig TernaryConfig::parse(const std::string& text) {
  SeedText s = split_seed(text, true);
  Bits o(s.states.size()), t(s.states.size());
  for (size_t i = 0; i < s.states.size(); ++i) {
    o.set(i, s.states[i] == '1');
    t.set(i, s.states[i] == '2');
  }
  if (s.periodic) return periodic(std::move(o), std::move(t), s.offset);
  return finite(s.offset, std::move(o), std::move(t));
}

std::string TernaryConfig::to_string() const {
  std::string body;
  for (int64_t i = 0; i < ones_.size(); ++i)
    body.push_back(ones_.get(i) ? '1' : (twos_.get(i) ? '2' : '0'));
  if (kind_ == ConfigKind::Periodic) {
    body = "(" + body + ")*";
  } else if (body.empty()) {
    return "0";
  }
  if (offset_ != 0) body += "@" + std::to_string(offset_);
  return body;
}

BinaryConfig TernaryConfig::delta_projection() const {
  if (kind_ == ConfigKind::Periodic) return BinaryConfig::periodic(ones_, offset_);
  return BinaryConfig::finite(offset_, ones_);
}

void rotate_up_wide(const std::vector<uint64_t>& src, std::vector<uint64_t>& dst, int64_t nbits) {
  size_t nw = src.size();
  dst.assign(nw, 0);
  for (int64_t i = 0; i < nbits; ++i) {
    int64_t j = (i + 1) % nbits;
    if ((src[i >> 6] >> (i & 63)) & 1) dst[j >> 6] |= 1ULL << (j & 63);
  }
}

void rotate_down_wide(const std::vector<uint64_t>& src, std::vector<uint64_t>& dst, int64_t nbits) {
  size_t nw = src.size();
  dst.assign(nw, 0);
  for (int64_t i = 0; i < nbits; ++i) {
    int64_t j = (i - 1 + nbits) % nbits;
    if ((src[i >> 6] >> (i & 63)) & 1) dst[j >> 6] |= 1ULL << (j & 63);
  }
}

} // namespace webca
