#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "webca/webrule.hpp"

namespace webca {

// Moore-neighborhood solidification rules on Z^2; a cell, once occupied,
// stays occupied, so the rule is just a birth predicate.
enum class Rule2D { Box13, PiggybackBox };

Rule2D parse_rule2d(const std::string& name);
std::string rule2d_name(Rule2D r);

// nb[dy][dx] are the occupied flags of the 3x3 block around the candidate
// cell (center ignored; it is unoccupied when a birth is evaluated).
bool birth2d(Rule2D rule, const bool nb[3][3]);

struct Cell2D {
  int64_t x, y;
  bool operator==(const Cell2D& o) const { return x == o.x && y == o.y; }
};

class Grid2D {
public:
  Grid2D(int64_t x0, int64_t y0, int64_t width, int64_t height)
      : x0_(x0), y0_(y0), w_(width), h_(height), t_(width * height, -1) {}

  int64_t x0() const { return x0_; }
  int64_t y0() const { return y0_; }
  int64_t width() const { return w_; }
  int64_t height() const { return h_; }

  bool in_range(int64_t x, int64_t y) const {
    return x >= x0_ && x < x0_ + w_ && y >= y0_ && y < y0_ + h_;
  }
  // first occupation time, -1 if never (within the computed horizon)
  int32_t occupied_at(int64_t x, int64_t y) const {
    if (!in_range(x, y)) return -1;
    return t_[(y - y0_) * w_ + (x - x0_)];
  }
  void set_time(int64_t x, int64_t y, int32_t t) { t_[(y - y0_) * w_ + (x - x0_)] = t; }

private:
  int64_t x0_, y0_, w_, h_;
  std::vector<int32_t> t_;
};

// run the solidification for `steps` updates from the given seed cells, on a
// window padded so every reachable cell is inside
Grid2D solidify_2d(Rule2D rule, const std::vector<Cell2D>& seed, int64_t steps);

// The 3-state rule tracking the two advancing boundary layers of the 2D CA:
// state 1 marks cells of the current layer that are occupied, state 2 marks
// cells that become occupied one update later. Requires the one-layer
// dynamics to be "1 Or 3"; throws RuleViolation otherwise.
WebRule derive_two_level_ebd(Rule2D rule);

} // namespace webca
