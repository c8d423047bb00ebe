#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "webca/config.hpp"
#include "webca/gf2.hpp"

namespace webca {

enum class AdditiveRule { OneOr3, Xor };

struct MemoryCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  int64_t x;
  int64_t t;
  bool operator==(const Point& o) const { return x == o.x && t == o.t; }
  bool operator<(const Point& o) const { return t != o.t ? t < o.t : x < o.x; }
};

// Stacked rows 0..T of a binary CA run.
class BinaryDiagram {
public:
  BinaryDiagram() = default;
  BinaryDiagram(std::vector<BinaryConfig> rows, AdditiveRule rule)
      : rows_(std::move(rows)), rule_(rule) {}

  int64_t height() const { return static_cast<int64_t>(rows_.size()); } // T + 1
  const BinaryConfig& row(int64_t t) const { return rows_[t]; }
  AdditiveRule rule() const { return rule_; }

  // state at (x, t); anything outside rows 0..T reads as 0
  bool at(int64_t x, int64_t t) const {
    if (t < 0 || t >= height()) return false;
    return rows_[t].at(x);
  }

private:
  std::vector<BinaryConfig> rows_;
  AdditiveRule rule_ = AdditiveRule::OneOr3;
};

BinaryConfig step_additive(const BinaryConfig& config, AdditiveRule rule);

BinaryDiagram evolve(const BinaryConfig& config, AdditiveRule rule, int64_t steps,
                     size_t max_bytes = size_t(1) << 30);

enum class SingleSiteMethod { Direct, Recursive };

// "1 Or 3" from a lone 1 at the origin, rows 0..T. The recursive method
// assembles the quadrant by self-similar block placement and requires
// T + 1 to be a power of two.
BinaryDiagram single_site_diagram(int64_t steps, SingleSiteMethod method);

// parity of sum over y in seed_sites of single_site(x - y, t)
bool duality_eval(const BinaryDiagram& single_site, const std::vector<int64_t>& seed_sites,
                  int64_t x, int64_t t);
bool duality_eval(const std::vector<int64_t>& seed_sites, int64_t x, int64_t t);

// Maximal inverted all-0 triangle with top row [a,b] x {t}.
struct Void {
  int64_t a, b, t;
  int64_t width() const { return b - a + 1; }
  int64_t rows() const { return (width() + 1) / 2; }
  int64_t end_time() const { return t + rows() - 1; }
  // k with width == 2^k - 1, or 0 when the width is not of that form
  int level_exponent() const {
    int64_t w = width();
    int k = 0;
    while ((int64_t(1) << (k + 1)) - 1 <= w) ++k;
    return ((int64_t(1) << k) - 1 == w) ? k : 0;
  }
  bool operator==(const Void& o) const { return a == o.a && b == o.b && t == o.t; }
};

// All voids whose full triangle fits in rows [0, T], width >= min_width,
// sorted by (t, a). Partially visible voids are suppressed.
std::vector<Void> enumerate_voids(const BinaryConfig& seed, int64_t steps, int64_t min_width);
std::vector<Void> enumerate_voids(const BinaryDiagram& diagram, int64_t min_width);

// The unique finite seed mapping to `seed` under one "1 Or 3" step, if any.
std::optional<BinaryConfig> predecessor(const BinaryConfig& seed);

// Largest k <= k_max such that the k-fold predecessor exists. The empty seed
// reports k_max.
int64_t predecessor_count(const BinaryConfig& seed, int64_t k_max);

// Rank over GF(2) of the map from seed bits on [0, L] to the states at the
// target points; row (x,t) has entries single_site(x - y, t).
int64_t window_rank(int64_t L, const std::vector<Point>& targets);

} // namespace webca
