#include "webca/additive.hpp"

#include <algorithm>
#include <map>

namespace webca {

namespace {

Bits step_words(const Bits& src, AdditiveRule rule, int64_t dst_bits, int64_t shift) {
  // dst bit (i + shift) corresponds to src bit i's cell
  Bits padded(dst_bits);
  for (int64_t i = 0; i < src.size(); ++i)
    if (src.get(i)) padded.set(i + shift, true);
  Bits out(dst_bits);
  if (rule == AdditiveRule::OneOr3)
    step150(padded.words().data(), out.words().data(), padded.words().size());
  else
    step90(padded.words().data(), out.words().data(), padded.words().size());
  return out;
}

Bits step_cyclic_bits(const Bits& word, AdditiveRule rule) {
  int64_t s = word.size();
  Bits out(s);
  if (s <= 64) {
    uint64_t x = word.words().empty() ? 0 : word.words()[0];
    uint64_t up = rot_up(x, int(s));
    uint64_t down = rot_down(x, int(s));
    uint64_t r = (rule == AdditiveRule::OneOr3) ? (up ^ x ^ down) : (up ^ down);
    if (!out.words().empty()) out.words()[0] = r;
    return out;
  }
  std::vector<uint64_t> up, down;
  rotate_up_wide(word.words(), up, s);
  rotate_down_wide(word.words(), down, s);
  for (size_t k = 0; k < out.words().size(); ++k) {
    uint64_t mid = (rule == AdditiveRule::OneOr3) ? word.words()[k] : 0;
    out.words()[k] = up[k] ^ mid ^ down[k];
  }
  return out;
}

} // namespace

BinaryConfig step_additive(const BinaryConfig& config, AdditiveRule rule) {
  if (config.kind() == ConfigKind::Periodic)
    return BinaryConfig::periodic(step_cyclic_bits(config.bits(), rule), config.offset());
  if (config.empty()) return config;
  Bits out = step_words(config.bits(), rule, config.width() + 2, 1);
  return BinaryConfig::finite(config.offset() - 1, std::move(out));
}

BinaryDiagram evolve(const BinaryConfig& config, AdditiveRule rule, int64_t steps,
                     size_t max_bytes) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  size_t per_row = (config.kind() == ConfigKind::Finite)
                       ? size_t(config.width() + 2 * steps + 64) / 8
                       : size_t(config.sigma() + 64) / 8;
  if (per_row * size_t(steps + 1) > max_bytes)
    throw MemoryCapError("diagram exceeds the memory budget");

  std::vector<BinaryConfig> rows;
  rows.reserve(steps + 1);
  rows.push_back(config);
  if (config.kind() == ConfigKind::Periodic) {
    for (int64_t t = 0; t < steps; ++t)
      rows.push_back(step_additive(rows.back(), rule));
    return BinaryDiagram(std::move(rows), rule);
  }
  // finite: evolve in a fixed-width buffer, one cell of growth per side per step
  int64_t w = config.width() + 2 * steps + 2;
  int64_t base = config.offset() - steps - 1;
  Bits cur(w), nxt(w);
  for (int64_t i = 0; i < config.width(); ++i)
    cur.set(config.offset() - base + i, config.bits().get(i));
  for (int64_t t = 0; t < steps; ++t) {
    if (rule == AdditiveRule::OneOr3)
      step150(cur.words().data(), nxt.words().data(), cur.words().size());
    else
      step90(cur.words().data(), nxt.words().data(), cur.words().size());
    std::swap(cur, nxt);
    rows.push_back(BinaryConfig::finite(base, cur));
  }
  return BinaryDiagram(std::move(rows), rule);
}

namespace {

// quadrant grid of single-site "1 Or 3": cells [0, 2^n] x [0, 2^n - 1]
struct Block {
  int n;
  std::vector<Bits> rows; // 2^n rows of 2^n + 1 cells
};

Block mirror_block(const Block& b) {
  int64_t w = (int64_t(1) << b.n) + 1;
  Block m{b.n, {}};
  m.rows.reserve(b.rows.size());
  for (const Bits& r : b.rows) {
    Bits rm(w);
    for (int64_t i = 0; i < w; ++i) rm.set(i, r.get(w - 1 - i));
    m.rows.push_back(std::move(rm));
  }
  return m;
}

void place(Block& dst, const Block& src, int64_t x0, int64_t t0) {
  int64_t w = (int64_t(1) << src.n) + 1;
  int64_t h = int64_t(1) << src.n;
  for (int64_t t = 0; t < h; ++t)
    for (int64_t i = 0; i < w; ++i)
      if (src.rows[t].get(i)) dst.rows[t0 + t].set(x0 + i, true);
}

Block build_block(int n) {
  if (n == 0) {
    Block b{0, {Bits(2)}};
    b.rows[0].set(0, true); // "10"
    return b;
  }
  if (n == 1) {
    Block b{1, {Bits(3), Bits(3)}};
    b.rows[0].set(0, true);                       // 100
    b.rows[1].set(0, true); b.rows[1].set(1, true); // 110
    return b;
  }
  Block b1 = build_block(n - 1);
  Block b2 = build_block(n - 2);
  Block b2m = mirror_block(b2);
  int64_t half = int64_t(1) << (n - 1);
  int64_t quarter = int64_t(1) << (n - 2);
  Block out{n, std::vector<Bits>(size_t(1) << n, Bits((int64_t(1) << n) + 1))};
  place(out, b1, 0, 0);
  place(out, b1, half, half);
  place(out, b2, 0, half);
  place(out, b2, 0, half + quarter);
  place(out, b2m, quarter, half);
  place(out, b2m, quarter, half + quarter);
  return out;
}

} // namespace

BinaryDiagram single_site_diagram(int64_t steps, SingleSiteMethod method) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (method == SingleSiteMethod::Direct)
    return evolve(BinaryConfig::single(0), AdditiveRule::OneOr3, steps);

  int64_t height = steps + 1;
  if (height & (height - 1))
    throw std::invalid_argument("recursive construction requires steps + 1 to be a power of two");
  int n = 0;
  while ((int64_t(1) << n) < height) ++n;
  Block b = build_block(n);
  std::vector<BinaryConfig> rows;
  rows.reserve(height);
  for (int64_t t = 0; t <= steps; ++t) {
    Bits full(2 * t + 1);
    for (int64_t x = 0; x <= t; ++x) {
      bool v = b.rows[t].get(x);
      if (v) {
        full.set(t + x, true);
        full.set(t - x, true); // left half by symmetry
      }
    }
    rows.push_back(BinaryConfig::finite(-t, std::move(full)));
  }
  return BinaryDiagram(std::move(rows), AdditiveRule::OneOr3);
}

bool duality_eval(const BinaryDiagram& single_site, const std::vector<int64_t>& seed_sites,
                  int64_t x, int64_t t) {
  bool acc = false;
  for (int64_t y : seed_sites) acc ^= single_site.at(x - y, t);
  return acc;
}

bool duality_eval(const std::vector<int64_t>& seed_sites, int64_t x, int64_t t) {
  BinaryDiagram d = single_site_diagram(t, SingleSiteMethod::Direct);
  return duality_eval(d, seed_sites, x, t);
}

std::vector<Void> enumerate_voids(const BinaryDiagram& diagram, int64_t min_width) {
  std::vector<Void> out;
  int64_t T = diagram.height() - 1;
  for (int64_t t = 0; t <= T; ++t) {
    const BinaryConfig& row = diagram.row(t);
    if (row.kind() != ConfigKind::Finite || row.empty()) continue;
    int64_t L = row.left(), R = row.right();
    int64_t x = L;
    while (x <= R) {
      if (row.at(x)) { ++x; continue; }
      int64_t a = x;
      while (x <= R && !row.at(x)) ++x;
      int64_t b = x - 1;
      if (a == L || b == R) continue; // unbounded run, not a finite triangle
      Void v{a, b, t};
      if (v.width() < min_width) continue;
      if (v.end_time() > T) continue; // truncated by the window
      if (t > 0) {
        bool above_clear = true;
        for (int64_t y = a - 1; y <= b + 1 && above_clear; ++y)
          if (diagram.at(y, t - 1)) above_clear = false;
        if (above_clear) continue; // contained in a taller triangle
      }
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(), [](const Void& p, const Void& q) {
    return p.t != q.t ? p.t < q.t : p.a < q.a;
  });
  return out;
}

std::vector<Void> enumerate_voids(const BinaryConfig& seed, int64_t steps, int64_t min_width) {
  return enumerate_voids(evolve(seed, AdditiveRule::OneOr3, steps), min_width);
}

std::optional<BinaryConfig> predecessor(const BinaryConfig& seed) {
  if (seed.kind() != ConfigKind::Finite)
    throw std::invalid_argument("predecessor is defined for finite seeds");
  if (seed.empty()) return seed;
  int64_t L = seed.left(), R = seed.right();
  // candidate support is [L+1, R-1]; states solve sequentially left to right
  int64_t w = R - L - 1;
  if (w < 1) return std::nullopt; // a nonempty image has width >= 3
  Bits u(w); // u bit i = cell L + 1 + i
  auto uat = [&](int64_t x) -> bool {
    int64_t i = x - (L + 1);
    return (i >= 0 && i < w) ? u.get(i) : false;
  };
  for (int64_t x = L; x <= R - 2; ++x) {
    bool v = seed.at(x) ^ uat(x) ^ uat(x - 1);
    u.set(x + 1 - (L + 1), v);
  }
  BinaryConfig cand = BinaryConfig::finite(L + 1, std::move(u));
  if (step_additive(cand, AdditiveRule::OneOr3) == seed) return cand;
  return std::nullopt;
}

int64_t predecessor_count(const BinaryConfig& seed, int64_t k_max) {
  BinaryConfig cur = seed;
  for (int64_t k = 0; k < k_max; ++k) {
    if (cur.empty()) return k_max;
    auto p = predecessor(cur);
    if (!p) return k;
    cur = *p;
  }
  return k_max;
}

int64_t window_rank(int64_t L, const std::vector<Point>& targets) {
  int64_t t_max = 0;
  for (const Point& p : targets) {
    if (p.t < 0) throw std::invalid_argument("targets must have t >= 0");
    t_max = std::max(t_max, p.t);
  }
  BinaryDiagram ss = single_site_diagram(t_max, SingleSiteMethod::Direct);
  Gf2Matrix m(targets.size(), L + 1);
  for (size_t r = 0; r < targets.size(); ++r)
    for (int64_t y = 0; y <= L; ++y)
      m.set(r, y, ss.at(targets[r].x - y, targets[r].t));
  return m.rank();
}

} // namespace webca
