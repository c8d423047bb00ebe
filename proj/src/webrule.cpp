#include "webca/webrule.hpp"

#include <functional>

namespace webca {

namespace {

inline int delta(int s) { return s == 1 ? 1 : 0; }
inline int occ(int s) { return s != 0 ? 1 : 0; }
inline int is2(int s) { return s == 2 ? 1 : 0; }

// builds a table from a per-neighborhood classifier deciding 2 vs 0 when the
// new first level is 0
WebRule build_rule(const std::string& id, Rgb palette,
                   const std::function<bool(int, int, int, int, int, int, int)>& births2) {
  WebRule rule;
  rule.id = id;
  rule.palette_rgb = palette;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) {
            int l = (delta(a) + delta(b) + delta(c)) & 1;
            int r = (delta(c) + delta(d) + delta(e)) & 1;
            int dnew = (delta(b) + delta(c) + delta(d)) & 1;
            int out = dnew ? 1 : (births2(a, b, c, d, e, l, r) ? 2 : 0);
            rule.table[WebRule::index(a, b, c, d, e)] = uint8_t(out);
          }
  rule.compliance = classify_compliance(rule);
  return rule;
}

int w30(int a1, int a2, int a3) { return (a1 + a2 + a3 + a2 * a3) & 1; }

} // namespace

WebRule builtin_rule(const std::string& name) {
  if (name == "web_xor")
    return build_rule(name, {200, 30, 30}, [](int, int b, int, int d, int, int, int) {
      return is2(b) + is2(d) == 1;
    });
  if (name == "modified_web_xor")
    return build_rule(name, {30, 150, 30}, [](int, int b, int c, int d, int, int l, int r) {
      int n2 = is2(b) + is2(d);
      int n1 = l + r + delta(b) + delta(c) + delta(d);
      return n2 == 1 || (n2 > 1 && n1 >= 1);
    });
  if (name == "web_rule30")
    return build_rule(name, {150, 30, 200}, [](int, int b, int c, int d, int, int l, int r) {
      int n1 = l + r + delta(b) + delta(c) + delta(d);
      if (n1 > 2) return false;
      int n2 = is2(b) + is2(c) + is2(d);
      return w30(is2(b), is2(c), is2(d)) == 1 || (n2 >= 1 && n1 >= 1);
    });
  if (name == "extended_1or3")
    return build_rule(name, {230, 130, 20}, [](int, int b, int c, int d, int, int l, int r) {
      int n12 = l + r + occ(b) + occ(c) + occ(d);
      return n12 == 1 || n12 == 3;
    });
  if (name == "piggyback")
    return build_rule(name, {30, 110, 220}, [](int, int b, int c, int d, int, int l, int r) {
      int inner = l + occ(c) + r;
      int outer = l + occ(b) + occ(c) + occ(d) + r;
      return inner == 2 || (inner <= 1 && (outer == 1 || outer == 3));
    });
  if (name == "web_1or3")
    return build_rule(name, {20, 160, 160}, [](int, int b, int c, int d, int, int, int) {
      return ((is2(b) + is2(c) + is2(d)) & 1) == 1;
    });
  throw std::invalid_argument("unknown rule: " + name);
}

const std::vector<std::string>& builtin_rule_names() {
  static const std::vector<std::string> names = {
      "web_xor", "modified_web_xor", "web_rule30", "extended_1or3", "piggyback", "web_1or3"};
  return names;
}

WebRule validate_web_rule(const std::array<uint8_t, 243>& table, const std::string& id) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) {
            int out = table[WebRule::index(a, b, c, d, e)];
            if (out < 0 || out > 2)
              throw RuleViolation("state out of range at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + "," +
                                  std::to_string(d) + "," + std::to_string(e) + ")");
            int want = (delta(b) + delta(c) + delta(d)) & 1;
            if (delta(out) != want)
              throw RuleViolation("first-level condition fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + "," +
                                  std::to_string(d) + "," + std::to_string(e) + ")");
          }
  if (table[0] != 0) throw RuleViolation("quiescence fails at (0,0,0,0,0)");
  WebRule rule;
  rule.id = id;
  rule.table = table;
  rule.compliance = classify_compliance(rule);
  return rule;
}

namespace {

// the delta-class of a state: {s} when s == 1, {0,2} otherwise
inline const int* variants(int s, int& n) {
  static const int one[] = {1};
  static const int zero_two[] = {0, 2};
  if (s == 1) { n = 1; return one; }
  n = 2;
  return zero_two;
}

} // namespace

ComplianceReport classify_compliance(const WebRule& rule) {
  ComplianceReport rep;
  rep.empty_compliant = true;
  rep.diagonal_compliant = true;
  rep.wide_compliant = true;
  rep.free3_compliant = true;
  rep.free4_compliant = true;
  rep.spontaneous_birth = false;

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) {
            int val = rule.apply(a, b, c, d, e);
            if (a < 2 && b < 2 && c < 2 && d < 2 && e < 2 && val == 2)
              rep.spontaneous_birth = true;

            int na, nb, nc, nd, ne;
            const int* va = variants(a, na);
            const int* vb = variants(b, nb);
            const int* vc = variants(c, nc);
            const int* vd = variants(d, nd);
            const int* ve = variants(e, ne);

            for (int ia = 0; ia < na; ++ia)
              for (int ie = 0; ie < ne; ++ie)
                if (rule.apply(va[ia], b, c, d, ve[ie]) != val) rep.empty_compliant = false;

            for (int ia = 0; ia < na; ++ia)
              for (int ic = 0; ic < nc; ++ic)
                for (int ie = 0; ie < ne; ++ie)
                  if (rule.apply(va[ia], b, vc[ic], d, ve[ie]) != val)
                    rep.diagonal_compliant = false;

            int l = (delta(a) + delta(b) + delta(c)) & 1;
            int r = (delta(c) + delta(d) + delta(e)) & 1;
            if (c == 1 && r == 1)
              for (int ia = 0; ia < na; ++ia)
                for (int id = 0; id < nd; ++id)
                  for (int ie = 0; ie < ne; ++ie)
                    if (rule.apply(va[ia], b, c, vd[id], ve[ie]) != val) rep.wide_compliant = false;
            if (c == 1 && l == 1)
              for (int ia = 0; ia < na; ++ia)
                for (int ib = 0; ib < nb; ++ib)
                  for (int ie = 0; ie < ne; ++ie)
                    if (rule.apply(va[ia], vb[ib], c, d, ve[ie]) != val) rep.wide_compliant = false;

            int weight = delta(b) + delta(c) + delta(d) + l + r;
            if (weight >= 3 || weight >= 4) {
              bool all_equal = true;
              for (int ia = 0; ia < na && all_equal; ++ia)
                for (int ib = 0; ib < nb && all_equal; ++ib)
                  for (int ic = 0; ic < nc && all_equal; ++ic)
                    for (int id = 0; id < nd && all_equal; ++id)
                      for (int ie = 0; ie < ne && all_equal; ++ie)
                        if (rule.apply(va[ia], vb[ib], vc[ic], vd[id], ve[ie]) != val)
                          all_equal = false;
              if (!all_equal) {
                if (weight >= 3) rep.free3_compliant = false;
                if (weight >= 4) rep.free4_compliant = false;
              }
            }
          }

  rep.wide_compliant = rep.wide_compliant && rep.empty_compliant;
  rep.free3_compliant = rep.free3_compliant && rep.empty_compliant;
  rep.free4_compliant = rep.free4_compliant && rep.empty_compliant;
  return rep;
}

WebRule random_web_rule(SplitMix64& rng) {
  WebRule rule;
  rule.id = "random";
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) {
            int dnew = (delta(b) + delta(c) + delta(d)) & 1;
            int out = dnew ? 1 : (rng.bit() ? 2 : 0);
            rule.table[WebRule::index(a, b, c, d, e)] = uint8_t(out);
          }
  rule.table[0] = 0;
  rule.compliance = classify_compliance(rule);
  return rule;
}

// --- evolution -------------------------------------------------------------

TernaryConfig step_web_reference(const WebRule& rule, const TernaryConfig& config) {
  if (config.kind() == ConfigKind::Periodic) {
    int64_t s = config.sigma();
    Bits no(s), nt(s);
    for (int64_t i = 0; i < s; ++i) {
      int64_t x = config.offset() + i;
      int out = rule.apply(config.at(x - 2), config.at(x - 1), config.at(x), config.at(x + 1),
                           config.at(x + 2));
      if (out == 1) no.set(i, true);
      else if (out == 2) nt.set(i, true);
    }
    return TernaryConfig::periodic(std::move(no), std::move(nt), config.offset());
  }
  if (config.empty()) return config;
  int64_t lo = config.left() - 2, hi = config.right() + 2;
  Bits no(hi - lo + 1), nt(hi - lo + 1);
  for (int64_t x = lo; x <= hi; ++x) {
    int out = rule.apply(config.at(x - 2), config.at(x - 1), config.at(x), config.at(x + 1),
                         config.at(x + 2));
    if (out == 1) no.set(x - lo, true);
    else if (out == 2) nt.set(x - lo, true);
  }
  return TernaryConfig::finite(lo, std::move(no), std::move(nt));
}

namespace fast {

Kind stepper_kind(const WebRule& rule) {
  struct Entry {
    const char* name;
    Kind kind;
  };
  static const Entry entries[] = {
      {"web_xor", Kind::WebXor},         {"modified_web_xor", Kind::ModWebXor},
      {"web_rule30", Kind::WebRule30},   {"extended_1or3", Kind::Ext13},
      {"piggyback", Kind::Piggyback},    {"web_1or3", Kind::Web1Or3},
  };
  for (const Entry& e : entries) {
    if (rule.id == e.name) {
      // guard against a table that was edited after construction
      if (rule.table == builtin_rule(e.name).table) return e.kind;
      return Kind::None;
    }
  }
  return Kind::None;
}

namespace {

struct Lanes {
  uint64_t db, dc, dd;       // deltas of b, c, d
  uint64_t b2, c2, d2;       // 2-flags
  uint64_t ob, oc, od;       // occupied flags
  uint64_t n1, l, r;         // new first level and its shifts
};

inline uint64_t birth_mask(Kind kind, const Lanes& q) {
  switch (kind) {
    case Kind::WebXor:
      return q.b2 ^ q.d2;
    case Kind::ModWebXor: {
      uint64_t n1any = q.l | q.r | q.db | q.dc | q.dd;
      return (q.b2 ^ q.d2) | (q.b2 & q.d2 & n1any);
    }
    case Kind::WebRule30: {
      uint64_t s0 = q.l ^ q.r ^ q.db ^ q.dc ^ q.dd;
      // carry bits of the 5-way add
      uint64_t c1 = (q.l & q.r) ^ ((q.l ^ q.r) & q.db);
      uint64_t p3 = q.l ^ q.r ^ q.db;
      uint64_t c2 = (p3 & q.dc) ^ ((p3 ^ q.dc) & q.dd);
      uint64_t twos = c1 ^ c2;
      uint64_t fours = c1 & c2;
      uint64_t ge3 = fours | (twos & s0);
      uint64_t w30m = q.b2 ^ q.c2 ^ q.d2 ^ (q.c2 & q.d2);
      uint64_t n2any = q.b2 | q.c2 | q.d2;
      uint64_t n1any = q.l | q.r | q.db | q.dc | q.dd;
      return ~ge3 & (w30m | (n2any & n1any));
    }
    case Kind::Ext13: {
      uint64_t par = q.l ^ q.r ^ q.ob ^ q.oc ^ q.od;
      uint64_t all5 = q.l & q.r & q.ob & q.oc & q.od;
      return par & ~all5;
    }
    case Kind::Piggyback: {
      uint64_t eq2 = (q.l & q.oc & ~q.r) | (q.l & ~q.oc & q.r) | (~q.l & q.oc & q.r);
      uint64_t ge2 = (q.l & q.oc) | (q.l & q.r) | (q.oc & q.r);
      uint64_t par = q.l ^ q.r ^ q.ob ^ q.oc ^ q.od;
      uint64_t all5 = q.l & q.r & q.ob & q.oc & q.od;
      return eq2 | (~ge2 & par & ~all5);
    }
    case Kind::Web1Or3:
      return q.b2 ^ q.c2 ^ q.d2;
    case Kind::None:
      break;
  }
  return 0;
}

} // namespace

void step_window(Kind kind, const uint64_t* m1, const uint64_t* m2, uint64_t* n1, uint64_t* n2,
                 size_t nwords) {
  uint64_t prev1 = 0, prev2 = 0, prevn = 0;
  // first pass: new first level
  {
    uint64_t prev = 0;
    for (size_t k = 0; k < nwords; ++k) {
      uint64_t cur = m1[k];
      uint64_t nxt = (k + 1 < nwords) ? m1[k + 1] : 0;
      n1[k] = ((cur << 1) | (prev >> 63)) ^ cur ^ ((cur >> 1) | (nxt << 63));
      prev = cur;
    }
  }
  for (size_t k = 0; k < nwords; ++k) {
    uint64_t c1 = m1[k], c2 = m2[k], cn = n1[k];
    uint64_t x1 = (k + 1 < nwords) ? m1[k + 1] : 0;
    uint64_t x2 = (k + 1 < nwords) ? m2[k + 1] : 0;
    uint64_t xn = (k + 1 < nwords) ? n1[k + 1] : 0;
    Lanes q;
    q.db = (c1 << 1) | (prev1 >> 63);
    q.dd = (c1 >> 1) | (x1 << 63);
    q.dc = c1;
    q.b2 = (c2 << 1) | (prev2 >> 63);
    q.d2 = (c2 >> 1) | (x2 << 63);
    q.c2 = c2;
    q.ob = q.db | q.b2;
    q.oc = c1 | c2;
    q.od = q.dd | q.d2;
    q.n1 = cn;
    q.l = (cn << 1) | (prevn >> 63);
    q.r = (cn >> 1) | (xn << 63);
    n2[k] = ~cn & birth_mask(kind, q);
    prev1 = c1;
    prev2 = c2;
    prevn = cn;
  }
}

CycState step_cyclic(Kind kind, CycState s, int w) {
  Lanes q;
  q.db = rot_up(s.m1, w);
  q.dd = rot_down(s.m1, w);
  q.dc = s.m1;
  q.b2 = rot_up(s.m2, w);
  q.d2 = rot_down(s.m2, w);
  q.c2 = s.m2;
  q.ob = q.db | q.b2;
  q.oc = s.m1 | s.m2;
  q.od = q.dd | q.d2;
  q.n1 = q.db ^ q.dc ^ q.dd;
  q.l = rot_up(q.n1, w);
  q.r = rot_down(q.n1, w);
  uint64_t mask = (w == 64) ? ~0ULL : ((1ULL << w) - 1);
  return {q.n1, uint64_t(~q.n1 & birth_mask(kind, q)) & mask};
}

void step_cyclic_wide(const WebRule& rule, const std::vector<uint64_t>& m1,
                      const std::vector<uint64_t>& m2, std::vector<uint64_t>& n1,
                      std::vector<uint64_t>& n2, int64_t width) {
  auto state = [&](int64_t x) -> int {
    int64_t i = x % width;
    if (i < 0) i += width;
    if ((m1[i >> 6] >> (i & 63)) & 1) return 1;
    if ((m2[i >> 6] >> (i & 63)) & 1) return 2;
    return 0;
  };
  n1.assign(m1.size(), 0);
  n2.assign(m2.size(), 0);
  for (int64_t x = 0; x < width; ++x) {
    int out = rule.apply(state(x - 2), state(x - 1), state(x), state(x + 1), state(x + 2));
    if (out == 1) n1[x >> 6] |= 1ULL << (x & 63);
    else if (out == 2) n2[x >> 6] |= 1ULL << (x & 63);
  }
}

} // namespace fast

TernaryConfig step_web(const WebRule& rule, const TernaryConfig& config) {
  fast::Kind kind = fast::stepper_kind(rule);
  if (kind == fast::Kind::None || config.kind() == ConfigKind::Periodic)
    return step_web_reference(rule, config);
  if (config.empty()) return config;
  int64_t lo = config.left() - 2, hi = config.right() + 2;
  int64_t w = hi - lo + 1;
  size_t nwords = size_t((w + 63) / 64);
  std::vector<uint64_t> m1(nwords, 0), m2(nwords, 0), n1(nwords, 0), n2(nwords, 0);
  for (int64_t i = 0; i < config.width(); ++i) {
    int64_t j = i + 2;
    if (config.ones().get(i)) m1[j >> 6] |= 1ULL << (j & 63);
    if (config.twos().get(i)) m2[j >> 6] |= 1ULL << (j & 63);
  }
  fast::step_window(kind, m1.data(), m2.data(), n1.data(), n2.data(), nwords);
  Bits no(w), nt(w);
  no.words() = n1;
  nt.words() = n2;
  return TernaryConfig::finite(lo, std::move(no), std::move(nt));
}

namespace {

TernaryDiagram evolve_impl(const WebRule& rule, const TernaryConfig& config, int64_t steps,
                           size_t max_bytes, bool reference) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  size_t per_row = (config.kind() == ConfigKind::Finite)
                       ? size_t(config.width() + 4 * steps + 64) / 4
                       : size_t(config.sigma() + 64) / 4;
  if (per_row * size_t(steps + 1) > max_bytes)
    throw MemoryCapError("diagram exceeds the memory budget");
  std::vector<TernaryConfig> rows;
  rows.reserve(steps + 1);
  rows.push_back(config);
  for (int64_t t = 0; t < steps; ++t)
    rows.push_back(reference ? step_web_reference(rule, rows.back()) : step_web(rule, rows.back()));
  return TernaryDiagram(std::move(rows), rule.id);
}

} // namespace

TernaryDiagram evolve_web(const WebRule& rule, const TernaryConfig& config, int64_t steps,
                          size_t max_bytes) {
  return evolve_impl(rule, config, steps, max_bytes, false);
}

TernaryDiagram evolve_web_reference(const WebRule& rule, const TernaryConfig& config,
                                    int64_t steps, size_t max_bytes) {
  return evolve_impl(rule, config, steps, max_bytes, true);
}

} // namespace webca
