#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "webca/additive.hpp"
#include "webca/config.hpp"
#include "webca/rng.hpp"

namespace webca {

struct ComplianceReport {
  bool empty_compliant = false;
  bool diagonal_compliant = false;
  bool wide_compliant = false;
  bool free3_compliant = false;
  bool free4_compliant = false;
  bool spontaneous_birth = false;
};

struct RuleViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Rgb {
  uint8_t r = 255, g = 0, b = 255;
};

// A 3-state range-2 rule whose state-1 layer evolves as "1 Or 3" and whose
// all-0 state is quiescent. The table is indexed by the 5-cell neighborhood
// (a,b,c,d,e) in base 3, a most significant.
struct WebRule {
  std::string id;
  std::array<uint8_t, 243> table{};
  ComplianceReport compliance;
  Rgb palette_rgb;

  static int index(int a, int b, int c, int d, int e) {
    return (((a * 3 + b) * 3 + c) * 3 + d) * 3 + e;
  }
  int apply(int a, int b, int c, int d, int e) const { return table[index(a, b, c, d, e)]; }
};

// builtin names: web_xor, modified_web_xor, web_rule30, extended_1or3,
// piggyback, web_1or3
WebRule builtin_rule(const std::string& name);
const std::vector<std::string>& builtin_rule_names();

// accepts iff the first-level condition and quiescence hold; caches compliance
WebRule validate_web_rule(const std::array<uint8_t, 243>& table, const std::string& id = "custom");

ComplianceReport classify_compliance(const WebRule& rule);

// random table consistent with the first-level condition, for property tests
WebRule random_web_rule(SplitMix64& rng);

class TernaryDiagram {
public:
  TernaryDiagram() = default;
  TernaryDiagram(std::vector<TernaryConfig> rows, std::string rule_id)
      : rows_(std::move(rows)), rule_id_(std::move(rule_id)) {}

  int64_t height() const { return static_cast<int64_t>(rows_.size()); }
  const TernaryConfig& row(int64_t t) const { return rows_[t]; }
  const std::string& rule_id() const { return rule_id_; }

  int at(int64_t x, int64_t t) const {
    if (t < 0 || t >= height()) return 0;
    return rows_[t].at(x);
  }

private:
  std::vector<TernaryConfig> rows_;
  std::string rule_id_;
};

TernaryConfig step_web(const WebRule& rule, const TernaryConfig& config);

TernaryDiagram evolve_web(const WebRule& rule, const TernaryConfig& config, int64_t steps,
                          size_t max_bytes = size_t(1) << 30);

// always table-driven, kept as the reference the fast steppers are tested
// against
TernaryConfig step_web_reference(const WebRule& rule, const TernaryConfig& config);
TernaryDiagram evolve_web_reference(const WebRule& rule, const TernaryConfig& config,
                                    int64_t steps, size_t max_bytes = size_t(1) << 30);

// Bit-sliced kernels for the builtin rules, operating on (ones, twos)
// bitplanes. Cells are bit i <-> cell base+i; out-of-range cells are 0.
namespace fast {

enum class Kind { None, WebXor, ModWebXor, WebRule30, Ext13, Piggyback, Web1Or3 };

Kind stepper_kind(const WebRule& rule);

// one step on a window of nwords words (the caller pads the buffers)
void step_window(Kind kind, const uint64_t* m1, const uint64_t* m2, uint64_t* n1, uint64_t* n2,
                 size_t nwords);

// one step on a cyclic row of width w <= 64
struct CycState {
  uint64_t m1, m2;
};
CycState step_cyclic(Kind kind, CycState s, int w);

// generic table fallback on a cyclic row of arbitrary width
void step_cyclic_wide(const WebRule& rule, const std::vector<uint64_t>& m1,
                      const std::vector<uint64_t>& m2, std::vector<uint64_t>& n1,
                      std::vector<uint64_t>& n2, int64_t width);

} // namespace fast

} // namespace webca
