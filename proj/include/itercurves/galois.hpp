#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "itercurves/dynamics.hpp"
#include "itercurves/squareclass.hpp"

namespace itc {

enum class StageStatus { Maximal, NonMaximal, ReducibleObstruction, Unknown };
std::string_view to_string(StageStatus s);

struct Stage {
  unsigned k = 0;
  StageStatus status = StageStatus::Unknown;
  // generator indices j: j = 1 stands for -c, j >= 2 for f^j(0)
  std::vector<unsigned> witness;
  // false for Maximal stages k >= 5, where necessity rests on induction
  bool certified = true;
};

struct StageReport {
  BigRat c;
  unsigned n = 0;
  std::vector<Stage> stages;
  BigInt tree_order;
  BigInt index_lower_bound;  // 1 when every stage is Maximal, else 2
};

BigInt tree_order(unsigned n);

// [-c, f^2(0), ..., f^m(0)]
std::vector<SquareClass> subfield_generators(const BigRat& c, unsigned m,
                                             const Limits& limits = default_limits());
std::vector<SquareClass> subfield_generators(const Orbit& o, unsigned m);

StageReport stage_status(const BigRat& c, unsigned n, const Limits& limits = default_limits());

struct ScanRange {
  enum class Kind { Integers, Rationals } kind = Kind::Integers;
  BigInt bound;  // |c| <= bound, or height(c) <= bound
};

// c in range with stages 1..n-1 Maximal and stage n not Maximal,
// ordered by height, then numerator
std::vector<BigRat> scan_newly_small(unsigned n, const ScanRange& range,
                                     const Limits& limits = default_limits());
std::vector<BigRat> scan_newly_small_serial(unsigned n, const ScanRange& range,
                                            const Limits& limits = default_limits());
bool newly_small_at(const BigRat& c, unsigned n, const Limits& limits = default_limits());

// candidates enumerated in the order used by the scans
std::vector<BigRat> scan_candidates(const ScanRange& range);

// +- products of distinct primes dividing 2 * prod_{j <= n/2} f^j(0), by |d|, positive first
std::vector<BigInt> hall_candidate_d(const BigRat& c, unsigned n, const FactorBudget& budget = {},
                                     const Limits& limits = default_limits());

struct MordellRow {
  unsigned n = 0;
  bool bound_holds = false;                           // f^(n-1)(0) < 26214400 f^(n/2+1)(0)^17 + 1
  std::optional<std::pair<BigInt, BigInt>> witness;   // (d, y) with d y^2 = f^n(0)
  // f^(n-2)(0) = 0: the witness lands on the 2-torsion point (c, 0) of B_1
  bool degenerate = false;
};

struct MordellScan {
  std::vector<MordellRow> rows;  // n = 2..14
  std::vector<unsigned> passing;  // n <= 13 with a non-degenerate witness
  unsigned max_bound_n = 0;       // largest n with every n' <= n satisfying the bound
};

MordellScan mordell_bound_scan(const FactorBudget& budget = {});

}  // namespace itc
