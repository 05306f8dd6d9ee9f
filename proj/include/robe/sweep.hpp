#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "robe/stability.hpp"

namespace robe {

/// Inclusive linear range, count >= 1 (count == 1 collapses to start).
struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double at(int i) const {
    if (count <= 1) return start;
    return start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
};

enum class SweepFormat { csv, json };

struct SweepSpec {
  RangeSpec mu;
  RangeSpec a1;
  RangeSpec k;
  Flavor flavor = Flavor::numeric;
  SweepFormat format = SweepFormat::csv;
  int threads = 0;  ///< 0: hardware concurrency
};

enum class CellStatus { ok, no_equilibrium, solver_failure };

const char* to_string(CellStatus s);

/// One grid cell of a stability map. Cells whose equilibrium solver failed
/// keep their coordinates and carry a status marker instead of a verdict.
struct SweepRecord {
  double mu = 0.0;
  double a1 = 0.0;
  double k = 0.0;
  std::optional<double> x_eq;
  std::optional<double> discriminant;
  std::optional<Verdict> verdict_planar;
  std::optional<Verdict> verdict_vertical;
  std::optional<double> max_re_lambda;
  CellStatus status = CellStatus::ok;
};

/// Evaluate the stability map over the grid, cells in lexicographic
/// (a1 index, k index, mu index) order. Cells are independent and are run on
/// a worker pool; the output is identical for any worker count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "mu,a1,k,x_eq,D,verdict_planar,verdict_vertical,max_re_lambda,status";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);

}  // namespace robe
