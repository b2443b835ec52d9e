#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wtrees/enumerate.hpp"
#include "wtrees/io.hpp"

namespace wtrees {

/*
 * The formula-vs-enumeration sweep: for every type of integral total weight
 * <= max_weight, compare the inclusion–exclusion count against the explicit
 * enumeration, and re-derive the supporting identities (factorial count for
 * simple non-decomposable types, strict deficit for simple decomposable
 * ones, the labeled/automorphism sum, and the by-order census against the
 * quotient route).
 */
struct SweepRow {
  std::string type;           // literal
  Integer formula;
  std::uint64_t enumerated = 0;
  SymmetryCensus census;
  bool simple = false, decomposable = false;
  std::string status;         // "ok", "mismatch:<what>", "skipped:budget"
};

struct SweepReport {
  unsigned max_weight = 0;
  std::vector<SweepRow> rows;        // sorted by type literal
  std::uint64_t types_checked = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t skipped = 0;
};

SweepReport run_sweep(unsigned max_weight, const EnumerateOptions& opts = {});

Json sweep_report_to_json(const SweepReport& report);

}  // namespace wtrees
