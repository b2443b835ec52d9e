#include "wtrees/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wtrees/counting.hpp"
#include "wtrees/errors.hpp"

namespace wtrees {

namespace {

SweepRow check_type(const WeightedType& type, const EnumerateOptions& inner) {
  SweepRow row;
  row.type = type.literal();
  Classification cls = classify(type);
  row.simple = cls.simple;
  row.decomposable = cls.decomposable;
  try {
    CountBreakdown bd = cardinality_breakdown(type, inner);
    row.formula = bd.total;
    row.census = symmetric_census(type, inner);
    row.enumerated = row.census.total;

    std::string bad;
    if (Integer(row.census.total) != bd.total) bad = "count";

    // Simple non-decomposable types must hit (v-2)! exactly; simple
    // decomposable ones must fall strictly short of it.
    Integer fact = factorial(static_cast<unsigned>(type.v()) - 2);
    if (bad.empty() && cls.simple && !cls.decomposable && bd.total != fact)
      bad = "factorial";
    if (bad.empty() && cls.simple && cls.decomposable && !(bd.total < fact))
      bad = "deficit";

    // Each class with automorphism order a accounts for p/a labeled classes,
    // so the by-order tally must reassemble the labeled count.
    if (bad.empty()) {
      Rational acc = 0;
      for (const auto& [a, cnt] : row.census.by_order)
        acc += Rational(Integer(cnt) * bd.p, a);
      if (acc != Rational(bd.labeled_count)) bad = "labeled-sum";
    }

    // The enumerated by-order census must agree with the quotient-route S_i.
    if (bad.empty()) {
      std::map<unsigned, Integer> want = bd.s_exact;
      for (const auto& [a, cnt] : row.census.by_order) {
        if (a < 2) continue;
        auto it = want.find(static_cast<unsigned>(a));
        Integer w = it == want.end() ? Integer(0) : it->second;
        if (w != Integer(cnt)) {
          bad = "census";
          break;
        }
      }
      if (bad.empty())
        for (const auto& [i, s] : want) {
          auto it = row.census.by_order.find(static_cast<int>(i));
          std::uint64_t have = it == row.census.by_order.end() ? 0 : it->second;
          if (s != Integer(have)) {
            bad = "census";
            break;
          }
        }
    }

    row.status = bad.empty() ? "ok" : "mismatch:" + bad;
  } catch (const Error& e) {
    row.status = e.code() == Errc::resource_budget ? "skipped:budget"
                                                   : std::string("error:") + e.what();
  }
  return row;
}

}  // namespace

SweepReport run_sweep(unsigned max_weight, const EnumerateOptions& opts) {
  SweepReport rep;
  rep.max_weight = max_weight;

  std::vector<WeightedType> types;
  for (unsigned n = 1; n <= max_weight; ++n) {
    auto batch = enumerate_types(n);
    std::sort(batch.begin(), batch.end(), [](const WeightedType& a, const WeightedType& b) {
      return a.literal() < b.literal();
    });
    types.insert(types.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
  }

  rep.rows.resize(types.size());
  // The pool parallelizes across types; each check runs single-threaded so
  // the budget accounting and memory stay per-type.
  EnumerateOptions inner = opts;
  inner.jobs = 1;
  unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, jobs);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= types.size()) return;
      rep.rows[i] = check_type(types[i], inner);
    }
  };
  if (jobs == 1 || types.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const auto& row : rep.rows) {
    if (row.status == "skipped:budget")
      ++rep.skipped;
    else
      ++rep.types_checked;
    if (row.status.rfind("mismatch:", 0) == 0 || row.status.rfind("error:", 0) == 0)
      ++rep.mismatches;
  }
  return rep;
}

Json sweep_report_to_json(const SweepReport& report) {
  Json doc;
  doc["schemaVersion"] = 1;
  doc["maxWeight"] = report.max_weight;
  doc["typesChecked"] = report.types_checked;
  doc["mismatches"] = report.mismatches;
  doc["skipped"] = report.skipped;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json jr;
    jr["type"] = row.type;
    jr["formula"] = row.formula.str();
    jr["enumerated"] = row.enumerated;
    jr["byOrder"] = census_to_json(row.census)["byOrder"];
    jr["simple"] = row.simple;
    jr["decomposable"] = row.decomposable;
    jr["status"] = row.status;
    rows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace wtrees
