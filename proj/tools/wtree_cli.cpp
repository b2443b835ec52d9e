// Command-line front end: count / enumerate / verify / system.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wtrees/counting.hpp"
#include "wtrees/enumerate.hpp"
#include "wtrees/errors.hpp"
#include "wtrees/io.hpp"
#include "wtrees/verify.hpp"

using namespace wtrees;

namespace {

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::non_integer_result: return 3;
    case Errc::resource_budget: return 4;
    case Errc::no_convergence: return 5;
    default: return 2;  // malformed or inconsistent input
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("WTREE_BUDGET")) {
    try {
      size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (...) {
    }
    throw Error(Errc::parse, "WTREE_BUDGET must be a non-negative integer");
  }
  return EnumerateOptions{}.budget;
}

void print_explain(const WeightedType& type, const CountBreakdown& bd) {
  std::cout << "type: " << type.display() << "\n";
  std::cout << "classification: " << (bd.cls.simple ? "simple" : "non-simple") << ", "
            << (bd.cls.decomposable ? "decomposable" : "non-decomposable") << "\n";
  DerivativeType deriv = derivative_type(type);
  std::cout << "derivative type: " << deriv.labeled.display()
            << "  (p = " << bd.p.str() << ")\n";
  const SimpleCountBreakdown& sb = *bd.simple;
  std::uint64_t nparts = 0;
  for (const auto& [n, c] : sb.partitions_by_n) nparts += c;
  std::cout << "matched-sum partitions: " << nparts << "\n";
  for (const auto& [n, c] : sb.partitions_by_n)
    std::cout << "  " << c << " with " << n << " part" << (n == 1 ? "" : "s")
              << ", contributing " << sb.summand_by_n.at(n).str() << "\n";
  if (nparts <= 1000) {  // keep --explain readable for big types
    std::cout << "partitions:\n";
    for (const auto& part : enumerate_partitions(deriv.labeled))
      std::cout << "  " << partition_text(deriv.labeled, part) << "\n";
  }
  std::cout << "labeled count T = " << bd.labeled_count.str() << "\n";
  for (const auto& [i, s] : bd.s_exact)
    std::cout << "S_" << i << " = " << s.str()
              << "  (classes with rotational symmetry of order exactly " << i << ")\n";
  std::cout << "count = T/p";
  for (const auto& [i, s] : bd.s_exact) std::cout << " + (1-1/" << i << ")*S_" << i;
  std::cout << " = " << bd.total.str() << "\n";
}

Json class_to_json(const EnumeratedClass& cls) {
  Json j;
  j["code"] = cls.code.hex();
  j["automorphismOrder"] = cls.automorphism_order;
  Json doc = tree_to_json(cls.tree);  // keep alive while iterating
  for (auto& [k, v] : doc.items()) j[k] = std::move(v);
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"plane weighted trees: exact counts, explicit enumeration, "
               "and the attached polynomial systems"};
  app.require_subcommand(1);

  std::string type_lit;
  std::uint64_t budget = default_budget();
  unsigned jobs = 0;

  auto* count = app.add_subcommand("count", "count isotopy classes of a type");
  bool explain = false;
  count->add_option("type", type_lit, "type literal, e.g. 1,2,4|2,5 or 1|1/2,1/2")
      ->required();
  count->add_flag("--explain", explain, "show the partition/symmetry breakdown");
  count->add_option("--budget", budget, "work cap for the symmetry enumeration");
  count->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  auto* enumerate = app.add_subcommand("enumerate", "list all trees of a type");
  std::string format = "jsonl";
  bool census = false;
  enumerate->add_option("type", type_lit, "type literal")->required();
  enumerate->add_option("--format", format, "jsonl | json | dot")
      ->check(CLI::IsMember({"jsonl", "json", "dot"}));
  enumerate->add_flag("--census", census, "print the symmetry census only");
  enumerate->add_option("--budget", budget, "work cap before giving up");
  enumerate->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  auto* verify = app.add_subcommand(
      "verify", "sweep all small types, formula against enumeration");
  unsigned max_weight = 6;
  std::string report_path;
  bool show_all = false;
  verify->add_option("--max-weight", max_weight, "largest total weight to sweep");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_flag("--all", show_all, "print every row, not just failures");
  verify->add_option("--budget", budget, "per-type enumeration work cap");
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  auto* system = app.add_subcommand(
      "system", "the polynomial system pinning trees of a type to the plane");
  unsigned qpoly_n = 0;
  bool solve = false;
  std::string sys_format = "text";
  SolveConfig scfg;
  system->add_option("type", type_lit, "type literal (omit with --qpoly)");
  system->add_option("--qpoly", qpoly_n, "print q_1..q_N instead of a system");
  system->add_flag("--solve", solve, "run the multistart Newton solver");
  system->add_option("--starts", scfg.starts, "start points for the solver");
  system->add_option("--tol", scfg.tol, "residual tolerance");
  system->add_option("--seed", scfg.seed, "start-point RNG seed");
  system->add_option("--format", sys_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad usage is 2
  }

  EnumerateOptions opts;
  opts.budget = budget;
  opts.jobs = jobs;

  if (app.got_subcommand(count)) {
    WeightedType type = parse_type_literal(type_lit);
    CountBreakdown bd = cardinality_breakdown(type, opts);
    if (explain)
      print_explain(type, bd);
    else
      std::cout << bd.total.str() << "\n";
    return 0;
  }

  if (app.got_subcommand(enumerate)) {
    WeightedType type = parse_type_literal(type_lit);
    auto classes = enumerate_classes(type, opts);
    if (census) {
      SymmetryCensus sc;
      sc.total = classes.size();
      for (const auto& cls : classes) ++sc.by_order[cls.automorphism_order];
      std::cout << census_to_json(sc).dump(2) << "\n";
      return 0;
    }
    if (format == "jsonl") {
      for (const auto& cls : classes) std::cout << class_to_json(cls).dump() << "\n";
    } else if (format == "json") {
      Json doc;
      doc["type"] = type.literal();
      doc["count"] = classes.size();
      Json arr = Json::array();
      for (const auto& cls : classes) arr.push_back(class_to_json(cls));
      doc["trees"] = std::move(arr);
      std::cout << doc.dump(2) << "\n";
    } else {  // dot
      for (size_t i = 0; i < classes.size(); ++i)
        std::cout << tree_to_dot(classes[i].tree, "t" + std::to_string(i));
    }
    return 0;
  }

  if (app.got_subcommand(verify)) {
    SweepReport rep = run_sweep(max_weight, opts);
    for (const auto& row : rep.rows) {
      if (!show_all && row.status == "ok") continue;
      std::cout << row.status << "  <" << row.type << ">  formula=" << row.formula.str()
                << " enumerated=" << row.enumerated << "\n";
    }
    std::cout << "checked " << rep.types_checked << " types up to total weight "
              << rep.max_weight << ": " << rep.mismatches << " mismatches, "
              << rep.skipped << " skipped\n";
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw Error(Errc::parse, "cannot write " + report_path);
      out << sweep_report_to_json(rep).dump(2) << "\n";
    }
    return rep.mismatches == 0 ? 0 : 1;
  }

  if (app.got_subcommand(system)) {
    if (qpoly_n > 0) {
      for (unsigned i = 1; i <= qpoly_n; ++i)
        std::cout << "q_" << i << " = " << newton_q(i).text() << "\n";
      return 0;
    }
    if (type_lit.empty())
      throw Error(Errc::parse, "system needs a type literal (or --qpoly N)");
    WeightedType type = parse_type_literal(type_lit);
    AVSystem sys = build_system(type);
    if (sys_format == "json") {
      Json doc = system_to_json(sys);
      if (solve) doc["solutions"] = solutions_to_json(solve_multistart(sys, scfg));
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << sys.text();
      if (solve) {
        auto sols = solve_multistart(sys, scfg);
        std::cout << "solutions: " << sols.size() << " (of at most "
                  << sys.bezout_bound() << ")\n";
        for (size_t i = 0; i < sols.size(); ++i) {
          std::cout << "  " << (i + 1) << ":";
          for (size_t k = 0; k < sols[i].point.size(); ++k) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s=%.6f%+.6fi",
                          sys.unknown_name(static_cast<unsigned>(k)).c_str(),
                          sols[i].point[k].real(), sols[i].point[k].imag());
            std::cout << buf;
          }
          std::cout << "\n";
        }
      }
    }
    return 0;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (e.column() >= 0) std::cerr << " (at byte " << e.column() << ")";
    std::cerr << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
