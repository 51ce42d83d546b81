// commands.cpp
#include "jaco/commands.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "json.hpp"

#include "jaco/fisher_table.hpp"
#include "jaco/graph_oracle.hpp"
#include "jaco/zeckendorf.hpp"

namespace jaco::cli {
namespace {

using nlohmann::json;

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitDisagree;
  }
}

void require_positive(Count n) {
  if (n == 0) throw UsageError("n must be >= 1 (vertices are indexed from 1)");
}

void header(std::ostream& out, const Options& opts, const std::string& what) {
  if (!opts.bare) out << "# jaco " << what << " v" << kFormatVersion << '\n';
}

double millis(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

json result_json(const MethodResult& r) {
  json j = {{"method", method_name(r.method)}};
  if (r.edges) {
    j["edges"] = *r.edges;
    j["elapsed_ms"] = millis(r.elapsed);
  } else {
    j["skipped"] = r.skipped;
  }
  return j;
}

json report_json(const EdgeCountReport& report) {
  json methods = json::array();
  for (const MethodResult& r : report.results) methods.push_back(result_json(r));
  return {{"n", report.n}, {"agree", report.agree}, {"methods", methods}};
}

}  // namespace

int cmd_table(Count n, TableFormat format, const Options& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    require_positive(n);
    const auto rows = fisher_table(n);
    if (opts.json) {
      json arr = json::array();
      for (const FisherRow& r : rows) {
        arr.push_back({{"i", r.i},
                       {"in_degree", r.in_deg},
                       {"out_degree", r.out_deg_inf},
                       {"delta", r.delta},
                       {"edges", r.eps}});
      }
      out << json{{"version", kFormatVersion}, {"rows", arr}}.dump() << '\n';
      return kExitOk;
    }
    if (format == TableFormat::kCsv) {
      header(out, opts, "table csv");
      write_fisher_csv(rows, out);
    } else {
      header(out, opts, "table pretty");
      write_fisher_pretty(rows, out);
    }
    return kExitOk;
  });
}

int cmd_edges(Count n, MethodSelection method, const Options& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    require_positive(n);
    if (method == Method::kOracle && n > kOracleBound && !opts.force) {
      err << "refusing: the oracle is quadratic and n=" << n << " exceeds " << kOracleBound
          << "; pass --force to run it anyway\n";
      return kExitUsage;
    }

    std::vector<Method> methods;
    if (method) {
      methods.push_back(*method);
    } else {
      methods.assign(kAllMethods.begin(), kAllMethods.end());
    }
    const EdgeCountReport report = evaluate(n, methods, opts.force);

    if (opts.json) {
      json j = report_json(report);
      j["version"] = kFormatVersion;
      out << j.dump() << '\n';
    } else {
      header(out, opts, "edges");
      for (const MethodResult& r : report.results) {
        out << "n=" << n << " method=" << method_name(r.method);
        if (r.edges) {
          out << " edges=" << *r.edges << '\n';
        } else {
          out << " skipped (" << r.skipped << ")\n";
        }
      }
      if (!method) out << "agree=" << (report.agree ? "true" : "false") << '\n';
    }
    if (!report.agree) {
      err << "methods disagree on n=" << n << '\n';
      return kExitDisagree;
    }
    return kExitOk;
  });
}

int cmd_crosscheck(Count lo, Count hi, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (lo == 0 || lo > hi) {
      throw UsageError("crosscheck needs 1 <= lo <= hi, got " + std::to_string(lo) + ".." +
                       std::to_string(hi));
    }
    const Count oracle_max = opts.force ? kOracleBound : kCrosscheckOracleMax;
    const CrosscheckSummary s = crosscheck(lo, hi, oracle_max);

    if (opts.json) {
      json j = {{"version", kFormatVersion},
                {"lo", s.lo},
                {"hi", s.hi},
                {"oracle_hi", s.oracle_hi},
                {"ok", s.ok()}};
      if (!s.ok()) {
        EdgeCountReport r{s.first_disagreement->n, s.first_disagreement->results, false};
        j["first_disagreement"] = report_json(r);
      }
      out << j.dump() << '\n';
    } else {
      header(out, opts, "crosscheck");
      if (s.ok()) {
        out << "OK n=" << s.lo << ".." << s.hi;
        if (s.oracle_hi != 0) {
          out << " (oracle " << s.lo << ".." << s.oracle_hi << ")";
        } else {
          out << " (oracle skipped)";
        }
        out << '\n';
      } else {
        out << "DISAGREE n=" << s.first_disagreement->n;
        for (const MethodResult& r : s.first_disagreement->results) {
          if (r.edges) out << ' ' << method_name(r.method) << '=' << *r.edges;
        }
        out << '\n';
      }
    }
    return s.ok() ? kExitOk : kExitDisagree;
  });
}

int cmd_export(Count n, ExportFormat format, const Options& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    require_positive(n);
    if (n > kOracleBound && !opts.force) {
      err << "refusing: export materialises the graph by brute force; n=" << n << " exceeds "
          << kOracleBound << " (pass --force to override)\n";
      return kExitUsage;
    }
    const JacoGraph g = build_jaco(n);
    if (format == ExportFormat::kEdgeList) {
      if (!opts.bare) {
        out << "# jaco edgelist v" << kFormatVersion << " n=" << n << " arcs=" << g.edge_count()
            << '\n';
      }
      write_edge_list(g, out);
    } else {
      if (!opts.bare) out << "// jaco dot v" << kFormatVersion << '\n';
      write_dot(g, out);
    }
    return kExitOk;
  });
}

int cmd_zeck(Count n, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_positive(n);
    const Zeckendorf z = zeckendorf_decompose(n);
    const Count out_deg = bettina_out_degree(n);
    const Count in_deg = n - out_deg;
    if (opts.json) {
      json indices = json::array();
      for (unsigned k : z.indices()) indices.push_back(k);
      out << json{{"version", kFormatVersion},
                  {"n", n},
                  {"indices", indices},
                  {"text", to_string(z)},
                  {"out_degree", out_deg},
                  {"in_degree", in_deg}}
                 .dump()
          << '\n';
      return kExitOk;
    }
    header(out, opts, "zeck");
    out << to_string(z) << '\n';
    out << "out_degree=" << out_deg << '\n';
    out << "in_degree=" << in_deg << '\n';
    return kExitOk;
  });
}

int cmd_bench(const std::vector<Count>& ns, const Options& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    for (Count n : ns) require_positive(n);

    // Sequential on purpose: concurrent runs would distort each other's timings.
    std::vector<EdgeCountReport> reports;
    reports.reserve(ns.size());
    for (Count n : ns) reports.push_back(evaluate(n, kAllMethods, opts.force));

    bool all_agree = true;
    for (const auto& r : reports) all_agree = all_agree && r.agree;

    if (opts.json) {
      json runs = json::array();
      for (const auto& r : reports) runs.push_back(report_json(r));
      out << json{{"version", kFormatVersion}, {"agree", all_agree}, {"runs", runs}}.dump()
          << '\n';
    } else {
      header(out, opts, "bench");
      out << std::left << std::setw(12) << "n" << std::setw(16) << "method" << std::right
          << std::setw(22) << "edges" << std::setw(14) << "ms" << '\n';
      for (const auto& report : reports) {
        for (const MethodResult& r : report.results) {
          out << std::left << std::setw(12) << report.n << std::setw(16) << method_name(r.method)
              << std::right;
          if (r.edges) {
            out << std::setw(22) << *r.edges << std::setw(14) << std::fixed << std::setprecision(3)
                << millis(r.elapsed) << '\n';
          } else {
            out << std::setw(22) << "-" << std::setw(14) << "skipped" << '\n';
          }
        }
        out << "n=" << report.n << " agree=" << (report.agree ? "true" : "false") << '\n';
      }
    }
    return all_agree ? kExitOk : kExitDisagree;
  });
}

}  // namespace jaco::cli
