#include "cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/parse.hpp"
#include "cli/snapshot.hpp"
#include "cli/suites.hpp"
#include "ohwalk/dynamics.hpp"
#include "ohwalk/krawtchouk.hpp"
#include "ohwalk/report.hpp"
#include "ohwalk/transfer.hpp"

namespace ohwalk::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path.string() + "' for writing");
  file << text;
  file.flush();
  if (!file) throw UsageError("failed writing '" + path.string() + "'");
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw UsageError("cannot create output directory '" + dir.string() + "'" + (ec ? ": " + ec.message() : ""));
  }
}

void require_size(int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
}

void require_site(int n, Site s, const char* what) {
  if (!in_triangle(n, s)) {
    throw UsageError(std::string(what) + " " + to_string(s) + " is outside the triangle of side " + std::to_string(n));
  }
}

std::string snapshot_name(std::size_t index, const std::string& extension) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "snapshot_%03zu.", index);
  return buffer + extension;
}

ordered_json sites_json(const std::vector<Site>& sites) {
  ordered_json out = ordered_json::array();
  for (const Site s : sites) out.push_back({s.i, s.j});
  return out;
}

ordered_json report_json(const CheckReport& r) {
  return {{"name", r.name},
          {"passed", r.passed},
          {"checks", r.checks},
          {"failures", r.failure_count},
          {"max_deviation", r.max_deviation},
          {"messages", r.failures}};
}

std::string family_name(PstFamily family) {
  switch (family) {
    case PstFamily::OddAlpha:
      return "odd-alpha";
    case PstFamily::OddBeta:
      return "odd-beta";
    case PstFamily::None:
      break;
  }
  return "none";
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << " (raise it with --guard-override)\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_size(options.n);
    const auto suites = expand_suite(options.suite);
    if (options.guard_override && *options.guard_override < 1) throw UsageError("--guard-override must be positive");

    ordered_json doc = {{"n", options.n}, {"alpha", options.alpha}, {"beta", options.beta}};
    ordered_json suite_docs = ordered_json::array();
    bool all_passed = true;
    for (const auto& suite : suites) {
      std::vector<CheckReport> reports;
      if (suite == "scheme") {
        reports = suite_scheme(options.n, options.guard_override);
      } else if (suite == "projection") {
        reports = suite_projection(options.n, options.alpha, options.beta, options.guard_override);
      } else if (suite == "polynomials") {
        reports = suite_polynomials(options.n, options.alpha, options.beta, options.guard_override);
      } else {
        reports = suite_dynamics(options.n, options.alpha, options.beta, options.guard_override);
      }
      ordered_json checks = ordered_json::array();
      for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        char line[64];
        std::snprintf(line, sizeof line, "(checks=%zu, max deviation %.3g)", r.checks, r.max_deviation);
        out << (r.passed ? "PASS " : "FAIL ") << suite << ": " << r.name << " " << line << "\n";
        for (const auto& message : r.failures) out << "    " << message << "\n";
        checks.push_back(report_json(r));
      }
      suite_docs.push_back({{"suite", suite}, {"reports", checks}});
    }
    doc["suites"] = suite_docs;
    doc["passed"] = all_passed;
    if (!options.out.empty()) write_file(options.out, doc.dump(2) + "\n");
    out << (all_passed ? "verify: all checks passed\n" : "verify: FAILED\n");
    return all_passed ? kSuccess : kCheckFailure;
  });
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_size(options.n);
    require_site(options.n, options.source, "source");
    if (options.times.empty()) throw UsageError("--times needs at least one value");
    if (options.format != "json" && options.format != "csv") throw UsageError("--format must be json or csv");
    const bool csv = options.format == "csv";
    if (csv && options.out.empty() && options.times.size() != 1) {
      throw UsageError("CSV output of several times needs --out DIR");
    }

    const SpectralData sd = build_spectral(options.n, options.alpha, options.beta);
    std::vector<SnapshotDocument> docs;
    for (const auto& field : evolve_field(sd, options.source, options.times)) {
      docs.push_back(make_snapshot(field, options.alpha, options.beta));
    }

    if (options.out.empty()) {
      out << (csv ? to_csv(docs.front()) : to_json(docs));
      return kSuccess;
    }
    const std::filesystem::path dir(options.out);
    ensure_directory(dir);
    for (std::size_t k = 0; k < docs.size(); ++k) {
      const auto path = dir / snapshot_name(k, options.format);
      write_file(path, csv ? to_csv(docs[k]) : to_json(docs[k]) + "\n");
      out << path.string() << "\n";
    }
    return kSuccess;
  });
}

int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_size(options.n);
    require_site(options.n, options.source, "source");
    if (options.steps < 2) throw UsageError("--steps must be at least 2");
    if (!(options.t_max >= 0.0)) throw UsageError("--tmax must be non-negative");

    std::optional<RatioClass> ratio;
    double alpha = options.alpha, beta = options.beta;
    if (options.ratio) {
      ratio = classify_ratio(options.ratio->first, options.ratio->second);
      alpha = static_cast<double>(ratio->a);
      beta = static_cast<double>(ratio->b);
    }

    const SpectralData sd = build_spectral(options.n, alpha, beta);
    const auto edge = bottom_edge(options.n);
    const auto trace = scan_times(sd, options.source, options.t_max, options.steps, edge);
    const auto events = find_events(sd, options.source, trace, edge, options.tol);

    ordered_json doc = {{"n", options.n},        {"alpha", alpha},          {"beta", beta},
                        {"source", {options.source.i, options.source.j}}, {"t_max", options.t_max},
                        {"steps", options.steps}, {"tolerance", options.tol}};
    if (ratio) {
      ordered_json prediction = {{"a", ratio->a},
                                 {"b", ratio->b},
                                 {"parity", to_string(ratio->tag)},
                                 {"pst_predicted", ratio->pst_predicted},
                                 {"family", family_name(ratio->family)}};
      prediction["smallest_time"] = ratio->predicted_time ? ordered_json(*ratio->predicted_time) : ordered_json(nullptr);
      doc["prediction"] = prediction;
    }
    ordered_json list = ordered_json::array();
    for (const auto& e : events) {
      list.push_back(
          {{"kind", to_string(e.kind)}, {"time", e.time}, {"fidelity", e.fidelity}, {"targets", sites_json(e.targets)}});
    }
    doc["events"] = list;

    if (!options.trace.empty()) {
      std::string csv = "t,edge_sum,origin,far_corner,apex\n";
      for (const auto& pt : trace) {
        csv += format_double(pt.t) + "," + format_double(pt.edge_sum) + "," + format_double(pt.origin) + "," +
               format_double(pt.far_corner) + "," + format_double(pt.apex) + "\n";
      }
      write_file(options.trace, csv);
    }
    const std::string text = doc.dump(2) + "\n";
    if (options.out.empty()) {
      out << text;
    } else {
      write_file(options.out, text);
    }
    return kSuccess;
  });
}

namespace {

double real_option(const std::string& text, const char* flag) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Site site_option(const std::string& text) {
  try {
    return parse_site(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--source: ") + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum walks on the depth-2 ordered Hamming scheme and their spin-lattice projections", "ohwalk"};
  app.require_subcommand(1);

  std::string alpha = "1", beta = "2", source = "0,0";

  VerifyOptions verify;
  int guard = 0;
  std::string verify_alpha = "1", verify_beta = "2";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--n", verify.n, "Lattice size N")->default_val(3);
  verify_cmd->add_option("--alpha", verify_alpha, "Coupling alpha")->default_val("1");
  verify_cmd->add_option("--beta", verify_beta, "Coupling beta")->default_val("2");
  verify_cmd->add_option("--suite", verify.suite, "scheme|projection|polynomials|dynamics|all")->default_val("all");
  auto* guard_opt = verify_cmd->add_option("--guard-override", guard, "Replace the per-suite N limit");
  verify_cmd->add_option("--out", verify.out, "Write the JSON report here");

  SimulateOptions simulate;
  std::string times = "0", sim_alpha = "1", sim_beta = "2", sim_source = "0,0";
  auto* simulate_cmd = app.add_subcommand("simulate", "Emit amplitude snapshots");
  simulate_cmd->add_option("--n", simulate.n, "Lattice size N")->default_val(7);
  simulate_cmd->add_option("--alpha", sim_alpha, "Coupling alpha")->default_val("1");
  simulate_cmd->add_option("--beta", sim_beta, "Coupling beta")->default_val("2");
  simulate_cmd->add_option("--source", sim_source, "Initial site i,j")->default_val("0,0");
  simulate_cmd->add_option("--times", times, "Comma separated times, e.g. 0,pi/6,pi/4")->default_val("0");
  simulate_cmd->add_option("--format", simulate.format, "json|csv")->default_val("json");
  simulate_cmd->add_option("--out", simulate.out, "Output directory");

  ScanOptions scan;
  std::string ratio, tmax = "pi";
  auto* scan_cmd = app.add_subcommand("scan", "Scan a time window for PST and FR events");
  scan_cmd->add_option("--n", scan.n, "Lattice size N")->default_val(7);
  auto* ratio_opt = scan_cmd->add_option("--ratio", ratio, "Integer ratio alpha/beta as a/b");
  auto* alpha_opt = scan_cmd->add_option("--alpha", alpha, "Coupling alpha")->default_val("1");
  auto* beta_opt = scan_cmd->add_option("--beta", beta, "Coupling beta")->default_val("2");
  ratio_opt->excludes(alpha_opt)->excludes(beta_opt);
  scan_cmd->add_option("--source", source, "Initial site i,j")->default_val("0,0");
  scan_cmd->add_option("--tmax", tmax, "End of the time window")->default_val("pi");
  scan_cmd->add_option("--steps", scan.steps, "Grid points")->default_val(4000);
  scan_cmd->add_option("--tol", scan.tol, "Detection tolerance")->default_val(kDefaultTransferTol);
  scan_cmd->add_option("--out", scan.out, "Write the event list here");
  scan_cmd->add_option("--trace", scan.trace, "Write the probability trace as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  return guarded(err, [&] {
    if (*verify_cmd) {
      verify.alpha = real_option(verify_alpha, "--alpha");
      verify.beta = real_option(verify_beta, "--beta");
      if (*guard_opt) verify.guard_override = guard;
      return cmd_verify(verify, out, err);
    }
    if (*simulate_cmd) {
      simulate.alpha = real_option(sim_alpha, "--alpha");
      simulate.beta = real_option(sim_beta, "--beta");
      simulate.source = site_option(sim_source);
      try {
        simulate.times = parse_real_list(times);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--times: ") + e.what());
      }
      return cmd_simulate(simulate, out, err);
    }
    if (*ratio_opt) {
      try {
        scan.ratio = parse_ratio(ratio);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--ratio: ") + e.what());
      }
    }
    scan.alpha = real_option(alpha, "--alpha");
    scan.beta = real_option(beta, "--beta");
    scan.source = site_option(source);
    scan.t_max = real_option(tmax, "--tmax");
    return cmd_scan(scan, out, err);
  });
}

}  // namespace ohwalk::cli
