// speechfis CLI
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "speechfis/builtin.hpp"
#include "speechfis/dataio.hpp"
#include "speechfis/fis_config.hpp"
#include "speechfis/framing.hpp"
#include "speechfis/fuzzy.hpp"
#include "speechfis/sweep.hpp"

namespace {

using namespace speechfis;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitClaimFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Empty path selects the bundled SpeechAccuracy system.
FisDefinition load_fis(const std::string& path) {
  if (path.empty()) return builtin_fis();
  const ParseResult result = parse_fis(read_file(path));
  for (const ParseIssue& issue : result.issues) {
    std::cerr << path << ": " << issue_to_string(issue) << "\n";
  }
  if (!result.ok()) {
    throw std::runtime_error("failed to parse FIS '" + path + "'");
  }
  return *result.fis;
}

AxisSpec parse_axis(const std::string& text, const char* name) {
  AxisSpec spec;
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  auto to_double = [&](const std::string& s, double& out) {
    try {
      std::size_t used = 0;
      out = std::stod(s, &used);
      return used == s.size();
    } catch (...) {
      return false;
    }
  };
  if (c1 == std::string::npos || c2 == std::string::npos ||
      !to_double(text.substr(0, c1), spec.lo) ||
      !to_double(text.substr(c1 + 1, c2 - c1 - 1), spec.hi) ||
      !to_double(text.substr(c2 + 1), spec.step)) {
    throw UsageError(std::string("--") + name + " must be lo:hi:step, got '" + text + "'");
  }
  return spec;
}

int resolution_default() {
  if (const char* env = std::getenv("SPEECHFIS_RESOLUTION")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw UsageError(std::string("SPEECHFIS_RESOLUTION is not an integer: '") + env + "'");
    }
  }
  return kDefaultResolution;
}

void check_resolution(int resolution) {
  if (resolution < 11 || resolution % 2 == 0) {
    throw UsageError("resolution must be >= 11 and odd, got " + std::to_string(resolution));
  }
}

int run_infer(const std::string& fis_path, double env, double win, double overlap,
              int resolution, bool show_trace) {
  const FisDefinition fis = load_fis(fis_path);
  const InferenceTrace trace = infer(fis, {env, win, overlap}, resolution);
  if (show_trace) {
    for (std::size_t i = 0; i < fis.inputs.size(); ++i) {
      std::cout << "input " << fis.inputs[i].name << "=" << fmt4(trace.clamped_inputs[i]);
      for (std::size_t m = 0; m < fis.inputs[i].mfs.size(); ++m) {
        std::cout << " " << fis.inputs[i].mfs[m].name << "=" << fmt4(trace.degrees[i][m]);
      }
      std::cout << "\n";
    }
    std::cout << "clamped=" << (trace.input_clamped ? "true" : "false") << "\n";
    for (std::size_t r = 0; r < trace.rule_strengths.size(); ++r) {
      std::cout << "rule " << (r + 1) << " strength=" << fmt4(trace.rule_strengths[r]) << "\n";
    }
  }
  std::cout << "accuracy=" << fmt4(trace.crisp) << " fired=" << (trace.fired ? "true" : "false")
            << "\n";
  return 0;
}

int run_parse(const std::string& fis_path) {
  const std::string text = fis_path.empty() ? builtin_fis_text() : read_file(fis_path);
  const ParseResult result = parse_fis(text);
  for (const ParseIssue& issue : result.issues) {
    std::cout << issue_to_string(issue) << "\n";
  }
  if (!result.ok()) {
    std::size_t errors = 0;
    for (const ParseIssue& issue : result.issues) {
      if (issue.severity == Severity::error) ++errors;
    }
    std::cout << "parse failed: " << errors << " error(s)\n";
    return kExitData;
  }
  std::cout << "ok: inputs=" << result.fis->inputs.size()
            << " outputs=" << result.fis->outputs.size()
            << " rules=" << result.fis->rules.size() << "\n";
  return 0;
}

int run_sweep(const std::string& fis_path, const std::string& env_spec,
              const std::string& win_spec, const std::string& overlap_spec,
              const std::string& out_path, const std::string& format, double threshold,
              int resolution, int threads) {
  if (format != "csv" && format != "json") {
    throw UsageError("--format must be csv or json, got '" + format + "'");
  }
  const FisDefinition fis = load_fis(fis_path);
  const SweepGrid grid = build_grid(parse_axis(env_spec, "env"), parse_axis(win_spec, "win"),
                                    parse_axis(overlap_spec, "overlap"));
  const std::vector<SurfacePoint> points = evaluate_surface(fis, grid, resolution, threads);

  std::cout << "points=" << points.size() << "\n";
  const SurfacePoint best = argmax(points);
  std::cout << "argmax: env=" << fmt4(best.env) << " win=" << fmt4(best.win)
            << " overlap=" << fmt4(best.overlap) << " accuracy=" << fmt4(best.accuracy)
            << " fired=" << (best.fired ? "true" : "false") << "\n";
  const FeasibleRegion region = feasible_region(points, threshold);
  std::cout << "feasible (accuracy >= " << fmt4(threshold) << "): env=[" << fmt4(region.env_lo)
            << ", " << fmt4(region.env_hi) << "] win=[" << fmt4(region.win_lo) << ", "
            << fmt4(region.win_hi) << "] overlap=[" << fmt4(region.overlap_lo) << ", "
            << fmt4(region.overlap_hi) << "]\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write '" + out_path + "'");
    }
    if (format == "csv") {
      write_surface_csv(out, points);
    } else {
      write_surface_json(out, points);
    }
    std::cout << "surface written: " << out_path << " (" << format << ")\n";
  }
  return 0;
}

int run_frame(int rate, std::size_t length, int window, double overlap) {
  if (rate <= 0) {
    throw UsageError("--rate must be > 0");
  }
  const FramePlan plan = frame_plan(length, window, overlap);
  const PaperFrameSize fs = frame_size_paper(static_cast<double>(length), window, overlap);
  std::cout << "window=" << plan.window << " overlap=" << fmt4(plan.overlap_pct)
            << " hop=" << plan.hop << " frames=" << plan.frame_count
            << " frame_size=" << fmt4(fs.value) << "\n";
  return 0;
}

int run_tables(const std::string& csv_path, const std::string& check,
               const std::string& group_by_name, bool strict, bool as_json) {
  const std::vector<TableRecord> records = load_table_csv(csv_path);
  for (const std::string& warning : lint_records(records)) {
    std::cerr << "fixture lint: " << warning << "\n";
  }

  GroupBy group_by;
  if (group_by_name == "auto") {
    group_by = auto_group_by(records);
  } else if (group_by_name == "window") {
    group_by = GroupBy::window_size;
  } else if (group_by_name == "digit") {
    group_by = GroupBy::digit;
  } else {
    throw UsageError("--group-by must be auto, window or digit");
  }

  std::vector<ClaimReport> reports;
  if (check == "snr-peak" || check == "all") {
    reports.push_back(snr_peak_check(records, group_by));
  }
  if (check == "acc-argmax" || check == "all") {
    reports.push_back(accuracy_argmax_report(records, group_by));
  }
  if (reports.empty()) {
    throw UsageError("--check must be snr-peak, acc-argmax or all");
  }

  if (as_json) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::istringstream body(claim_report_json(reports[i]));
      std::string line;
      while (std::getline(body, line)) std::cout << "  " << line << "\n";
      if (i + 1 < reports.size()) std::cout << "  ,\n";
    }
    std::cout << "]\n";
  } else {
    for (const ClaimReport& report : reports) {
      print_claim_report(std::cout, report);
    }
  }

  if (strict) {
    for (const ClaimReport& report : reports) {
      if (report.groups_passing < report.groups_checked) {
        std::cerr << "claim " << report.claim_id << " failed under --strict\n";
        return kExitClaimFailed;
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy parameter-optimization toolkit for speech-recognition accuracy"};
  app.require_subcommand(1);

  std::string fis_path;
  int resolution = 0;

  auto add_fis_option = [&fis_path](CLI::App* cmd) {
    cmd->add_option("--fis", fis_path, "FIS config file (default: bundled SpeechAccuracy)");
  };
  auto add_resolution_option = [&resolution](CLI::App* cmd) {
    cmd->add_option("--resolution", resolution,
                    "centroid sample count (odd, >= 11; default 1001 or "
                    "SPEECHFIS_RESOLUTION)");
  };

  // infer
  double in_env = 0.0, in_win = 0.0, in_overlap = 0.0;
  bool show_trace = false;
  CLI::App* infer_cmd = app.add_subcommand("infer", "Run one inference, print crisp accuracy");
  add_fis_option(infer_cmd);
  add_resolution_option(infer_cmd);
  infer_cmd->add_option("--env", in_env, "environment SNR in dB")->required();
  infer_cmd->add_option("--win", in_win, "Hamming window size in samples")->required();
  infer_cmd->add_option("--overlap", in_overlap, "frame overlap in percent")->required();
  infer_cmd->add_flag("--trace", show_trace, "print degrees and rule strengths");

  // parse
  CLI::App* parse_cmd = app.add_subcommand("parse", "Parse and validate a FIS config");
  add_fis_option(parse_cmd);

  // sweep
  std::string env_spec = "10:50:1", win_spec = "240:270:1", overlap_spec = "20:60:0.5";
  std::string out_path, format = "csv";
  double threshold = 98.0;
  int threads = 0;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Evaluate the response surface over a grid");
  add_fis_option(sweep_cmd);
  add_resolution_option(sweep_cmd);
  sweep_cmd->add_option("--env", env_spec, "env axis lo:hi:step");
  sweep_cmd->add_option("--win", win_spec, "window axis lo:hi:step");
  sweep_cmd->add_option("--overlap", overlap_spec, "overlap axis lo:hi:step");
  sweep_cmd->add_option("--out", out_path, "surface output file");
  sweep_cmd->add_option("--format", format, "surface format: csv or json");
  sweep_cmd->add_option("--threshold", threshold, "feasible-region accuracy cutoff");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  // frame
  int rate = 8000, window = 240;
  std::size_t length = 24000;
  double overlap_pct = 50.0;
  CLI::App* frame_cmd = app.add_subcommand("frame", "Framing geometry and frame-size figure");
  frame_cmd->add_option("--rate", rate, "sampling rate in Hz");
  frame_cmd->add_option("--length", length, "signal length in samples");
  frame_cmd->add_option("--window", window, "window size in samples");
  frame_cmd->add_option("--overlap", overlap_pct, "frame overlap in percent");

  // tables
  std::string csv_path, check = "all", group_by_name = "auto";
  bool strict = false, as_json = false;
  CLI::App* tables_cmd = app.add_subcommand("tables", "Verify published-table claims");
  tables_cmd->add_option("--csv", csv_path, "table fixture CSV")->required();
  tables_cmd->add_option("--check", check, "snr-peak, acc-argmax or all");
  tables_cmd->add_option("--group-by", group_by_name, "auto, window or digit");
  tables_cmd->add_flag("--strict", strict, "exit 3 when a checked claim fails");
  tables_cmd->add_flag("--json", as_json, "emit claim reports as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (resolution == 0) resolution = resolution_default();
    check_resolution(resolution);

    if (infer_cmd->parsed()) {
      return run_infer(fis_path, in_env, in_win, in_overlap, resolution, show_trace);
    }
    if (parse_cmd->parsed()) {
      return run_parse(fis_path);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(fis_path, env_spec, win_spec, overlap_spec, out_path, format, threshold,
                       resolution, threads);
    }
    if (frame_cmd->parsed()) {
      return run_frame(rate, length, window, overlap_pct);
    }
    if (tables_cmd->parsed()) {
      return run_tables(csv_path, check, group_by_name, strict, as_json);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
