#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "izeta/charpoly.hpp"
#include "izeta/constants.hpp"
#include "izeta/counting.hpp"
#include "izeta/cycle_oracle.hpp"
#include "izeta/edge_matrix.hpp"
#include "izeta/graph.hpp"
#include "izeta/mertens.hpp"
#include "izeta/roots.hpp"
#include "izeta/spectral.hpp"

namespace izeta {

struct AnalysisOptions {
  int n_max = 200;
  int k = 2;
  int oracle_max = 8;   // 0 disables the enumeration cross-check
  double alpha = 0.25;
  std::string format = "json";  // "json" or "csv"
  bool dump_w = false;
  bool dump_classes = false;
  bool plot_data = false;
  std::string out_dir = ".";
  std::uint64_t work_budget = default_work_budget;
  std::uint64_t oracle_budget = default_oracle_budget;
  long fit1_window_lo = 10, fit1_window_hi = 60;   // law 1 (geometric) window
  long fit_window_lo = 50, fit_window_hi = 800;    // laws 2, 3 window
  double fit_floor = 1e-12;
  double fit_band = 0.15;
  double root_tol = 1e-13;
  double partition_tol = 1e-9;
  // Truncation target for K and H: 0 means report achieved tail bounds
  // without failing; a positive value makes an insufficient census an error.
  double series_target = 0.0;
};

// Everything the pipeline produced, plus the serialized report.  Reports are
// deterministic: the same input text and options produce byte-identical
// output.
struct Analysis {
  ValidatedGraph graph;
  OrientedEdgeSet oriented;
  EdgeMatrix matrix;
  ClosedPathCounts counts;
  PrimeCensus census;
  PeriodCheck period;
  CharPoly charpoly;
  Spectrum spectrum;
  SpectralPartition partition;
  MertensConstants constants;
  long deviation_onset = 0;
  int oracle_checked_max = 0;  // lengths 1..this verified by enumeration
  std::vector<PrimeClass> oracle_classes;
  std::vector<MertensSeries> series;        // law 1, law 2 for k'=0..k, law 3
  std::vector<ConvergenceReport> fits;      // parallel to `series`
  nlohmann::ordered_json report;
};

// Runs the full pipeline on edge-list text.  Throws izeta::Error on any
// validation, cross-check, or budget failure.
Analysis analyze(const std::string& edge_text, const AnalysisOptions& opt);

// Renders the report in the requested format ("json" pretty-printed, "csv"
// as sectioned tables on one stream).
std::string render_report(const Analysis& a, const std::string& format);

// Writes auxiliary dumps (W matrix, prime classes, plot series) into
// opt.out_dir according to the dump flags.  Returns the paths written.
std::vector<std::string> write_aux_files(const Analysis& a, const AnalysisOptions& opt);

// Full command-line entry point; parses args (without argv[0]), runs, prints.
// Returns the process exit code: 0 ok, 1 usage, 2 validation, 3 cross-check,
// 4 budget.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace izeta
