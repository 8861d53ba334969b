#include "izeta/analyze.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "izeta/errors.hpp"

namespace izeta {

namespace {

constexpr const char* tool_version = "1.0.0";

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::ordered_json fit_to_json(const RateFit& f) {
  nlohmann::ordered_json j;
  j["residue_class"] = f.residue_class;
  j["points_used"] = f.points_used;
  if (f.points_used >= 2) {
    j["fitted"] = f.fitted;
    j["target"] = f.target;
    j["rel_deviation"] = f.rel_deviation;
  }
  j["within_band"] = f.within_band;
  j["hit_floor"] = f.hit_floor;
  j["all_below_floor"] = f.all_below_floor;
  j["pass"] = f.pass;
  return j;
}

}  // namespace

Analysis analyze(const std::string& edge_text, const AnalysisOptions& opt) {
  if (opt.n_max < 1 || opt.n_max > 5000) {
    fail_validation("DomainError", "n_max must be in [1, 5000]");
  }
  if (opt.k < 0 || opt.k > 12) fail_validation("DomainError", "k must be in [0, 12]");
  if (opt.oracle_max < 0 || opt.oracle_max > 14) {
    fail_validation("DomainError", "oracle_max must be in [0, 14]");
  }
  if (!(opt.alpha > 0.0 && opt.alpha < 0.5)) {
    fail_validation("DomainError", "alpha must lie in (0, 0.5)");
  }
  if (opt.format != "json" && opt.format != "csv") {
    fail_validation("DomainError", "format must be json or csv");
  }

  Analysis a;
  a.graph = validate_graph(parse_edge_list(edge_text));
  a.oriented = orient_edges(a.graph);
  a.matrix = build_edge_matrix(a.oriented);
  const int two_eps = a.matrix.dim();

  a.counts = closed_path_counts(a.matrix, opt.n_max, opt.work_budget);
  a.census = prime_census(a.counts);
  a.period = graph_period(a.census, a.graph);

  a.charpoly = char_poly(a.matrix, opt.work_budget);
  a.spectrum = spectrum_roots(a.charpoly, opt.root_tol);
  a.partition = perron_radius(a.spectrum,
                              a.census.provisional ? 0 : a.census.delta,
                              opt.partition_tol);

  // Enumeration cross-check of the census.
  if (opt.oracle_max >= 1) {
    const int L = std::min(opt.oracle_max, opt.n_max);
    a.oracle_classes = enumerate_prime_classes(a.oriented, L, opt.oracle_budget);
    std::vector<long> by_len(static_cast<size_t>(L) + 1, 0);
    for (const auto& cls : a.oracle_classes) ++by_len[static_cast<size_t>(cls.length())];
    for (int n = 1; n <= L; ++n) {
      if (BigInt(by_len[static_cast<size_t>(n)]) != a.census.count(n)) {
        fail_cross_check("CrossCheckFailed",
                         "census and cycle enumeration disagree at length " +
                             std::to_string(n) + ": inversion gives " +
                             a.census.count(n).str() + ", enumeration gives " +
                             std::to_string(by_len[static_cast<size_t>(n)]));
      }
    }
    a.oracle_checked_max = L;
  }

  const double target = opt.series_target > 0.0
                            ? opt.series_target
                            : std::numeric_limits<double>::infinity();
  a.constants = compute_constants(a.census, a.counts, a.charpoly, a.partition,
                                  two_eps, opt.alpha, target);
  a.deviation_onset = deviation_bound_onset(a.census, a.counts, two_eps,
                                            a.partition.R, opt.alpha);

  // Determinant route vs Euler product inside the convergence disc.
  nlohmann::ordered_json zeta_checks = nlohmann::ordered_json::array();
  {
    const int L = std::min(60, opt.n_max);
    for (double q : {0.1, 0.5, 0.9}) {
      const double u = q * a.partition.R;
      const double z_det = zeta_determinant(a.spectrum, a.partition, Complex(u, 0)).real();
      const auto ep = zeta_euler_product(a.census, two_eps, u, a.partition.R, L);
      const double log_diff = std::abs(std::log(z_det) - std::log(ep.value));
      const bool ok = log_diff <= ep.log_tail_bound + 1e-8;
      if (!ok) {
        fail_cross_check("CrossCheckFailed",
                         "zeta determinant and Euler product disagree at u/R=" +
                             std::to_string(q) + " beyond the certified tail");
      }
      nlohmann::ordered_json row;
      row["u_over_R"] = q;
      row["determinant_route"] = z_det;
      row["euler_route"] = ep.value;
      row["truncation"] = ep.truncation;
      row["log_tail_bound"] = ep.log_tail_bound;
      row["log_diff"] = log_diff;
      zeta_checks.push_back(row);
    }
  }

  // Residual series and decay fits.  Windows clip to the census horizon so
  // short runs still produce (less sharp) fits.
  const long n_avail = opt.n_max;
  const long hi1 = std::min(opt.fit1_window_hi, n_avail);
  const long lo1 = std::min(opt.fit1_window_lo, std::max(1L, hi1 / 2));
  const long hi = std::min(opt.fit_window_hi, n_avail);
  const long lo = std::min(opt.fit_window_lo, std::max(1L, hi / 2));

  a.series.push_back(build_mertens_series(1, 0, a.census, a.partition, a.constants,
                                          two_eps, opt.n_max));
  a.fits.push_back(convergence_rates(a.series.back(), lo1, hi1, opt.fit_band,
                                     opt.fit_floor));
  for (int kk = 0; kk <= opt.k; ++kk) {
    a.series.push_back(build_mertens_series(2, kk, a.census, a.partition, a.constants,
                                            two_eps, opt.n_max));
    a.fits.push_back(convergence_rates(a.series.back(), lo, hi, opt.fit_band,
                                       opt.fit_floor));
  }
  a.series.push_back(build_mertens_series(3, 0, a.census, a.partition, a.constants,
                                          two_eps, opt.n_max));
  a.fits.push_back(convergence_rates(a.series.back(), lo, hi, opt.fit_band,
                                     opt.fit_floor));

  // Envelope containment for the first law: smallest N0 with |residual| <=
  // envelope from N0 on.  The residual is a difference of two O(lhs) sums and
  // so carries ~eps*scale of rounding noise; once the envelope decays below
  // that floor the comparison is meaningless, so the floor is added on.
  long envelope_onset = 1;
  for (const auto& pt : a.series.front().points) {
    double noise = 8 * std::numeric_limits<double>::epsilon() *
                   (1.0 + std::abs(pt.lhs) + std::abs(pt.rhs));
    if (std::abs(pt.residual) > pt.envelope + noise) envelope_onset = pt.N + 1;
  }

  // ---- report ----
  nlohmann::ordered_json r;
  r["tool"] = {{"name", "izeta"}, {"version", tool_version}};

  r["options"] = {{"n_max", opt.n_max},
                  {"k", opt.k},
                  {"oracle_max", opt.oracle_max},
                  {"alpha", opt.alpha},
                  {"work_budget", opt.work_budget},
                  {"oracle_budget", opt.oracle_budget},
                  {"fit1_window", {opt.fit1_window_lo, opt.fit1_window_hi}},
                  {"fit_window", {opt.fit_window_lo, opt.fit_window_hi}},
                  {"fit_floor", opt.fit_floor},
                  {"fit_band", opt.fit_band},
                  {"root_tol", opt.root_tol},
                  {"partition_tol", opt.partition_tol},
                  {"series_target", opt.series_target}};

  {
    nlohmann::ordered_json g;
    g["vertices"] = a.graph.nu;
    g["edges"] = a.graph.epsilon;
    g["arc_count"] = two_eps;
    g["vertex_names"] = a.graph.graph.vertex_names;
    g["degrees"] = a.graph.degree;
    g["min_degree"] = a.graph.min_degree;
    g["max_degree"] = a.graph.max_degree;
    g["bipartite"] = a.graph.bipartite;
    r["graph"] = g;
  }

  {
    nlohmann::ordered_json p;
    p["delta"] = a.period.delta;
    p["provisional"] = a.census.provisional;
    nlohmann::ordered_json lens = nlohmann::ordered_json::array();
    for (size_t i = 0; i < a.census.distinct_lengths.size() && i < 24; ++i) {
      lens.push_back(a.census.distinct_lengths[i]);
    }
    p["distinct_prime_lengths"] = lens;
    p["girth"] = a.census.girth();
    p["bipartite_rule"] = {{"applicable", a.period.rule_applicable},
                           {"agrees", a.period.agrees}};
    r["period"] = p;
  }

  {
    nlohmann::ordered_json c;
    c["n_max"] = a.census.n_max;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 1; n <= a.census.n_max; ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["closed_paths"] = a.counts.N(n).str();
      row["prime_classes"] = a.census.count(n).str();
      if (a.oracle_checked_max >= n) row["oracle_agrees"] = true;
      rows.push_back(row);
    }
    c["table"] = rows;
    c["oracle_checked_max"] = a.oracle_checked_max;
    r["census"] = c;
  }

  {
    nlohmann::ordered_json s;
    s["dimension"] = a.spectrum.dimension;
    s["certified_root_error"] = a.spectrum.certified_error;
    s["perron"] = a.partition.perron;
    s["R"] = a.partition.R;
    s["rho"] = a.partition.rho;
    s["rho_R"] = a.partition.rho * a.partition.R;
    nlohmann::ordered_json eig = nlohmann::ordered_json::array();
    for (const auto& root : a.spectrum.roots) {
      nlohmann::ordered_json row;
      row["re"] = root.value.real();
      row["im"] = root.value.imag();
      row["modulus"] = root.modulus();
      row["multiplicity"] = root.multiplicity;
      row["on_circle"] =
          root.modulus() >= a.partition.perron * (1.0 - opt.partition_tol);
      eig.push_back(row);
    }
    s["eigenvalues"] = eig;
    nlohmann::ordered_json args = nlohmann::ordered_json::array();
    for (const auto& root : a.partition.on_circle) {
      args.push_back(std::arg(root.value));
    }
    s["circle_count"] = static_cast<int>(a.partition.on_circle.size());
    s["circle_args"] = args;
    r["spectral"] = s;
  }

  {
    nlohmann::ordered_json c;
    c["A"] = a.constants.A;
    c["K"] = {{"value", a.constants.K.value}, {"tail_bound", a.constants.K.tail_bound}};
    c["C"] = {{"product_route", a.constants.C},
              {"residue_route", a.constants.C_residue},
              {"rel_diff",
               std::abs(a.constants.C - a.constants.C_residue) / a.constants.C}};
    c["H"] = {{"spectral_route",
               {{"value", a.constants.H.value}, {"tail_bound", a.constants.H.tail_bound}}},
              {"cycle_route",
               {{"value", a.constants.H_prime.value},
                {"tail_bound", a.constants.H_prime.tail_bound}}},
              {"abs_diff", std::abs(a.constants.H.value - a.constants.H_prime.value)}};
    c["gamma"] = euler_gamma;
    c["alpha"] = a.constants.alpha;
    c["deviation_bound_onset"] = a.deviation_onset;
    r["constants"] = c;
  }

  r["zeta_checks"] = zeta_checks;

  {
    nlohmann::ordered_json laws = nlohmann::ordered_json::array();
    for (size_t i = 0; i < a.series.size(); ++i) {
      const auto& series = a.series[i];
      const auto& fit = a.fits[i];
      nlohmann::ordered_json law;
      law["theorem"] = series.theorem;
      if (series.theorem == 2) law["k"] = series.k;
      law["delta"] = series.delta;
      law["target"] = series.target;
      if (series.theorem == 1) law["envelope_onset"] = envelope_onset;
      nlohmann::ordered_json pts = nlohmann::ordered_json::array();
      for (const auto& pt : series.points) {
        nlohmann::ordered_json row;
        row["N"] = pt.N;
        row["lhs"] = pt.lhs;
        row["rhs"] = pt.rhs;
        row["residual"] = pt.residual;
        if (series.theorem == 1) row["envelope"] = pt.envelope;
        pts.push_back(row);
      }
      law["points"] = pts;
      nlohmann::ordered_json cj;
      cj["window"] = {fit.window_lo, fit.window_hi};
      cj["floor"] = fit.floor;
      cj["band"] = fit.band;
      nlohmann::ordered_json cls = nlohmann::ordered_json::array();
      for (const auto& f : fit.class_fits) cls.push_back(fit_to_json(f));
      cj["class_fits"] = cls;
      cj["overall"] = fit_to_json(fit.overall);
      law["convergence"] = cj;
      laws.push_back(law);
    }
    r["mertens"] = laws;
  }

  a.report = std::move(r);
  return a;
}

std::string render_report(const Analysis& a, const std::string& format) {
  if (format == "json") return a.report.dump(2) + "\n";

  // Sectioned CSV: one flat table per section, fixed 17-significant-digit
  // numeric formatting.
  std::ostringstream out;
  out << "# izeta report\n";
  out << "# section graph\nkey,value\n";
  out << "vertices," << a.graph.nu << "\nedges," << a.graph.epsilon << "\n";
  out << "min_degree," << a.graph.min_degree << "\nmax_degree," << a.graph.max_degree
      << "\n";
  out << "bipartite," << (a.graph.bipartite ? 1 : 0) << "\n";
  out << "delta," << a.census.delta << "\nprovisional,"
      << (a.census.provisional ? 1 : 0) << "\ngirth," << a.census.girth() << "\n";
  out << "perron," << fmt17(a.partition.perron) << "\nR," << fmt17(a.partition.R)
      << "\nrho," << fmt17(a.partition.rho) << "\n";
  out << "A," << fmt17(a.constants.A) << "\nK," << fmt17(a.constants.K.value)
      << "\nC," << fmt17(a.constants.C) << "\nH," << fmt17(a.constants.H.value)
      << "\nH_cycle_route," << fmt17(a.constants.H_prime.value) << "\n";
  out << "\n# section census\nn,closed_paths,prime_classes,oracle_agrees\n";
  for (int n = 1; n <= a.census.n_max; ++n) {
    out << n << ',' << a.counts.N(n).str() << ',' << a.census.count(n).str() << ','
        << (a.oracle_checked_max >= n ? "1" : "") << "\n";
  }
  out << "\n# section spectrum\nre,im,modulus,multiplicity\n";
  for (const auto& root : a.spectrum.roots) {
    out << fmt17(root.value.real()) << ',' << fmt17(root.value.imag()) << ','
        << fmt17(root.modulus()) << ',' << root.multiplicity << "\n";
  }
  for (size_t i = 0; i < a.series.size(); ++i) {
    const auto& series = a.series[i];
    out << "\n# section theorem" << series.theorem;
    if (series.theorem == 2) out << "_k" << series.k;
    out << "\nN,lhs,rhs,residual";
    if (series.theorem == 1) out << ",envelope";
    out << "\n";
    for (const auto& pt : series.points) {
      out << pt.N << ',' << fmt17(pt.lhs) << ',' << fmt17(pt.rhs) << ','
          << fmt17(pt.residual);
      if (series.theorem == 1) out << ',' << fmt17(pt.envelope);
      out << "\n";
    }
    const auto& fit = a.fits[i];
    out << "# overall_fit,fitted=" << fmt17(fit.overall.fitted)
        << ",target=" << fmt17(fit.overall.target) << ",pass="
        << (fit.overall.pass ? 1 : 0) << "\n";
  }
  return out.str();
}

std::vector<std::string> write_aux_files(const Analysis& a, const AnalysisOptions& opt) {
  std::vector<std::string> written;
  const std::string dir = opt.out_dir.empty() ? "." : opt.out_dir;
  auto open = [&](const std::string& name) {
    const std::string path = dir + "/" + name;
    std::ofstream f(path);
    if (!f) fail_validation("DomainError", "cannot write " + path);
    written.push_back(path);
    return f;
  };

  if (opt.dump_w) {
    auto f = open("w_matrix.txt");
    for (int i = 0; i < a.matrix.dim(); ++i) {
      for (int j = 0; j < a.matrix.dim(); ++j) {
        f << a.matrix.w(i, j) << (j + 1 == a.matrix.dim() ? "" : " ");
      }
      f << "\n";
    }
  }
  if (opt.dump_classes) {
    auto f = open("prime_classes.txt");
    for (const auto& cls : a.oracle_classes) {
      f << cls.length() << ':';
      for (int arc : cls.arcs) f << ' ' << arc;
      f << "\n";
    }
  }
  if (opt.plot_data) {
    for (size_t i = 0; i < a.series.size(); ++i) {
      const auto& series = a.series[i];
      std::string name = "plot_theorem" + std::to_string(series.theorem);
      if (series.theorem == 2) name += "_k" + std::to_string(series.k);
      auto f = open(name + ".csv");
      f << "N,residual";
      if (series.theorem == 1) f << ",envelope";
      f << "\n";
      for (const auto& pt : series.points) {
        f << pt.N << ',' << fmt17(pt.residual);
        if (series.theorem == 1) f << ',' << fmt17(pt.envelope);
        f << "\n";
      }
    }
  }
  return written;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Ihara zeta invariants and cycle-asymptotics verification"};
  app.set_version_flag("--version", std::string("izeta ") + tool_version);

  std::string graph_path;
  AnalysisOptions opt;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one graph edge list");
  analyze_cmd->add_option("graph", graph_path, "edge-list file (u v per line)")
      ->required();
  analyze_cmd->add_option("--n-max", opt.n_max, "census horizon");
  analyze_cmd->add_option("--k", opt.k, "expansion order for the second law");
  analyze_cmd->add_option("--oracle-max", opt.oracle_max,
                          "verify the census by enumeration up to this length (0 = off)");
  analyze_cmd->add_option("--alpha", opt.alpha, "deviation-bound exponent in (0, 0.5)");
  analyze_cmd->add_option("--format", opt.format, "report format: json or csv");
  analyze_cmd->add_flag("--dump-w", opt.dump_w, "write the 0/1 arc matrix");
  analyze_cmd->add_flag("--dump-classes", opt.dump_classes,
                        "write the enumerated cycle classes");
  analyze_cmd->add_flag("--plot-data", opt.plot_data, "write residual series CSVs");
  analyze_cmd->add_option("--out-dir", opt.out_dir, "directory for auxiliary files");
  analyze_cmd->add_option("--work-budget", opt.work_budget,
                          "big-integer operation budget for matrix powers");
  analyze_cmd->add_option("--oracle-budget", opt.oracle_budget,
                          "node budget for cycle enumeration");
  analyze_cmd->add_option("--series-target", opt.series_target,
                          "require K/H truncation tails below this (0 = report only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!analyze_cmd->parsed()) {
    out << app.help();
    return 1;
  }

  try {
    std::ifstream f(graph_path);
    if (!f) {
      err << "error: cannot read " << graph_path << "\n";
      return 2;
    }
    std::ostringstream text;
    text << f.rdbuf();
    const Analysis a = analyze(text.str(), opt);
    out << render_report(a, opt.format);
    write_aux_files(a, opt);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace izeta
