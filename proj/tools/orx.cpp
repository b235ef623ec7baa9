// Copyright 2026 The orx Authors
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

// Command-line front end for the orx library.
//
// Exit codes: 0 success, 2 input/parse error, 3 solver did not converge
// within its iteration budget (outputs are still written in that case).
//
// Unless --no-normalize is given, solver inputs are scaled by 1/max|entry|
// before solving, so tolerance-style parameters (--delta, --beta) refer to
// the normalized scale; matrix outputs are rescaled back to the input scale
// and the report echoes the scale factor used.
//
// Solver reports deliberately contain no timing or timestamps: identical
// inputs and seeds produce byte-identical report files. Bench reports carry
// wall-clock times and are exempt from that guarantee.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orx/orx.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNoConvergence = 3;

json vector_to_json(const orx::Vector& v) {
  json a = json::array();
  for (orx::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json trace_to_json(const std::vector<double>& t) {
  json a = json::array();
  for (double x : t) a.push_back(x);
  return a;
}

void write_report(const fs::path& dir, const json& report) {
  fs::create_directories(dir);
  std::ofstream out(dir / "report.json");
  if (!out) throw std::runtime_error("cannot write " + (dir / "report.json").string());
  out << report.dump(2) << '\n';
}

void write_matrix(const fs::path& dir, const std::string& name, const orx::Matrix& m) {
  fs::create_directories(dir);
  orx::write_matrix_csv((dir / name).string(), m);
}

orx::Matrix bool_to_matrix(const orx::BoolMatrix& mask) {
  orx::Matrix m(mask.rows(), mask.cols());
  for (orx::Index j = 0; j < mask.cols(); ++j)
    for (orx::Index i = 0; i < mask.rows(); ++i) m(i, j) = mask(i, j) ? 1.0 : 0.0;
  return m;
}

orx::Matrix bool_to_column(const orx::BoolVector& mask) {
  orx::Matrix m(mask.size(), 1);
  for (orx::Index i = 0; i < mask.size(); ++i) m(i, 0) = mask(i) ? 1.0 : 0.0;
  return m;
}

// Shared state for solver subcommands.
struct CommonOpts {
  std::string out_dir = ".";
  bool no_normalize = false;
};

double resolve_scale(const orx::Matrix& x, bool no_normalize) {
  if (no_normalize) return 1.0;
  const double m = x.cwiseAbs().maxCoeff();
  return m > 0.0 ? m : 1.0;
}

// ---------------------------------------------------------------------------
// regularize
// ---------------------------------------------------------------------------

int run_regularize(const std::string& x_path, const std::string& f_path, double delta,
                   const CommonOpts& common) {
  const orx::Matrix x = orx::read_matrix_csv(x_path);
  const orx::Matrix f = orx::read_matrix_csv(f_path);
  const double scale = std::max(resolve_scale(x, common.no_normalize),
                                resolve_scale(f, common.no_normalize));
  const orx::RegularizationOutcome res =
      orx::regularize_matrix(x / scale, f / scale, orx::Tolerance(delta));

  const fs::path dir(common.out_dir);
  write_matrix(dir, "z.csv", orx::Matrix(res.regularized * scale));
  write_matrix(dir, "mask.csv", bool_to_matrix(res.outlier_mask));

  json report;
  report["command"] = "regularize";
  report["config"] = {{"x", x_path},
                      {"f", f_path},
                      {"delta", delta},
                      {"normalize", !common.no_normalize},
                      {"scale", scale}};
  report["rows"] = x.rows();
  report["cols"] = x.cols();
  report["num_outliers"] = res.num_outliers;
  report["outlier_fraction"] =
      x.size() == 0 ? 0.0 : static_cast<double>(res.num_outliers) / static_cast<double>(x.size());
  write_report(dir, report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// orlr
// ---------------------------------------------------------------------------

int run_orlr(const std::string& x_path, const std::string& y_path, double delta, int max_iters,
             double tol, const CommonOpts& common) {
  const orx::Matrix x = orx::read_matrix_csv(x_path);
  const orx::Vector y = orx::read_vector_csv(y_path);
  const double scale_x = resolve_scale(x, common.no_normalize);
  const double scale_y =
      common.no_normalize ? 1.0 : (y.cwiseAbs().maxCoeff() > 0.0 ? y.cwiseAbs().maxCoeff() : 1.0);

  orx::OrlrConfig cfg{.delta = orx::Tolerance(delta), .max_iters = max_iters, .tol = tol};
  const orx::OrlrResult res = orx::fit_orlr(x / scale_x, y / scale_y, cfg);

  // Undo the normalization: y/sy ~ a'.(x/sx) + b'  =>  y ~ (a' sy/sx).x + b' sy.
  const orx::Vector a = res.a * (scale_y / scale_x);
  const double b = res.b * scale_y;

  const fs::path dir(common.out_dir);
  write_matrix(dir, "ytilde.csv", orx::Matrix(res.y_tilde * scale_y));
  write_matrix(dir, "mask.csv", bool_to_column(res.outlier_mask));

  json report;
  report["command"] = "orlr";
  report["config"] = {{"x", x_path},      {"y", y_path},
                      {"delta", delta},   {"max_iters", max_iters},
                      {"tol", tol},       {"normalize", !common.no_normalize},
                      {"scale_x", scale_x}, {"scale_y", scale_y}};
  report["a"] = vector_to_json(a);
  report["b"] = b;
  report["iterations"] = res.iterations;
  report["converged"] = res.converged;
  report["num_outliers"] = static_cast<int>(res.outlier_mask.count());
  report["objective_trace"] = trace_to_json(res.objective_trace);
  write_report(dir, report);
  return res.converged ? kExitOk : kExitNoConvergence;
}

// ---------------------------------------------------------------------------
// orpca / l1pca
// ---------------------------------------------------------------------------

int run_orpca(const std::string& x_path, int rank, double delta, int max_iters, double tol,
              const CommonOpts& common) {
  const orx::Matrix x = orx::read_matrix_csv(x_path);
  const double scale = resolve_scale(x, common.no_normalize);

  orx::OrpcaConfig cfg{.rank_k = rank,
                       .delta = orx::Tolerance(delta),
                       .max_iters = max_iters,
                       .tol = tol};
  const orx::OrpcaResult res = orx::fit_orpca(x / scale, cfg);

  const fs::path dir(common.out_dir);
  write_matrix(dir, "z.csv", orx::Matrix(res.Z * scale));
  write_matrix(dir, "u.csv", orx::Matrix(res.U * scale));
  write_matrix(dir, "v.csv", res.V);

  json report;
  report["command"] = "orpca";
  report["config"] = {{"x", x_path},   {"rank", rank},
                      {"delta", delta}, {"max_iters", max_iters},
                      {"tol", tol},    {"normalize", !common.no_normalize},
                      {"scale", scale}};
  report["iterations"] = res.iterations;
  report["converged"] = res.converged;
  report["outlier_fraction"] = res.outlier_fraction;
  report["final_objective"] = res.objective_trace.back();
  report["rank_Z"] = orx::numerical_rank(res.Z);
  report["objective_trace"] = trace_to_json(res.objective_trace);
  write_report(dir, report);
  return res.converged ? kExitOk : kExitNoConvergence;
}

int run_l1pca(const std::string& x_path, int rank, const std::vector<double>& schedule_arg,
              const CommonOpts& common) {
  const orx::Matrix x_raw = orx::read_matrix_csv(x_path);
  const double scale = resolve_scale(x_raw, common.no_normalize);
  const orx::Matrix x = x_raw / scale;

  std::vector<double> schedule = schedule_arg;
  if (schedule.empty()) schedule = orx::default_l1pca_schedule(x, rank);

  orx::Matrix u, v;
  if (schedule.empty()) {
    std::tie(u, v) = orx::pca_init(x, rank);  // input is already exactly rank k
  } else {
    std::tie(u, v) = orx::l1_pca(x, rank, schedule);
  }

  const fs::path dir(common.out_dir);
  write_matrix(dir, "u.csv", orx::Matrix(u * scale));
  write_matrix(dir, "v.csv", v);
  write_matrix(dir, "recon.csv", orx::Matrix(u * v * scale));

  json report;
  report["command"] = "l1pca";
  report["config"] = {{"x", x_path},
                      {"rank", rank},
                      {"schedule", trace_to_json(schedule)},
                      {"normalize", !common.no_normalize},
                      {"scale", scale}};
  report["final_l1_error"] = ((x - u * v).cwiseAbs().sum()) * scale;
  write_report(dir, report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rpca
// ---------------------------------------------------------------------------

int run_rpca(const std::string& x_path, double beta, double rho, int max_iters, double tol,
             bool l2_variant, const CommonOpts& common) {
  const orx::Matrix x_raw = orx::read_matrix_csv(x_path);
  const double scale = resolve_scale(x_raw, common.no_normalize);
  const orx::Matrix x = x_raw / scale;
  const double beta_used = beta > 0.0 ? beta : orx::default_beta(x);

  const fs::path dir(common.out_dir);
  json report;
  report["command"] = l2_variant ? "rpca-l2" : "rpca";

  if (l2_variant) {
    const orx::Matrix z = orx::l2_trace_pca(x, beta_used);
    write_matrix(dir, "z.csv", orx::Matrix(z * scale));
    write_matrix(dir, "s.csv", orx::Matrix((x - z) * scale));
    report["config"] = {{"x", x_path},
                        {"beta", beta_used},
                        {"normalize", !common.no_normalize},
                        {"scale", scale}};
    report["rank_Z"] = orx::numerical_rank(z);
    report["converged"] = true;
    write_report(dir, report);
    return kExitOk;
  }

  orx::RpcaConfig cfg;
  cfg.beta = beta_used;
  cfg.rho = rho;
  cfg.max_iters = max_iters;
  cfg.tol = tol;
  const orx::RpcaResult res = orx::fit_rpca(x, cfg);

  write_matrix(dir, "z.csv", orx::Matrix(res.Z * scale));
  write_matrix(dir, "s.csv", orx::Matrix(res.S * scale));

  report["config"] = {{"x", x_path},     {"beta", beta_used},
                      {"rho", rho},      {"max_iters", max_iters},
                      {"tol", tol},      {"normalize", !common.no_normalize},
                      {"scale", scale}};
  report["iterations"] = res.iterations;
  report["converged"] = res.converged;
  report["rank_Z"] = res.rank_Z;
  report["final_objective"] = res.objective_trace.back();
  report["objective_trace"] = trace_to_json(res.objective_trace);
  write_report(dir, report);
  return res.converged ? kExitOk : kExitNoConvergence;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw orx::ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw orx::ParseError(path + ": " + e.what());
  }
  return j;
}

int run_gen_line(const std::string& spec_path, std::optional<std::uint64_t> seed,
                 const CommonOpts& common) {
  orx::LineDatasetSpec spec;
  if (!spec_path.empty()) {
    const json j = load_json(spec_path);
    spec.n_clean = j.value("n_clean", spec.n_clean);
    spec.n_outliers = j.value("n_outliers", spec.n_outliers);
    spec.slope = j.value("slope", spec.slope);
    spec.intercept = j.value("intercept", spec.intercept);
    spec.noise_sigma = j.value("noise_sigma", spec.noise_sigma);
    if (j.contains("outlier_offsets"))
      spec.outlier_offsets = j["outlier_offsets"].get<std::vector<double>>();
    if (j.contains("x_range")) {
      spec.x_min = j["x_range"].at(0).get<double>();
      spec.x_max = j["x_range"].at(1).get<double>();
    }
    spec.seed = j.value("seed", spec.seed);
  }
  if (seed) spec.seed = *seed;

  const orx::LineDataset data = orx::gen_line_dataset(spec);
  const fs::path dir(common.out_dir);
  write_matrix(dir, "x.csv", data.X);
  write_matrix(dir, "y.csv", orx::Matrix(data.y));
  write_matrix(dir, "mask.csv", bool_to_column(data.is_outlier));

  json report;
  report["command"] = "gen-line";
  report["config"] = {{"n_clean", spec.n_clean},
                      {"n_outliers", spec.n_outliers},
                      {"slope", spec.slope},
                      {"intercept", spec.intercept},
                      {"noise_sigma", spec.noise_sigma},
                      {"outlier_offsets", trace_to_json(spec.outlier_offsets)},
                      {"x_range", {spec.x_min, spec.x_max}},
                      {"seed", spec.seed}};
  report["n_total"] = spec.n_clean + spec.n_outliers;
  write_report(dir, report);
  return kExitOk;
}

int run_gen_lowrank(const std::string& spec_path, std::optional<std::uint64_t> seed,
                    const CommonOpts& common) {
  orx::LowRankCorruptionSpec spec;
  if (!spec_path.empty()) {
    const json j = load_json(spec_path);
    spec.p = j.value("p", spec.p);
    spec.n = j.value("n", spec.n);
    spec.k_true = j.value("k_true", spec.k_true);
    if (j.contains("singular_profile"))
      spec.singular_profile = j["singular_profile"].get<std::vector<double>>();
    spec.corruption_frac = j.value("corruption_frac", spec.corruption_frac);
    spec.corruption_magnitude = j.value("corruption_magnitude", spec.corruption_magnitude);
    if (j.contains("block_occlusion")) {
      const json& b = j["block_occlusion"];
      spec.block_occlusion = orx::BlockOcclusionSpec{b.value("height", 4), b.value("width", 5),
                                                     b.value("count", 1)};
    }
    spec.seed = j.value("seed", spec.seed);
  }
  if (seed) spec.seed = *seed;

  const orx::LowRankDataset data = orx::gen_lowrank_corrupted(spec);
  const fs::path dir(common.out_dir);
  write_matrix(dir, "clean.csv", data.clean);
  write_matrix(dir, "corrupted.csv", data.corrupted);
  write_matrix(dir, "mask.csv", bool_to_matrix(data.corruption_mask));

  json report;
  report["command"] = "gen-lowrank";
  json block = nullptr;
  if (spec.block_occlusion) {
    block = {{"height", spec.block_occlusion->height},
             {"width", spec.block_occlusion->width},
             {"count", spec.block_occlusion->count}};
  }
  report["config"] = {{"p", spec.p},
                      {"n", spec.n},
                      {"k_true", spec.k_true},
                      {"corruption_frac", spec.corruption_frac},
                      {"corruption_magnitude", data.corruption_magnitude},
                      {"block_occlusion", block},
                      {"seed", spec.seed}};
  report["num_corrupted"] = static_cast<long>(data.corruption_mask.count());
  write_report(dir, report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum / report
// ---------------------------------------------------------------------------

std::pair<std::string, std::string> split_label(const std::string& arg) {
  // "label=path" or bare path (label is the file stem).
  const auto eq = arg.find('=');
  if (eq != std::string::npos) return {arg.substr(0, eq), arg.substr(eq + 1)};
  return {fs::path(arg).stem().string(), arg};
}

int run_spectrum(const std::vector<std::string>& inputs, const CommonOpts& common) {
  std::vector<orx::LabeledMatrix> mats;
  for (const auto& arg : inputs) {
    const auto [label, path] = split_label(arg);
    mats.push_back({label, orx::read_matrix_csv(path)});
  }
  const orx::SpectrumReport rep = orx::make_spectrum_report(mats);

  json report;
  report["command"] = "spectrum";
  report["labels"] = rep.labels;
  json spectra = json::object();
  json downshift = json::object();
  for (std::size_t i = 0; i < rep.labels.size(); ++i) {
    spectra[rep.labels[i]] = vector_to_json(rep.spectra[i]);
    downshift[rep.labels[i]] = vector_to_json(rep.downshift[i]);
  }
  report["spectra"] = spectra;
  report["downshift_vs_" + rep.labels.front()] = downshift;
  write_report(fs::path(common.out_dir), report);
  return kExitOk;
}

int run_report(const std::string& clean_path, const std::string& corrupted_path,
               const std::vector<std::string>& results, const CommonOpts& common) {
  const orx::Matrix clean = orx::read_matrix_csv(clean_path);
  const orx::Matrix corrupted = orx::read_matrix_csv(corrupted_path);
  std::vector<orx::LabeledMatrix> mats;
  for (const auto& arg : results) {
    const auto [label, path] = split_label(arg);
    mats.push_back({label, orx::read_matrix_csv(path)});
  }
  const orx::ReconstructionReport rep = orx::reconstruction_report(clean, corrupted, mats);

  json report;
  report["command"] = "report";
  report["config"] = {{"clean", clean_path}, {"corrupted", corrupted_path}};
  report["corrupted_rel_error"] = rep.corrupted_rel_error;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"label", e.label},
                       {"rel_frobenius_error", e.rel_frobenius_error},
                       {"column_residuals", vector_to_json(e.column_residuals)},
                       {"spectrum_downshift", vector_to_json(e.spectrum_downshift)},
                       {"rank", e.rank}});
  }
  report["solvers"] = entries;
  write_report(fs::path(common.out_dir), report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

int run_bench_cmd(const std::string& config_path, const CommonOpts& common) {
  orx::BenchConfig cfg;
  if (!config_path.empty()) {
    const json j = load_json(config_path);
    cfg.p = j.value("p", cfg.p);
    cfg.n = j.value("n", cfg.n);
    cfg.k_true = j.value("k_true", cfg.k_true);
    cfg.rank_k = j.value("rank_k", cfg.rank_k);
    cfg.corruption_frac = j.value("corruption_frac", cfg.corruption_frac);
    cfg.corruption_magnitude_factor =
        j.value("corruption_magnitude_factor", cfg.corruption_magnitude_factor);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.tol = j.value("tol", cfg.tol);
    cfg.max_iters = j.value("max_iters", cfg.max_iters);
    cfg.repetitions = j.value("repetitions", cfg.repetitions);
    cfg.beta = j.value("beta", cfg.beta);
    cfg.rank_match_cutoff = j.value("rank_match_cutoff", cfg.rank_match_cutoff);
    cfg.delta_probes = j.value("delta_probes", cfg.delta_probes);
    cfg.scaling_study = j.value("scaling_study", cfg.scaling_study);
    if (j.contains("scaling_ns")) {
      cfg.scaling_ns.clear();
      for (const auto& v : j["scaling_ns"]) cfg.scaling_ns.push_back(v.get<orx::Index>());
    }
    cfg.scaling_fixed_iters = j.value("scaling_fixed_iters", cfg.scaling_fixed_iters);
    cfg.scaling_repetitions = j.value("scaling_repetitions", cfg.scaling_repetitions);
  }

  const orx::BenchReport rep = orx::run_bench(cfg);

  const auto solver_json = [](const orx::BenchSolverStats& s) {
    return json{{"solver", s.solver},
                {"wall_times_seconds", trace_to_json(s.wall_times_seconds)},
                {"median_wall_time_seconds", s.median_wall_time_seconds},
                {"iterations", s.iterations},
                {"final_objective", s.final_objective},
                {"rank_Z", s.rank_Z},
                {"effective_rank", s.effective_rank},
                {"converged", s.converged}};
  };

  json report;
  report["command"] = "bench";
  report["config"] = {{"p", rep.config.p},
                      {"n", rep.config.n},
                      {"k_true", rep.config.k_true},
                      {"rank_k", rep.config.rank_k},
                      {"corruption_frac", rep.config.corruption_frac},
                      {"corruption_magnitude_factor", rep.config.corruption_magnitude_factor},
                      {"seed", rep.config.seed},
                      {"tol", rep.config.tol},
                      {"max_iters", rep.config.max_iters},
                      {"repetitions", rep.config.repetitions},
                      {"rank_match_cutoff", rep.config.rank_match_cutoff},
                      {"delta_probes", rep.config.delta_probes},
                      {"scaling_study", rep.config.scaling_study},
                      {"scaling_fixed_iters", rep.config.scaling_fixed_iters},
                      {"scaling_repetitions", rep.config.scaling_repetitions}};
  report["beta_used"] = rep.beta_used;
  report["delta_used"] = rep.delta_used;
  report["target_effective_rank"] = rep.target_effective_rank;
  report["orpca"] = solver_json(rep.orpca);
  report["rpca"] = solver_json(rep.rpca);
  if (rep.config.scaling_study) {
    json pts = json::array();
    for (const auto& p : rep.scaling)
      pts.push_back({{"n", p.n}, {"median_wall_time_seconds", p.median_wall_time_seconds}});
    report["scaling"] = pts;
    report["scaling_loglog_slope"] = rep.scaling_loglog_slope;
  }

  fs::create_directories(common.out_dir);
  std::ofstream out(fs::path(common.out_dir) / "bench.json");
  if (!out) throw std::runtime_error("cannot write bench.json");
  out << report.dump(2) << '\n';

  std::cout << "orpca median " << rep.orpca.median_wall_time_seconds << " s, rpca median "
            << rep.rpca.median_wall_time_seconds << " s\n";
  const bool ok = rep.orpca.converged && rep.rpca.converged;
  return ok ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orx: outlier-regularized low-rank reconstruction toolkit"};
  app.require_subcommand(1);

  CommonOpts common;

  // regularize
  std::string reg_x, reg_f;
  double reg_delta = 0.003;
  auto* reg = app.add_subcommand("regularize", "Clamp measurements to a tolerance band "
                                               "around predictions");
  reg->add_option("--x", reg_x, "Measurements CSV")->required();
  reg->add_option("--f", reg_f, "Predictions CSV (same shape)")->required();
  reg->add_option("--delta", reg_delta, "Tolerance (normalized scale unless --no-normalize)")
      ->required();

  // orlr
  std::string orlr_x, orlr_y;
  double orlr_delta = 0.003, orlr_tol = 1e-10;
  int orlr_iters = 200;
  auto* orlr = app.add_subcommand("orlr", "Outlier-regularized linear regression");
  orlr->add_option("--x", orlr_x, "Design matrix CSV, p x n (columns are samples)")->required();
  orlr->add_option("--y", orlr_y, "Response CSV (single row or column, length n)")->required();
  orlr->add_option("--delta", orlr_delta, "Tolerance")->required();
  orlr->add_option("--max-iters", orlr_iters, "Iteration budget");
  orlr->add_option("--tol", orlr_tol, "Relative objective-change tolerance");

  // orpca
  std::string orpca_x;
  int orpca_rank = 1, orpca_iters = 500;
  double orpca_delta = 0.003, orpca_tol = 1e-10;
  auto* orpca = app.add_subcommand("orpca", "Outlier-regularized PCA");
  orpca->add_option("--x", orpca_x, "Data matrix CSV, p x n")->required();
  orpca->add_option("--rank", orpca_rank, "Factorization rank k")->required();
  orpca->add_option("--delta", orpca_delta, "Tolerance (default 0.003 on normalized data)");
  orpca->add_option("--max-iters", orpca_iters, "Iteration budget");
  orpca->add_option("--tol", orpca_tol, "Relative objective-change tolerance");

  // l1pca
  std::string l1_x;
  int l1_rank = 1;
  std::vector<double> l1_schedule;
  auto* l1pca = app.add_subcommand("l1pca", "L1-norm PCA via tolerance continuation");
  l1pca->add_option("--x", l1_x, "Data matrix CSV, p x n")->required();
  l1pca->add_option("--rank", l1_rank, "Factorization rank k")->required();
  l1pca->add_option("--schedule", l1_schedule,
                    "Decreasing tolerance schedule (default: auto)")
      ->delimiter(',');

  // rpca
  std::string rpca_x;
  double rpca_beta = 0.0, rpca_rho = 1.5, rpca_tol = 1e-10;
  int rpca_iters = 1000;
  bool rpca_l2 = false;
  auto* rpca = app.add_subcommand("rpca", "Trace-norm robust PCA (augmented Lagrangian)");
  rpca->add_option("--x", rpca_x, "Data matrix CSV, p x n")->required();
  rpca->add_option("--beta", rpca_beta, "Trace-norm weight (default: max|X| / sqrt(max(p,n)))");
  rpca->add_option("--rho", rpca_rho, "Penalty growth factor");
  rpca->add_option("--max-iters", rpca_iters, "Iteration budget");
  rpca->add_option("--tol", rpca_tol, "Convergence tolerance");
  rpca->add_flag("--l2", rpca_l2, "Closed-form variant with squared-L2 data term");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate seeded synthetic datasets");
  gen->require_subcommand(1);
  std::string gen_spec;
  std::optional<std::uint64_t> gen_seed;
  std::uint64_t gen_seed_raw = 0;
  auto* gen_line = gen->add_subcommand("line", "1-D line data with gross outliers");
  auto* gen_lowrank = gen->add_subcommand("lowrank", "Low-rank matrix with gross corruption");
  for (auto* sub : {gen_line, gen_lowrank}) {
    sub->add_option("--spec", gen_spec, "JSON spec file (defaults used when omitted)");
    sub->add_option("--seed", gen_seed_raw, "Override the spec's seed")
        ->each([&](const std::string&) { gen_seed = gen_seed_raw; });
  }

  // spectrum
  std::vector<std::string> spectrum_inputs;
  auto* spectrum = app.add_subcommand("spectrum", "Singular-value spectra and downshift "
                                                  "relative to the first input");
  spectrum->add_option("--x", spectrum_inputs, "Matrix CSV, repeatable; 'label=path' to name")
      ->required();

  // report
  std::string rep_clean, rep_corrupted;
  std::vector<std::string> rep_results;
  auto* reportc = app.add_subcommand("report", "Reconstruction quality against known clean data");
  reportc->add_option("--clean", rep_clean, "Clean matrix CSV")->required();
  reportc->add_option("--corrupted", rep_corrupted, "Corrupted matrix CSV")->required();
  reportc->add_option("--z", rep_results, "Reconstruction CSV, repeatable; 'label=path' to name")
      ->required();

  // bench
  std::string bench_config;
  auto* bench = app.add_subcommand("bench", "Timed solver comparison on synthetic data");
  bench->add_option("--config", bench_config, "JSON bench config (defaults used when omitted)");

  for (auto* sub : {reg, orlr, orpca, l1pca, rpca, gen_line, gen_lowrank, spectrum, reportc, bench}) {
    sub->add_option("--out", common.out_dir, "Output directory (default: current)");
    sub->add_flag("--no-normalize", common.no_normalize, "Solve on the raw input scale");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (reg->parsed()) return run_regularize(reg_x, reg_f, reg_delta, common);
    if (orlr->parsed()) return run_orlr(orlr_x, orlr_y, orlr_delta, orlr_iters, orlr_tol, common);
    if (orpca->parsed())
      return run_orpca(orpca_x, orpca_rank, orpca_delta, orpca_iters, orpca_tol, common);
    if (l1pca->parsed()) return run_l1pca(l1_x, l1_rank, l1_schedule, common);
    if (rpca->parsed())
      return run_rpca(rpca_x, rpca_beta, rpca_rho, rpca_iters, rpca_tol, rpca_l2, common);
    if (gen_line->parsed()) return run_gen_line(gen_spec, gen_seed, common);
    if (gen_lowrank->parsed()) return run_gen_lowrank(gen_spec, gen_seed, common);
    if (spectrum->parsed()) return run_spectrum(spectrum_inputs, common);
    if (reportc->parsed()) return run_report(rep_clean, rep_corrupted, rep_results, common);
    if (bench->parsed()) return run_bench_cmd(bench_config, common);
  } catch (const orx::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
