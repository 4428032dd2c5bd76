#include "tvc/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tvc/errors.hpp"
#include "tvc/ingest.hpp"
#include "tvc/kernels.hpp"
#include "tvc/report.hpp"
#include "tvc/synth.hpp"
#include "tvc/text_io.hpp"

namespace tvc::cli {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string manifest;
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::optional<int> base_year;
  std::optional<int> report_year;
  std::string gamma_component;  // code or 1-based index; empty = last variable
  std::vector<int> penn_years;
  std::string projection;
  unsigned threads = 1;
};

struct SynthConfig {
  std::string out_dir = ".";
  std::size_t countries = 11;
  std::size_t years = 30;
  std::size_t vars = 7;
  int first_year = 1995;
  std::uint64_t seed = 42;
  double noise = 0.0;
};

struct Loaded {
  Manifest manifest;
  PanelDataset panel;
};

Loaded load(const RunConfig& cfg) {
  Manifest manifest = parse_manifest(read_file(cfg.manifest));
  std::vector<fs::path> inputs(cfg.inputs.begin(), cfg.inputs.end());
  PanelDataset panel = load_panel(manifest, inputs, cfg.base_year);
  return {std::move(manifest), std::move(panel)};
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw DataError("cannot create output directory " + dir + ": " + ec.message());
  return p;
}

std::size_t resolve_component(const PanelDataset& panel, const std::string& spec) {
  if (spec.empty()) return panel.n_vars() - 1;
  if (const auto j = panel.variable_index(spec)) return *j;
  if (const auto k = parse_long(spec); k && *k >= 1 && static_cast<std::size_t>(*k) <= panel.n_vars()) {
    return static_cast<std::size_t>(*k - 1);
  }
  throw DataError("unknown gamma component '" + spec + "'");
}

int report_year(const PanelDataset& panel, const RunConfig& cfg) {
  const int year = cfg.report_year.value_or(panel.last_year());
  if (!panel.year_index(year)) {
    throw DataError("report year " + std::to_string(year) + " outside panel years " +
                    std::to_string(panel.first_year()) + "-" + std::to_string(panel.last_year()));
  }
  return year;
}

void write_fit(const fs::path& out, const Analysis& a) {
  write_file(out / "coefficients.csv", coefficients_csv(a.fit.path, a.fit.diagnostics));
  write_file(out / "diagnostics.csv", diagnostics_csv(a.fit.path, a.fit.diagnostics));
  write_file(out / "residuals.csv", residuals_csv(a.panel, a.fit.path, a.fit.diagnostics));
}

void write_decomposition(const fs::path& out, const Analysis& a, std::size_t component) {
  write_file(out / "components.csv", component_deltas_csv(a.panel, a.decomposition));
  write_file(out / "kappa.csv", kappa_csv(a.panel, a.decomposition));
  write_file(out / "gamma.csv", gamma_csv(a.panel, relative_contribution(a.decomposition.kappa, component)));
}

int cmd_ingest(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const fs::path dir = prepare_out(cfg.out_dir);
  write_file(dir / "panel.csv", write_long_csv(to_rows(l.panel)));
  out << "panel: " << l.panel.n_countries() << " countries, " << l.panel.n_years() << " years (" << l.panel.first_year()
      << "-" << l.panel.last_year() << "), " << l.panel.n_vars() << " variables\n";
  return kExitOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
  Loaded l = load(cfg);
  const Analysis a = analyze(std::move(l.panel), FitOptions{{}, cfg.threads});
  write_fit(prepare_out(cfg.out_dir), a);
  out << "fitted " << a.fit.path.n_intervals() << " intervals\n";
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  Loaded l = load(cfg);
  const std::size_t component = resolve_component(l.panel, cfg.gamma_component);
  const Analysis a = analyze(std::move(l.panel), FitOptions{{}, cfg.threads});
  write_decomposition(prepare_out(cfg.out_dir), a, component);
  out << "decomposed " << a.panel.n_vars() << " components\n";
  return kExitOk;
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
  Loaded l = load(cfg);
  const Analysis a = analyze(std::move(l.panel), FitOptions{{}, cfg.threads});
  write_file(prepare_out(cfg.out_dir) / "reconstruction.csv", reconstruction_csv(a.panel, a.reconstruction));
  out << "reconstructed " << a.panel.n_countries() << " countries\n";
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  Loaded l = load(cfg);
  const std::size_t component = resolve_component(l.panel, cfg.gamma_component);
  const int year = report_year(l.panel, cfg);
  std::size_t price_index = l.panel.n_vars() > 1 ? 1 : 0;
  if (l.manifest.price_code) price_index = *l.panel.variable_index(*l.manifest.price_code);
  std::vector<int> penn_years = cfg.penn_years;
  if (penn_years.empty()) penn_years = {l.panel.first_year(), l.panel.last_year()};
  std::vector<Observation> projection;
  if (!cfg.projection.empty()) projection = to_observations(parse_long_csv(read_file(cfg.projection)));

  const Analysis a = analyze(std::move(l.panel), FitOptions{{}, cfg.threads});
  const fs::path dir = prepare_out(cfg.out_dir);
  write_fit(dir, a);
  write_decomposition(dir, a, component);
  write_file(dir / "reconstruction.csv", reconstruction_csv(a.panel, a.reconstruction));

  const ContributionTable table = contribution_table(a.panel, a.decomposition, a.reconstruction.error_acc, year);
  write_file(dir / "table.csv", table_csv(table));
  write_file(dir / "table.json", table_json(table));
  write_file(dir / "ranks.csv", ranks_csv(rank_table(target_series(a.panel, projection))));

  std::vector<PennScatter> scatters;
  for (int y : penn_years) scatters.push_back(penn_scatter(a.panel, price_index, y));
  write_file(dir / "penn_points.csv", penn_points_csv(scatters));
  write_file(dir / "penn_trend.csv", penn_trend_csv(scatters));
  write_file(dir / "panel.csv", write_long_csv(to_rows(a.panel)));

  out << "report for " << year << " written to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_synth(const SynthConfig& cfg, std::ostream& out) {
  SynthSpec spec;
  spec.n_countries = cfg.countries;
  spec.n_years = cfg.years;
  spec.n_vars = cfg.vars;
  spec.first_year = cfg.first_year;
  spec.seed = cfg.seed;
  spec.noise_scale = cfg.noise;
  const SynthPanel synth = generate(spec);
  const fs::path dir = prepare_out(cfg.out_dir);
  write_file(dir / "data.csv", write_long_csv(to_rows(synth.panel)));
  write_file(dir / "manifest.txt", write_manifest(synth_manifest(synth)));

  std::vector<std::string> header{"interval_start", "interval_end", "alpha"};
  for (const auto& code : synth.path.codes) header.push_back("beta_" + code);
  CsvBuilder csv(header);
  for (std::size_t t = 0; t < synth.path.n_intervals(); ++t) {
    std::vector<std::string> row{std::to_string(synth.path.interval_start(t)), std::to_string(synth.path.interval_end(t)),
                                 format_exact(synth.path.alpha[t])};
    for (double b : synth.path.beta[t]) row.push_back(format_exact(b));
    csv.row(row);
  }
  write_file(dir / "true_path.csv", csv.str());
  out << "synthetic panel: " << spec.n_countries << " x " << spec.n_years << " x " << spec.n_vars << " (seed "
      << spec.seed << ") written to " << dir.string() << "\n";
  return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--manifest", cfg.manifest, "Dataset manifest")->required()->check(CLI::ExistingFile);
  cmd->add_option("--input", cfg.inputs, "Long-format CSV input (repeatable)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", cfg.out_dir, "Output directory");
  cmd->add_option("--base-year", cfg.base_year, "First panel year (overrides the manifest)");
  cmd->add_option("--threads", cfg.threads, "Worker threads for the interval fits")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-varying coefficient panel regression and growth decomposition", "tvc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tvc 1.0.0");

  RunConfig cfg;
  SynthConfig synth;

  auto* ingest = app.add_subcommand("ingest", "Validate inputs and write the assembled panel");
  add_common(ingest, cfg);

  auto* fit = app.add_subcommand("fit", "Fit the coefficient path");
  add_common(fit, cfg);

  auto* decompose = app.add_subcommand("decompose", "Component contributions, kappa paths and gamma");
  add_common(decompose, cfg);
  decompose->add_option("--gamma-component", cfg.gamma_component, "Variable code or 1-based index (default: last)");

  auto* reconstruct = app.add_subcommand("reconstruct", "Data, regressed and fully simulated GDP series");
  add_common(reconstruct, cfg);

  auto* report = app.add_subcommand("report", "Contribution table and all plot-data exports");
  add_common(report, cfg);
  report->add_option("--report-year", cfg.report_year, "Table year (default: last panel year)");
  report->add_option("--gamma-component", cfg.gamma_component, "Variable code or 1-based index (default: last)");
  report->add_option("--penn-year", cfg.penn_years, "Years for the price/GDP scatter (default: first and last)");
  report->add_option("--projection", cfg.projection, "Long CSV of target values beyond the panel, for ranks")
      ->check(CLI::ExistingFile);

  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic panel from a known coefficient path");
  synth_cmd->add_option("--out", synth.out_dir, "Output directory");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed");
  synth_cmd->add_option("--countries", synth.countries, "Number of countries");
  synth_cmd->add_option("--years", synth.years, "Number of years");
  synth_cmd->add_option("--vars", synth.vars, "Number of variables");
  synth_cmd->add_option("--first-year", synth.first_year, "First calendar year");
  synth_cmd->add_option("--noise", synth.noise, "Noise scale on the target growth")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return cmd_ingest(cfg, out);
    if (*fit) return cmd_fit(cfg, out);
    if (*decompose) return cmd_decompose(cfg, out);
    if (*reconstruct) return cmd_reconstruct(cfg, out);
    if (*report) return cmd_report(cfg, out);
    if (*synth_cmd) return cmd_synth(synth, out);
  } catch (const NumericalError& e) {
    err << "error[numerical]: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DataError& e) {
    err << "error[data]: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error[data]: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace tvc::cli
