// Copyright 2026 The sombor-rg Authors
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

#include "sombor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "sombor/error.hpp"
#include "sombor/spectral.hpp"
#include "sombor/theory.hpp"

namespace sombor::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

double to_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw ArgumentError("");
    return value;
  } catch (const std::exception&) {
    throw ArgumentError("not a number: '" + text + "'");
  }
}

std::size_t to_count(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw ArgumentError("");
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw ArgumentError("not a count: '" + text + "'");
  }
}

GridAxis axis_of(const RunConfig& config) {
  if (config.grid_axis == "k") return GridAxis::kMeanDegree;
  if (config.grid_axis == "control") return GridAxis::kControl;
  throw ArgumentError("--grid-axis must be 'k' or 'control'");
}

std::vector<double> controls_of(const RunConfig& config, const ModelShape& shape) {
  if (config.grid.empty()) throw ArgumentError("--grid is required");
  const std::vector<double> grid = parse_grid(config.grid);
  if (axis_of(config) == GridAxis::kControl) return grid;
  std::vector<double> controls;
  for (const double k : grid) controls.push_back(theory::control_for_mean_degree(shape, k));
  return controls;
}

std::size_t replicas_of(const RunConfig& config, const ModelShape& shape) {
  return config.replicas != 0 ? config.replicas : default_replicas(shape.n, config.replica_cap);
}

SweepPlan sweep_plan_of(const RunConfig& config, const ModelShape& shape, std::uint64_t seed) {
  SweepPlan plan;
  plan.shape = shape;
  plan.controls = controls_of(config, shape);
  plan.specs = specs_of(config);
  plan.replicas = replicas_of(config, shape);
  plan.master_seed = seed;
  plan.threads = config.threads;
  plan.validate();
  return plan;
}

// Report lines are for people; data files keep full precision.
std::string brief(double value) {
  std::ostringstream text;
  text << std::setprecision(6) << value;
  return text.str();
}

void emit_result(const RunConfig& config, const SweepResult& result, std::ostream& out) {
  const io::Format format = io::parse_format(config.format);
  if (config.out.empty()) {
    if (format == io::Format::kJson) {
      io::write_json(out, result);
    } else {
      io::write_csv(out, result);
    }
    return;
  }
  io::save_result(config.out, result, format);
  out << "wrote " << result.points.size() << " grid points x " << result.specs.size()
      << " indices to " << config.out << " (" << brief(result.wall_seconds) << " s)\n";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

// Config errors map to exit 2, everything else raised while running to 3.
template <typename Configure, typename Execute>
int guarded(std::ostream& err, Configure&& configure, Execute&& execute) {
  try {
    configure();
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  try {
    execute();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 4 && (parts[0] == "log" || parts[0] == "lin")) {
    const double lo = to_double(parts[1]);
    const double hi = to_double(parts[2]);
    const std::size_t count = to_count(parts[3]);
    return parts[0] == "log" ? log_grid(lo, hi, count) : linear_grid(lo, hi, count);
  }
  if (parts.size() != 1) throw ArgumentError("bad grid '" + text + "'");
  std::vector<double> values;
  for (const auto& item : split(text, ',')) values.push_back(to_double(item));
  if (values.empty()) throw ArgumentError("empty grid");
  return values;
}

ModelShape parse_member(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 2 && (parts[0] == "er" || parts[0] == "rg")) {
    const std::size_t n = to_count(parts[1]);
    return parts[0] == "er" ? ModelShape::er(n) : ModelShape::rg(n);
  }
  if (parts.size() == 3 && parts[0] == "br") {
    return ModelShape::br(to_count(parts[1]), to_count(parts[2]));
  }
  throw ArgumentError("bad member '" + text + "' (expected er:N, rg:N or br:N1:N2)");
}

ModelShape shape_of(const RunConfig& config) {
  switch (parse_family(config.model)) {
    case ModelFamily::kEr:
      if (config.n == 0) throw ArgumentError("--n is required for er");
      return ModelShape::er(config.n);
    case ModelFamily::kRg:
      if (config.n == 0) throw ArgumentError("--n is required for rg");
      return ModelShape::rg(config.n);
    case ModelFamily::kBr:
      if (config.n1 != 0 && config.n2 != 0) return ModelShape::br(config.n1, config.n2);
      if (config.n != 0 && config.n % 2 == 0) return ModelShape::br(config.n / 2, config.n / 2);
      throw ArgumentError("br needs --n1 and --n2 (or an even --n)");
  }
  throw ArgumentError("unknown model");
}

std::vector<IndexSpec> specs_of(const RunConfig& config) {
  std::vector<IndexSpec> specs;
  auto need_alphas = [&](const std::string& name) {
    if (config.alphas.empty()) throw ArgumentError("index '" + name + "' needs --alpha");
  };
  auto need_beta = [&](const std::string& name) {
    if (!config.beta) throw ArgumentError("index '" + name + "' needs --beta");
  };
  for (const std::string& name : config.indices) {
    if (name == "sombor" || name == "so") {
      specs.push_back(IndexSpec::sombor());
    } else if (name == "modified_sombor" || name == "mso") {
      specs.push_back(IndexSpec::modified_sombor());
    } else if (name == "banhatti_sombor" || name == "bso") {
      specs.push_back(IndexSpec::banhatti_sombor());
    } else if (name == "alpha_sombor") {
      need_alphas(name);
      for (const double a : config.alphas) specs.push_back(IndexSpec::alpha_sombor(a));
    } else if (name == "complexity") {
      need_alphas(name);
      for (const double a : config.alphas) specs.push_back(IndexSpec::complexity(a));
    } else if (name == "sum_connectivity") {
      need_beta(name);
      specs.push_back(IndexSpec::sum_connectivity(*config.beta));
    } else if (name == "ka1") {
      need_alphas(name);
      need_beta(name);
      for (const double a : config.alphas) specs.push_back(IndexSpec::general(a, *config.beta));
    } else {
      throw ArgumentError("unknown index '" + name + "'");
    }
  }
  if (config.indices.empty() && !config.alphas.empty()) {
    need_beta("ka1");
    for (const double a : config.alphas) specs.push_back(IndexSpec::general(a, *config.beta));
  }
  if (specs.empty()) throw ArgumentError("no index requested (use --index or --alpha/--beta)");
  std::vector<IndexSpec> unique;
  for (const IndexSpec& spec : specs) {
    if (std::find(unique.begin(), unique.end(), spec) == unique.end()) unique.push_back(spec);
  }
  return unique;
}

void apply_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ArgumentError("config file must hold a JSON object");
  auto list_of_doubles = [](const nlohmann::json& j) {
    return j.is_array() ? j.get<std::vector<double>>() : std::vector<double>{j.get<double>()};
  };
  auto list_of_strings = [](const nlohmann::json& j) {
    return j.is_array() ? j.get<std::vector<std::string>>()
                        : std::vector<std::string>{j.get<std::string>()};
  };
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "model") config.model = value.get<std::string>();
      else if (key == "n") config.n = value.get<std::size_t>();
      else if (key == "n1") config.n1 = value.get<std::size_t>();
      else if (key == "n2") config.n2 = value.get<std::size_t>();
      else if (key == "grid") config.grid = value.get<std::string>();
      else if (key == "grid_axis") config.grid_axis = value.get<std::string>();
      else if (key == "alpha") config.alphas = list_of_doubles(value);
      else if (key == "beta") config.beta = value.get<double>();
      else if (key == "index") config.indices = list_of_strings(value);
      else if (key == "replicas") config.replicas = value.get<std::size_t>();
      else if (key == "replica_cap") config.replica_cap = value.get<std::size_t>();
      else if (key == "spectral_replicas") config.spectral_replicas = value.get<std::size_t>();
      else if (key == "seed") config.seed = value.get<std::uint64_t>();
      else if (key == "out") config.out = value.get<std::string>();
      else if (key == "format") config.format = value.get<std::string>();
      else if (key == "threads") config.threads = value.get<unsigned>();
      else if (key == "inputs") config.inputs = list_of_strings(value);
      else if (key == "members") config.members = list_of_strings(value);
      else if (key == "threshold") config.threshold = value.get<double>();
      else if (key == "merged_out") config.merged_out = value.get<std::string>();
      else if (key == "scatter_out") config.scatter_out = value.get<std::string>();
      else throw ArgumentError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("config file: ") + e.what());
  }
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SweepPlan plan;
  return guarded(
      err,
      [&] {
        plan = sweep_plan_of(config, shape_of(config), config.seed);
        io::parse_format(config.format);
      },
      [&] { emit_result(config, run_sweep(plan), out); });
}

int cmd_collapse(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<SweepResult> results;
  std::vector<SweepPlan> plans;
  std::vector<IndexSpec> specs;

  auto check_specs = [&] {
    specs = results.front().specs;
    for (const SweepResult& r : results) {
      for (const IndexSpec& spec : specs) {
        if (std::find(r.specs.begin(), r.specs.end(), spec) == r.specs.end()) {
          throw ArgumentError("incompatible inputs: index " + spec.label() +
                              " missing from one result");
        }
      }
    }
  };

  return guarded(
      err,
      [&] {
        if (!config.inputs.empty()) {
          if (config.inputs.size() < 2) throw ArgumentError("collapse needs >= 2 --inputs");
          for (const auto& path : config.inputs) results.push_back(io::load_result(path));
          check_specs();
        } else {
          if (config.members.size() < 2) {
            throw ArgumentError("collapse needs >= 2 --inputs or >= 2 --members");
          }
          for (std::size_t i = 0; i < config.members.size(); ++i) {
            plans.push_back(
                sweep_plan_of(config, parse_member(config.members[i]), combine_seed(config.seed, i)));
          }
        }
        if (!(config.threshold > 0.0)) throw ArgumentError("--threshold must be positive");
      },
      [&] {
        for (const SweepPlan& plan : plans) results.push_back(run_sweep(plan));
        if (!plans.empty()) check_specs();

        std::ofstream merged;
        if (!config.merged_out.empty()) {
          merged = open_output(config.merged_out);
          merged << "curve,spec_name,x,y\n";
        }
        for (const IndexSpec& spec : specs) {
          std::vector<Curve> curves;
          for (const SweepResult& r : results) curves.push_back(normalize_for_collapse(r, spec));
          const double distance = collapse_distance(curves);
          out << spec.label() << " distance=" << brief(distance)
              << " threshold=" << brief(config.threshold) << ' '
              << (distance < config.threshold ? "PASS" : "FAIL") << '\n';
          if (merged.is_open()) {
            for (const Curve& c : curves) {
              for (std::size_t i = 0; i < c.x.size(); ++i) {
                merged << c.label << ',' << spec.label() << ',' << io::format_number(c.x[i])
                       << ',' << io::format_number(c.y[i]) << '\n';
              }
            }
          }
        }
      });
}

int cmd_correlate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CorrelationPlan plan;
  CorrelationReport report;
  return guarded(
      err,
      [&] {
        plan.shape = shape_of(config);
        if (config.grid.empty()) throw ArgumentError("--grid is required");
        if (axis_of(config) != GridAxis::kMeanDegree) {
          throw ArgumentError("correlate takes its grid over <k> (--grid-axis k)");
        }
        plan.mean_degrees = parse_grid(config.grid);
        for (const double k : plan.mean_degrees) theory::control_for_mean_degree(plan.shape, k);
        if (config.alphas.empty()) throw ArgumentError("correlate needs --alpha");
        for (const double a : config.alphas) IndexSpec::complexity(a);
        plan.alphas = config.alphas;
        plan.index_replicas = replicas_of(config, plan.shape);
        plan.spectral_replicas = config.spectral_replicas != 0
                                     ? config.spectral_replicas
                                     : std::max<std::size_t>(1, plan.index_replicas / 10);
        plan.master_seed = config.seed;
        plan.threads = config.threads;
      },
      [&] {
        report = index_entropy_correlation(plan);
        for (const AlphaCorrelation& entry : report.per_alpha) {
          out << "alpha=" << brief(entry.alpha) << " rho=";
          if (entry.rho) {
            out << brief(*entry.rho) << '\n';
          } else {
            out << "undefined (" << entry.note << ")\n";
          }
        }
        if (!config.out.empty()) {
          std::ofstream curves = open_output(config.out);
          curves << "# sombor-rg " << SOMBOR_VERSION << " model=" << plan.shape.family_name()
                 << " n=" << plan.shape.n << " master_seed=" << plan.master_seed
                 << " index_replicas=" << plan.index_replicas
                 << " spectral_replicas=" << plan.spectral_replicas << '\n';
          curves << "mean_k,control,normalized_entropy,alpha,scaled_index\n";
          for (const AlphaCorrelation& entry : report.per_alpha) {
            for (std::size_t i = 0; i < report.mean_degrees.size(); ++i) {
              curves << io::format_number(report.mean_degrees[i]) << ','
                     << io::format_number(report.controls[i]) << ','
                     << io::format_number(report.normalized_entropy[i]) << ','
                     << io::format_number(entry.alpha) << ','
                     << io::format_number(entry.scaled_index[i]) << '\n';
            }
          }
        }
        if (!config.scatter_out.empty()) {
          std::ofstream scatter = open_output(config.scatter_out);
          scatter << "alpha,scaled_index,normalized_entropy\n";
          for (const AlphaCorrelation& entry : report.per_alpha) {
            for (std::size_t i = 0; i < report.mean_degrees.size(); ++i) {
              scatter << io::format_number(entry.alpha) << ','
                      << io::format_number(entry.scaled_index[i]) << ','
                      << io::format_number(report.normalized_entropy[i]) << '\n';
            }
          }
        }
      });
}

int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ModelShape shape;
  std::vector<double> controls;
  std::vector<IndexSpec> specs;
  return guarded(
      err,
      [&] {
        shape = shape_of(config);
        controls = controls_of(config, shape);
        specs = specs_of(config);
        for (const double c : controls) validate(shape.at(c));
      },
      [&] {
        std::ofstream file;
        if (!config.out.empty()) file = open_output(config.out);
        std::ostream& table = config.out.empty() ? out : file;
        table << "model,n,n1,n2,control,mean_k,spec_name,prediction,normalized,regime\n";
        for (const double control : controls) {
          SweepPoint point;
          point.control = control;
          const ModelParams params = shape.at(control);
          point.mean_k = theory::analytic_mean_degree(params);
          if (const auto* br = std::get_if<BrParams>(&params)) {
            std::tie(point.mean_k1, point.mean_k2) = theory::br_mean_degrees(br->n1, br->n2, br->p);
          } else {
            point.mean_k1 = point.mean_k2 = point.mean_k;
          }
          for (const IndexSpec& spec : specs) {
            const double prediction = io::point_prediction(shape, point, spec);
            const double normalized = std::isfinite(prediction)
                                          ? collapse_axes(shape, point, spec, prediction).y
                                          : prediction;
            table << shape.family_name() << ',' << shape.n << ',' << shape.n1 << ',' << shape.n2
                  << ',' << io::format_number(control) << ','
                  << io::format_number(point.mean_k) << ',' << spec.label() << ','
                  << io::format_number(prediction) << ',' << io::format_number(normalized) << ','
                  << (point.mean_k >= theory::kDenseThreshold ? "dense" : "below_dense_threshold")
                  << '\n';
          }
        }
      });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sombor-family indices on random graph ensembles", "sombor"};
  app.set_version_flag("--version", std::string("sombor ") + SOMBOR_VERSION);
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path;
  std::string alpha_text;
  std::string index_text;
  double beta = 0.0;
  std::string seed_text;

  // Options whose presence on the command line overrides the config file.
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;
  auto track = [&](CLI::Option* option, std::function<void(RunConfig&)> apply) {
    overrides.emplace_back(option, std::move(apply));
  };

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; flags override it");
    track(sub->add_option("--model", flags.model, "er | rg | br"),
          [&](RunConfig& c) { c.model = flags.model; });
    track(sub->add_option("--n", flags.n, "vertex count (ER/RG; even n for BR n1=n2=n/2)"),
          [&](RunConfig& c) { c.n = flags.n; });
    track(sub->add_option("--n1", flags.n1, "BR set 1 size"),
          [&](RunConfig& c) { c.n1 = flags.n1; });
    track(sub->add_option("--n2", flags.n2, "BR set 2 size"),
          [&](RunConfig& c) { c.n2 = flags.n2; });
    track(sub->add_option("--grid", flags.grid, "log:lo:hi:count, lin:lo:hi:count or a,b,c"),
          [&](RunConfig& c) { c.grid = flags.grid; });
    track(sub->add_option("--grid-axis", flags.grid_axis, "k (mean degree) or control (p / r)"),
          [&](RunConfig& c) { c.grid_axis = flags.grid_axis; });
    track(sub->add_option("--alpha", alpha_text, "comma-separated alpha values"),
          [&](RunConfig& c) {
            c.alphas.clear();
            for (const auto& a : split(alpha_text, ',')) c.alphas.push_back(to_double(a));
          });
    track(sub->add_option("--beta", beta, "beta for ka1 / sum_connectivity"),
          [&](RunConfig& c) { c.beta = beta; });
    track(sub->add_option("--index", index_text,
                          "comma-separated: sombor, modified_sombor, banhatti_sombor, "
                          "alpha_sombor, sum_connectivity, complexity, ka1"),
          [&](RunConfig& c) { c.indices = split(index_text, ','); });
    track(sub->add_option("--replicas", flags.replicas, "replicas per point (0: ceil(1e7/n))"),
          [&](RunConfig& c) { c.replicas = flags.replicas; });
    track(sub->add_option("--replica-cap", flags.replica_cap, "cap on the default replica count"),
          [&](RunConfig& c) { c.replica_cap = flags.replica_cap; });
    track(sub->add_option("--seed", seed_text, "master seed (unsigned 64-bit)"),
          [&](RunConfig& c) { c.seed = to_count(seed_text); });
    track(sub->add_option("--out", flags.out, "output path (default: stdout)"),
          [&](RunConfig& c) { c.out = flags.out; });
    track(sub->add_option("--format", flags.format, "csv | json"),
          [&](RunConfig& c) { c.format = flags.format; });
    track(sub->add_option("--threads", flags.threads, "worker threads (0: all cores)"),
          [&](RunConfig& c) { c.threads = flags.threads; });
  };

  CLI::App* sweep = app.add_subcommand("sweep", "sample an ensemble over a parameter grid");
  CLI::App* collapse = app.add_subcommand("collapse", "measure how well curves collapse");
  CLI::App* correlate =
      app.add_subcommand("correlate", "correlate KA(alpha,-1/alpha) with eigenvector entropy");
  CLI::App* predict = app.add_subcommand("predict", "print dense-limit predictions");
  for (CLI::App* sub : {sweep, collapse, correlate, predict}) add_shared(sub);

  std::string inputs_text;
  std::string members_text;
  track(collapse->add_option("--inputs", flags.inputs, "result files (CSV or JSON)"),
        [&](RunConfig& c) { c.inputs = flags.inputs; });
  track(collapse->add_option("--members", members_text, "inline plan, e.g. er:125,er:250"),
        [&](RunConfig& c) { c.members = split(members_text, ','); });
  track(collapse->add_option("--threshold", flags.threshold, "pass threshold on the distance"),
        [&](RunConfig& c) { c.threshold = flags.threshold; });
  track(collapse->add_option("--merged-out", flags.merged_out, "write all normalized curves"),
        [&](RunConfig& c) { c.merged_out = flags.merged_out; });
  track(correlate->add_option("--spectral-replicas", flags.spectral_replicas,
                              "diagonalized replicas per point (0: replicas/10)"),
        [&](RunConfig& c) { c.spectral_replicas = flags.spectral_replicas; });
  track(correlate->add_option("--scatter-out", flags.scatter_out, "write (index, entropy) pairs"),
        [&](RunConfig& c) { c.scatter_out = flags.scatter_out; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help and version requests arrive here too, with exit code 0.
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  RunConfig config;
  config.command = chosen->get_name();
  try {
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw ArgumentError("cannot open config file '" + config_path + "'");
      nlohmann::json doc;
      try {
        file >> doc;
      } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("config file is not valid JSON: ") + e.what());
      }
      apply_json(config, doc);
    }
    for (const auto& [option, apply] : overrides) {
      if (option->count() > 0) apply(config);
    }
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  if (chosen == sweep) return cmd_sweep(config, out, err);
  if (chosen == collapse) return cmd_collapse(config, out, err);
  if (chosen == correlate) return cmd_correlate(config, out, err);
  return cmd_predict(config, out, err);
}

}  // namespace sombor::cli
