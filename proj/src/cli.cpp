#include "leja/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "leja/bounds.hpp"
#include "leja/csv.hpp"
#include "leja/domain.hpp"
#include "leja/fast_leja.hpp"
#include "leja/interp.hpp"
#include "leja/potential.hpp"
#include "leja/star.hpp"

namespace leja {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_report(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + path);
  file << text;
}

std::string sibling_path(const std::string& path, const std::string& tag) {
  const std::filesystem::path p(path);
  std::filesystem::path q = p.parent_path();
  q /= p.stem().string() + tag + p.extension().string();
  return q.string();
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json json_header(const char* command) {
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = command;
  return j;
}

DomainSpec domain_or_usage(const std::string& text) {
  try {
    return parse_domain(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad --domain: ") + e.what());
  }
}

std::vector<int> stages_or_default(const RunConfig& config, std::vector<int> fallback) {
  std::vector<int> stages = config.stages.empty() ? std::move(fallback) : config.stages;
  int prev = 0;
  for (int s : stages) {
    if (s <= prev) throw UsageError("--stages must be strictly increasing");
    prev = s;
  }
  return stages;
}

int run_gen(const RunConfig& config, std::ostream& out) {
  const DomainSpec dom = domain_or_usage(config.domain);
  if (config.n < 1) throw UsageError("--n must be >= 1");
  const LejaState state = generate(dom, static_cast<size_t>(config.n), config.s1);
  const std::vector<double> params = state.insertion_parameters();
  const std::vector<std::complex<double>> pts = state.insertion_points();

  if (config.format == OutputFormat::csv) {
    std::ostringstream csv;
    csv << "index,parameter,re,im\n";
    for (size_t i = 0; i < params.size(); ++i) {
      csv << i << ',' << format_double(params[i]) << ','
          << format_double(pts[i].real()) << ',' << format_double(pts[i].imag())
          << '\n';
    }
    write_report(csv.str(), config.output, out);
  } else {
    ordered_json j = json_header("gen");
    j["domain"] = dom.to_string();
    j["n"] = config.n;
    j["s1"] = config.s1;
    j["points"] = ordered_json::array();
    for (size_t i = 0; i < params.size(); ++i) {
      j["points"].push_back({{"index", i},
                             {"parameter", params[i]},
                             {"re", pts[i].real()},
                             {"im", pts[i].imag()}});
    }
    write_report(json_text(j), config.output, out);
  }
  return 0;
}

int run_star(const RunConfig& config, std::ostream& out) {
  const DomainSpec dom = domain_or_usage(config.domain);
  if (!dom.is_real()) throw UsageError("star diagnostics need a real domain");

  if (!config.stages.empty()) {
    const std::vector<int> stages = stages_or_default(config, {});
    const std::vector<double> seq =
        generate_real(dom, static_cast<size_t>(stages.back()), config.s1);
    const auto trend = star_trend(seq, stages);
    if (config.format == OutputFormat::csv) {
      std::ostringstream csv;
      csv << "n,max_ratio\n";
      for (const auto& [n, r] : trend) csv << n << ',' << format_double(r) << '\n';
      write_report(csv.str(), config.output, out);
    } else {
      ordered_json j = json_header("star");
      j["trend"] = ordered_json::array();
      for (const auto& [n, r] : trend) j["trend"].push_back({{"n", n}, {"max_ratio", r}});
      write_report(json_text(j), config.output, out);
    }
    return 0;
  }

  if (config.n < 2) throw UsageError("--n must be >= 2");
  const std::vector<double> seq =
      generate_real(dom, static_cast<size_t>(config.n), config.s1);
  const StarReport report = star_metrics(sorted_prefix(seq, config.n));
  if (config.format == OutputFormat::csv) {
    write_report(star_csv(report), config.output, out);
  } else {
    ordered_json j = json_header("star");
    j["n"] = report.n;
    j["entries"] = ordered_json::array();
    for (const StarEntry& e : report.entries) {
      j["entries"].push_back({{"j", e.j},
                              {"midpoint", e.midpoint},
                              {"s", e.s},
                              {"H", e.H},
                              {"ratio", e.ratio}});
    }
    j["max_ratio"] = report.max_ratio;
    j["argmax_j"] = report.argmax_j;
    write_report(json_text(j), config.output, out);
  }
  return 0;
}

int run_growth(const RunConfig& config, std::ostream& out) {
  const DomainSpec dom = domain_or_usage(config.domain);
  const std::vector<int> stages =
      stages_or_default(config, {16, 32, 64, 128, 256, 512, 1024});
  const LejaState state =
      generate(dom, static_cast<size_t>(stages.back()), config.s1);
  const GrowthSeries series =
      growth_report(state.insertion_points(), dom, stages);

  if (config.format == OutputFormat::csv) {
    write_report(growth_csv(series), config.output, out);
  } else {
    ordered_json j = json_header("growth");
    j["rows"] = ordered_json::array();
    for (const GrowthRow& r : series.rows) {
      j["rows"].push_back({{"n", r.n},
                           {"log_vdm", r.log_vdm},
                           {"dn_root", r.dn_root},
                           {"step_ratio", r.step_log},
                           {"tau_ratio", r.tau_ratio},
                           {"pseudo_growth", r.pseudo_growth}});
    }
    write_report(json_text(j), config.output, out);
  }
  return 0;
}

NodeSource source_or_usage(const std::string& text) {
  NodeSource source = NodeSource::fast_leja;
  if (!parse_node_source(text, source)) {
    throw UsageError("unknown --source: " + text);
  }
  return source;
}

int run_lebesgue(const RunConfig& config, std::ostream& out) {
  const DomainSpec dom = domain_or_usage(config.domain);
  if (!dom.is_real()) throw UsageError("lebesgue needs a real domain");
  const std::vector<int> stages = stages_or_default(config, {4, 8, 16, 32, 64});
  const NodeSource source = source_or_usage(config.source);

  std::vector<LebesgueReport> rows;
  rows.reserve(stages.size());
  for (int n : stages) {
    rows.push_back(
        lebesgue_constant(make_nodes(source, dom, n), dom, config.grid_multiplier));
  }
  if (config.format == OutputFormat::csv) {
    write_report(lebesgue_csv(rows), config.output, out);
  } else {
    ordered_json j = json_header("lebesgue");
    j["rows"] = ordered_json::array();
    for (const LebesgueReport& r : rows) {
      j["rows"].push_back({{"n", r.n},
                           {"lambda", r.lambda},
                           {"lambda_nth_root", std::pow(r.lambda, 1.0 / r.n)},
                           {"argmax_x", r.argmax_x}});
    }
    write_report(json_text(j), config.output, out);
  }
  return 0;
}

int run_interp(const RunConfig& config, std::ostream& out) {
  const DomainSpec dom = domain_or_usage(config.domain);
  const std::vector<int> stages = stages_or_default(config, {5, 10, 15, 20, 25, 30});
  const NodeSource source = source_or_usage(config.source);
  if (find_function(config.fn_id) == nullptr) {
    throw UsageError("unknown --fn: " + config.fn_id);
  }
  const auto rows = error_study(config.fn_id, source, stages, dom);
  if (config.format == OutputFormat::csv) {
    write_report(error_study_csv(rows), config.output, out);
  } else {
    ordered_json j = json_header("interp");
    j["fn"] = config.fn_id;
    j["source"] = node_source_name(source);
    j["rows"] = ordered_json::array();
    for (const auto& [n, err] : rows) {
      j["rows"].push_back({{"n", n}, {"sup_error", err}});
    }
    write_report(json_text(j), config.output, out);
  }
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  if (config.trials < 1) throw UsageError("--trials must be >= 1");
  if (config.which != "lemma2" && config.which != "prop3" && config.which != "all") {
    throw UsageError("verify target must be lemma2, prop3 or all");
  }
  const std::vector<BoundCheck> checks = run_trials(config.trials, config.seed);

  if (config.format == OutputFormat::csv) {
    write_report(trials_csv(checks), config.output, out);
  } else {
    ordered_json j = json_header("verify");
    j["target"] = config.which;
    j["trials"] = ordered_json::array();
    for (size_t i = 0; i < checks.size(); ++i) {
      const BoundCheck& c = checks[i];
      j["trials"].push_back({{"trial", i},
                             {"epsilon", c.config.epsilon},
                             {"n1", c.config.zetas.size()},
                             {"n2", c.config.etas.size()},
                             {"m", c.m},
                             {"lemma2_ok", c.lemma2_ok},
                             {"prop3_ok", c.prop3_ok},
                             {"prop3_log_margin", c.prop3_margin}});
    }
    write_report(json_text(j), config.output, out);
  }

  const bool care_lemma2 = config.which != "prop3";
  const bool care_prop3 = config.which != "lemma2";
  for (const BoundCheck& c : checks) {
    if ((care_lemma2 && !c.lemma2_ok) || (care_prop3 && !c.prop3_ok)) return 1;
  }
  return 0;
}

int run_fig3(const RunConfig& config, std::ostream& out) {
  const Fig3Data data = fig3_data();
  if (config.format == OutputFormat::csv) {
    if (config.output.empty()) {
      out << fig3_graph_csv(data) << '\n' << fig3_circles_csv(data);
    } else {
      write_report(fig3_graph_csv(data), config.output, out);
      write_report(fig3_circles_csv(data), sibling_path(config.output, "_mid"), out);
    }
  } else {
    ordered_json j = json_header("fig3");
    j["graph"] = ordered_json::array();
    for (size_t i = 0; i < data.xs.size(); ++i) {
      j["graph"].push_back({{"x", data.xs[i]}, {"p13", data.p13[i]}});
    }
    j["circles"] = ordered_json::array();
    for (size_t i = 0; i < data.midpoints.size(); ++i) {
      j["circles"].push_back(
          {{"midpoint", data.midpoints[i]}, {"2p13", data.twice_p13[i]}});
    }
    write_report(json_text(j), config.output, out);
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.s1 > 0.0 && config.s1 < 1.0)) {
      throw UsageError("--s1 must lie in (0, 1)");
    }
    switch (config.command) {
      case Command::gen: return run_gen(config, out);
      case Command::star: return run_star(config, out);
      case Command::growth: return run_growth(config, out);
      case Command::lebesgue: return run_lebesgue(config, out);
      case Command::interp: return run_interp(config, out);
      case Command::verify: return run_verify(config, out);
      case Command::fig3: return run_fig3(config, out);
    }
    throw UsageError("unknown command");
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fast Leja point generator and diagnostics"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";
  std::string stages_text;

  const auto add_common = [&](CLI::App* sub, bool with_domain) {
    if (with_domain) {
      sub->add_option("--domain", config.domain,
                      "domain: \"a,b\", \"a,b;c,d\" or \"curve:<id>\"");
    }
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", config.output, "output path (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate fast Leja points");
  add_common(gen, true);
  gen->add_option("--n", config.n, "number of points");
  gen->add_option("--s1", config.s1, "first candidate parameter");

  CLI::App* star = app.add_subcommand("star", "gap-ratio diagnostics");
  add_common(star, true);
  star->add_option("--n", config.n, "row size for the per-gap report");
  star->add_option("--stages", stages_text, "comma list: emit max_ratio trend");
  star->add_option("--s1", config.s1, "first candidate parameter");

  CLI::App* growth = app.add_subcommand("growth", "Vandermonde growth report");
  add_common(growth, true);
  growth->add_option("--stages", stages_text, "comma list of prefix sizes");
  growth->add_option("--s1", config.s1, "first candidate parameter");

  CLI::App* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants");
  add_common(lebesgue, true);
  lebesgue->add_option("--stages", stages_text, "comma list of node counts");
  lebesgue->add_option("--source", config.source,
                       "fast-leja, true-leja, chebyshev or equispaced");
  lebesgue->add_option("--grid", config.grid_multiplier, "grid points per n^2");

  CLI::App* interp = app.add_subcommand("interp", "interpolation error study");
  add_common(interp, true);
  interp->add_option("--stages", stages_text, "comma list of node counts");
  interp->add_option("--fn", config.fn_id, "sample function id");
  interp->add_option("--source", config.source,
                     "fast-leja, true-leja, chebyshev or equispaced");

  CLI::App* verify = app.add_subcommand("verify", "randomized bound checks");
  add_common(verify, false);
  verify->add_option("target", config.which, "lemma2, prop3 or all");
  verify->add_option("--trials", config.trials, "number of random configurations");
  verify->add_option("--seed", config.seed, "base seed");

  CLI::App* fig3 = app.add_subcommand("fig3", "13-point ratio plot data");
  add_common(fig3, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!stages_text.empty()) {
    config.stages.clear();
    std::stringstream ss(stages_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        config.stages.push_back(v);
      } catch (const std::exception&) {
        err << "bad --stages entry: " << item << '\n';
        return 2;
      }
    }
  }

  if (gen->parsed()) config.command = Command::gen;
  else if (star->parsed()) config.command = Command::star;
  else if (growth->parsed()) config.command = Command::growth;
  else if (lebesgue->parsed()) config.command = Command::lebesgue;
  else if (interp->parsed()) config.command = Command::interp;
  else if (verify->parsed()) config.command = Command::verify;
  else config.command = Command::fig3;

  return run(config, out, err);
}

}  // namespace leja
