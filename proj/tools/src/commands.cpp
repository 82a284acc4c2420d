#include "cabounds_cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <new>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cabounds/array_io.hpp"
#include "cabounds/bounds.hpp"
#include "cabounds/construct.hpp"
#include "cabounds/error.hpp"
#include "cabounds/verify.hpp"

namespace cabounds::cli {

namespace {

using json = nlohmann::ordered_json;

struct Range {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::uint64_t step = 1;
};

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc{} && end == text.data() + text.size(), ErrorKind::invalid_argument,
          what + ": '" + std::string(text) + "' is not a non-negative integer");
  return value;
}

Range parse_range(const std::string& text, const std::string& what) {
  std::vector<std::string_view> parts;
  std::string_view rest = text;
  for (;;) {
    const auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  require(parts.size() == 2 || parts.size() == 3, ErrorKind::invalid_argument,
          what + " must look like a:b or a:b:step");
  Range range{parse_u64(parts[0], what), parse_u64(parts[1], what), 1};
  if (parts.size() == 3) range.step = parse_u64(parts[2], what);
  require(range.first <= range.last && range.step > 0, ErrorKind::invalid_argument,
          what + " needs a <= b and step > 0");
  return range;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

BoundMethod method_or_throw(const std::string& name) {
  const auto method = parse_bound_method(name);
  require(method.has_value(), ErrorKind::invalid_argument, "unknown bound method '" + name + "'");
  return *method;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::resource_limit: return exit_resource_error;
    case ErrorKind::internal_error: return exit_resource_error;
    default: return exit_parameter_error;
  }
}

std::string format_double(double value) {
  std::ostringstream s;
  s << std::setprecision(10) << value;
  return s.str();
}

json report_json(const BoundReport& report) {
  json j;
  j["method"] = std::string(to_string(report.method));
  j["value"] = report.value;
  j["stage1_rows"] = report.stage1_rows ? json(*report.stage1_rows) : json(nullptr);
  j["expected_leftover"] = report.expected_leftover ? json(*report.expected_leftover) : json(nullptr);
  j["inequality"] = report.inequality;
  json notes = json::object();
  for (const auto& [key, value] : report.notes) notes[key] = value;
  j["notes"] = std::move(notes);
  return j;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  unsigned t = 0, k = 0, v = 0;
  std::string methods = "slj,discrete_slj,two_stage,gss_lll";
  bool json_output = false;
  bool improved = false;
  std::string leftover = "expectation";
};

BoundOptions bound_options(bool improved, const std::string& leftover) {
  BoundOptions options;
  options.dependence = improved ? DependenceEstimate::improved : DependenceEstimate::simple;
  if (leftover == "closed_form") {
    options.leftover = LeftoverForm::closed_form;
  } else {
    require(leftover == "expectation", ErrorKind::invalid_argument, "--leftover must be expectation or closed_form");
  }
  options.arbitrary_precision = true;
  return options;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const CAParams params(a.t, a.k, a.v);
  const BoundOptions options = bound_options(a.improved, a.leftover);
  std::vector<BoundMethod> methods;
  for (const auto& name : split_list(a.methods)) methods.push_back(method_or_throw(name));
  require(!methods.empty(), ErrorKind::invalid_argument, "--methods is empty");

  std::vector<BoundReport> reports;
  for (BoundMethod m : methods) reports.push_back(compute_bound(m, params, options));

  if (a.json_output) {
    json j;
    j["params"] = {{"t", a.t}, {"k", a.k}, {"v", a.v}};
    j["dependence"] = a.improved ? "improved" : "simple";
    j["leftover"] = a.leftover;
    j["bounds"] = json::array();
    for (const auto& r : reports) j["bounds"].push_back(report_json(r));
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  for (const auto& r : reports) {
    out << to_string(r.method) << ' ' << r.value;
    if (r.stage1_rows) out << " n=" << *r.stage1_rows;
    for (const auto& [key, value] : r.notes) out << ' ' << key << '=' << format_double(value);
    out << '\n';
  }
  return exit_ok;
}

// ----------------------------------------------------------------- build

struct BuildArgs {
  unsigned t = 0, k = 0, v = 0;
  std::string strategy = "two_stage";
  std::string seed = std::to_string(kDefaultSeed);
  std::string out_path;
  std::string log_path;
  unsigned threads = 1;
  std::optional<std::uint64_t> stage1_rows;
  std::string second_stage = "one_row_each";
  std::string stage1_target = "expectation_floor";
  std::uint32_t max_attempts = 1000;
  std::uint64_t resample_cap = 1'000'000;
  std::uint64_t max_listed = std::uint64_t{1} << 20;
  bool improved = false;
};

json log_json(const BuildLog& log, std::uint64_t seed, bool covering) {
  json j;
  j["strategy"] = std::string(to_string(log.strategy));
  j["seed"] = seed;
  j["stage1_rows"] = log.stage1_rows;
  j["stage1_attempts"] = log.stage1_attempts;
  j["uncovered_after_stage1"] = log.uncovered_after_stage1;
  j["stage1_target"] = log.stage1_target;
  j["resample_count"] = log.resample_count;
  j["group_order"] = log.group_order;
  j["short_orbit_rows"] = log.short_orbit_rows;
  j["stage2_rows"] = log.stage2_rows;
  j["total_rows"] = log.total_rows;
  j["success"] = log.success;
  j["failure"] = log.failure;
  j["verified"] = covering;
  json events = json::array();
  for (const auto& e : log.resamples) events.push_back({e.column_set_rank, e.orbit});
  j["resamples"] = std::move(events);
  return j;
}

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const CAParams params(a.t, a.k, a.v);
  const auto strategy = parse_strategy(a.strategy);
  require(strategy.has_value(), ErrorKind::invalid_argument, "unknown strategy '" + a.strategy + "'");

  BuildConfig config;
  if (a.seed == "random") {
    std::random_device device;
    config.seed = (std::uint64_t{device()} << 32) | device();
  } else {
    config.seed = parse_u64(a.seed, "--seed");
  }
  config.threads = a.threads;
  config.stage1_rows = a.stage1_rows;
  config.max_stage1_attempts = a.max_attempts;
  config.resample_step_cap = a.resample_cap;
  config.max_listed_interactions = a.max_listed;
  config.dependence = a.improved ? DependenceEstimate::improved : DependenceEstimate::simple;
  if (a.second_stage == "density") {
    config.second_stage = StageTwo::density_greedy;
  } else {
    require(a.second_stage == "one_row_each", ErrorKind::invalid_argument,
            "--second-stage must be one_row_each or density");
  }
  if (a.stage1_target == "tuples") {
    config.stage1_target = StageOneTarget::at_most_tuples;
  } else {
    require(a.stage1_target == "expectation_floor", ErrorKind::invalid_argument,
            "--stage1-target must be expectation_floor or tuples");
  }

  BuildResult result = build(*strategy, params, config);
  VerifyOptions verify_options;
  verify_options.threads = a.threads;
  const CoverageReport coverage = full_check(result.array, verify_options);

  std::ostream& log_out = a.out_path.empty() ? err : out;
  if (a.out_path.empty()) {
    write_array(out, result.array);
  } else {
    save_array(a.out_path, result.array);
  }
  const BuildLog& log = result.log;
  log_out << "strategy " << to_string(log.strategy) << " seed " << config.seed << '\n'
          << "rows " << log.total_rows << " = " << log.group_order << " * " << log.stage1_rows << " + "
          << log.short_orbit_rows << " short-orbit + " << log.stage2_rows << " stage-2\n";
  if (*strategy == Strategy::two_stage) {
    log_out << "stage1 attempts " << log.stage1_attempts << ", uncovered " << log.uncovered_after_stage1
            << " (target " << log.stage1_target << ")\n";
  }
  if (*strategy == Strategy::mt_cyclic || *strategy == Strategy::mt_frobenius || *strategy == Strategy::pgl) {
    log_out << "resamples " << log.resample_count << '\n';
  }
  log_out << "covering " << (coverage.is_covering ? "yes" : "no") << '\n';
  if (!log.success) log_out << "failure: " << log.failure << '\n';
  if (!a.log_path.empty()) {
    std::ofstream file(a.log_path);
    require(static_cast<bool>(file), ErrorKind::resource_limit, "cannot open " + a.log_path);
    file << log_json(log, config.seed, coverage.is_covering).dump(2) << '\n';
  }
  if (!log.success) return exit_resource_error;
  return coverage.is_covering ? exit_ok : exit_not_covering;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string in_path;
  unsigned t = 0;
  unsigned threads = 1;
  bool strict = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  ReadOptions read_options;
  read_options.strict_row_count = a.strict;
  const ParsedArray parsed = load_array(a.in_path, read_options);
  if (!parsed.row_count_matches()) {
    err << "warning: header declares " << parsed.declared_rows << " rows, file has " << parsed.array.rows() << '\n';
  }
  VerifyOptions options;
  options.strength = a.t;
  options.threads = a.threads;
  const CoverageReport report = full_check(parsed.array, options);
  const CAParams& p = parsed.array.params();
  out << "array N=" << parsed.array.rows() << " k=" << p.k() << " v=" << p.v()
      << " t=" << (a.t == 0 ? p.t() : a.t) << '\n';
  out << "covering " << (report.is_covering ? "yes" : "no") << '\n';
  out << "uncovered " << report.uncovered_count << '\n';
  if (report.first_witness) out << "first witness " << report.first_witness->to_string() << '\n';
  return report.is_covering ? exit_ok : exit_not_covering;
}

// ----------------------------------------------------------------- sweep

struct SweepArgs {
  unsigned t = 0, v = 0;
  std::string k_range;
  std::string n_range;
  std::string methods = "slj,discrete_slj,two_stage";
  std::string out_path;
  bool improved = false;
  std::string leftover = "expectation";
};

void write_sweep(const SweepArgs& a, std::ostream& csv) {
  const BoundOptions options = bound_options(a.improved, a.leftover);
  const auto names = split_list(a.methods);
  require(!names.empty(), ErrorKind::invalid_argument, "--methods is empty");

  if (names.size() == 1 && names[0] == "two_stage_curve") {
    require(!a.k_range.empty() && a.k_range.find(':') == std::string::npos, ErrorKind::invalid_argument,
            "two_stage_curve needs a single k");
    const CAParams params(a.t, static_cast<unsigned>(parse_u64(a.k_range, "-k")), a.v);
    Range n;
    if (a.n_range.empty()) {
      const auto optimum = static_cast<std::uint64_t>(two_stage_analytic_optimum(params));
      n = {1, 2 * optimum + 1, 1};
    } else {
      n = parse_range(a.n_range, "--n");
    }
    csv << "n,objective\n";
    for (std::uint64_t i = n.first; i <= n.last; i += n.step) csv << i << ',' << two_stage_objective(params, i) << '\n';
    return;
  }

  std::vector<BoundMethod> methods;
  for (const auto& name : names) {
    require(name != "two_stage_curve", ErrorKind::invalid_argument, "two_stage_curve cannot be combined with other methods");
    methods.push_back(method_or_throw(name));
  }
  require(a.k_range.size() > 0, ErrorKind::invalid_argument, "--k range is required");
  const Range ks = a.k_range.find(':') == std::string::npos
                       ? Range{parse_u64(a.k_range, "--k"), parse_u64(a.k_range, "--k"), 1}
                       : parse_range(a.k_range, "--k");
  require(ks.first >= a.t, ErrorKind::invalid_argument, "--k must start at t or above");
  csv << 'k';
  for (BoundMethod m : methods) csv << ',' << to_string(m);
  csv << '\n';
  for (std::uint64_t k = ks.first; k <= ks.last; k += ks.step) {
    const CAParams params(a.t, static_cast<unsigned>(k), a.v);
    csv << k;
    for (BoundMethod m : methods) csv << ',' << compute_bound(m, params, options).value;
    csv << '\n';
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.out_path.empty()) {
    write_sweep(a, out);
    return exit_ok;
  }
  std::ostringstream buffer;
  write_sweep(a, buffer);
  std::ofstream file(a.out_path);
  require(static_cast<bool>(file), ErrorKind::resource_limit, "cannot open " + a.out_path + " for writing");
  file << buffer.str();
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering array bounds, constructions and verification", "cabounds"};
  app.require_subcommand(1);

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on CAN(t,k,v)");
  bounds->add_option("-t", bounds_args.t, "Strength")->required();
  bounds->add_option("-k", bounds_args.k, "Number of columns")->required();
  bounds->add_option("-v", bounds_args.v, "Alphabet size")->required();
  bounds->add_option("--methods", bounds_args.methods, "Comma-separated bound methods")->capture_default_str();
  bounds->add_flag("--json", bounds_args.json_output, "Emit JSON");
  bounds->add_flag("--improved-d", bounds_args.improved, "Use the sharper dependence estimate");
  bounds->add_option("--leftover", bounds_args.leftover, "Conditional-LLL leftover: expectation or closed_form")
      ->capture_default_str();

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "Construct a covering array");
  build_cmd->add_option("-t", build_args.t, "Strength")->required();
  build_cmd->add_option("-k", build_args.k, "Number of columns")->required();
  build_cmd->add_option("-v", build_args.v, "Alphabet size")->required();
  build_cmd->add_option("--strategy", build_args.strategy, "two_stage, mt_cyclic, mt_frobenius, pgl or density")
      ->capture_default_str();
  build_cmd->add_option("--seed", build_args.seed, "Integer seed or 'random'")->capture_default_str();
  build_cmd->add_option("--out", build_args.out_path, "Array file (stdout when absent)");
  build_cmd->add_option("--log", build_args.log_path, "Write the build log as JSON");
  build_cmd->add_option("--threads", build_args.threads, "Worker threads")->capture_default_str();
  build_cmd->add_option("--stage1-rows", build_args.stage1_rows, "Override the first-stage row count");
  build_cmd->add_option("--second-stage", build_args.second_stage, "one_row_each or density")->capture_default_str();
  build_cmd->add_option("--stage1-target", build_args.stage1_target, "expectation_floor or tuples")
      ->capture_default_str();
  build_cmd->add_option("--max-attempts", build_args.max_attempts, "First-stage redraw limit")->capture_default_str();
  build_cmd->add_option("--resample-cap", build_args.resample_cap, "Moser-Tardos resample limit")->capture_default_str();
  build_cmd->add_option("--max-listed", build_args.max_listed, "Cap on explicitly listed interactions")
      ->capture_default_str();
  build_cmd->add_flag("--improved-d", build_args.improved, "Use the sharper dependence estimate");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check that an array file is a covering array");
  verify_cmd->add_option("--in,input", verify_args.in_path, "Array file")->required();
  verify_cmd->add_option("-t", verify_args.t, "Strength to check (default: header t)");
  verify_cmd->add_option("--threads", verify_args.threads, "Worker threads")->capture_default_str();
  verify_cmd->add_flag("--strict", verify_args.strict, "Reject files whose row count differs from the header");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Bound values over a range of k as CSV");
  sweep->add_option("-t", sweep_args.t, "Strength")->required();
  sweep->add_option("-v", sweep_args.v, "Alphabet size")->required();
  sweep->add_option("-k,--k", sweep_args.k_range, "k range a:b[:step], or one k for two_stage_curve");
  sweep->add_option("--n", sweep_args.n_range, "n range a:b[:step] for two_stage_curve");
  sweep->add_option("--methods", sweep_args.methods, "Comma-separated methods, or two_stage_curve")
      ->capture_default_str();
  sweep->add_option("--out", sweep_args.out_path, "CSV file (stdout when absent)");
  sweep->add_flag("--improved-d", sweep_args.improved, "Use the sharper dependence estimate");
  sweep->add_option("--leftover", sweep_args.leftover, "Conditional-LLL leftover: expectation or closed_form")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parameter_error;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(bounds_args, out);
    if (build_cmd->parsed()) return cmd_build(build_args, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_args, out);
  } catch (const VerifyLimitError& e) {
    err << "error: " << e.what() << " (checked " << e.partial().column_sets_checked << " column sets, "
        << e.partial().uncovered_count << " uncovered so far)\n";
    return exit_resource_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return exit_resource_error;
  }
  return exit_parameter_error;
}

}  // namespace cabounds::cli
