#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "quiver/checks.hpp"
#include "quiver/error.hpp"
#include "quiver/families.hpp"
#include "quiver/json.hpp"
#include "quiver/operators.hpp"
#include "quiver/spectra.hpp"

namespace quiver::cli {

namespace {

struct InputOptions {
  std::string input;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t loops = 0;
  std::size_t multi = 0;
  std::optional<std::uint64_t> seed;
};

struct RunConfig {
  InputOptions in;
  std::string checks;
  std::optional<double> tol;
  bool classical_bound = false;
  double threshold_s = 2.0;
  std::string format = "human";
  std::string output;
  std::optional<std::size_t> edge;
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> attach_loops;
  std::optional<std::size_t> add_loop;
  std::vector<std::size_t> add_edge;
  bool with_sequences = false;
  std::string batch;
  std::size_t trials = 1;
  std::size_t threads = 1;
  bool explore_s3 = false;
  std::string which = "K";
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("-i,--input", in.input, "Quiver file in .qvr format");
  cmd.add_option("--family", in.family, "Generate the input from a named family");
  cmd.add_option("--n", in.n, "Vertex count parameter");
  cmd.add_option("--m", in.m, "Edge count parameter");
  cmd.add_option("--loops", in.loops, "Loops added by random_quiver");
  cmd.add_option("--multi", in.multi, "Duplicate edges added by random_quiver");
  cmd.add_option("--seed", in.seed, "Seed for random families");
}

void add_output_options(CLI::App& cmd, RunConfig& cfg, std::vector<std::string> formats) {
  cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  cmd.add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
}

FamilySpec family_spec(const InputOptions& in) {
  FamilySpec spec;
  spec.family = parse_family(in.family);
  if (is_random(spec.family) && !in.seed) throw PreconditionError("--seed is required for random families");
  spec.n = in.n;
  spec.m = in.m;
  spec.loops = in.loops;
  spec.multi = in.multi;
  spec.seed = in.seed.value_or(0);
  return spec;
}

Quiver load_input(const InputOptions& in) {
  if (!in.input.empty() && !in.family.empty()) throw PreconditionError("give either --input or --family, not both");
  if (!in.input.empty()) return load_qvr(in.input);
  if (in.family.empty()) throw PreconditionError("an input is required: --input FILE or --family NAME");
  return generate(family_spec(in));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

CheckOptions check_options(const RunConfig& cfg) {
  CheckOptions opts;
  opts.tolerance = cfg.tol;
  opts.classical_bound = cfg.classical_bound;
  opts.threshold_s = cfg.threshold_s;
  return opts;
}

// Writes to --output if given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw ParseError("cannot write " + cfg.output, 0);
  file << text;
}

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

std::string summary_line(const Quiver& q, const SequenceTable& t, const Betti& b) {
  std::ostringstream s;
  s << "# n=" << t.n << " m=" << t.m << " r=" << t.r << " lambda1=" << format_number(t.kirchhoff.lambda(1))
    << " chi=" << static_cast<long long>(q.vertex_count()) - static_cast<long long>(q.edge_count()) << " b0=" << b.b0
    << " b1=" << b.b1 << '\n';
  return s.str();
}

std::string human_table(const Quiver& q, const SequenceTable& t, const Betti& b) {
  std::ostringstream s;
  s << summary_line(q, t, b);
  s << std::setw(4) << "k" << std::setw(14) << "S" << std::setw(8) << "D" << std::setw(9) << "B" << std::setw(9) << "H"
    << std::setw(9) << "U2D" << std::setw(14) << "A" << "  tightest\n";
  for (const auto& row : t.rows) {
    // Smallest of the three upper bounds on S_k.
    const long long best = std::min({row.B, row.H, row.U});
    const auto mark = [best](long long v) { return v == best ? "*" : " "; };
    s << std::setw(4) << row.k << std::setw(14) << format_number(row.S) << std::setw(8) << row.D << std::setw(8) << row.B
      << mark(row.B) << std::setw(8) << row.H << mark(row.H) << std::setw(8) << row.U << mark(row.U) << std::setw(14)
      << format_number(row.A) << "  " << (row.B == best ? "B" : row.H == best ? "H" : "U2D") << '\n';
  }
  return s.str();
}

int cmd_spectra(const RunConfig& cfg, std::ostream& out) {
  const Quiver q = load_input(cfg.in);
  const SequenceTable t = sequence_table(q);
  const Betti b = betti(q);
  if (cfg.format == "json") {
    Json j = to_json(t);
    j["lambda1"] = t.kirchhoff.lambda(1);
    j["chi"] = static_cast<long long>(q.vertex_count()) - static_cast<long long>(q.edge_count());
    j["b0"] = b.b0;
    j["b1"] = b.b1;
    emit(cfg, out, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, out, to_csv(t) + summary_line(q, t, b));
  } else {
    emit(cfg, out, human_table(q, t, b));
  }
  return ok;
}

CheckParams check_params(const RunConfig& cfg) {
  CheckParams p;
  p.edge = cfg.edge;
  p.vertex = cfg.vertex;
  p.loops = cfg.attach_loops;
  if (cfg.add_loop) p.perturbation = Perturbation::loop(*cfg.add_loop);
  if (!cfg.add_edge.empty()) {
    if (cfg.add_edge.size() != 2) throw PreconditionError("--add-edge takes two vertices");
    p.perturbation = Perturbation::edge(cfg.add_edge[0], cfg.add_edge[1]);
  }
  return p;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Quiver q = load_input(cfg.in);
  const auto names = split_list(cfg.checks.empty() ? "brouwer,signless,sandwich,lew,degree,pointwise" : cfg.checks);
  const CheckOptions opts = check_options(cfg);
  const CheckParams params = check_params(cfg);

  Json reports = Json::array();
  std::ostringstream human;
  bool all_passed = true;
  for (const auto& name : names) {
    const CheckReport r = run_check(name, q, params, opts);
    all_passed = all_passed && r.passed();
    if (name == "certificate") {
      Json cj = to_json(brouwer_certificate(q, opts));
      cj["margin"] = r.margin;
      reports.push_back(std::move(cj));
    } else if (cfg.with_sequences) {
      reports.push_back(to_json(r, sequence_table(q)));
    } else {
      reports.push_back(to_json(r));
    }
    human << std::left << std::setw(12) << r.check << std::setw(13) << to_string(r.verdict) << std::right
          << "margin=" << format_number(r.margin) << " tol=" << format_number(r.tolerance);
    if (r.first_violation) human << " first_violation=" << *r.first_violation;
    if (r.sharp_pass()) {
      human << " sharp at";
      for (auto k : r.sharp) human << ' ' << k;
    }
    if (!r.reason.empty()) human << " (" << r.reason << ")";
    human << '\n';
  }

  if (cfg.format == "json") {
    Json j;
    j["quiver"] = to_qvr(q);
    j["all_passed"] = all_passed;
    j["reports"] = std::move(reports);
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    emit(cfg, out, human.str());
  }
  return all_passed ? ok : check_failed;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  SearchSpec spec;
  if (!cfg.batch.empty()) {
    spec = load_search_spec(cfg.batch);
  } else {
    if (cfg.in.family.empty()) throw PreconditionError("search needs --batch FILE or --family NAME");
    spec.family = family_spec(cfg.in);
    spec.seed = cfg.in.seed.value_or(0);
    spec.trials = cfg.trials;
    spec.checks = split_list(cfg.checks);
    if (spec.checks.empty()) throw PreconditionError("search needs --checks");
    spec.options = check_options(cfg);
    spec.explore_s3 = cfg.explore_s3;
  }
  if (cfg.threads > 1) spec.threads = cfg.threads;
  const AggregateReport agg = search(spec);

  if (cfg.format == "json") {
    emit(cfg, out, to_json(agg).dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << agg.family << " seed=" << agg.seed << " instances=" << agg.instances << " failures=" << agg.total_failures()
      << '\n';
    for (const auto& c : agg.checks) {
      s << "  " << std::left << std::setw(12) << c.check << std::right << " passed=" << c.passed
        << " failed=" << c.failed << " inapplicable=" << c.inapplicable << " sharp=" << c.sharp_hits
        << " min_margin=" << (c.min_margin ? format_number(*c.min_margin) : std::string("n/a"));
      if (c.check == "connection")
        s << " radius(g)>radius(L)=" << c.radius_exceedances << " max_ratio=" << format_number(c.max_radius_ratio);
      s << '\n';
    }
    if (agg.max_s3_excess)
      s << "  max S3-(m+6)=" << format_number(*agg.max_s3_excess) << " at instance " << *agg.max_s3_instance << '\n';
    emit(cfg, out, s.str());
  }
  return agg.total_failures() == 0 ? ok : check_failed;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, out, to_qvr(load_input(cfg.in)));
  return ok;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  const Quiver q = load_input(cfg.in);
  IntMatrix M;
  const std::string& w = cfg.which;
  if (w == "F") M = gradient(q);
  else if (w == "K") M = kirchhoff(q);
  else if (w == "K1") M = one_form(q);
  else if (w == "signless") M = signless(q);
  else if (w == "signless_K1") M = signless_one_form(q);
  else if (w == "hodge") M = hodge(q);
  else if (w == "signless_hodge") M = signless_hodge(q);
  else if (w == "dirac") M = dirac(q);
  else if (w == "L") M = connection_matrix(q);
  else if (w == "g") M = green_function(q);
  else throw PreconditionError("unknown matrix \"" + w + "\"");
  emit(cfg, out, cfg.format == "json" ? to_json(M) + "\n" : to_csv(M));
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver spectral calculus and Brouwer-type eigenvalue bound checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectra = app.add_subcommand("spectra", "Per-k sequence table S, D, B, H, U2D, A");
  add_input_options(*spectra, cfg.in);
  cfg.format = "csv";
  add_output_options(*spectra, cfg, {"csv", "json", "human"});

  auto* check = app.add_subcommand("check", "Run named checks on one quiver");
  add_input_options(*check, cfg.in);
  add_output_options(*check, cfg, {"json", "human"});
  check->add_option("--checks,--check", cfg.checks, "Comma-separated check names");
  check->add_option("--tol", cfg.tol, "Override the inequality tolerance");
  check->add_flag("--classical-bound", cfg.classical_bound, "Drop the redundancy term from B_k");
  check->add_option("--threshold-s", cfg.threshold_s, "Brouwer threshold s");
  check->add_option("--edge", cfg.edge, "Edge index for the interlacing check (default: all)");
  check->add_option("--vertex", cfg.vertex, "Vertex for the snap check (default: all)");
  check->add_option("--attach-loops", cfg.attach_loops, "Loops per vertex for the loops check");
  check->add_option("--add-loop", cfg.add_loop, "Hadamard check: add a loop at this vertex");
  check->add_option("--add-edge", cfg.add_edge, "Hadamard check: add an edge between two vertices")->expected(2);
  check->add_flag("--sequences", cfg.with_sequences, "Attach the sequence table to JSON reports");

  auto* search_cmd = app.add_subcommand("search", "Run checks over a family of instances");
  add_input_options(*search_cmd, cfg.in);
  add_output_options(*search_cmd, cfg, {"json", "human"});
  search_cmd->add_option("--batch", cfg.batch, "Batch spec JSON file");
  search_cmd->add_option("--checks", cfg.checks, "Comma-separated check names");
  search_cmd->add_option("--trials", cfg.trials, "Instances for random families");
  search_cmd->add_option("--tol", cfg.tol, "Override the inequality tolerance");
  search_cmd->add_flag("--classical-bound", cfg.classical_bound, "Drop the redundancy term from B_k");
  search_cmd->add_option("--threshold-s", cfg.threshold_s, "Brouwer threshold s");
  search_cmd->add_option("--threads", cfg.threads, "Worker threads");
  search_cmd->add_flag("--explore-s3", cfg.explore_s3, "Report the maximum of S_3 - (m + 6)");

  auto* gen = app.add_subcommand("generate", "Write a family member as .qvr");
  add_input_options(*gen, cfg.in);
  gen->add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");

  auto* matrix = app.add_subcommand("matrix", "Export an operator matrix");
  add_input_options(*matrix, cfg.in);
  add_output_options(*matrix, cfg, {"csv", "json"});
  matrix->add_option("--which", cfg.which, "F, K, K1, signless, signless_K1, hodge, signless_hodge, dirac, L or g");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << e.what() << '\n';
    return input_error;
  }
  if (check->parsed() || search_cmd->parsed()) {
    if (cfg.format == "csv") cfg.format = "human";
  }
  if (matrix->parsed() && cfg.format == "human") cfg.format = "csv";

  try {
    if (spectra->parsed()) return cmd_spectra(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (search_cmd->parsed()) return cmd_search(cfg, out);
    if (gen->parsed()) return cmd_generate(cfg, out);
    if (matrix->parsed()) return cmd_matrix(cfg, out);
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return numerical_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace quiver::cli
