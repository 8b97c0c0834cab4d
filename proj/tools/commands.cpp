#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "capi.hpp"
#include "vcolor/seed.hpp"

namespace cli {
namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string out;
  std::string manifest;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::optional<double> feas;
  std::optional<std::size_t> max_iter;
  std::optional<std::size_t> restarts;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> hyperplanes;
  std::optional<double> delta;
  std::string method = "auto";
  std::string stats;
  std::string hidden;
  bool strict = false;
  bool vectors = false;
  bool no_wigderson = false;
  bool no_timing = false;
  bool weighted = false;
  bool emit_vectors = false;
  bool check = false;
  std::size_t n = 0, k = 0;
  double p = 0.0;
  std::uint32_t m = 0, r = 0, t = 0;
};

// Everything a command learns that goes into the manifest.
struct RunState {
  std::string subcommand;
  std::vector<std::string> resolved_extra;  // flags standing in for env values
  std::optional<std::uint64_t> seed;
  json config = json::object();
  json input = nullptr;
  std::string primary_out;
};

void emit(Io& io, const std::string& target, const std::string& content,
          const std::string* reproducible = nullptr) {
  OutputRecord rec;
  rec.target = target;
  rec.sha256 = sha256_hex(content);
  rec.reproducible_sha256 = reproducible ? sha256_hex(*reproducible) : rec.sha256;
  rec.bytes = content.size();
  io.outputs.push_back(rec);
  if (io.capture) {
    io.captured[target] = content;
  } else if (target == "-") {
    io.out << content << std::flush;
  } else if (target == "<stderr>") {
    io.err << content << std::flush;
  } else {
    write_file(target, content);
  }
}

std::string source_name(Source s) {
  switch (s) {
    case Source::flag: return "flag";
    case Source::env: return "env";
    default: return "default";
  }
}

std::uint64_t resolve_seed(const Options& o, Io& io, RunState& st) {
  auto r = resolve_u64(o.seed, "VC_SEED", 0, io.env);
  if (r.source == Source::env) {
    st.resolved_extra.push_back("--seed");
    st.resolved_extra.push_back(std::to_string(r.value));
  }
  st.seed = r.value;
  st.config["seed_source"] = source_name(r.source);
  return r.value;
}

double resolve_eps(const Options& o, double fallback, Io& io, RunState& st) {
  auto r = resolve_double(o.eps, "VC_EPS", fallback, io.env);
  if (r.source == Source::env) {
    st.resolved_extra.push_back("--eps");
    st.resolved_extra.push_back(format_double(r.value));
  }
  st.config["eps"] = r.value;
  st.config["eps_source"] = source_name(r.source);
  return r.value;
}

std::optional<std::size_t> resolve_trials(const Options& o, Io& io, RunState& st) {
  std::optional<std::uint64_t> flag;
  if (o.trials) flag = *o.trials;
  auto r = resolve_u64(flag, "VC_TRIALS", 0, io.env);
  if (r.source == Source::env) {
    st.resolved_extra.push_back("--trials");
    st.resolved_extra.push_back(std::to_string(r.value));
  }
  st.config["trials_source"] = source_name(r.source);
  if (r.source == Source::fallback) {
    st.config["trials"] = nullptr;
    return std::nullopt;
  }
  if (r.value == 0) throw CliError(kExitInput, "trials must be positive");
  st.config["trials"] = r.value;
  return static_cast<std::size_t>(r.value);
}

GraphPtr load_graph(const std::string& path, Io& io, RunState& st) {
  const std::string text = read_file(path);
  st.input = {{"path", path}, {"sha256", sha256_hex(text)}, {"bytes", text.size()}};
  vc_graph* g = nullptr;
  char* warnings = nullptr;
  check(vc_graph_parse_dimacs(text.data(), text.size(), &g, &warnings));
  GraphPtr graph(g);
  for (const auto& w : json::parse(take(warnings))) io.err << "warning: " << w.get<std::string>() << '\n';
  return graph;
}

vc_solver_config solver_config(const Options& o, vc_solver_config base) {
  if (o.feas) base.feasibility_tol = *o.feas;
  if (o.max_iter) base.max_iterations = *o.max_iter;
  if (o.restarts) base.restarts = *o.restarts;
  if (o.rank) base.max_rank = *o.rank;
  return base;
}

json solver_json(const vc_solver_config& c) {
  return {{"feasibility_tol", c.feasibility_tol}, {"objective_tol", c.objective_tol},
          {"max_iterations", c.max_iterations},   {"seed", c.seed},
          {"restarts", c.restarts},               {"max_rank", c.max_rank}};
}

vc_method parse_method(const std::string& s) {
  if (s == "hyperplane") return VC_METHOD_HYPERPLANE;
  if (s == "projection") return VC_METHOD_PROJECTION;
  if (s == "auto") return VC_METHOD_AUTO;
  throw CliError(kExitInput, "unknown method " + s);
}

std::string with_suffix(const std::string& out, const char* suffix) { return out + suffix; }

// ---- commands -------------------------------------------------------------

int cmd_solve(const Options& o, Io& io, RunState& st) {
  GraphPtr g = load_graph(o.file, io, st);
  vc_solver_config cfg;
  vc_solver_config_default(&cfg);
  cfg.objective_tol = resolve_eps(o, cfg.objective_tol, io, st);
  cfg.seed = resolve_seed(o, io, st);
  cfg = solver_config(o, cfg);
  st.config["strict"] = o.strict;
  st.config["solver"] = solver_json(cfg);
  st.config["vectors"] = o.vectors;

  vc_vectors* raw = nullptr;
  vc_solve_info info{};
  check(vc_solve(g.get(), &cfg, o.strict ? 1 : 0, &raw, &info));
  VectorsPtr vecs(raw);
  char* text = nullptr;
  check(vc_vectors_json(vecs.get(), &text));
  json j = json::parse(take(text));
  if (!o.vectors) j.erase("vectors");
  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, j.dump(2) + "\n");
  if (!info.converged) {
    io.err << "error: solver did not converge (residual " << format_double(info.feasibility_residual) << ")\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

int cmd_color(const Options& o, Io& io, RunState& st) {
  GraphPtr g = load_graph(o.file, io, st);
  vc_rounding_config cfg;
  vc_rounding_config_default(&cfg);
  cfg.method = parse_method(o.method);
  cfg.seed = resolve_seed(o, io, st);
  cfg.solver.objective_tol = resolve_eps(o, cfg.solver.objective_tol, io, st);
  cfg.solver = solver_config(o, cfg.solver);
  if (auto trials = resolve_trials(o, io, st)) cfg.trials_per_extraction = *trials;
  if (o.hyperplanes) cfg.hyperplane_count = *o.hyperplanes;
  if (o.delta) {
    if (!(*o.delta > 0.0)) throw CliError(kExitInput, "--delta must be positive");
    cfg.wigderson_delta = *o.delta;
  }
  cfg.wigderson = o.no_wigderson ? 0 : 1;
  st.config["method"] = o.method;
  st.config["delta"] = o.delta ? json(*o.delta) : json(nullptr);
  st.config["hyperplanes"] = o.hyperplanes ? json(*o.hyperplanes) : json(nullptr);
  st.config["wigderson"] = !o.no_wigderson;
  st.config["solver"] = solver_json(cfg.solver);

  vc_coloring* raw = nullptr;
  check(vc_color_graph(g.get(), &cfg, &raw));
  ColoringPtr coloring(raw);

  const std::size_t n = vc_graph_vertex_count(g.get());
  std::vector<std::uint32_t> colors(n);
  check(vc_coloring_assignment(coloring.get(), colors.data()));
  int legal = 0;
  std::size_t conflicts = 0;
  check(vc_verify_coloring(g.get(), colors.data(), n, &legal, &conflicts));
  if (!legal)
    throw CliError(kExitInternal, "refusing to write an illegal coloring (" + std::to_string(conflicts) +
                                      " monochromatic edges)");

  char* text = nullptr;
  check(vc_coloring_text(coloring.get(), &text));
  char* stats_text = nullptr;
  check(vc_coloring_stats_json(coloring.get(), &stats_text));
  json stats = json::parse(take(stats_text));
  stats["verified"] = true;

  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, take(text));
  std::string stats_target = o.stats;
  if (stats_target.empty()) stats_target = o.out.empty() ? "<stderr>" : with_suffix(o.out, ".stats.json");
  emit(io, stats_target, stats.dump(2) + "\n");
  return kExitOk;
}

int cmd_theta(const Options& o, Io& io, RunState& st) {
  GraphPtr g = load_graph(o.file, io, st);
  vc_solver_config cfg;
  vc_solver_config_default(&cfg);
  cfg.objective_tol = resolve_eps(o, cfg.objective_tol, io, st);
  st.config["solver"] = solver_json(cfg);
  vc_theta_info info{};
  check(vc_theta(g.get(), &cfg, &info));
  json j = {{"n", vc_graph_vertex_count(g.get())},
            {"theta", info.theta},
            {"dual_value", info.dual_value},
            {"mu", info.mu},
            {"converged", info.converged != 0},
            {"newton_steps", info.newton_steps}};
  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, j.dump(2) + "\n");
  if (!info.converged) {
    io.err << "error: barrier method did not converge\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

std::string dimacs_of(const vc_graph* g) {
  char* text = nullptr;
  check(vc_graph_emit_dimacs(g, &text));
  return take(text);
}

int cmd_gen_kneser(const Options& o, Io& io, RunState& st) {
  st.config["kneser"] = {{"m", o.m}, {"r", o.r}, {"t", o.t}};
  vc_graph* raw = nullptr;
  check(vc_graph_kneser(o.m, o.r, o.t, &raw));
  GraphPtr g(raw);
  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, dimacs_of(g.get()));
  return kExitOk;
}

int cmd_gen_planted(const Options& o, Io& io, RunState& st) {
  const std::uint64_t seed = resolve_seed(o, io, st);
  st.config["planted"] = {{"n", o.n}, {"k", o.k}, {"p", o.p}};
  std::vector<std::uint32_t> hidden(o.n);
  vc_graph* raw = nullptr;
  check(vc_graph_planted(o.n, o.k, o.p, seed, &raw, hidden.data()));
  GraphPtr g(raw);
  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, dimacs_of(g.get()));
  if (!o.hidden.empty()) {
    std::string text;
    for (std::size_t v = 0; v < hidden.size(); ++v)
      text += "v " + std::to_string(v + 1) + " " + std::to_string(hidden[v]) + "\n";
    emit(io, o.hidden, text);
  }
  return kExitOk;
}

GraphPtr bench_graph(const SuiteInstance& inst, std::uint64_t seed) {
  vc_graph* raw = nullptr;
  if (inst.kind == "planted") {
    check(vc_graph_planted(inst.n, inst.k, inst.p, vcolor::derive_seed(seed, "graph"), &raw, nullptr));
  } else if (inst.kind == "kneser") {
    check(vc_graph_kneser(inst.m, inst.r, inst.t, &raw));
  } else {
    const std::string text = read_file(inst.path);
    char* warnings = nullptr;
    check(vc_graph_parse_dimacs(text.data(), text.size(), &raw, &warnings));
    take(warnings);
  }
  return GraphPtr(raw);
}

int cmd_bench(const Options& o, Io& io, RunState& st) {
  const std::string text = read_file(o.file);
  st.input = {{"path", o.file}, {"sha256", sha256_hex(text)}, {"bytes", text.size()}};
  const Suite suite = parse_suite(text, std::filesystem::path(o.file).parent_path().string());
  const std::uint64_t master = resolve_seed(o, io, st);
  vc_rounding_config base;
  vc_rounding_config_default(&base);
  base.solver.objective_tol = resolve_eps(o, base.solver.objective_tol, io, st);
  base.solver = solver_config(o, base.solver);
  if (auto trials = resolve_trials(o, io, st)) base.trials_per_extraction = *trials;
  st.config["methods"] = suite.methods;
  st.config["timing"] = !o.no_timing;
  st.config["solver"] = solver_json(base.solver);

  const std::vector<std::string> header = {"instance", "n",     "m",    "max_degree",
                                           "k_value",  "method", "colors", "degree_reference",
                                           "n_reference", "seed", "millis"};
  std::string csv = csv_record(header);
  std::string untimed = csv;

  for (std::size_t i = 0; i < suite.instances.size(); ++i) {
    const SuiteInstance& inst = suite.instances[i];
    const std::uint64_t seed = inst.seed ? *inst.seed : vcolor::derive_seed(master, "instance", i);
    GraphPtr g = bench_graph(inst, seed);
    const std::size_t n = vc_graph_vertex_count(g.get());
    const std::size_t m = vc_graph_edge_count(g.get());
    const std::size_t delta = vc_graph_max_degree(g.get());
    for (const std::string& method : suite.methods) {
      vc_rounding_config cfg = base;
      cfg.method = parse_method(method);
      cfg.seed = vcolor::derive_seed(seed, "color");
      vc_coloring* raw = nullptr;
      const auto start = std::chrono::steady_clock::now();
      check(vc_color_graph(g.get(), &cfg, &raw));
      const auto stop = std::chrono::steady_clock::now();
      ColoringPtr coloring(raw);

      std::vector<std::uint32_t> colors(n);
      check(vc_coloring_assignment(coloring.get(), colors.data()));
      int legal = 0;
      check(vc_verify_coloring(g.get(), colors.data(), n, &legal, nullptr));
      if (!legal) throw CliError(kExitInternal, "illegal coloring on instance " + inst.name);

      char* stats_text = nullptr;
      check(vc_coloring_stats_json(coloring.get(), &stats_text));
      const json stats = json::parse(take(stats_text));
      const double k = stats["k_value"].is_null() ? INFINITY : stats["k_value"].get<double>();
      std::string degree_ref, n_ref;
      if (std::isfinite(k)) {
        double dr = 0.0, nr = 0.0;
        check(vc_reference_bounds(n, delta, k, &dr, &nr));
        degree_ref = format_double(dr);
        n_ref = format_double(nr);
      }
      const double millis = std::chrono::duration<double, std::milli>(stop - start).count();
      std::vector<std::string> row = {inst.name,
                                      std::to_string(n),
                                      std::to_string(m),
                                      std::to_string(delta),
                                      format_double(k),
                                      stats["method"].get<std::string>(),
                                      std::to_string(vc_coloring_colors_used(coloring.get())),
                                      degree_ref,
                                      n_ref,
                                      std::to_string(seed),
                                      ""};
      untimed += csv_record(row);
      if (!o.no_timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", millis);
        row.back() = buf;
      }
      csv += csv_record(row);
    }
  }
  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, csv, &untimed);
  return kExitOk;
}

int cmd_kneser_bounds(const Options& o, Io& io, RunState& st) {
  st.config["kneser"] = {{"m", o.m}, {"r", o.r}, {"t", o.t}};
  st.config["weighted"] = o.weighted;
  st.config["emit_vectors"] = o.emit_vectors;
  char* text = nullptr;
  check(vc_kneser_bounds_json(o.m, o.r, o.t, o.weighted ? 1 : 0, o.emit_vectors ? 1 : 0, &text));
  st.primary_out = o.out;
  emit(io, o.out.empty() ? "-" : o.out, json::parse(take(text)).dump(2) + "\n");
  return kExitOk;
}

int cmd_replay(const Options& o, Io& io) {
  json manifest;
  try {
    manifest = json::parse(read_file(o.file));
  } catch (const json::exception& e) {
    throw CliError(kExitInput, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!manifest.contains("resolved_command")) throw CliError(kExitInput, "manifest lacks resolved_command");
  if (manifest.value("version", "") != vc_version())
    io.err << "warning: manifest written by version " << manifest.value("version", "?") << ", running "
           << vc_version() << '\n';
  const json& input = manifest["input"];
  if (input.is_object()) {
    const std::string path = input.at("path").get<std::string>();
    if (sha256_hex(read_file(path)) != input.at("sha256").get<std::string>())
      throw CliError(kExitInput, "input " + path + " changed since the manifest was written");
  }

  Io inner(io.out, io.err);
  inner.env = no_env();
  inner.capture = o.check;
  inner.write_manifest = false;
  const int code = run(manifest["resolved_command"].get<std::vector<std::string>>(), inner);
  if (!o.check) return code;

  const int recorded = manifest.value("exit_code", 0);
  bool same = code == recorded;
  if (!same) io.out << "exit code " << code << " (recorded " << recorded << ")\n";
  std::map<std::string, std::string> fresh;
  for (const OutputRecord& r : inner.outputs) fresh[r.target] = r.reproducible_sha256;
  for (const auto& rec : manifest["outputs"]) {
    const std::string target = rec.at("target").get<std::string>();
    const auto it = fresh.find(target);
    const bool ok = it != fresh.end() && it->second == rec.at("reproducible_sha256").get<std::string>();
    io.out << (ok ? "identical " : "differs ") << target << '\n';
    same = same && ok;
  }
  if (manifest["outputs"].size() != inner.outputs.size()) same = false;
  return same ? kExitOk : kExitInternal;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::vector<std::string>& args, const RunState& st, int code, double millis,
                    const std::string& started, const std::string& manifest_path, Io& io) {
  json outputs = json::array();
  for (const OutputRecord& r : io.outputs)
    outputs.push_back({{"target", r.target},
                       {"sha256", r.sha256},
                       {"reproducible_sha256", r.reproducible_sha256},
                       {"bytes", r.bytes}});
  std::vector<std::string> resolved = args;
  resolved.insert(resolved.end(), st.resolved_extra.begin(), st.resolved_extra.end());
  json j = {{"tool", "vcolor"},
            {"version", vc_version()},
            {"subcommand", st.subcommand},
            {"command", args},
            {"resolved_command", resolved},
            {"seed", st.seed ? json(*st.seed) : json(nullptr)},
            {"config", st.config},
            {"input", st.input},
            {"outputs", outputs},
            {"exit_code", code},
            {"started_at", started},
            {"wall_clock_ms", millis}};
  std::string target = manifest_path;
  if (target.empty() && !st.primary_out.empty()) target = st.primary_out + ".manifest.json";
  if (target.empty()) {
    io.err << j.dump() << '\n';
  } else {
    write_file(target, j.dump(2) + "\n");
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out,-o", o.out, "output file (default stdout)");
  sub->add_option("--manifest", o.manifest, "run manifest path (default <out>.manifest.json or stderr)");
}

void add_solver(CLI::App* sub, Options& o) {
  sub->add_option("--eps", o.eps, "objective tolerance (env VC_EPS)");
  sub->add_option("--feas", o.feas, "feasibility tolerance");
  sub->add_option("--max-iter", o.max_iter, "inner iterations per restart");
  sub->add_option("--restarts", o.restarts, "random restarts");
  sub->add_option("--rank", o.rank, "factor columns (0 = automatic)");
}

}  // namespace

int run(const std::vector<std::string>& args, Io& io) {
  Options o;
  CLI::App app{"Approximate graph coloring by semidefinite programming", "vcolor"};
  app.set_version_flag("--version", std::string(vc_version()));
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve the vector coloring relaxation");
  solve->add_option("file", o.file, "DIMACS graph")->required();
  solve->add_flag("--strict", o.strict, "equality on every edge");
  solve->add_flag("--vectors", o.vectors, "include the vectors in the output");
  solve->add_option("--seed", o.seed, "master seed (env VC_SEED)");
  add_solver(solve, o);
  add_common(solve, o);

  auto* color = app.add_subcommand("color", "color a graph");
  color->add_option("file", o.file, "DIMACS graph")->required();
  color->add_option("--method", o.method, "hyperplane, projection or auto")
      ->check(CLI::IsMember({"auto", "hyperplane", "projection"}));
  color->add_option("--seed", o.seed, "master seed (env VC_SEED)");
  color->add_option("--delta", o.delta, "degree threshold of the neighborhood reduction");
  color->add_flag("--no-wigderson", o.no_wigderson, "skip the neighborhood reduction");
  color->add_option("--trials", o.trials, "trials per semicoloring (env VC_TRIALS)");
  color->add_option("--hyperplanes", o.hyperplanes, "hyperplanes per trial");
  color->add_option("--stats", o.stats, "stats JSON path (default <out>.stats.json or stderr)");
  add_solver(color, o);
  add_common(color, o);

  auto* theta = app.add_subcommand("theta", "theta function of the complement");
  theta->add_option("file", o.file, "DIMACS graph")->required();
  theta->add_option("--eps", o.eps, "tolerance (env VC_EPS)");
  add_common(theta, o);

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);
  auto* kneser = gen->add_subcommand("kneser", "Kneser graph K(m, r, t)");
  kneser->add_option("m", o.m)->required();
  kneser->add_option("r", o.r)->required();
  kneser->add_option("t", o.t)->required();
  add_common(kneser, o);
  auto* planted = gen->add_subcommand("planted", "planted k-colorable random graph");
  planted->add_option("n", o.n)->required();
  planted->add_option("k", o.k)->required();
  planted->add_option("p", o.p)->required();
  planted->add_option("--seed", o.seed, "seed (env VC_SEED)");
  planted->add_option("--hidden", o.hidden, "write the planted coloring here");
  add_common(planted, o);

  auto* bench = app.add_subcommand("bench", "run a benchmark suite to CSV");
  bench->add_option("suite", o.file, "suite JSON")->required();
  bench->add_option("--seed", o.seed, "master seed (env VC_SEED)");
  bench->add_option("--trials", o.trials, "trials per semicoloring (env VC_TRIALS)");
  bench->add_flag("--no-timing", o.no_timing, "leave the millis column empty");
  add_solver(bench, o);
  add_common(bench, o);

  auto* kb = app.add_subcommand("kneser-bounds", "vector and chromatic bounds for K(m, r, t)");
  kb->add_option("m", o.m)->required();
  kb->add_option("r", o.r)->required();
  kb->add_option("t", o.t)->required();
  kb->add_flag("--weighted", o.weighted, "also evaluate the weighted vectors");
  kb->add_flag("--emit-vectors", o.emit_vectors, "include the certificate vectors");
  add_common(kb, o);

  auto* replay = app.add_subcommand("replay", "re-run a manifest");
  replay->add_option("manifest", o.file)->required();
  replay->add_flag("--check", o.check, "compare outputs with the recorded hashes instead of writing them");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    io.out << vc_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (replay->parsed()) {
    try {
      return cmd_replay(o, io);
    } catch (const CliError& e) {
      io.err << "error: " << e.what() << '\n';
      return e.code;
    }
  }

  RunState st;
  int (*body)(const Options&, Io&, RunState&) = nullptr;
  if (solve->parsed()) {
    st.subcommand = "solve";
    body = cmd_solve;
  } else if (color->parsed()) {
    st.subcommand = "color";
    body = cmd_color;
  } else if (theta->parsed()) {
    st.subcommand = "theta";
    body = cmd_theta;
  } else if (kneser->parsed()) {
    st.subcommand = "gen kneser";
    body = cmd_gen_kneser;
  } else if (planted->parsed()) {
    st.subcommand = "gen planted";
    body = cmd_gen_planted;
  } else if (bench->parsed()) {
    st.subcommand = "bench";
    body = cmd_bench;
  } else {
    st.subcommand = "kneser-bounds";
    body = cmd_kneser_bounds;
  }

  const std::string started = utc_now();
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    code = body(o, io, st);
  } catch (const CliError& e) {
    io.err << "error: " << e.what() << '\n';
    code = e.code;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    code = kExitInternal;
  }
  if (io.write_manifest) {
    const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    try {
      write_manifest(args, st, code, millis, started, o.manifest, io);
    } catch (const CliError& e) {
      io.err << "error: " << e.what() << '\n';
      if (code == kExitOk) code = e.code;
    }
  }
  return code;
}

}  // namespace cli
