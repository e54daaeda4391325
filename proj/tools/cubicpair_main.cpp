// Copyright 2026 The cubicpair Authors
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

// cubicpair: batch front end over the library.
//
//   cubicpair gen --seed 7 --out pair.json
//   cubicpair analyze pair.json
//   cubicpair search --trials 1000 --jobs 8
//   cubicpair reconstruct pair.json
//   cubicpair binary f.json
//   cubicpair mf pair.json --mode determinant
//
// Exit status: 0 generic, 2 input error, 3 degeneracy, 4 reconstruction failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cubicpair/error.hpp"
#include "cubicpair/json_io.hpp"

namespace {

using namespace cubicpair;

enum Exit { kOk = 0, kInput = 2, kDegenerate = 3, kReconstruction = 4 };

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  int nvars = 5;
  std::uint64_t seed = 0;
  int trials = 1;
  int jobs = 1;
  std::string input = "-";
  std::string out;
  bool emit_mf = false;
  bool emit_quintic = true;
  bool fermat = false;
  int degree_bound = kDefaultDegreeBound;
  int surface_degree_bound = kSurfaceDegreeBound;
  std::string mf_mode = "nullspace";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const RunConfig& cfg, const Json& j) {
  const std::string text = dump(j);
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw Error(Errc::malformed_input, "cannot write " + cfg.out);
  out << text;
}

void check_prime(std::uint64_t p) {
  if (p <= 720 || !is_prime(p)) {
    throw Error(Errc::invalid_field, "the prime must exceed 720, got " + std::to_string(p));
  }
}

AnalyzeOptions analyze_options(const RunConfig& cfg) {
  return {cfg.degree_bound, cfg.surface_degree_bound, cfg.emit_mf, cfg.emit_quintic};
}

int cmd_gen(const RunConfig& cfg) {
  check_prime(cfg.prime);
  const RingPtr ring = Ring::make(cfg.prime, cfg.nvars);
  const GeneratedPair g = generate_pair(ring, cfg.seed, cfg.surface_degree_bound);
  Json j = pair_to_json(g.pair, g.seed);
  j["attempts"] = g.attempts;
  write_output(cfg, j);
  return kOk;
}

int cmd_analyze(const RunConfig& cfg) {
  const Json in = parse_json(read_input(cfg.input));
  const PairInput pair = pair_from_json(in);
  check_prime(pair.F.field().modulus());
  const AnalysisReport r = analyze(pair, analyze_options(cfg), seed_from_json(in));
  write_output(cfg, report_to_json(r));
  if (!r.generic()) {
    std::cerr << "degenerate:";
    for (const auto& name : r.degeneracies) std::cerr << ' ' << name;
    std::cerr << '\n';
    return kDegenerate;
  }
  return kOk;
}

int cmd_search(const RunConfig& cfg) {
  check_prime(cfg.prime);
  if (cfg.trials < 1) throw Error(Errc::malformed_input, "--trials must be at least 1");
  const RingPtr ring = Ring::make(cfg.prime, cfg.nvars);
  SearchOptions o;
  o.seed = cfg.seed;
  o.trials = cfg.trials;
  o.jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  o.fermat = cfg.fermat;
  o.analyze = analyze_options(cfg);
  o.analyze.emit_quintic = false;
  write_output(cfg, search_to_json(search(ring, o), o, cfg.prime));
  return kOk;
}

int cmd_reconstruct(const RunConfig& cfg) {
  const Json in = parse_json(read_input(cfg.input));
  TorelliResult r;
  if (in.is_object() && in.contains("T")) {
    const PairData data = pairing_data_from_json(in);
    check_prime(data.ring->field().modulus());
    r = reconstruct(data);
  } else {
    const PairInput pair = pair_from_json(in);
    check_prime(pair.F.field().modulus());
    r = torelli_roundtrip(pair);
  }
  write_output(cfg, torelli_to_json(r));
  if (!r.success) {
    std::cerr << "reconstruction failed at " << r.stage << ": " << r.failure_reason << '\n';
    return kReconstruction;
  }
  return kOk;
}

int cmd_binary(const RunConfig& cfg) {
  const Json in = parse_json(read_input(cfg.input));
  const HomForm F = form_from_json(in.contains("F") ? in["F"] : in);
  check_prime(F.field().modulus());
  write_output(cfg, binary_to_json(F, binary_syzygy_form(F)));
  return kOk;
}

int cmd_mf(const RunConfig& cfg) {
  const Json in = parse_json(read_input(cfg.input));
  const Json& f = in.is_object() && in.contains("F") ? in["F"] : in;
  const RingPtr probe = ring_for(static_cast<std::uint32_t>(f.at("p").get<std::int64_t>()),
                                 static_cast<int>(f.at("n").get<std::int64_t>()));
  check_prime(probe->field().modulus());
  const HomForm F = form_from_json<Side::primal>(f, probe);
  const MfMode mode = cfg.mf_mode == "determinant" ? MfMode::determinant : MfMode::nullspace;
  Json j;
  j["p"] = probe->field().modulus();
  j["mode"] = cfg.mf_mode;
  j["mf"] = form_to_json(normalized(mf_form(F, mode)));
  write_output(cfg, j);
  return kOk;
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::singular_cubic:
    case Errc::singular_surface:
    case Errc::singular_associated_cubic:
    case Errc::exhausted_retries:
      return kDegenerate;
    case Errc::genericity_failure:
    case Errc::non_unique_gradient:
    case Errc::inconsistent_w:
    case Errc::non_unique_q:
    case Errc::inconsistent_data:
      return kReconstruction;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Cubic threefolds with an anticanonical surface over a prime field"};
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--prime", cfg.prime, "field characteristic")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--degree-bound", cfg.degree_bound, "degree of the smoothness checks for X and C")
        ->capture_default_str();
    sub->add_option("--surface-bound", cfg.surface_degree_bound, "degree of the smoothness check for Y")
        ->capture_default_str();
  };
  auto analysis_flags = [&cfg](CLI::App* sub) {
    sub->add_flag("--emit-mf", cfg.emit_mf, "include the determinant form M_F");
    sub->add_flag("--emit-quintic,!--no-emit-quintic", cfg.emit_quintic, "include the associated quintic");
  };
  auto input = [&cfg](CLI::App* sub) { sub->add_option("input", cfg.input, "JSON file, - for stdin"); };

  CLI::App* gen = app.add_subcommand("gen", "seeded random pair with smooth X and Y");
  common(gen);
  gen->add_option("--seed", cfg.seed)->capture_default_str();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full invariant report for a pair");
  common(analyze_cmd);
  analysis_flags(analyze_cmd);
  input(analyze_cmd);

  CLI::App* search_cmd = app.add_subcommand("search", "analyze many seeded pairs and tally");
  common(search_cmd);
  analysis_flags(search_cmd);
  search_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  search_cmd->add_option("--trials", cfg.trials)->capture_default_str();
  search_cmd->add_option("--jobs", cfg.jobs, "worker threads, 0 for all cores")->capture_default_str();
  search_cmd->add_flag("--fermat", cfg.fermat, "fix F = sum z_i^3 and vary Q");

  CLI::App* rec = app.add_subcommand("reconstruct", "recover (F, Q) from a pair or from pairing data");
  common(rec);
  input(rec);

  CLI::App* bin = app.add_subcommand("binary", "syzygy form of a binary form");
  common(bin);
  input(bin);

  CLI::App* mf = app.add_subcommand("mf", "determinant form of a cubic");
  common(mf);
  input(mf);
  mf->add_option("--mode", cfg.mf_mode)->check(CLI::IsMember({"nullspace", "determinant"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*analyze_cmd) return cmd_analyze(cfg);
    if (*search_cmd) return cmd_search(cfg);
    if (*rec) return cmd_reconstruct(cfg);
    if (*bin) return cmd_binary(cfg);
    if (*mf) return cmd_mf(cfg);
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "MalformedInput: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
