// coreline: command-line front end for the core geodesic library.
//
//   coreline classify '[[1,1],[0,1]]'
//   coreline primitive 5/3
//   coreline pi-map  --gens gens.json --depth 6 --format csv --out spectrum.csv
//   coreline probe   --gens gens.json --depth 8 --samples 200 --seed 1
//   coreline hexagon --gens gens.json
//
// Exit status: 0 success (probe: bounded or parabolic ends), 2 unbounded
// evidence, 3 inconclusive, 1 on any error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI/CLI.hpp>

#include "coreline/json_io.hpp"

namespace {

using namespace coreline;

struct Config {
  Tolerances tol;
  double s_escape = 25.0;
  double plateau = 0.01;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

json read_json_argument(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    return json::parse(text_or_path);
  }
  std::ifstream in(text_or_path);
  if (!in) throw std::runtime_error("cannot open '" + text_or_path + "'");
  return json::parse(in);
}

Representation load_generators(const std::string& path, const Tolerances& tol) {
  const auto [a, b] = generators_from_json(read_json_argument(path));
  return Representation::build(a, b, tol);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw std::runtime_error("cannot write '" + cfg.out + "'");
  out << text;
}

void emit_json(const Config& cfg, const json& j) {
  if (cfg.format != "json") throw std::runtime_error("this command only writes json");
  emit(cfg, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Palindromes, core geodesics and the Π-map for two-generator groups"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--tol-det", cfg.tol.det, "singularity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-class", cfg.tol.cls, "classification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-geo", cfg.tol.geo, "geometric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");

  std::string matrix;
  auto* classify_cmd = app.add_subcommand("classify", "classify a matrix and report its fixed points");
  classify_cmd->add_option("matrix", matrix, "JSON matrix or a file containing one")->required();

  std::string slope;
  auto* primitive_cmd = app.add_subcommand("primitive", "primitive word e_{p/q}");
  primitive_cmd->add_option("slope", slope, "p/q")->required();

  std::string gens;
  int map_depth = 6;
  int probe_depth = 8;
  int samples = 200;
  auto* pi_map_cmd = app.add_subcommand("pi-map", "Π-image of the Farey tree to a given depth");
  pi_map_cmd->add_option("--gens", gens, "generator file {\"A\": ..., \"B\": ...}")->required();
  pi_map_cmd->add_option("--depth", map_depth, "Farey depth")->check(CLI::NonNegativeNumber);

  auto* probe_cmd = app.add_subcommand("probe", "discreteness evidence from the Π-spectrum");
  probe_cmd->add_option("--gens", gens, "generator file")->required();
  probe_cmd->add_option("--depth", probe_depth, "Farey depth and half the random word length")
      ->check(CLI::PositiveNumber);
  probe_cmd->add_option("--samples", samples, "random palindromizations")->check(CLI::NonNegativeNumber);
  probe_cmd->add_option("--seed", cfg.seed, "random seed");
  probe_cmd->add_option("--escape", cfg.s_escape, "escape threshold for |s|")->check(CLI::PositiveNumber);
  probe_cmd->add_option("--plateau", cfg.plateau, "growth plateau threshold")->check(CLI::PositiveNumber);

  auto* hexagon_cmd = app.add_subcommand("hexagon", "right-angled hexagon of the generators");
  hexagon_cmd->add_option("--gens", gens, "generator file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify_cmd) {
      const GroupElement g = GroupElement::normalize(read_json_argument(matrix).get<Mat2>(), cfg.tol);
      emit_json(cfg, classification_record(g, cfg.tol));
    } else if (*primitive_cmd) {
      emit_json(cfg, primitive_record(primitive_word(Rational::parse(slope))));
    } else if (*pi_map_cmd) {
      const auto spectrum = pi_spectrum(load_generators(gens, cfg.tol), map_depth);
      if (cfg.format == "csv") {
        std::ostringstream out;
        write_spectrum_csv(out, spectrum);
        emit(cfg, out.str());
      } else {
        emit_json(cfg, json(spectrum));
      }
    } else if (*probe_cmd) {
      ProbeConfig pc;
      pc.depth = probe_depth;
      pc.random_samples = samples;
      pc.seed = cfg.seed;
      pc.s_escape = cfg.s_escape;
      pc.plateau = cfg.plateau;
      const ProbeReport report = probe(load_generators(gens, cfg.tol), pc);
      emit_json(cfg, report);
      std::cerr << "verdict: " << to_string(report.verdict) << "\n";
      return exit_code(report.verdict);
    } else if (*hexagon_cmd) {
      emit_json(cfg, json(hexagon(load_generators(gens, cfg.tol))));
    }
  } catch (const std::exception& e) {
    std::cerr << "coreline: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
