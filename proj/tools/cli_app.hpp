#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cesaro/ball.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_numerical = 2 };

struct RunConfig {
  std::string command;

  SpaceParams params;  // n, p, q, alpha

  // Sampling for suprema and Monte-Carlo integrals.
  std::vector<double> radial_grid = SamplingScheme::default_radial_grid();
  std::size_t sphere_samples = 256;
  std::uint64_t seed = 42;
  unsigned refinement = 0;

  // Ball integrals.
  std::string quadrature = "auto";  // auto | monte-carlo | circle
  std::size_t integral_samples = 4096;
  unsigned radial_order = 16;
  unsigned panels = 0;  // 0 selects the per-command default

  std::string f_selector;
  std::string g_selector;
  std::string space = "besov";     // norm: besov | bloch
  std::string variant = "gradient";  // bloch variant: gradient | radial

  std::vector<double> w_radii{0.9, 0.99, 0.999, 0.9999};  // compactness probe family parameters

  int lemma = 6;
  std::size_t count = 0;   // 0 selects the suite default
  std::size_t points = 0;  // 0 selects the suite default
  double r0 = 0.5;
  std::string kernel = "modulus";  // verify suite 4: modulus | analytic
  std::vector<double> lemma4_radii{0.9, 0.99, 0.999};

  std::size_t max_dimension = 3;  // oracle
  unsigned max_power = 5;         // oracle
  std::vector<double> weights{0.0, 1.0, 2.5};
  std::size_t oracle_samples = 1000000;

  std::string output;      // report path, stdout when empty
  std::string csv;         // CSV stem; derived from output when empty
  std::string series_out;  // apply: T_g f series file

  SamplingScheme scheme() const;
  BallIntegralSpec integral_spec(std::size_t n, double q) const;
  nlohmann::ordered_json to_json() const;
};

struct CsvTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  nlohmann::ordered_json document;
  std::vector<CsvTable> tables;
  int exit_code = exit_ok;
};

// Runs one subcommand and builds its report; usage problems throw InputError or DomainError.
Report execute(const RunConfig& config);

std::string render(const Report& report);
std::string render_csv(const CsvTable& table);

// Full command-line entry point: parse, execute, write the report and CSV companions.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cesaro::cli
