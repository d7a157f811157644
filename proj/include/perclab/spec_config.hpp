#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perclab/lattice.hpp"

namespace perclab {

// Resolved sweep parameters.  Parsed from plain key=value text; unknown keys
// are errors.
struct SweepSpec {
  int d = 2;
  double p = 0.7;
  Coords x = coords(1, 0);               // direction of the far anchor n*x
  std::vector<int> n_grid = {16, 32, 64, 128};
  int replicas = 2000;
  std::uint64_t seed = 1;
  double c_margin = 4.0;
  int bootstrap = 1000;
  int threads = 1;
  Boundary boundary = Boundary::Free;

  // tail sweep
  Coords tail_sep = coords(6, 0);        // y anchor for the distance tail
  int tail_replicas = 200000;
  std::vector<int> tail_reach_n = {1, 2, 3, 4, 5, 6, 8};
  std::vector<int> tail_hole_n = {0, 1, 2};
  int tail_min_count = 5;

  // lemma estimands
  std::vector<int> lemma_m_grid = {8, 16, 32};

  bool operator==(const SweepSpec&) const = default;
};

// margin = max(64, ceil(c_margin * log^2(n+2)))
int margin_for(const SweepSpec& spec, int n);

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg);
  int line;
};

SweepSpec parse_spec(const std::string& text);
std::string serialize_spec(const SweepSpec& spec);

// Emits a warning line to stderr when the spec cannot plausibly be
// supercritical (only d=2 has an exactly known threshold).
void warn_if_subcritical(const SweepSpec& spec);

}  // namespace perclab
