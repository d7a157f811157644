#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "perclab/configuration.hpp"
#include "perclab/lattice.hpp"

namespace perclab {

// Chemical distance value with a dedicated INFINITE sentinel.  value() on an
// infinite distance throws; there is no saturating arithmetic.
class Distance {
 public:
  Distance() : v_(kInf) {}
  explicit Distance(std::int64_t v);
  static Distance infinite() { return Distance(); }

  bool is_infinite() const { return v_ == kInf; }
  std::int64_t value() const;

  friend bool operator==(const Distance& a, const Distance& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Distance& a, const Distance& b) {
    return !(a == b);
  }

 private:
  static constexpr std::int64_t kInf = -1;
  std::int64_t v_;
};

// Plain single-source BFS distance field over the open subgraph; -1 marks
// unreachable vertices.
std::vector<std::int32_t> bfs_distances(const Configuration& config,
                                        VertexId source);

// Bidirectional BFS; must agree with the unidirectional result exactly.
Distance chemical_distance(const Configuration& config, const Coords& x,
                           const Coords& y);
// Unidirectional reference path.
Distance chemical_distance_bfs(const Configuration& config, const Coords& x,
                               const Coords& y);

struct GeodesicResult {
  Distance distance;
  std::vector<Coords> path;  // empty when infinite or endpoints equal
  Coords from{}, to{};
};

// Deterministic geodesic: BFS from x with the fixed axis exploration order,
// path rebuilt from y by stepping to the lexicographically smallest
// predecessor at distance-1.
GeodesicResult geodesic(const Configuration& config, const Coords& x,
                        const Coords& y);

// Number of path vertices inside z + Lambda_m.
std::int64_t box_intersection_count(const GeodesicResult& geo, const Coords& z,
                                    int m, int d);

// One vertex per line, plain text.
void write_path(std::ostream& os, const GeodesicResult& geo, int d);

}  // namespace perclab
