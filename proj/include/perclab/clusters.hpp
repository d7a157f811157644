#pragma once

#include <cstdint>
#include <vector>

#include "perclab/configuration.hpp"
#include "perclab/lattice.hpp"

namespace perclab {

// Connected components of the open subgraph.  Component ids are assigned in
// order of each component's minimal vertex, so smaller id means
// lexicographically smaller minimal vertex.  The giant is the component of
// maximal size, ties broken toward the smaller id.
struct ClusterLabels {
  std::vector<std::int32_t> label;  // vertex -> component id
  std::vector<std::int64_t> size;   // component id -> vertex count
  std::int32_t giant = -1;
};

ClusterLabels label_clusters(const Configuration& config);

struct RegularizedPoint {
  Coords anchor{};
  Coords resolved{};
  VertexId resolved_id = -1;
  double displacement = 0.0;
};

// Closest giant-component vertex to x in Euclidean distance, ties broken
// toward lexicographically smaller coordinates.  Searches expanding l-inf
// rings around x.
RegularizedPoint regularize(const LatticeBox& box, const ClusterLabels& labels,
                            const Coords& x);

// {0 not in giant, cluster of 0 touches the outer boundary of Lambda_n}.
bool finite_cluster_reach_event(const Configuration& config,
                                const ClusterLabels& labels, int n);

// {giant component misses Lambda_n entirely}.
bool hole_event(const Configuration& config, const ClusterLabels& labels,
                int n);

// Per-edge flags: true iff the edge is open and is a bridge of its open
// component (the only edges whose removal changes the partition).
std::vector<char> open_bridge_flags(const Configuration& config);

}  // namespace perclab
