#pragma once

#include <cstdint>
#include <vector>

#include "perclab/clusters.hpp"
#include "perclab/configuration.hpp"
#include "perclab/geodesics.hpp"

namespace perclab {

// Outcome of closing a single edge: surgered regularized points, the event
// that they are unchanged, the distance increment ell(e), and the discrete
// gradient of the regularized distance.
struct InfluenceRecord {
  EdgeIndex edge = -1;
  bool on_geodesic = false;
  bool re_holds = false;
  std::int64_t ell = 0;        // valid unless flagged
  std::int64_t delta_tau = 0;  // closed minus open, each with its own endpoints
  std::int64_t base_distance = 0;
  bool flagged = false;  // a surgered query came back infinite; excluded upstream
};

// Cluster labels of the configuration with e forced closed: the finite proxy
// for the surgered infinite cluster.
ClusterLabels surgered_giant(const Configuration& config, EdgeIndex e);

// Full from-scratch influence measurement.  x, y are the raw anchors;
// geo must be the geodesic between their regularized points on config.
InfluenceRecord influence(const Configuration& config,
                          const ClusterLabels& labels, const Coords& x,
                          const Coords& y, const GeodesicResult& geo,
                          EdgeIndex e);

struct InfluenceSum {
  std::int64_t sum_ell2_re = 0;
  std::vector<InfluenceRecord> per_edge;
  int flagged = 0;
};

// Sum of ell(e)^2 over geodesic edges on the event R_e.  Uses the fact that
// only open bridges can change the component partition; equivalent to running
// influence() on every geodesic edge.
InfluenceSum geodesic_influence_sum(const Configuration& config,
                                    const ClusterLabels& labels,
                                    const Coords& x, const Coords& y,
                                    const GeodesicResult& geo);

}  // namespace perclab
