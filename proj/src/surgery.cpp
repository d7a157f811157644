#include "perclab/surgery.hpp"

#include <stdexcept>

namespace perclab {

namespace {

bool edge_on_path(const LatticeBox& box, const GeodesicResult& geo,
                  EdgeIndex e) {
  for (std::size_t i = 0; i + 1 < geo.path.size(); ++i) {
    if (box.edge_between(box.index_of(geo.path[i]),
                         box.index_of(geo.path[i + 1])) == e)
      return true;
  }
  return false;
}

}  // namespace

ClusterLabels surgered_giant(const Configuration& config, EdgeIndex e) {
  return label_clusters(config.forced(e, false));
}

InfluenceRecord influence(const Configuration& config,
                          const ClusterLabels& labels, const Coords& x,
                          const Coords& y, const GeodesicResult& geo,
                          EdgeIndex e) {
  const LatticeBox& box = config.box();
  InfluenceRecord rec;
  rec.edge = e;
  rec.base_distance = geo.distance.value();
  rec.on_geodesic = edge_on_path(box, geo, e);

  Configuration closed = config.forced(e, false);
  ClusterLabels closed_labels = label_clusters(closed);
  RegularizedPoint xe = regularize(box, closed_labels, x);
  RegularizedPoint ye = regularize(box, closed_labels, y);
  rec.re_holds = (xe.resolved == geo.from && ye.resolved == geo.to);

  Distance d_closed = chemical_distance(closed, xe.resolved, ye.resolved);
  if (d_closed.is_infinite()) {
    rec.flagged = true;
    return rec;
  }
  rec.ell = d_closed.value() - rec.base_distance;

  std::int64_t tau_open;
  if (config.open(e)) {
    tau_open = rec.base_distance;
  } else {
    Configuration opened = config.forced(e, true);
    ClusterLabels open_labels = label_clusters(opened);
    RegularizedPoint xo = regularize(box, open_labels, x);
    RegularizedPoint yo = regularize(box, open_labels, y);
    Distance d_open = chemical_distance(opened, xo.resolved, yo.resolved);
    if (d_open.is_infinite()) {
      rec.flagged = true;
      return rec;
    }
    tau_open = d_open.value();
  }
  rec.delta_tau = d_closed.value() - tau_open;
  (void)labels;
  return rec;
}

InfluenceSum geodesic_influence_sum(const Configuration& config,
                                    const ClusterLabels& labels,
                                    const Coords& x, const Coords& y,
                                    const GeodesicResult& geo) {
  const LatticeBox& box = config.box();
  InfluenceSum out;
  if (geo.distance.is_infinite())
    throw std::invalid_argument("geodesic_influence_sum: infinite geodesic");
  if (geo.path.empty()) return out;

  std::vector<char> bridge = open_bridge_flags(config);
  const std::int64_t base = geo.distance.value();
  out.per_edge.reserve(geo.path.size());
  for (std::size_t i = 0; i + 1 < geo.path.size(); ++i) {
    EdgeIndex e = box.edge_between(box.index_of(geo.path[i]),
                                   box.index_of(geo.path[i + 1]));
    if (e < 0) throw std::logic_error("geodesic_influence_sum: broken path");
    InfluenceRecord rec;
    if (bridge[e]) {
      rec = influence(config, labels, x, y, geo, e);
      rec.on_geodesic = true;
    } else {
      // Removing a non-bridge open edge leaves the partition, hence the
      // giant set and both regularized points, unchanged.
      rec.edge = e;
      rec.on_geodesic = true;
      rec.re_holds = true;
      rec.base_distance = base;
      Distance d_closed =
          chemical_distance(config.forced(e, false), geo.from, geo.to);
      if (d_closed.is_infinite()) {
        rec.flagged = true;
      } else {
        rec.ell = d_closed.value() - base;
        rec.delta_tau = rec.ell;  // geodesic edges are open
      }
    }
    if (rec.flagged)
      ++out.flagged;
    else if (rec.re_holds)
      out.sum_ell2_re += rec.ell * rec.ell;
    out.per_edge.push_back(rec);
  }
  return out;
}

}  // namespace perclab
