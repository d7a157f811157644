#include "perclab/geodesics.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace perclab {

Distance::Distance(std::int64_t v) : v_(v) {
  if (v < 0) throw std::invalid_argument("Distance: negative value");
}

std::int64_t Distance::value() const {
  if (is_infinite())
    throw std::logic_error("Distance: arithmetic on INFINITE");
  return v_;
}

std::vector<std::int32_t> bfs_distances(const Configuration& config,
                                        VertexId source) {
  const LatticeBox& box = config.box();
  std::vector<std::int32_t> dist(static_cast<std::size_t>(box.vertex_count()),
                                 -1);
  std::vector<VertexId> queue;
  queue.reserve(1024);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    std::int32_t dv = dist[v];
    box.for_each_neighbor(v, [&](VertexId nb, EdgeIndex e) {
      if (config.open(e) && dist[nb] < 0) {
        dist[nb] = dv + 1;
        queue.push_back(nb);
      }
    });
  }
  return dist;
}

Distance chemical_distance_bfs(const Configuration& config, const Coords& x,
                               const Coords& y) {
  const LatticeBox& box = config.box();
  if (!box.contains(x) || !box.contains(y))
    throw std::invalid_argument("chemical_distance: endpoint outside box");
  VertexId s = box.index_of(x), t = box.index_of(y);
  if (s == t) return Distance(0);
  auto dist = bfs_distances(config, s);
  return dist[t] < 0 ? Distance::infinite() : Distance(dist[t]);
}

Distance chemical_distance(const Configuration& config, const Coords& x,
                           const Coords& y) {
  const LatticeBox& box = config.box();
  if (!box.contains(x) || !box.contains(y))
    throw std::invalid_argument("chemical_distance: endpoint outside box");
  VertexId s = box.index_of(x), t = box.index_of(y);
  if (s == t) return Distance(0);

  const std::size_t nv = static_cast<std::size_t>(box.vertex_count());
  std::vector<std::int32_t> da(nv, -1), db(nv, -1);
  std::vector<VertexId> fa{s}, fb{t}, next;
  da[s] = 0;
  db[t] = 0;
  std::int32_t ra = 0, rb = 0;  // completed level radii
  std::int64_t best = -1;

  while (!fa.empty() && !fb.empty()) {
    if (best >= 0 && best <= static_cast<std::int64_t>(ra) + rb) break;
    bool expand_a = fa.size() <= fb.size();
    auto& frontier = expand_a ? fa : fb;
    auto& dist = expand_a ? da : db;
    auto& other = expand_a ? db : da;
    std::int32_t level = (expand_a ? ra : rb) + 1;
    next.clear();
    for (VertexId v : frontier) {
      box.for_each_neighbor(v, [&](VertexId nb, EdgeIndex e) {
        if (!config.open(e) || dist[nb] >= 0) return;
        dist[nb] = level;
        next.push_back(nb);
        if (other[nb] >= 0) {
          std::int64_t cand = static_cast<std::int64_t>(level) + other[nb];
          if (best < 0 || cand < best) best = cand;
        }
      });
    }
    frontier.swap(next);
    if (expand_a)
      ra = level;
    else
      rb = level;
  }
  return best < 0 ? Distance::infinite() : Distance(best);
}

GeodesicResult geodesic(const Configuration& config, const Coords& x,
                        const Coords& y) {
  const LatticeBox& box = config.box();
  GeodesicResult out;
  out.from = x;
  out.to = y;
  VertexId s = box.index_of(x), t = box.index_of(y);
  if (!box.contains(x) || !box.contains(y))
    throw std::invalid_argument("geodesic: endpoint outside box");
  if (s == t) {
    out.distance = Distance(0);
    return out;
  }
  auto dist = bfs_distances(config, s);
  if (dist[t] < 0) {
    out.distance = Distance::infinite();
    return out;
  }
  out.distance = Distance(dist[t]);
  std::vector<VertexId> rev;
  rev.push_back(t);
  VertexId cur = t;
  while (cur != s) {
    std::int32_t want = dist[cur] - 1;
    VertexId pick = -1;
    box.for_each_neighbor(cur, [&](VertexId nb, EdgeIndex e) {
      if (config.open(e) && dist[nb] == want && (pick < 0 || nb < pick))
        pick = nb;
    });
    if (pick < 0) throw std::logic_error("geodesic: broken predecessor chain");
    rev.push_back(pick);
    cur = pick;
  }
  out.path.reserve(rev.size());
  for (auto it = rev.rbegin(); it != rev.rend(); ++it)
    out.path.push_back(box.coords_of(*it));
  return out;
}

std::int64_t box_intersection_count(const GeodesicResult& geo, const Coords& z,
                                    int m, int d) {
  if (geo.distance.is_infinite())
    throw std::invalid_argument("box_intersection_count: infinite path");
  std::int64_t count = 0;
  for (const Coords& v : geo.path) {
    bool inside = true;
    for (int a = 0; a < d; ++a)
      if (std::abs(v[a] - z[a]) > m) {
        inside = false;
        break;
      }
    if (inside) ++count;
  }
  return count;
}

void write_path(std::ostream& os, const GeodesicResult& geo, int d) {
  for (const Coords& v : geo.path) {
    for (int a = 0; a < d; ++a) os << (a ? " " : "") << v[a];
    os << '\n';
  }
}

}  // namespace perclab
