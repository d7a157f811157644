#include "perclab/clusters.hpp"

#include <cmath>
#include <stdexcept>

namespace perclab {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> rank_;

  explicit UnionFind(std::int64_t n)
      : parent(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    for (std::int64_t i = 0; i < n; ++i) parent[i] = static_cast<std::int32_t>(i);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }
};

}  // namespace

ClusterLabels label_clusters(const Configuration& config) {
  const LatticeBox& box = config.box();
  const std::int64_t nv = box.vertex_count();
  UnionFind uf(nv);
  if (box.boundary() == Boundary::Periodic) {
    for (VertexId v = 0; v < nv; ++v)
      for (int a = 0; a < box.dim(); ++a) {
        EdgeIndex e = v * box.dim() + a;
        if (config.open(e))
          uf.unite(static_cast<std::int32_t>(v),
                   static_cast<std::int32_t>(box.neighbor(v, a, +1)));
      }
  } else {
    EdgeIndex e = 0;
    for (VertexId v = 0; v < nv; ++v)
      for (int a = 0; a < box.dim(); ++a) {
        if (!box.has_edge(v, a)) continue;
        if (config.open(e))
          uf.unite(static_cast<std::int32_t>(v),
                   static_cast<std::int32_t>(box.neighbor(v, a, +1)));
        ++e;
      }
  }

  ClusterLabels out;
  out.label.assign(static_cast<std::size_t>(nv), -1);
  std::vector<std::int32_t> root_label(static_cast<std::size_t>(nv), -1);
  std::int32_t next = 0;
  for (VertexId v = 0; v < nv; ++v) {
    std::int32_t r = uf.find(static_cast<std::int32_t>(v));
    if (root_label[r] < 0) {
      root_label[r] = next++;
      out.size.push_back(0);
    }
    out.label[v] = root_label[r];
    ++out.size[root_label[r]];
  }
  std::int64_t best = -1;
  for (std::int32_t c = 0; c < next; ++c) {
    if (out.size[c] > best) {
      best = out.size[c];
      out.giant = c;  // first maximal id has the smallest minimal vertex
    }
  }
  return out;
}

RegularizedPoint regularize(const LatticeBox& box, const ClusterLabels& labels,
                            const Coords& x) {
  if (labels.giant < 0)
    throw std::runtime_error("regularize: empty giant component");
  if (!box.contains(x))
    throw std::invalid_argument("regularize: anchor outside box");
  const int d = box.dim();
  std::int64_t maxr = 0;
  for (int a = 0; a < d; ++a) {
    maxr = std::max<std::int64_t>(maxr, x[a] - box.lo()[a]);
    maxr = std::max<std::int64_t>(maxr, box.hi()[a] - x[a]);
  }
  std::int64_t best_d2 = -1;
  VertexId best_id = -1;
  Coords best_c{};
  for (std::int64_t r = 0; r <= maxr; ++r) {
    if (best_d2 >= 0 && r * r > best_d2) break;
    // enumerate the l-inf ring of radius r around x, clipped to the box,
    // in lexicographic order
    Coords c{};
    std::array<std::int64_t, kMaxDim> off{};
    for (int a = 0; a < d; ++a) off[a] = -r;
    while (true) {
      bool on_ring = (r == 0);
      for (int a = 0; a < d && !on_ring; ++a)
        if (off[a] == -r || off[a] == r) on_ring = true;
      if (on_ring) {
        bool inside = true;
        std::int64_t d2 = 0;
        for (int a = 0; a < d; ++a) {
          c[a] = static_cast<std::int32_t>(x[a] + off[a]);
          if (c[a] < box.lo()[a] || c[a] > box.hi()[a]) {
            inside = false;
            break;
          }
          d2 += off[a] * off[a];
        }
        if (inside) {
          VertexId id = box.index_of(c);
          if (labels.label[id] == labels.giant &&
              (best_d2 < 0 || d2 < best_d2 ||
               (d2 == best_d2 && id < best_id))) {
            best_d2 = d2;
            best_id = id;
            best_c = c;
          }
        }
      }
      // odometer over [-r, r]^d
      int a = d - 1;
      while (a >= 0) {
        if (++off[a] <= r) break;
        off[a] = -r;
        --a;
      }
      if (a < 0) break;
    }
  }
  if (best_id < 0)
    throw std::runtime_error("regularize: no giant vertex reachable in box");
  RegularizedPoint rp;
  rp.anchor = x;
  rp.resolved = best_c;
  rp.resolved_id = best_id;
  rp.displacement = std::sqrt(static_cast<double>(best_d2));
  return rp;
}

bool finite_cluster_reach_event(const Configuration& config,
                                const ClusterLabels& labels, int n) {
  const LatticeBox& box = config.box();
  const int d = box.dim();
  if (n < 1) throw std::invalid_argument("finite_cluster_reach_event: n >= 1");
  for (int a = 0; a < d; ++a)
    if (box.lo()[a] > -(n + 1) || box.hi()[a] < n + 1)
      throw std::invalid_argument(
          "finite_cluster_reach_event: box too small for Lambda_n boundary");
  Coords origin{};
  std::int32_t c0 = labels.label[box.index_of(origin)];
  if (c0 == labels.giant) return false;
  // outer boundary: exactly one coordinate at +-(n+1), the rest in [-n, n]
  for (int a = 0; a < d; ++a) {
    for (int sgn : {-1, +1}) {
      Coords y{};
      std::array<std::int32_t, kMaxDim> off{};
      for (int b = 0; b < d; ++b) off[b] = (b == a) ? 0 : -n;
      while (true) {
        for (int b = 0; b < d; ++b) y[b] = (b == a) ? sgn * (n + 1) : off[b];
        if (labels.label[box.index_of(y)] == c0) return true;
        int b = d - 1;
        while (b >= 0) {
          if (b == a) {
            --b;
            continue;
          }
          if (++off[b] <= n) break;
          off[b] = -n;
          --b;
        }
        if (b < 0) break;
      }
    }
  }
  return false;
}

bool hole_event(const Configuration& config, const ClusterLabels& labels,
                int n) {
  const LatticeBox& box = config.box();
  const int d = box.dim();
  if (n < 0) throw std::invalid_argument("hole_event: n >= 0");
  for (int a = 0; a < d; ++a)
    if (box.lo()[a] > -n || box.hi()[a] < n)
      throw std::invalid_argument("hole_event: box too small for Lambda_n");
  Coords y{};
  std::array<std::int32_t, kMaxDim> off{};
  for (int a = 0; a < d; ++a) off[a] = -n;
  while (true) {
    for (int a = 0; a < d; ++a) y[a] = off[a];
    if (labels.label[box.index_of(y)] == labels.giant) return false;
    int a = d - 1;
    while (a >= 0) {
      if (++off[a] <= n) break;
      off[a] = -n;
      --a;
    }
    if (a < 0) break;
  }
  return true;
}

std::vector<char> open_bridge_flags(const Configuration& config) {
  const LatticeBox& box = config.box();
  const std::int64_t nv = box.vertex_count();
  const int d = box.dim();
  std::vector<char> bridge(static_cast<std::size_t>(box.edge_count()), 0);
  std::vector<std::int32_t> disc(static_cast<std::size_t>(nv), -1);
  std::vector<std::int32_t> low(static_cast<std::size_t>(nv), 0);
  std::vector<EdgeIndex> parent_edge(static_cast<std::size_t>(nv), -1);

  struct Frame {
    VertexId v;
    int slot;
  };
  std::vector<Frame> stack;
  std::int32_t timer = 0;

  auto slot_edge = [&](VertexId v, int slot, VertexId& nb,
                       EdgeIndex& e) -> bool {
    int axis = slot / 2;
    int dir = (slot % 2 == 0) ? +1 : -1;
    nb = box.neighbor(v, axis, dir);
    if (nb < 0) return false;
    e = (dir > 0) ? box.edge_index(v, axis) : box.edge_index(nb, axis);
    if (box.boundary() == Boundary::Periodic && dir > 0)
      e = v * d + axis;
    else if (box.boundary() == Boundary::Periodic)
      e = nb * d + axis;
    return e >= 0 && config.open(e);
  };

  for (VertexId root = 0; root < nv; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.slot < 2 * d) {
        int slot = f.slot++;
        VertexId nb;
        EdgeIndex e;
        if (!slot_edge(f.v, slot, nb, e)) continue;
        if (e == parent_edge[f.v]) continue;
        if (disc[nb] < 0) {
          parent_edge[nb] = e;
          disc[nb] = low[nb] = timer++;
          stack.push_back({nb, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[nb]);
        }
      } else {
        VertexId v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridge[parent_edge[v]] = 1;
        }
      }
    }
  }
  return bridge;
}

}  // namespace perclab
