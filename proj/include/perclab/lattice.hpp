#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace perclab {

inline constexpr int kMaxDim = 4;

using VertexId = std::int64_t;
using EdgeIndex = std::int64_t;

// Lattice coordinates; entries beyond the box dimension are zero.
using Coords = std::array<std::int32_t, kMaxDim>;

inline Coords coords(std::int32_t a, std::int32_t b = 0, std::int32_t c = 0,
                     std::int32_t e = 0) {
  return Coords{a, b, c, e};
}

std::string to_string(const Coords& c, int d);

enum class Boundary { Free, Periodic };

// Finite box of the Z^d bond lattice.  Vertices are flat-indexed in
// lexicographic coordinate order (axis 0 most significant), so flat-id order
// coincides with lexicographic order on coordinates.  Edges are canonical
// pairs (v, axis) meaning the bond from v toward +axis; for free boundary v
// is the lexicographically smaller endpoint, for periodic boundary the bond
// wraps.  Edge indices are dense and ordered lexicographically by (v, axis).
class LatticeBox {
 public:
  LatticeBox(int d, const Coords& lo, const Coords& hi, Boundary boundary);

  // [0, side-1]^d
  static LatticeBox cube(int d, int side, Boundary boundary);
  // Lambda_radius = [-radius, radius]^d
  static LatticeBox centered(int d, int radius, Boundary boundary);

  int dim() const { return d_; }
  Boundary boundary() const { return boundary_; }
  const Coords& lo() const { return lo_; }
  const Coords& hi() const { return hi_; }
  std::int64_t side(int axis) const { return hi_[axis] - lo_[axis] + 1; }
  bool is_cubic() const;

  std::int64_t vertex_count() const { return nvert_; }
  std::int64_t edge_count() const { return nedge_; }

  bool contains(const Coords& v) const;
  VertexId index_of(const Coords& v) const;
  Coords coords_of(VertexId v) const;

  // dir is +1 or -1; returns -1 when the neighbor slot is absent (free
  // boundary only).
  VertexId neighbor(VertexId v, int axis, int dir) const;

  bool has_edge(VertexId v, int axis) const;
  EdgeIndex edge_index(VertexId v, int axis) const;
  std::pair<VertexId, int> edge_of(EdgeIndex e) const;
  std::pair<VertexId, VertexId> edge_endpoints(EdgeIndex e) const;

  // Edge index of the bond between two adjacent in-box vertices, -1 if they
  // are not lattice neighbors.
  EdgeIndex edge_between(VertexId a, VertexId b) const;

  // Visits the open neighbor slots of v in the fixed axis order
  // +e1, -e1, ..., +ed, -ed.
  template <typename Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    Coords c = coords_of(v);
    for (int axis = 0; axis < d_; ++axis) {
      for (int dir : {+1, -1}) {
        VertexId nb;
        EdgeIndex e;
        if (boundary_ == Boundary::Free) {
          if (dir > 0) {
            if (c[axis] >= hi_[axis]) continue;
            nb = v + stride_[axis];
            e = edge_index(v, axis);
          } else {
            if (c[axis] <= lo_[axis]) continue;
            nb = v - stride_[axis];
            e = edge_index(nb, axis);
          }
        } else {
          std::int64_t s = side(axis);
          if (dir > 0) {
            nb = (c[axis] == hi_[axis]) ? v - (s - 1) * stride_[axis]
                                        : v + stride_[axis];
            e = v * d_ + axis;
          } else {
            nb = (c[axis] == lo_[axis]) ? v + (s - 1) * stride_[axis]
                                        : v - stride_[axis];
            e = nb * d_ + axis;
          }
        }
        fn(nb, e);
      }
    }
  }

 private:
  int d_;
  Coords lo_{}, hi_{};
  Boundary boundary_;
  std::array<std::int64_t, kMaxDim> stride_{};
  std::int64_t nvert_ = 0;
  std::int64_t nedge_ = 0;
  // Free boundary: prefix count of edges whose smaller endpoint precedes v.
  std::vector<std::int64_t> edge_offset_;
};

// Spec'd constructor: cubic box with validation of d and side length.
LatticeBox build_lattice(int d, int side, Boundary boundary);

}  // namespace perclab
