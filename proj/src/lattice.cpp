#include "perclab/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace perclab {

std::string to_string(const Coords& c, int d) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < d; ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

LatticeBox::LatticeBox(int d, const Coords& lo, const Coords& hi,
                       Boundary boundary)
    : d_(d), lo_(lo), hi_(hi), boundary_(boundary) {
  if (d < 2 || d > kMaxDim)
    throw std::invalid_argument("LatticeBox: dimension must be in [2, " +
                                std::to_string(kMaxDim) + "]");
  for (int a = 0; a < d; ++a)
    if (hi_[a] < lo_[a])
      throw std::invalid_argument("LatticeBox: empty side on axis " +
                                  std::to_string(a));
  stride_[d - 1] = 1;
  for (int a = d - 2; a >= 0; --a) stride_[a] = stride_[a + 1] * side(a + 1);
  nvert_ = stride_[0] * side(0);

  if (boundary_ == Boundary::Periodic) {
    nedge_ = nvert_ * d_;
    return;
  }
  edge_offset_.resize(nvert_ + 1);
  std::int64_t acc = 0;
  for (VertexId v = 0; v < nvert_; ++v) {
    edge_offset_[v] = acc;
    Coords c = coords_of(v);
    for (int a = 0; a < d_; ++a)
      if (c[a] < hi_[a]) ++acc;
  }
  edge_offset_[nvert_] = acc;
  nedge_ = acc;
}

LatticeBox LatticeBox::cube(int d, int side, Boundary boundary) {
  Coords lo{}, hi{};
  for (int a = 0; a < d; ++a) hi[a] = side - 1;
  return LatticeBox(d, lo, hi, boundary);
}

LatticeBox LatticeBox::centered(int d, int radius, Boundary boundary) {
  Coords lo{}, hi{};
  for (int a = 0; a < d; ++a) {
    lo[a] = -radius;
    hi[a] = radius;
  }
  return LatticeBox(d, lo, hi, boundary);
}

bool LatticeBox::is_cubic() const {
  for (int a = 1; a < d_; ++a)
    if (side(a) != side(0)) return false;
  return true;
}

bool LatticeBox::contains(const Coords& v) const {
  for (int a = 0; a < d_; ++a)
    if (v[a] < lo_[a] || v[a] > hi_[a]) return false;
  return true;
}

VertexId LatticeBox::index_of(const Coords& v) const {
  VertexId id = 0;
  for (int a = 0; a < d_; ++a) id += (v[a] - lo_[a]) * stride_[a];
  return id;
}

Coords LatticeBox::coords_of(VertexId v) const {
  Coords c{};
  for (int a = 0; a < d_; ++a) {
    c[a] = static_cast<std::int32_t>(lo_[a] + (v / stride_[a]) % side(a));
  }
  return c;
}

VertexId LatticeBox::neighbor(VertexId v, int axis, int dir) const {
  std::int64_t pos = (v / stride_[axis]) % side(axis);
  if (boundary_ == Boundary::Free) {
    if (dir > 0 && pos == side(axis) - 1) return -1;
    if (dir < 0 && pos == 0) return -1;
    return v + dir * stride_[axis];
  }
  if (dir > 0 && pos == side(axis) - 1) return v - (side(axis) - 1) * stride_[axis];
  if (dir < 0 && pos == 0) return v + (side(axis) - 1) * stride_[axis];
  return v + dir * stride_[axis];
}

bool LatticeBox::has_edge(VertexId v, int axis) const {
  if (boundary_ == Boundary::Periodic) return true;
  std::int64_t pos = (v / stride_[axis]) % side(axis);
  return pos < side(axis) - 1;
}

EdgeIndex LatticeBox::edge_index(VertexId v, int axis) const {
  if (boundary_ == Boundary::Periodic) return v * d_ + axis;
  if (!has_edge(v, axis)) return -1;
  std::int64_t rank = 0;
  for (int a = 0; a < axis; ++a)
    if (has_edge(v, a)) ++rank;
  return edge_offset_[v] + rank;
}

std::pair<VertexId, int> LatticeBox::edge_of(EdgeIndex e) const {
  if (e < 0 || e >= nedge_) throw std::out_of_range("edge_of: bad edge index");
  if (boundary_ == Boundary::Periodic) return {e / d_, static_cast<int>(e % d_)};
  auto it = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), e);
  VertexId v = (it - edge_offset_.begin()) - 1;
  std::int64_t rank = e - edge_offset_[v];
  for (int a = 0; a < d_; ++a) {
    if (!has_edge(v, a)) continue;
    if (rank == 0) return {v, a};
    --rank;
  }
  throw std::logic_error("edge_of: inconsistent edge table");
}

std::pair<VertexId, VertexId> LatticeBox::edge_endpoints(EdgeIndex e) const {
  auto [v, axis] = edge_of(e);
  return {v, neighbor(v, axis, +1)};
}

EdgeIndex LatticeBox::edge_between(VertexId a, VertexId b) const {
  for (int axis = 0; axis < d_; ++axis) {
    if (neighbor(a, axis, +1) == b) return edge_index(a, axis);
    if (neighbor(a, axis, -1) == b) {
      EdgeIndex e = edge_index(b, axis);
      if (e >= 0) return e;
    }
  }
  return -1;
}

LatticeBox build_lattice(int d, int side, Boundary boundary) {
  if (d < 2) throw std::invalid_argument("build_lattice: d must be >= 2");
  if (d > kMaxDim)
    throw std::invalid_argument("build_lattice: d > " + std::to_string(kMaxDim) +
                                " is not supported");
  if (side < 1) throw std::invalid_argument("build_lattice: L must be >= 1");
  return LatticeBox::cube(d, side, boundary);
}

}  // namespace perclab
