#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "perclab/lattice.hpp"

namespace perclab {

// Bit-packed open/closed state for every edge of a box, together with its
// (p, seed, replica) provenance and any surgical overrides.  Immutable after
// construction; force_edge returns a modified copy.
class Configuration {
 public:
  static Configuration sample(std::shared_ptr<const LatticeBox> box, double p,
                              std::uint64_t seed, std::uint32_t replica);
  // Test and IO support: explicit bit vector, one entry per edge.
  static Configuration from_bits(std::shared_ptr<const LatticeBox> box,
                                 double p, std::uint64_t seed,
                                 std::uint32_t replica,
                                 const std::vector<bool>& open);

  const LatticeBox& box() const { return *box_; }
  std::shared_ptr<const LatticeBox> box_ptr() const { return box_; }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  std::uint32_t replica() const { return replica_; }

  bool open(EdgeIndex e) const {
    return (words_[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1u;
  }
  std::int64_t open_count() const;

  Configuration forced(EdgeIndex e, bool open) const;
  const std::map<EdgeIndex, bool>& forced_edges() const { return forced_; }

  bool same_bits(const Configuration& other) const {
    return words_ == other.words_;
  }

  // Dump format: header "d L boundary p seed replica", then the bitset in
  // hex.  Cubic boxes only; round-trips bit-exactly.
  void dump(std::ostream& os) const;
  static Configuration load(std::istream& is);

 private:
  Configuration(std::shared_ptr<const LatticeBox> box, double p,
                std::uint64_t seed, std::uint32_t replica);

  std::shared_ptr<const LatticeBox> box_;
  std::vector<std::uint64_t> words_;
  double p_;
  std::uint64_t seed_;
  std::uint32_t replica_;
  std::map<EdgeIndex, bool> forced_;
};

}  // namespace perclab
