#include "perclab/configuration.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "perclab/rng.hpp"

namespace perclab {

Configuration::Configuration(std::shared_ptr<const LatticeBox> box, double p,
                             std::uint64_t seed, std::uint32_t replica)
    : box_(std::move(box)), p_(p), seed_(seed), replica_(replica) {
  if (!(p_ > 0.0 && p_ <= 1.0))
    throw std::invalid_argument("Configuration: p must be in (0,1]");
  words_.assign(static_cast<std::size_t>((box_->edge_count() + 63) / 64), 0);
}

Configuration Configuration::sample(std::shared_ptr<const LatticeBox> box,
                                    double p, std::uint64_t seed,
                                    std::uint32_t replica) {
  Configuration cfg(std::move(box), p, seed, replica);
  const std::uint64_t thr = bernoulli_threshold(p);
  const std::int64_t ne = cfg.box_->edge_count();
  for (std::int64_t e = 0; e < ne; ++e) {
    if (bernoulli_bit(counter_hash(seed, replica, static_cast<std::uint64_t>(e)),
                      thr))
      cfg.words_[static_cast<std::size_t>(e >> 6)] |= 1ull << (e & 63);
  }
  return cfg;
}

Configuration Configuration::from_bits(std::shared_ptr<const LatticeBox> box,
                                       double p, std::uint64_t seed,
                                       std::uint32_t replica,
                                       const std::vector<bool>& open) {
  Configuration cfg(std::move(box), p, seed, replica);
  if (static_cast<std::int64_t>(open.size()) != cfg.box_->edge_count())
    throw std::invalid_argument("from_bits: wrong bit count");
  for (std::size_t e = 0; e < open.size(); ++e)
    if (open[e]) cfg.words_[e >> 6] |= 1ull << (e & 63);
  return cfg;
}

std::int64_t Configuration::open_count() const {
  std::int64_t n = 0;
  for (std::uint64_t w : words_) n += __builtin_popcountll(w);
  return n;
}

Configuration Configuration::forced(EdgeIndex e, bool open) const {
  if (e < 0 || e >= box_->edge_count())
    throw std::out_of_range("force_edge: edge index out of box");
  Configuration cfg(*this);
  if (open)
    cfg.words_[static_cast<std::size_t>(e >> 6)] |= 1ull << (e & 63);
  else
    cfg.words_[static_cast<std::size_t>(e >> 6)] &= ~(1ull << (e & 63));
  cfg.forced_[e] = open;
  return cfg;
}

void Configuration::dump(std::ostream& os) const {
  if (!box_->is_cubic())
    throw std::invalid_argument("dump: only cubic boxes are serializable");
  char pbuf[64];
  std::snprintf(pbuf, sizeof pbuf, "%.17g", p_);
  os << box_->dim() << ' ' << box_->side(0) << ' '
     << (box_->boundary() == Boundary::Free ? "free" : "periodic") << ' '
     << pbuf << ' ' << seed_ << ' ' << replica_ << '\n';
  static const char* hex = "0123456789abcdef";
  std::string line;
  const std::int64_t ne = box_->edge_count();
  for (std::int64_t base = 0; base < ne; base += 4) {
    int nib = 0;
    for (int k = 0; k < 4 && base + k < ne; ++k)
      nib |= (open(base + k) ? 1 : 0) << k;
    line.push_back(hex[nib]);
  }
  os << line << '\n';
}

Configuration Configuration::load(std::istream& is) {
  int d;
  std::int64_t side;
  std::string bnd;
  double p;
  std::uint64_t seed;
  std::uint32_t replica;
  if (!(is >> d >> side >> bnd >> p >> seed >> replica))
    throw std::runtime_error("Configuration::load: bad header");
  Boundary boundary;
  if (bnd == "free")
    boundary = Boundary::Free;
  else if (bnd == "periodic")
    boundary = Boundary::Periodic;
  else
    throw std::runtime_error("Configuration::load: unknown boundary '" + bnd +
                             "'");
  std::string hexline;
  if (!(is >> hexline))
    throw std::runtime_error("Configuration::load: missing bitset");
  auto box = std::make_shared<const LatticeBox>(
      LatticeBox::cube(d, static_cast<int>(side), boundary));
  std::vector<bool> bits(static_cast<std::size_t>(box->edge_count()), false);
  if (hexline.size() != (bits.size() + 3) / 4)
    throw std::runtime_error("Configuration::load: bitset length mismatch");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = hexline[i / 4];
    int nib = (c >= 'a') ? (c - 'a' + 10) : (c - '0');
    if (nib < 0 || nib > 15)
      throw std::runtime_error("Configuration::load: bad hex digit");
    bits[i] = (nib >> (i % 4)) & 1;
  }
  return from_bits(box, p, seed, replica, bits);
}

}  // namespace perclab
