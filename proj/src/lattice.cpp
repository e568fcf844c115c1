#include "permutokit/lattice.hpp"

#include <numeric>

#include "permutokit/error.hpp"

namespace permutokit {

LatticePoint::LatticePoint(GroundSet ground, std::vector<std::int64_t> coords)
    : ground_(std::move(ground)), coords_(std::move(coords)) {
  require(coords_.size() == ground_.size(), "point: one coordinate per label required");
}

LatticePoint LatticePoint::zero(const GroundSet& ground) {
  return LatticePoint(ground, std::vector<std::int64_t>(ground.size(), 0));
}

std::int64_t LatticePoint::at(const Label& label) const {
  auto i = ground_.index_of(label);
  require(i.has_value(), "point: label outside the ground set");
  return coords_[*i];
}

std::int64_t LatticePoint::sum() const { return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0}); }

std::int64_t LatticePoint::pairing(Mask a) const {
  std::int64_t s = 0;
  for_each_bit(a, [&](std::size_t i) { s += coords_[i]; });
  return s;
}

LatticePoint LatticePoint::restrict(Mask s) const {
  std::vector<std::int64_t> out;
  for_each_bit(s, [&](std::size_t i) { out.push_back(coords_[i]); });
  return LatticePoint(ground_.subset(s), std::move(out));
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require(a.ground_ == b.ground_, "point sum: ground sets differ");
  LatticePoint out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] += b.coords_[i];
  return out;
}

LatticePoint operator-(const LatticePoint& a) {
  LatticePoint out = a;
  for (auto& c : out.coords_) c = -c;
  return out;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) { return a + (-b); }

std::string to_string(const LatticePoint& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.coords().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h[i]);
  }
  return out + ")";
}

LatticePoint juxtapose(const LatticePoint& a, const LatticePoint& b) {
  GroundSet ground = disjoint_union(a.ground(), b.ground());
  std::vector<std::int64_t> coords(ground.size());
  for (std::size_t i = 0; i < a.ground().size(); ++i) coords[*ground.index_of(a.ground()[i])] = a[i];
  for (std::size_t i = 0; i < b.ground().size(); ++i) coords[*ground.index_of(b.ground()[i])] = b[i];
  return LatticePoint(std::move(ground), std::move(coords));
}

Box::Box(std::int64_t b) : bound(b) { require(b >= 0, "box: bound must be nonnegative"); }

std::vector<LatticePoint> enumerate_box(const GroundSet& ground, const std::vector<std::int64_t>& lo,
                                        const std::vector<std::int64_t>& hi, std::int64_t total) {
  require(lo.size() == ground.size() && hi.size() == ground.size(), "box: bounds differ in dimension from the ground set");
  std::vector<LatticePoint> out;
  const std::size_t n = ground.size();
  if (n == 0) {
    if (total == 0) out.push_back(LatticePoint::zero(ground));
    return out;
  }
  // Suffix ranges of the reachable sums prune dead branches early.
  std::vector<std::int64_t> min_rest(n + 1, 0), max_rest(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    min_rest[i] = min_rest[i + 1] + lo[i];
    max_rest[i] = max_rest[i + 1] + hi[i];
  }
  std::vector<std::int64_t> h(n);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
    if (i + 1 == n) {
      const std::int64_t last = total - partial;
      if (last >= lo[i] && last <= hi[i]) {
        h[i] = last;
        out.emplace_back(ground, h);
      }
      return;
    }
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
      const std::int64_t need = total - partial - v;
      if (need < min_rest[i + 1] || need > max_rest[i + 1]) continue;
      h[i] = v;
      self(self, i + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<LatticePoint> enumerate_window(const GroundSet& ground, const std::vector<std::int64_t>& center,
                                           std::int64_t bound, std::int64_t total) {
  require(center.size() == ground.size(), "window: center dimension differs from the ground set");
  require(bound >= 0, "window: bound must be nonnegative");
  std::vector<std::int64_t> lo(center), hi(center);
  for (auto& v : lo) v -= bound;
  for (auto& v : hi) v += bound;
  return enumerate_box(ground, lo, hi, total);
}

}  // namespace permutokit
