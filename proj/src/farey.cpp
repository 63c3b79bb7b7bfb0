#include "acx/farey.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>

#include "acx/error.hpp"
#include "acx/intersect.hpp"
#include "acx/complex.hpp"

namespace acx {

FareySlope make_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::InvalidInput, "0/0 is not a slope");
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) p = -p, q = -q;
  return {p, q};
}

std::string to_string(FareySlope s) { return std::to_string(s.p) + "/" + std::to_string(s.q); }

std::int64_t height(FareySlope s) { return std::max<std::int64_t>(std::llabs(s.p), s.q); }

std::int64_t farey_determinant(FareySlope a, FareySlope b) { return std::llabs(a.p * b.q - a.q * b.p); }

namespace {

// x, y with a x + b y = gcd(a, b)
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  std::int64_t x1, y1;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

}  // namespace

int farey_distance(FareySlope a, FareySlope b) {
  a = make_slope(a.p, a.q);
  b = make_slope(b.p, b.q);
  if (a == b) return 0;
  // M = [[v, -u], [-q, p]] with p v - q u = 1 sends a to 1/0.
  std::int64_t v, u;
  ext_gcd(a.p, a.q, v, u);
  u = -u;
  const FareySlope t = make_slope(v * b.p - u * b.q, -a.q * b.p + a.p * b.q);

  std::vector<FareySlope> ladder = {make_slope(1, 0)};
  const std::int64_t n = floor_div(t.p, t.q);
  FareySlope lo{n, 1}, hi{n + 1, 1};
  ladder.push_back(lo);
  ladder.push_back(hi);
  while (t != lo && t != hi) {
    const FareySlope m{lo.p + hi.p, lo.q + hi.q};
    ladder.push_back(m);
    if (m == t) break;
    if (t.p * m.q < m.p * t.q) hi = m;
    else lo = m;
  }

  std::vector<int> dist(ladder.size(), -1);
  std::deque<std::size_t> queue = {0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (ladder[i] == t) return dist[i];
    for (std::size_t j = 0; j < ladder.size(); ++j) {
      if (dist[j] < 0 && farey_adjacent(ladder[i], ladder[j])) {
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
    }
  }
  throw Error(ErrorCode::Unreachable, "Farey ladder does not reach " + to_string(b));
}

std::vector<FareySlope> slopes_up_to(std::int64_t bound) {
  std::vector<FareySlope> out;
  for (std::int64_t q = 0; q <= bound; ++q) {
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1 || (q == 0 && p != 1)) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

SlopeMap::SlopeMap(const SurfaceContext& ctx) : ctx_(&ctx) {
  const Surface s = ctx.surface;
  if (s == Surface{1, 1}) factor_ = 1;
  else if (s == Surface{0, 4}) factor_ = 2;
  else throw Error(ErrorCode::UnsupportedSurface, "slopes exist only on S1,1 and S0,4");

  const auto curves = enumerate_curves(ctx, 8);
  auto meet = [&](const CurveClass& x, const CurveClass& y) {
    return multicurve_intersection(ctx.base(), x.coords, y.coords);
  };
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (meet(curves[i], curves[j]) != factor_) continue;
      for (std::size_t k = j + 1; k < curves.size(); ++k) {
        if (meet(curves[i], curves[k]) == factor_ && meet(curves[j], curves[k]) == factor_) {
          reference_ = {curves[i], curves[j], curves[k]};
          return;
        }
      }
    }
  }
  throw Error(ErrorCode::ResourceLimit, "no reference triple among low-weight curves");
}

FareySlope SlopeMap::slope(const VertexClass& v) const {
  if (is_arc(v) && factor_ != 1) throw Error(ErrorCode::InvalidInput, "arcs on S0,4 have no slope");
  std::array<std::int64_t, 3> m{};
  for (int i = 0; i < 3; ++i) {
    const std::int64_t x = intersection_number(*ctx_, reference_[i], v).value;
    if (x % factor_ != 0) throw Error(ErrorCode::InvalidCoordinates, "intersection not divisible by the slope factor");
    m[i] = x / factor_;
  }
  const std::int64_t q = m[0], p = m[1];
  if (std::llabs(p - q) == m[2]) return make_slope(p, q);
  if (p + q != m[2]) throw Error(ErrorCode::InvalidCoordinates, "intersections fit no slope");
  return make_slope(p, -q);
}

}  // namespace acx
