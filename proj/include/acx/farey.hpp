#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "acx/classes.hpp"

namespace acx {

/// Reduced fraction p/q with q >= 0; 1/0 is the slope at infinity.
struct FareySlope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  friend auto operator<=>(const FareySlope&, const FareySlope&) = default;
};

/// Reduces and normalizes the sign. Throws Error(InvalidInput) on 0/0.
FareySlope make_slope(std::int64_t p, std::int64_t q);
std::string to_string(FareySlope s);
/// max(|p|, q)
std::int64_t height(FareySlope s);

/// |p s' - q r'|
std::int64_t farey_determinant(FareySlope a, FareySlope b);
inline bool farey_adjacent(FareySlope a, FareySlope b) { return farey_determinant(a, b) == 1; }

/// Distance in the Farey graph. The pair is moved by SL(2,Z) so that `a`
/// sits at infinity; a geodesic then stays among the vertices of the
/// triangles crossed on the way down the Stern-Brocot tree to `b`, and the
/// search runs on those only.
int farey_distance(FareySlope a, FareySlope b);

/// All slopes of height at most `bound`, in increasing (q, p) order.
std::vector<FareySlope> slopes_up_to(std::int64_t bound);

/// Identification of curves with slopes on S1,1 and S0,4. Three reference
/// curves meeting pairwise minimally are taken as 1/0, 0/1 and 1/1; a
/// curve of slope p/q then meets them k|q|, k|p| and k|p - q| times, with
/// k = 1 on the torus and 2 on the sphere. On S1,1 arcs get the slope of
/// the curve they miss.
class SlopeMap {
 public:
  /// Throws Error(UnsupportedSurface) off S1,1 and S0,4.
  explicit SlopeMap(const SurfaceContext& ctx);

  int factor() const { return factor_; }
  const std::array<CurveClass, 3>& reference() const { return reference_; }

  /// Throws Error(InvalidInput) for arcs on S0,4.
  FareySlope slope(const VertexClass& v) const;

 private:
  const SurfaceContext* ctx_;
  int factor_ = 1;
  std::array<CurveClass, 3> reference_;
};

}  // namespace acx
