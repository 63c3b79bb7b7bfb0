#pragma once

#include <string>
#include <string_view>

namespace acx {

/// Connected orientable surface of genus `genus` with `punctures` punctures.
struct Surface {
  int genus = 0;
  int punctures = 0;

  friend bool operator==(const Surface&, const Surface&) = default;
};

enum class SpecialCase {
  EmptyComplex,  // (0,1)
  SinglePoint,   // (0,2)
  FiniteS03,     // (0,3)
  Farey11,       // (1,1)
  Sphere04,      // (0,4)
  Generic,       // 2g+n >= 5
  SmallOther,    // everything else, in practice (1,2)
};

std::string_view to_string(SpecialCase c);
std::string to_string(Surface s);

int euler_characteristic(Surface s);
SpecialCase special_case(Surface s);

/// True when the surface admits an ideal triangulation: n >= 1 and chi < 0.
bool triangulable(Surface s);

/// Number of arcs in an ideal triangulation, 6g+3n-6.
int triangulation_edge_count(Surface s);
int triangulation_face_count(Surface s);

/// Dimension of the largest simplices of the arc-and-curve complex, 6g+3n-7.
int max_simplex_dim(Surface s);
/// Dimension of the smallest maximal simplices, 3g+2n-4.
int min_maximal_simplex_dim(Surface s);

}  // namespace acx
