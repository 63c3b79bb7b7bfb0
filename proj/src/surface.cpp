#include "acx/surface.hpp"

#include "acx/error.hpp"

namespace acx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedSurface: return "UnsupportedSurface";
    case ErrorCode::SelfFoldedEdge: return "SelfFoldedEdge";
    case ErrorCode::InvalidCoordinates: return "InvalidCoordinates";
    case ErrorCode::RegistryMiss: return "RegistryMiss";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::IncompleteBall: return "IncompleteBall";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::EmptyComplex: return "EmptyComplex";
    case SpecialCase::SinglePoint: return "SinglePoint";
    case SpecialCase::FiniteS03: return "FiniteS03";
    case SpecialCase::Farey11: return "Farey11";
    case SpecialCase::Sphere04: return "Sphere04";
    case SpecialCase::Generic: return "Generic";
    case SpecialCase::SmallOther: return "SmallOther";
  }
  return "Unknown";
}

int euler_characteristic(Surface s) { return 2 - 2 * s.genus - s.punctures; }

SpecialCase special_case(Surface s) {
  const int g = s.genus;
  const int n = s.punctures;
  if (g == 0 && n <= 1) return SpecialCase::EmptyComplex;
  if (g == 0 && n == 2) return SpecialCase::SinglePoint;
  if (g == 0 && n == 3) return SpecialCase::FiniteS03;
  if (g == 1 && n == 1) return SpecialCase::Farey11;
  if (g == 0 && n == 4) return SpecialCase::Sphere04;
  if (2 * g + n >= 5) return SpecialCase::Generic;
  return SpecialCase::SmallOther;
}

bool triangulable(Surface s) {
  return s.genus >= 0 && s.punctures >= 1 && euler_characteristic(s) < 0;
}

int triangulation_edge_count(Surface s) { return 6 * s.genus + 3 * s.punctures - 6; }
int triangulation_face_count(Surface s) { return 4 * s.genus + 2 * s.punctures - 4; }
int max_simplex_dim(Surface s) { return 6 * s.genus + 3 * s.punctures - 7; }
int min_maximal_simplex_dim(Surface s) { return 3 * s.genus + 2 * s.punctures - 4; }

std::string to_string(Surface s) {
  return "S" + std::to_string(s.genus) + "," + std::to_string(s.punctures);
}

}  // namespace acx
