#pragma once

#include <optional>
#include <string_view>

namespace acx {

/// The five vertex types of the arc-and-curve complex.
enum class TypeLabel {
  SepCurve,
  SepLoopArc,
  NonsepCurve,
  NonsepLoopArc,
  InterPunctureArc,
};

std::string_view to_string(TypeLabel t);
std::optional<TypeLabel> parse_type_label(std::string_view s);

}  // namespace acx
