#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acx {

enum class ErrorCode {
  UnsupportedSurface,
  SelfFoldedEdge,
  InvalidCoordinates,
  RegistryMiss,
  ResourceLimit,
  UnknownVertex,
  IncompleteBall,
  NoCandidate,
  InvalidPath,
  Unreachable,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace acx
