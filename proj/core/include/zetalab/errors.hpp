#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zetalab {

enum class ErrorKind {
  domain,
  index_too_small,
  no_convergence,
  table_too_small,
  capacity,
  invalid_spec,
  wrong_kind,
  constraint,
  phase_too_short,
  cost_guard,
  edge,
  config,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `nu` carries the offending sequence
// index when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::int64_t> nu = std::nullopt)
      : std::runtime_error(what), kind_(kind), nu_(nu) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> nu() const noexcept { return nu_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> nu_;
};

}  // namespace zetalab
