#include "zetalab/errors.hpp"

namespace zetalab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::index_too_small: return "index-too-small";
    case ErrorKind::no_convergence: return "no-convergence";
    case ErrorKind::table_too_small: return "table-too-small";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::wrong_kind: return "wrong-kind";
    case ErrorKind::constraint: return "constraint";
    case ErrorKind::phase_too_short: return "phase-vector-too-short";
    case ErrorKind::cost_guard: return "cost-guard";
    case ErrorKind::edge: return "edge";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace zetalab
