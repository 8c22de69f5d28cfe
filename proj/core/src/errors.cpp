#include "mseg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace mseg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCyclotomic: return "NotCyclotomic";
    case ErrorKind::MalformedLevel1: return "MalformedLevel1";
    case ErrorKind::MalformedSingleEnd: return "MalformedSingleEnd";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TransportFailure: return "TransportFailure";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

Limits Limits::from_env() {
  Limits limits;
  const char* raw = std::getenv("CRYSTAL_MAX_N");
  if (raw == nullptr) return limits;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 0) return limits;
  limits.characters = std::max(limits.characters, value);
  limits.graphs = std::max(limits.graphs, value);
  return limits;
}

void check_bound(int value, int bound, std::string_view what) {
  if (value > bound) {
    throw Error(ErrorKind::BoundExceeded,
                std::string(what) + " " + std::to_string(value) +
                    " exceeds bound " + std::to_string(bound));
  }
}

}  // namespace mseg
