#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mseg {

enum class ErrorKind {
  InvalidInput,
  NotCyclotomic,
  MalformedLevel1,
  MalformedSingleEnd,
  LengthMismatch,
  TransportFailure,
  BoundExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Size bounds for the enumerating operations.
struct Limits {
  int partitions = 30;
  int multipartitions = 12;
  int characters = 12;
  int graphs = 8;

  /// Defaults, raised (never lowered) by the CRYSTAL_MAX_N environment
  /// variable for the character and graph bounds.
  static Limits from_env();
};

void check_bound(int value, int bound, std::string_view what);

}  // namespace mseg
