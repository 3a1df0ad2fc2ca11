#pragma once

#include <stdexcept>
#include <string>

namespace dwkit {

// Failure kinds surfaced by the library and mapped to structured CLI errors.
enum class errc {
  invalid_input,
  not_a_cocycle,
  not_a_fundamental_cycle,
  not_rational,
  negative_count,
  cross_check_mismatch,
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::invalid_input: return "InvalidInput";
    case errc::not_a_cocycle: return "NotACocycle";
    case errc::not_a_fundamental_cycle: return "NotAFundamentalCycle";
    case errc::not_rational: return "NotRational";
    case errc::negative_count: return "NegativeCount";
    case errc::cross_check_mismatch: return "CrossCheckMismatch";
  }
  return "InvalidInput";
}

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& detail)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  errc kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  errc kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(errc kind, const std::string& detail) {
  throw error(kind, detail);
}

inline void require(bool cond, errc kind, const std::string& detail) {
  if (!cond) fail(kind, detail);
}

}  // namespace dwkit
