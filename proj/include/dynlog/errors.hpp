#pragma once

#include <stdexcept>
#include <string>

namespace dynlog {

enum class errc {
  cycle_detected,
  no_bottom,
  no_top,
  not_a_lattice,
  trivial_lattice,
  unknown_element,
  not_full_set,
  carrier_mismatch,
  not_meet_closed,
  missing_top,
  unknown_input,
  unknown_state,
  adjunction_required,
  size_cap_exceeded,
  not_boolean,
  precondition_failed,
  extension_mismatch,
  parse_error,
  validation_error,
  missing_input,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &msg) {
  throw error(code, msg);
}

} // namespace dynlog
