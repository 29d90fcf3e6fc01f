#pragma once

#include <stdexcept>
#include <string>

namespace vbcm {

/// Error kinds surfaced by the library. The CLI maps these onto exit codes:
/// input/usage problems exit with 2, violated mathematical preconditions with 3.
enum class errc {
  invalid_argument,
  missing_parameter,
  field_mismatch,
  not_invertible,
  not_square,
  rank_mismatch,
  rank_condition_violated,
  length_not_multiple,
  invalid_band_datum,
  not_coprime,
  range_violation,
  zero_lambda,
  duplicate_lambda,
  size_mismatch,
  generator_count_mismatch,
  disconnected,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

/// True for errors that indicate malformed input rather than a failed
/// mathematical precondition.
inline bool is_validation_error(errc c) {
  return c == errc::invalid_argument || c == errc::missing_parameter || c == errc::field_mismatch;
}

}  // namespace vbcm
