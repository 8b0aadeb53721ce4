#ifndef SINGLAB_ERROR_HPP
#define SINGLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace singlab {

enum class Errc {
  ring_mismatch,
  index_out_of_range,
  local_order_required,
  global_order_required,
  shape_mismatch,
  length_mismatch,
  syntax_error,
  unknown_variable,
  bad_denominator,
  constant_input,
  endomorphism_not_s_linear,
  stabilization_not_reached,
  support_not_finite,
  not_quasi_homogeneous,
  non_integral_result,
  lift_failed,
  not_minimized,
  invalid_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ring_mismatch: return "RING_MISMATCH";
    case Errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case Errc::local_order_required: return "LOCAL_ORDER_REQUIRED";
    case Errc::global_order_required: return "GLOBAL_ORDER_REQUIRED";
    case Errc::shape_mismatch: return "SHAPE_MISMATCH";
    case Errc::length_mismatch: return "LENGTH_MISMATCH";
    case Errc::syntax_error: return "SYNTAX_ERROR";
    case Errc::unknown_variable: return "UNKNOWN_VARIABLE";
    case Errc::bad_denominator: return "BAD_DENOMINATOR";
    case Errc::constant_input: return "CONSTANT_INPUT";
    case Errc::endomorphism_not_s_linear: return "ENDOMORPHISM_NOT_S_LINEAR";
    case Errc::stabilization_not_reached: return "STABILIZATION_NOT_REACHED";
    case Errc::support_not_finite: return "SUPPORT_NOT_FINITE";
    case Errc::not_quasi_homogeneous: return "NOT_QUASI_HOMOGENEOUS";
    case Errc::non_integral_result: return "NON_INTEGRAL_RESULT";
    case Errc::lift_failed: return "LIFT_FAILED";
    case Errc::not_minimized: return "NOT_MINIMIZED";
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Exception carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace singlab

#endif
