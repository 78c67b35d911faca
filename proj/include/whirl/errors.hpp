#pragma once

#include <stdexcept>
#include <string>

namespace whirl {

enum class errc {
  ratio_out_of_range,
  bad_side,
  tolerance_out_of_range,
  cap_exceeded,
  max_iterations,
  degenerate_lines,
  bad_tolerance,
  too_few_points,
  insufficient_coverage,
  input_not_ordered,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace whirl
