#ifndef CITYTOUR_ERROR_HPP
#define CITYTOUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace citytour {

// Every failure the library can report. CLI maps any of these to a
// nonzero exit with a single-line diagnostic.
enum class errc {
  missing_file,
  schema_error,
  row_error,
  unknown_city,
  invalid_parameter,
  constant_column,
  too_few_rows,
  singular_matrix,
  weight_mismatch,
  empty_matrix,
  eigen_failure,
  empty_candidate_set,
  too_many_cities,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace citytour

#endif  // CITYTOUR_ERROR_HPP
