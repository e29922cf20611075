#include "citytour/error.hpp"

namespace citytour {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::missing_file: return "MissingFile";
    case errc::schema_error: return "SchemaError";
    case errc::row_error: return "RowError";
    case errc::unknown_city: return "UnknownCity";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::constant_column: return "ConstantColumn";
    case errc::too_few_rows: return "TooFewRows";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::weight_mismatch: return "WeightMismatch";
    case errc::empty_matrix: return "EmptyMatrix";
    case errc::eigen_failure: return "EigenFailure";
    case errc::empty_candidate_set: return "EmptyCandidateSet";
    case errc::too_many_cities: return "TooManyCities";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace citytour
