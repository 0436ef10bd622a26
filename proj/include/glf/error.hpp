#ifndef GLF_ERROR_HPP
#define GLF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace glf {

// Shape/config problems: wrong extents, invalid hyperparameters, bad run
// configs. CLI exit code 2.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Misuse of an API contract (non-scalar backward, consumed tape, too few
// samples). CLI exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values, domain violations, singular matrices. CLI exit code 3.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mixing matrix whose determinant fell below the singularity floor.
struct singularity_error : numeric_error {
  using numeric_error::numeric_error;
};

// Malformed on-disk data (IDX files, checkpoints). CLI exit code 4.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failures. CLI exit code 4.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace glf

#endif  // GLF_ERROR_HPP
