#ifndef SUPERO_ERRORS_HPP
#define SUPERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supero {

// Base of every error raised by the library. Callers that only care about
// "the query was refused" catch this one.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_parameter : public error {
 public:
  using error::error;
};

class basis_mismatch : public error {
 public:
  using error::error;
};

class not_integral : public error {
 public:
  using error::error;
};

class unsupported : public error {
 public:
  using error::error;
};

class precondition_failed : public error {
 public:
  using error::error;
};

// A truncated computation was asked about weights outside its certified band.
class band_violation : public error {
 public:
  using error::error;
};

class resource_exceeded : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

}  // namespace supero

#endif
