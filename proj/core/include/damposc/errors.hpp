#pragma once

#include <stdexcept>
#include <string>

namespace damposc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Closed-form generator amplitudes are singular (lambda == 0 or critical damping).
class DegenerateDamping : public Error {
 public:
  using Error::Error;
};

// A mode sum expected to be real carried a significant imaginary part.
class NonRealResult : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class GridTooNarrow : public Error {
 public:
  using Error::Error;
};

class SolveFailure : public Error {
 public:
  using Error::Error;
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
};

// Harmonic kernel requested at omega * t = n * pi.
class CausticError : public Error {
 public:
  using Error::Error;
};

}  // namespace damposc
