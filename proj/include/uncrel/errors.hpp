#pragma once

#include <stdexcept>
#include <string>

namespace uncrel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct ArityError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct PairSetError : Error {
  using Error::Error;
};
struct HermiticityError : Error {
  using Error::Error;
};
struct NormalizationError : Error {
  using Error::Error;
};
struct PositivityError : Error {
  using Error::Error;
};
struct ModeError : Error {
  using Error::Error;
};
struct PurityError : Error {
  using Error::Error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct TruncationError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace uncrel
