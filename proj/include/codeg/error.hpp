#pragma once

#include <stdexcept>
#include <string>

namespace codeg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Violated preconditions are reported distinctly from negative results. */
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace codeg
