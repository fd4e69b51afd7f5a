#pragma once

#include <stdexcept>
#include <string>

namespace seifcalc {

// Precondition violations and malformed data.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input whose requested object does not exist.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consistency check inside the library failed.
struct InternalAssertion : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace seifcalc
