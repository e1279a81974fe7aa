#pragma once

#include <stdexcept>
#include <string>

namespace padichg {

// Error taxonomy. Bad arguments use std::invalid_argument; the types below
// separate failures a caller may want to handle differently:
//  - precision_error: the requested digits cannot be delivered from the
//    working precision that was carried (raise the budget and retry)
//  - budget_error: an iteration/step budget ran out (orbit detection etc.)
//  - nonunit_error: division required a unit and the denominator was not one
//  - value_undefined_error: the quantity is genuinely undefined at the given
//    point (e.g. the unit-root evidence vanishes)
//  - internal_error: an invariant the theory guarantees was violated; always
//    a bug, never a user error

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct nonunit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct value_undefined_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace padichg
