#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kirby {

using Int = std::int64_t;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Bad user input (malformed PD text, schema violations, precondition
// failures). The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated internal contract, e.g. Delta(1) != +-1 for a diagram that
// passed validation. The CLI maps this to exit code 2.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw internal_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw internal_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw internal_error("integer overflow in multiplication");
  return r;
}

// Exact division; callers rely on divisibility (Bareiss pivots, content).
inline Int checked_div(Int a, Int b) {
  if (b == 0)
    throw internal_error("division by zero");
  if (a % b != 0)
    throw internal_error("inexact integer division");
  return a / b;
}

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace kirby
