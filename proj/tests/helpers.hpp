#pragma once

#include <stdexcept>
#include <utility>

#include "grouplarge/errors.hpp"

// Runs fn, which must throw grouplarge::Error, and returns its code.
template <class F>
grouplarge::Error::Code error_code(F&& fn) {
  try {
    std::forward<F>(fn)();
  } catch (const grouplarge::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a grouplarge::Error");
}
