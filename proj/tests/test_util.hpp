#pragma once

#include "doctest.h"
#include "galring/error.hpp"

namespace galring::testing {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Context;
}

}  // namespace galring::testing
