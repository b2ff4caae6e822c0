#pragma once

#include <doctest.h>

#include "bfi/error.hpp"

// Evaluates `expr` and checks that it throws bfi::Error with the given code.
#define CHECK_THROWS_CODE(expr, expected)                        \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const bfi::Error& e) {                              \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e.code() == (expected), e.what());           \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected bfi::Error from " #expr);   \
  } while (false)
