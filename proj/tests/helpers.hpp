#pragma once

#include <doctest.h>

#include <utility>

#include "actkit/error.hpp"

// Runs body and checks that it throws actkit::Error with the given code.
template <class F>
void expect_error(actkit::errc want, F&& body) {
  try {
    std::forward<F>(body)();
    FAIL_CHECK("expected " << std::string(actkit::errc_name(want))
                           << ", nothing thrown");
  } catch (const actkit::Error& e) {
    CHECK_MESSAGE(e.code() == want,
                  "expected " << std::string(actkit::errc_name(want))
                              << ", got " << std::string(e.what()));
  }
}
