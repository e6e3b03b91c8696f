#pragma once

#include <gtest/gtest.h>

#include <optional>

#include "elicit/error.hpp"

namespace elicit::testing {

/// Runs `fn` and returns the elicit::Error it throws, failing the test if it
/// returns normally.
template <typename Fn>
std::optional<Error> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected elicit::Error";
  return std::nullopt;
}

template <typename Fn>
std::optional<ErrorCode> code_of(Fn&& fn) {
  auto e = error_of(std::forward<Fn>(fn));
  if (!e) return std::nullopt;
  return e->code();
}

}  // namespace elicit::testing
