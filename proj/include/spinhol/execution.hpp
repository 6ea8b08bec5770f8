// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>

namespace spinhol {

/// Selects between the OpenMP kernel and its serial reference. Both paths run the
/// same per-index body, so results are bitwise identical.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel region are
/// captured and the first one is rethrown after the loop.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(spinhol_for_each_index)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace spinhol
