// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spinhol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent quantum numbers or out-of-range arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input vectors are linearly dependent (or a zero state).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Sampling is too coarse for the requested operation (branch or projection ambiguity).
class RefinementRequiredError : public Error {
 public:
  using Error::Error;
};

/// The endpoint overlap has a (numerically) zero singular value; the holonomy is undefined.
class DegenerateOverlapError : public Error {
 public:
  using Error::Error;
};

/// A deterministic basis choice inside a degenerate eigenspace could not be made.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or schema violation in an input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input whose content is unusable (wrong dimension, rank deficiency, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinhol
