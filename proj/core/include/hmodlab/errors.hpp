// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hmod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a mathematical operation
/// (evaluation outside [0,1], square root of a negative radicand).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction parameter is invalid (q outside (0,1], negative m, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON, rational strings, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The operation does not apply to its input, e.g. refuting membership
/// for an identically zero b0.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates without finding a hit. This never
/// asserts that no hit exists.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// A verified identity failed; indicates a bug in a construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A bound certificate was contradicted by an enclosure.
class CertificateViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hmod
