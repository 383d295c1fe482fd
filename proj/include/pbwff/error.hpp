// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pbwff {

/// Malformed input or violated precondition (rank mismatch, k > m, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (held-out prime disagrees, inexact
/// division where exactness is a theorem, singular unitriangular system).
class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pbwff
