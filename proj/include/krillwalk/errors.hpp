#pragma once

#include <stdexcept>
#include <string>

namespace krillwalk {

/// Base class for all library errors. Subclasses distinguish recoverable
/// semantic violations (bad inputs) from resource limits hit mid-run.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input failed validation (probabilities not summing to one, malformed
/// spec strings, arguments outside an operation's admissible range).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// The step law has no positive root of the derivative of the cumulant
/// generating function (nonnegative drift or no positive support point).
class NotWellControlledError : public Error {
public:
  explicit NotWellControlledError(const std::string& what) : Error(what) {}
};

/// A DP layer would exceed the configured state cap.
class StateCapExceededError : public Error {
public:
  explicit StateCapExceededError(const std::string& what) : Error(what) {}
};

/// The step law's lattice span is not 1, so exact lattice analyses do not apply.
class LatticeSpanError : public Error {
public:
  explicit LatticeSpanError(const std::string& what) : Error(what) {}
};

/// Exact enumeration was requested beyond the horizon it can afford.
class TooLargeForOracleError : public Error {
public:
  explicit TooLargeForOracleError(const std::string& what) : Error(what) {}
};

/// A best-first exploration frontier outgrew its budget before meeting
/// its bias target.
class BudgetExceededError : public Error {
public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

/// A tail threshold lies beyond the node cap, so censored trials cannot
/// resolve it.
class ThresholdBeyondCensoringError : public Error {
public:
  explicit ThresholdBeyondCensoringError(const std::string& what) : Error(what) {}
};

/// The requested tail depth is statistically unreachable at the given
/// trial count.
class PowerError : public Error {
public:
  explicit PowerError(const std::string& what) : Error(what) {}
};

/// Argument outside the admissible range of an asymptotic formula.
class RangeError : public Error {
public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

/// The requested series diverges for a supercritical configuration.
class SupercriticalDivergenceError : public Error {
public:
  explicit SupercriticalDivergenceError(const std::string& what) : Error(what) {}
};

}  // namespace krillwalk
