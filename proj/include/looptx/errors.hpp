#pragma once

#include <stdexcept>
#include <string>

namespace looptx {

/// Malformed graph or word: undeclared vertex, duplicate edge id,
/// endpoint mismatch, disconnected graph.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Groupoid partiality: composing paths whose endpoints do not meet.
class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad argument shape: dimension or length mismatch, wrong group tag,
/// non-Hermitian data, rank-deficient basis.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A level is not contained in the requested finer level.
class RefinementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sampling grid violates the Nyquist bound for the polynomial's support.
class AliasingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace looptx
