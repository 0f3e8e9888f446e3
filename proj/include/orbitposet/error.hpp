#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitposet {

/// Malformed argument: bad one-line notation, mismatched sizes, margins that
/// do not agree, and so on.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A factorial-cost path was asked for a rank it is not built for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A comparison predicate handed to from_order_relation is not a partial order.
/// The witness holds the offending element indices (a, b, c); for reflexivity
/// and antisymmetry failures only the first one or two entries are meaningful.
class OrderViolation : public InvalidInput {
 public:
  OrderViolation(const std::string& what, std::array<std::size_t, 3> witness)
      : InvalidInput(what), witness_(witness) {}

  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

/// The Bruhat and matrix routes disagree on an instance. Never caught inside
/// the library.
class BackendMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two printed labels contradict the computed isomorphism partition.
class LabelConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A swept instance fell outside every reference class.
class ClassificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orbitposet
