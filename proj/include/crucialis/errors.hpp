#pragma once

#include <stdexcept>
#include <string>

namespace crucialis {

/// Position outside the word, or a malformed half-open range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Text could not be read as a word.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word cannot be rendered in the requested format.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad scalar argument (exponent < 2, empty word, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requires a property the input does not have (e.g. cruciality).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Delta chain is not strictly nested under the current letter names.
class NamingError : public std::logic_error {
 public:
  NamingError(const std::string& what, int first, int second)
      : std::logic_error(what), first_letter(first), second_letter(second) {}
  int first_letter;
  int second_letter;
};

/// (n, k) outside a construction's validity domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested object would exceed the configured length cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace crucialis
