#pragma once

#include <stdexcept>
#include <string>

namespace gwp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph: duplicate ids, dangling endpoints, id namespace clashes.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A word, element or vertex that does not belong to the graph at hand.
class ForeignIdError : public Error {
 public:
  using Error::Error;
};

/// Operands built over two different graphs.
class CrossGraphError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Truncation or size guard tripped (Fock cutoff, basis cap, NC(n) bound).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Input text (graph files, operator expressions) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gwp
