#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcone {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Weights outside the admissible set: a negative entry or a product
/// omega_i * gamma_i above one. `index` is 1-based, matching category indices.
class WeightError : public Error {
 public:
  enum class Kind { NegativeWeight, ProductExceedsOne };

  WeightError(Kind kind, std::size_t index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

class NotPointed : public Error {
 public:
  using Error::Error;
};

class NothingToMerge : public Error {
 public:
  using Error::Error;
};

class FormulaInapplicable : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  using Error::Error;
};

class DisconnectedPath : public Error {
 public:
  using Error::Error;
};

class PathCapExceeded : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordcone
