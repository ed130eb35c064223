#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyponorm {

/// Index outside the range a weight table supports.
class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A value violates a domain invariant (negative weight, zero denominator, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The column/row elimination produced an entry outside the tridiagonal band,
/// or a symbolic expression lacks the expected product structure.
class StructureError : public std::runtime_error {
  public:
    StructureError(const std::string& what, std::size_t row, std::size_t col)
        : std::runtime_error(what), row_(row), col_(col) {}
    explicit StructureError(const std::string& what)
        : std::runtime_error(what) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

  private:
    std::size_t row_ = 0;
    std::size_t col_ = 0;
};

/// z_n = G(n)/G(n+1) is undefined because G(n+1) vanishes.
class DegenerateFactorError : public std::runtime_error {
  public:
    DegenerateFactorError(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

  private:
    std::size_t index_;
};

class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hyponorm
