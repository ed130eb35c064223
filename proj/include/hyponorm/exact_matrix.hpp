#pragma once

#include <cstddef>
#include <vector>

#include "hyponorm/rational.hpp"

namespace hyponorm {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, bool symmetric = false)
        : rows_(rows), cols_(cols), symmetric_(symmetric), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    /// Flag only; see check_symmetric() for the entrywise test.
    bool symmetric() const noexcept { return symmetric_; }
    void set_symmetric(bool flag) noexcept { symmetric_ = flag; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool check_symmetric() const;

    /// Top-left k x k block.
    ExactMatrix leading(std::size_t k) const;

    bool operator==(const ExactMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    bool symmetric_ = false;
    std::vector<Rational> data_;
};

}  // namespace hyponorm
