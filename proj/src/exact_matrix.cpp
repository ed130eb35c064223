#include "hyponorm/exact_matrix.hpp"

namespace hyponorm {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n, true);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool ExactMatrix::check_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

ExactMatrix ExactMatrix::leading(std::size_t k) const {
    ExactMatrix out(k, k, symmetric_);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    }
    return out;
}

}  // namespace hyponorm
