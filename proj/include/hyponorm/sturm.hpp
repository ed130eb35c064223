#pragma once

#include <cstddef>
#include <vector>

#include "hyponorm/polynomial.hpp"
#include "hyponorm/rational.hpp"

namespace hyponorm {

/// Sturm chain p, p', -rem(p, p'), ... of the square-free part of p.
class SturmChain {
  public:
    explicit SturmChain(const Polynomial& p);

    /// Distinct real roots in the half-open interval (a, b].
    std::size_t count_roots(const Rational& a, const Rational& b) const;
    /// Distinct real roots in (a, +inf).
    std::size_t count_roots_above(const Rational& a) const;

    const std::vector<Polynomial>& chain() const noexcept { return chain_; }

  private:
    std::size_t sign_changes_at(const Rational& x) const;
    std::size_t sign_changes_at_infinity() const;

    std::vector<Polynomial> chain_;
};

}  // namespace hyponorm
