#pragma once

#include <string>

#include "hyponorm/polynomial.hpp"
#include "hyponorm/rational.hpp"

namespace hyponorm {

/// num / den over Q. Always kept canonical: gcd(num, den) = 1 and den monic.
class RationalFunction {
  public:
    RationalFunction() : RationalFunction(Polynomial::constant(0), Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::constant(1, p.variable())) {}
    static RationalFunction constant(const Rational& c, std::string variable = "n");

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    const std::string& variable() const noexcept { return den_.degree() >= 1 ? den_.variable() : num_.variable(); }

    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws std::domain_error where the denominator vanishes.
    Rational operator()(const Rational& x) const;

    /// f(x + shift).
    RationalFunction shifted(const Rational& shift) const;
    RationalFunction renamed(const std::string& variable) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const Rational& k, const RationalFunction& a);

    bool operator==(const RationalFunction& other) const {
        return num_.coefficients() == other.num_.coefficients() && den_.coefficients() == other.den_.coefficients();
    }

    std::string to_string() const;

  private:
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

}  // namespace hyponorm
