#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyponorm/rational.hpp"

namespace hyponorm {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::string variable) : variable_(std::move(variable)) {}
    Polynomial(std::vector<Rational> coeffs, std::string variable = "n");
    Polynomial(std::initializer_list<Rational> coeffs, std::string variable = "n");

    static Polynomial constant(const Rational& c, std::string variable = "n");
    /// The polynomial x in the given variable.
    static Polynomial identity(std::string variable = "n");

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const std::string& variable() const noexcept { return variable_; }
    Polynomial renamed(std::string variable) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
    friend Polynomial operator*(const Rational& b, Polynomial a) { return a *= b; }

    /// Coefficient lists and variable equal.
    bool operator==(const Polynomial& other) const = default;

    /// p(x + shift).
    Polynomial shifted(const Rational& shift) const;
    Polynomial derivative() const;
    /// Divides by the leading coefficient. Zero stays zero.
    Polynomial monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient, plus
    /// the rational factor k with *this == k * primitive.
    std::pair<Polynomial, Rational> primitive_part() const;

    std::string to_string() const;

  private:
    void trim();
    void unify_variable(const Polynomial& rhs);

    std::vector<Rational> coeffs_;
    std::string variable_ = "n";
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p(q(x)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

}  // namespace hyponorm
