#include "hyponorm/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hyponorm {

Polynomial::Polynomial(std::vector<Rational> coeffs, std::string variable)
    : coeffs_(std::move(coeffs)), variable_(std::move(variable)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs, std::string variable)
    : coeffs_(coeffs), variable_(std::move(variable)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c, std::string variable) {
    return Polynomial(std::vector<Rational>{c}, std::move(variable));
}

Polynomial Polynomial::identity(std::string variable) {
    return Polynomial(std::vector<Rational>{0, 1}, std::move(variable));
}

Polynomial Polynomial::renamed(std::string variable) const {
    Polynomial p = *this;
    p.variable_ = std::move(variable);
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

// constants adapt to the other operand's variable
void Polynomial::unify_variable(const Polynomial& rhs) {
    if (variable_ == rhs.variable_) return;
    if (rhs.degree() < 1) return;
    if (degree() < 1) {
        variable_ = rhs.variable_;
        return;
    }
    throw std::invalid_argument("polynomial variable mismatch: " + variable_ + " vs " + rhs.variable_);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    unify_variable(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    unify_variable(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    unify_variable(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sign(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
    // Horner in the shifted argument
    Polynomial x_plus = Polynomial({shift, Rational(1)}, variable_);
    Polynomial acc(variable_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x_plus;
        acc += constant(*it, variable_);
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(Integer(static_cast<unsigned long>(k))));
    return Polynomial(std::move(out), variable_);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Rational lead = leading();
    for (auto& c : p.coeffs_) c /= lead;
    return p;
}

std::pair<Polynomial, Rational> Polynomial::primitive_part() const {
    if (is_zero()) return {*this, Rational(1)};
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& c : coeffs_) {
        const Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(num_gcd, den_lcm);
    factor.canonicalize();
    if (sign(leading()) < 0) factor = -factor;
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c /= factor;
    return {p, factor};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sign(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sign(c) < 0) out << "-";
        } else {
            out << (sign(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0 || !unit) out << mag.get_str();
        if (k > 0) {
            if (!unit) out << "*";
            out << variable_;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::string& var = a.degree() >= 1 ? a.variable() : b.variable();
    std::vector<Rational> rem = a.coefficients();
    const auto& div = b.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(var), Polynomial(rem, var)};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational f = rem[static_cast<std::size_t>(k + db)] / lead;
        quo[static_cast<std::size_t>(k)] = f;
        if (sign(f) == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * div[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo), var), Polynomial(std::move(rem), var)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc(q.variable());
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        acc *= q;
        acc += Polynomial::constant(*it, q.variable());
    }
    return acc;
}

}  // namespace hyponorm
