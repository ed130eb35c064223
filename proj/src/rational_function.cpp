#include "hyponorm/rational_function.hpp"

#include <stdexcept>

namespace hyponorm {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::constant(const Rational& c, std::string variable) {
    return RationalFunction(Polynomial::constant(c, variable), Polynomial::constant(1, variable));
}

void RationalFunction::canonicalize() {
    const std::string var = variable();
    if (num_.is_zero()) {
        num_ = Polynomial(var);
        den_ = Polynomial::constant(1, var);
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    num_ *= 1 / lead;
    den_ = den_.monic();
    num_ = num_.renamed(var);
    den_ = den_.renamed(var);
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (sign(d) == 0) throw std::domain_error("rational function pole at " + x.get_str());
    return num_(x) / d;
}

RationalFunction RationalFunction::shifted(const Rational& shift) const {
    return RationalFunction(num_.shifted(shift), den_.shifted(shift));
}

RationalFunction RationalFunction::renamed(const std::string& variable) const {
    return RationalFunction(num_.renamed(variable), den_.renamed(variable));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const Rational& k, const RationalFunction& a) {
    return RationalFunction(a.num_ * k, a.den_);
}

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace hyponorm
