#include "hyponorm/sturm.hpp"

#include <stdexcept>

namespace hyponorm {

namespace {

std::size_t count_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    // square-free part keeps the count at distinct roots
    const Polynomial g = gcd(p, p.derivative());
    Polynomial base = g.degree() > 0 ? divmod(p, g).first : p;
    chain_.push_back(base);
    if (base.degree() < 1) return;
    chain_.push_back(base.derivative());
    while (true) {
        const auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

std::size_t SturmChain::sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign(q(x)));
    return count_changes(signs);
}

std::size_t SturmChain::sign_changes_at_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign(q.leading()));
    return count_changes(signs);
}

std::size_t SturmChain::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return sign_changes_at(a) - sign_changes_at(b);
}

std::size_t SturmChain::count_roots_above(const Rational& a) const {
    return sign_changes_at(a) - sign_changes_at_infinity();
}

}  // namespace hyponorm
