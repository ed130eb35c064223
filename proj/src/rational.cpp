#include "hyponorm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hyponorm {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        num = parse_integer(text);
    } else {
        num = parse_integer(text.substr(0, slash));
        const auto den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
            throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
        }
        den = parse_integer(den_text);
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");

    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_scientific(const Rational& value, int digits) {
    if (sgn(value) == 0) return "0";
    const mpf_class f(value, 64 + 4 * static_cast<unsigned>(digits));
    mp_exp_t exp = 0;
    std::string m = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    std::string sign_part;
    if (m[0] == '-') {
        sign_part = "-";
        m.erase(0, 1);
    }
    std::string out = sign_part + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    const long e = static_cast<long>(exp) - 1;
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) es = "0" + es;
    return out + (e < 0 ? "e-" : "e+") + es;
}

}  // namespace hyponorm
