#include "schubert/rational.hpp"

#include <stdexcept>

namespace schubert {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_text(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    if (k > n) return Integer(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational power(const Rational& q, unsigned exponent) {
    Rational r(1);
    Rational b = q;
    while (exponent) {
        if (exponent & 1u) r *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return r;
}

}  // namespace schubert
