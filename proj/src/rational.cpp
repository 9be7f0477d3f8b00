#include <ellgw/rational.hpp>

#include <stdexcept>
#include <string>

namespace ellgw
{

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string num_str(text.substr(0, slash));
    const std::string den_str = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    auto valid = [](const std::string &s, bool allow_sign) {
        if (s.empty()) {
            return false;
        }
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    if (!valid(num_str, true) || !valid(den_str, false)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class num(num_str[0] == '+' ? num_str.substr(1) : num_str, 10);
    mpz_class den(den_str, 10);
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace ellgw
