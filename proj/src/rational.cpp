#include "hkt/rational.hpp"

#include <cctype>

#include "hkt/error.hpp"

namespace hkt {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string s(trim(text));
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (s.size() == digits_from) throw Error(ErrorKind::ParseError, "empty integer in '" + std::string(whole) + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
    }
    return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

RationalVector parse_rational_list(std::string_view text) {
    RationalVector out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const RationalVector& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::string to_string(const IntegerVector& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

RationalVector to_rational(std::span<const Integer> v) {
    return RationalVector(v.begin(), v.end());
}

RationalVector to_rational(std::span<const std::int64_t> v) {
    RationalVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

IntegerVector to_integer(std::span<const std::int64_t> v) {
    IntegerVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

bool is_integral(std::span<const Rational> v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntegerVector primitive_integer(std::span<const Integer> v) {
    IntegerVector out(v.begin(), v.end());
    const Integer g = content(v);
    if (g > 1)
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntegerVector primitive_integer(std::span<const Rational> v) {
    Integer den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector scaled;
    scaled.reserve(v.size());
    for (const auto& x : v) scaled.push_back(x.get_num() * (den / x.get_den()));
    return primitive_integer(std::span<const Integer>(scaled));
}

}  // namespace hkt
