#include "bcfa/real.hpp"

#include <cctype>
#include <charconv>

namespace bcfa {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<mpz_class> parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

std::optional<Rational> parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto ex = parse_integer(s.substr(e + 1));
        if (!ex || !ex->fits_slong_p()) return std::nullopt;
        exponent = ex->get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            return std::nullopt;
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) return std::nullopt;
        digits = std::string(s);
    }
    if (exponent > 4096 || exponent < -4096) return std::nullopt;
    Rational q{mpz_class(digits, 10)};
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
        q /= scale;
    else
        q *= scale;
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den = parse_integer(text.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        Rational q(*num, *den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

std::string format_rational(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    Rational c(q);
    c.canonicalize();
    const mpz_class& num = c.get_num();
    const mpz_class& den = c.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

bool sqrt_le_sum(const Rational& a, const Rational& b, const Rational& c) {
    // sqrt(a) <= sqrt(b) + sqrt(c)  <=>  a - b - c <= 2 sqrt(bc)
    Rational d = a - b - c;
    if (sgn(d) <= 0) return true;
    return d * d <= 4 * b * c;
}

}  // namespace bcfa
