#include "ecpair/rational.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ecp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    auto num = trim(s.substr(0, slash));
    auto den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!valid_integer_text(num) || !valid_integer_text(den))
        fail("ParseError", "not a rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) fail("ParseError", "zero denominator: '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) fail("DomainError", "valuation of zero");
    Integer m = abs(n);
    long v = 0;
    if (mpz_fits_ulong_p(p.get_mpz_t())) {
        unsigned long q = p.get_ui();
        while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
            ++v;
        }
        return v;
    }
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long valuation(const Rational& r, const Integer& p) {
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational frac(const Integer& a, const Integer& b) {
    if (b == 0) fail("DomainError", "zero denominator");
    Rational out(a, b);
    out.canonicalize();
    return out;
}

Rational rpow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) fail("DomainError", "negative power of zero");
        Rational inv = 1 / base;
        return rpow(inv, -exponent);
    }
    Rational out(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
                 ipow(base.get_den(), static_cast<unsigned long>(exponent)));
    out.canonicalize();
    return out;
}

bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) && mpz_perfect_square_p(r.get_den().get_mpz_t());
}

Rational rational_sqrt(const Rational& r) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return frac(n, d);
}

Integer height(const Rational& r) {
    Integer n = abs(r.get_num());
    return n > r.get_den() ? n : Integer(r.get_den());
}

std::vector<Rational> rationals_of_height(long H) {
    std::vector<Rational> out;
    for (long q = 1; q <= H; ++q)
        for (long p = -H; p <= H; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ecp
