#include "cased/numeric.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cased {

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0)
        throw Error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0)
        return false;
    BigInt r = isqrt_floor(n);
    if (r * r == n) {
        root = r;
        return true;
    }
    return false;
}

bool perfect_square(const Rational& r, Rational& root) {
    if (r < 0)
        return false;
    BigInt pn, pd;
    if (!perfect_square(numerator(r), pn) || !perfect_square(denominator(r), pd))
        return false;
    root = Rational(pn, pd);
    return true;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw InputError("empty number");
    s = s.substr(b, e - b + 1);

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (denominator(num) != 1 || denominator(den) != 1)
            throw InputError("malformed fraction '" + text + "'");
        if (den == 0)
            throw InputError("zero denominator in '" + text + "'");
        return num / den;
    }

    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    int frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot)
                throw InputError("malformed number '" + text + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot)
                ++frac_len;
        } else {
            throw InputError("malformed number '" + text + "'");
        }
    }
    if (!seen_digit)
        throw InputError("malformed number '" + text + "'");
    // strip leading zeros: cpp_int would read them as an octal prefix
    size_t nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    BigInt num(digits);
    BigInt den = 1;
    for (int f = 0; f < frac_len; ++f)
        den *= 10;
    Rational r(num, den);
    return neg ? -r : r;
}

namespace {

// True when q = 2^a 5^b; fills the power of ten needed to clear it.
bool decimal_denominator(BigInt q, int& pow10) {
    int twos = 0, fives = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++twos;
    }
    while (q % 5 == 0) {
        q /= 5;
        ++fives;
    }
    if (q != 1)
        return false;
    pow10 = std::max(twos, fives);
    return true;
}

std::string digits_with_point(BigInt scaled, int frac) {
    bool neg = scaled < 0;
    if (neg)
        scaled = -scaled;
    std::string ds = scaled.str();
    if (static_cast<int>(ds.size()) <= frac)
        ds = std::string(frac + 1 - ds.size(), '0') + ds;
    std::string out;
    if (neg)
        out += '-';
    out += ds.substr(0, ds.size() - frac);
    if (frac > 0) {
        out += '.';
        out += ds.substr(ds.size() - frac);
    }
    return out;
}

} // namespace

std::string format_exact(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    int pow10 = 0;
    if (decimal_denominator(den, pow10)) {
        BigInt scale = 1;
        for (int i = 0; i < pow10; ++i)
            scale *= 10;
        BigInt scaled = num * (scale / den);
        return digits_with_point(scaled, pow10);
    }
    return num.str() + "/" + den.str();
}

std::string format_approx(const Rational& r, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    // round half away from zero
    BigInt num = numerator(r) * scale * 2 + (r >= 0 ? denominator(r) : -denominator(r));
    BigInt scaled = num / (denominator(r) * 2);
    return digits_with_point(scaled, digits);
}

std::string format_approx(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace cased
