#include "cased/sqrt_sum.h"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace cased {

namespace {

template <unsigned Digits>
using BinFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;

// Evaluates the sum at ~Digits decimal digits; returns the sign if the value
// is provably nonzero at this precision, 2 if indeterminate.
template <unsigned Digits> int sign_at(const std::vector<SqrtSum::Term>& terms) {
    using F = BinFloat<Digits>;
    F sum = 0, magnitude = 0;
    for (const auto& t : terms) {
        F root = sqrt(F(t.radicand));
        F val = F(t.coeff) * root;
        sum += val;
        magnitude += abs(val);
    }
    // sqrt and the additions are each correctly rounded to ~1 ulp; a margin of
    // (#ops * 16) ulps of the largest magnitude is a safe overestimate.
    F margin = magnitude * static_cast<double>(16.0 * (terms.size() + 1)) *
               pow(F(10), -static_cast<int>(Digits) + 1);
    if (sum > margin)
        return 1;
    if (sum < -margin)
        return -1;
    return 2;
}

} // namespace

SqrtSum SqrtSum::of_rational(const Rational& value) {
    SqrtSum s;
    if (value != 0)
        s.add_term(value, 1);
    return s;
}

SqrtSum SqrtSum::of_sqrt(const Rational& radicand) { return term(1, radicand); }

SqrtSum SqrtSum::term(const Rational& coeff, const Rational& radicand) {
    if (radicand < 0)
        throw Error("SqrtSum: negative radicand");
    SqrtSum s;
    if (coeff == 0 || radicand == 0)
        return s;
    // c * sqrt(p/q) = (c/q) * sqrt(p*q)
    BigInt p = numerator(radicand), q = denominator(radicand);
    s.add_term(coeff / Rational(q), p * q);
    return s;
}

void SqrtSum::add_term(const Rational& coeff_in, const BigInt& radicand_in) {
    Rational coeff = coeff_in;
    BigInt radicand = radicand_in;
    // perfect-square radicands are rational values
    BigInt root;
    if (perfect_square(radicand, root)) {
        coeff *= Rational(root);
        radicand = 1;
    }
    // Fold into an existing term when radicand/existing is a rational square:
    // for positive integers that is equivalent to radicand*existing being a
    // perfect square S^2, and then sqrt(radicand) = (S/existing)*sqrt(existing).
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        BigInt s;
        if (perfect_square(radicand * it->radicand, s)) {
            it->coeff += coeff * Rational(s, it->radicand);
            if (it->coeff == 0)
                terms_.erase(it);
            return;
        }
    }
    Term t{radicand, coeff};
    auto pos = std::lower_bound(terms_.begin(), terms_.end(), t,
                                [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
    terms_.insert(pos, std::move(t));
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& other) {
    for (const auto& t : other.terms_)
        add_term(t.coeff, t.radicand);
    return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& other) {
    for (const auto& t : other.terms_)
        add_term(-t.coeff, t.radicand);
    return *this;
}

SqrtSum SqrtSum::operator+(const SqrtSum& other) const {
    SqrtSum r = *this;
    r += other;
    return r;
}

SqrtSum SqrtSum::operator-(const SqrtSum& other) const {
    SqrtSum r = *this;
    r -= other;
    return r;
}

SqrtSum SqrtSum::operator-() const {
    SqrtSum r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

SqrtSum& SqrtSum::scale(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= factor;
    return *this;
}

std::optional<Rational> SqrtSum::as_rational() const {
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && terms_[0].radicand == 1)
        return terms_[0].coeff;
    return std::nullopt;
}

int SqrtSum::sign() const {
    if (terms_.empty())
        return 0;
    if (terms_.size() == 1)
        return terms_[0].coeff < 0 ? -1 : 1;
    bool all_neg = true, all_pos = true;
    for (const auto& t : terms_) {
        (t.coeff < 0 ? all_pos : all_neg) = false;
    }
    if (all_pos)
        return 1;
    if (all_neg)
        return -1;
    {
        // double fast path with a generous error margin
        double sum = 0, magnitude = 0;
        for (const auto& t : terms_) {
            double v = to_double(t.coeff) * std::sqrt(t.radicand.convert_to<double>());
            sum += v;
            magnitude += std::abs(v);
        }
        double margin = magnitude * 1e-11 * static_cast<double>(terms_.size() + 1);
        if (std::isfinite(sum) && std::isfinite(margin)) {
            if (sum > margin)
                return 1;
            if (sum < -margin)
                return -1;
        }
    }
    int s = sign_at<25>(terms_);
    if (s != 2)
        return s;
    s = sign_at<60>(terms_);
    if (s != 2)
        return s;
    s = sign_at<150>(terms_);
    if (s != 2)
        return s;
    s = sign_at<400>(terms_);
    if (s != 2)
        return s;
    s = sign_at<1000>(terms_);
    if (s != 2)
        return s;
    s = sign_at<2500>(terms_);
    if (s != 2)
        return s;
    throw Error("SqrtSum: sign undecided at 2500 digits");
}

int SqrtSum::compare(const SqrtSum& a, const SqrtSum& b) {
    if (a.terms_ == b.terms_)
        return 0;
    return (a - b).sign();
}

double SqrtSum::approx() const {
    double v = 0;
    for (const auto& t : terms_)
        v += to_double(t.coeff) * std::sqrt(to_double(Rational(t.radicand)));
    return v;
}

std::string SqrtSum::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (!first)
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        if (c < 0)
            c = -c;
        if (t.radicand == 1) {
            out += format_exact(c);
        } else {
            if (c != 1)
                out += format_exact(c) + "*";
            out += "sqrt(" + t.radicand.str() + ")";
        }
        first = false;
    }
    return out;
}

} // namespace cased
