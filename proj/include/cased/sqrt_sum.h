#ifndef CASED_SQRT_SUM_H
#define CASED_SQRT_SUM_H

#include "cased/numeric.h"

#include <optional>
#include <string>
#include <vector>

namespace cased {

/// Exact value of the form sum_i c_i * sqrt(k_i) with rational c_i and
/// positive integer radicands k_i.  Tunnel lengths w/sin(alpha) and their
/// per-edge sums live in this field, so equality and ordering decisions
/// (greedy selections, oracle ties, acceptance checks) stay exact.
///
/// Invariant: radicands are pairwise non-square-ratio and coefficients are
/// nonzero, which makes the zero representation unique (linear independence
/// of square roots over the rationals).  Sign of a nonzero value is decided
/// by evaluating at escalating precision.
class SqrtSum {
  public:
    SqrtSum() = default;

    static SqrtSum of_rational(const Rational& value);
    /// sqrt(radicand), radicand >= 0.
    static SqrtSum of_sqrt(const Rational& radicand);
    /// coeff * sqrt(radicand).
    static SqrtSum term(const Rational& coeff, const Rational& radicand);

    SqrtSum& operator+=(const SqrtSum& other);
    SqrtSum& operator-=(const SqrtSum& other);
    SqrtSum operator+(const SqrtSum& other) const;
    SqrtSum operator-(const SqrtSum& other) const;
    SqrtSum operator-() const;
    SqrtSum& scale(const Rational& factor);

    bool is_zero() const { return terms_.empty(); }
    /// Exact value as a rational, if the sum is rational.
    std::optional<Rational> as_rational() const;

    /// -1, 0, +1.  Zero detection is exact; nonzero sign uses interval
    /// evaluation at escalating precision (terminates because the canonical
    /// form already excluded zero).
    int sign() const;
    static int compare(const SqrtSum& a, const SqrtSum& b);

    // Value equality: different radicand bases can denote the same value
    // (3*sqrt(12) == 2*sqrt(27)), so equality goes through compare().
    bool operator==(const SqrtSum& o) const { return compare(*this, o) == 0; }
    bool operator!=(const SqrtSum& o) const { return !(*this == o); }
    bool operator<(const SqrtSum& o) const { return compare(*this, o) < 0; }
    bool operator<=(const SqrtSum& o) const { return compare(*this, o) <= 0; }
    bool operator>(const SqrtSum& o) const { return compare(*this, o) > 0; }
    bool operator>=(const SqrtSum& o) const { return compare(*this, o) >= 0; }

    double approx() const;
    /// Human-readable exact form, e.g. "3/2 + 2*sqrt(5)".
    std::string str() const;

    struct Term {
        BigInt radicand; // positive integer, never a perfect square except radicand == 1
        Rational coeff;
        bool operator==(const Term& o) const = default;
    };
    const std::vector<Term>& terms() const { return terms_; }

  private:
    void add_term(const Rational& coeff, const BigInt& radicand);
    std::vector<Term> terms_; // sorted by radicand
};

} // namespace cased

#endif
