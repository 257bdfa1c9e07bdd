#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degseq {

// Default strictness tolerance. Float-path comparisons that land within tau
// (relative) of equality are classified as near-ties instead of being
// silently resolved either way.
inline constexpr long double kDefaultTau = 1e-9L;

struct EvalOptions {
    long double tau = kDefaultTau;
    unsigned threads = 1;
};

// Exact rational on 128-bit integers. Denominator is kept positive and the
// fraction normalized. Arithmetic that would leave 128 bits throws
// std::overflow_error rather than producing a wrong value.
class Rational {
public:
    using Int = __int128;

    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit
    Rational(long long num, long long den);
    static Rational from_parts(Int num, Int den);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    // -1, 0, +1; exact (throws std::overflow_error if cross products leave
    // 128 bits, which desk-scale inputs never do).
    int compare(const Rational& other) const;
    bool operator==(const Rational& o) const { return compare(o) == 0; }
    bool operator!=(const Rational& o) const { return compare(o) != 0; }
    bool operator<(const Rational& o) const { return compare(o) < 0; }

    long double to_long_double() const;
    std::string str() const;  // "p" or "p/q"

    // base^exponent, base >= 0, exponent >= 0
    static Rational pow_int(long long base, long exponent);

private:
    Int num_ = 0;
    Int den_ = 1;
    void normalize();
};

// A number that is either an exact rational or an extended-precision float.
// Arithmetic stays exact while both operands are exact and degrades to float
// as soon as one side is approximate.
class Scalar {
public:
    Scalar() : exact_(true), rat_(0), val_(0.0L) {}
    Scalar(long long v) : exact_(true), rat_(v), val_(static_cast<long double>(v)) {}
    Scalar(const Rational& r) : exact_(true), rat_(r), val_(r.to_long_double()) {}
    static Scalar approx(long double v);

    bool exact() const { return exact_; }
    const Rational& rat() const;  // requires exact()
    long double value() const { return val_; }
    bool finite() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    std::string str() const;  // exact: rational text; float: 17 significant digits

private:
    bool exact_;
    Rational rat_;
    long double val_;
};

enum class Cmp { Less, Equal, Greater, NearTie };

// Trichotomy when both sides are exact; otherwise a relative-tolerance float
// comparison where |a-b| <= tau*max(|a|,|b|) reports NearTie. Equal on the
// float path means bit-identical values.
Cmp compare(const Scalar& a, const Scalar& b, long double tau = kDefaultTau);

std::string to_string(Cmp c);

inline bool cmp_ge(Cmp c) { return c == Cmp::Greater || c == Cmp::Equal || c == Cmp::NearTie; }
inline bool cmp_le(Cmp c) { return c == Cmp::Less || c == Cmp::Equal || c == Cmp::NearTie; }

}  // namespace degseq
