#include "degseq/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace degseq {

namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

UInt uabs(Int v) { return v < 0 ? static_cast<UInt>(-(v + 1)) + 1 : static_cast<UInt>(v); }

UInt gcd_u(UInt a, UInt b) {
    while (b != 0) {
        UInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational add overflow");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational mul overflow");
    return r;
}

std::string int128_str(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    UInt u = uabs(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

Rational Rational::from_parts(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    UInt g = gcd_u(uabs(num_), uabs(den_));
    if (g > 1) {
        num_ /= static_cast<Int>(g);
        den_ /= static_cast<Int>(g);
    }
}

Rational Rational::operator-() const { return from_parts(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_parts(
        checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
        checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first so products stay small
    UInt g1 = gcd_u(uabs(a.num_), uabs(b.den_));
    UInt g2 = gcd_u(uabs(b.num_), uabs(a.den_));
    Int an = g1 > 1 ? a.num_ / static_cast<Int>(g1) : a.num_;
    Int bd = g1 > 1 ? b.den_ / static_cast<Int>(g1) : b.den_;
    Int bn = g2 > 1 ? b.num_ / static_cast<Int>(g2) : b.num_;
    Int ad = g2 > 1 ? a.den_ / static_cast<Int>(g2) : a.den_;
    return Rational::from_parts(checked_mul(an, bn), checked_mul(ad, bd));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational::from_parts(b.den_, b.num_);
}

int Rational::compare(const Rational& other) const {
    Int lhs = checked_mul(num_, other.den_);
    Int rhs = checked_mul(other.num_, den_);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

long double Rational::to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return int128_str(num_);
    return int128_str(num_) + "/" + int128_str(den_);
}

Rational Rational::pow_int(long long base, long exponent) {
    if (base < 0 || exponent < 0) throw std::domain_error("pow_int expects non-negative arguments");
    Int acc = 1;
    for (long i = 0; i < exponent; ++i) acc = checked_mul(acc, static_cast<Int>(base));
    return from_parts(acc, 1);
}

Scalar Scalar::approx(long double v) {
    Scalar s;
    s.exact_ = false;
    s.rat_ = Rational();
    s.val_ = v;
    return s;
}

const Rational& Scalar::rat() const {
    if (!exact_) throw std::logic_error("rat() on a non-exact scalar");
    return rat_;
}

bool Scalar::finite() const { return std::isfinite(val_); }

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-rat_);
    return approx(-val_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.rat_ + b.rat_);
    return Scalar::approx(a.val_ + b.val_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.rat_ - b.rat_);
    return Scalar::approx(a.val_ - b.val_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.rat_ * b.rat_);
    return Scalar::approx(a.val_ * b.val_);
}

std::string Scalar::str() const {
    if (exact_) return rat_.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", val_);
    return buf;
}

Cmp compare(const Scalar& a, const Scalar& b, long double tau) {
    if (a.exact() && b.exact()) {
        int c = a.rat().compare(b.rat());
        if (c < 0) return Cmp::Less;
        if (c > 0) return Cmp::Greater;
        return Cmp::Equal;
    }
    long double x = a.value();
    long double y = b.value();
    if (x == y) return Cmp::Equal;
    long double diff = fabsl(x - y);
    long double scale = fmaxl(fabsl(x), fabsl(y));
    if (diff <= tau * scale) return Cmp::NearTie;
    return x < y ? Cmp::Less : Cmp::Greater;
}

std::string to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "less";
        case Cmp::Equal: return "equal";
        case Cmp::Greater: return "greater";
        case Cmp::NearTie: return "near-tie";
    }
    return "?";
}

}  // namespace degseq
