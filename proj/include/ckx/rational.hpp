#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ckx {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always reduced, denominator > 0, zero is 0/1.
/// Thin wrapper around boost::multiprecision::cpp_rational so the rest of
/// the library never touches the backing type directly.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = rep(num, den);
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = rep(num, den);
    }
    explicit Rational(const rep& r) : v_(r) {}

    static Rational from_string(const std::string& s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = boost::multiprecision::abs(v_); return r; }
    Rational pow(unsigned e) const;

    double to_double() const { return static_cast<double>(v_); }

    /// "5", "-3/2"; inverse of from_string.
    std::string str() const { return v_.str(); }

private:
    rep v_{0};
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1); exact for rational a, (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

}  // namespace ckx
