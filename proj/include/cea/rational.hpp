#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cea {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator; every operation is exact.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational from_string(std::string_view s)
    {
        const auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(s)));
        }
        BigInt n{std::string(s.substr(0, slash))};
        BigInt d{std::string(s.substr(slash + 1))};
        return Rational(std::move(n), std::move(d));
    }

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational &operator+=(const Rational &o)
    {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const
    {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
    friend bool operator<(const Rational &a, const Rational &b)
    {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
    friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
    friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

    /// Renders "p" for integers, "p/q" otherwise.
    std::string str() const
    {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
    void normalize()
    {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(std::move(f));
}

inline Rational pow2(int n)
{
    BigInt p = 1;
    p <<= n;
    return Rational(std::move(p));
}

} // namespace cea
