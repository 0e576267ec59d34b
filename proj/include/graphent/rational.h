#ifndef GRAPHENT_RATIONAL_H
#define GRAPHENT_RATIONAL_H

#include <cstdint>
#include <limits>
#include <string>

#include "graphent/error.h"

namespace graphent {

/// Reduced fraction num/den with den > 0. Arithmetic is carried out in 128-bit
/// intermediates and raises Overflow if a reduced result leaves the int64 range.
class Rational {
   public:
    Rational() = default;
    Rational(int64_t value) : num_(value), den_(1) {  // NOLINT(google-explicit-constructor)
    }
    Rational(int64_t num, int64_t den) {
        *this = reduce(num, den);
    }

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    std::string to_string() const {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational &a, const Rational &b) {
        return reduce(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return reduce(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return reduce(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) {
            throw std::domain_error("Rational division by zero");
        }
        return reduce(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend bool operator<(const Rational &a, const Rational &b) {
        return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
    }

    static Rational reduce(__int128 num, __int128 den) {
        if (den == 0) {
            throw std::domain_error("Rational with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lo = std::numeric_limits<int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<int64_t>::max();
        if (num < lo || num > hi || den > hi) {
            throw Error(ErrorCode::kOverflow, "rational value exceeds 64-bit range");
        }
        Rational r;
        r.num_ = static_cast<int64_t>(num);
        r.den_ = static_cast<int64_t>(den);
        return r;
    }

   private:
    static __int128 wide(int64_t v) {
        return v;
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace graphent

#endif
