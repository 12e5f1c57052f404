#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/rational.hpp>

#include "actdim/error.hpp"

namespace actdim {

/// Arbitrary precision integer; expression templates off so it composes with Eigen.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

using Rational = boost::rational<std::int64_t>;

/// Exact element a + b·√5 of the quadratic field ℚ(√5).
class QSqrt5 {
public:
    QSqrt5() = default;
    QSqrt5(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QSqrt5(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}  // NOLINT

    /// The golden ratio (1 + √5)/2 = 2·cos(π/5).
    static QSqrt5 golden() { return {Rational(1, 2), Rational(1, 2)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt5_part() const { return b_; }

    QSqrt5& operator+=(const QSqrt5& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt5& operator-=(const QSqrt5& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt5& operator*=(const QSqrt5& o) {
        const Rational a = a_ * o.a_ + 5 * b_ * o.b_;
        b_ = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        return *this;
    }
    QSqrt5& operator/=(const QSqrt5& o) {
        // (a + b√5)/(c + d√5) = (a + b√5)(c − d√5)/(c² − 5d²); the norm is nonzero for o ≠ 0.
        const Rational norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
        if (norm.numerator() == 0) throw Error(ErrorKind::InvalidArgument, "division by zero in Q(sqrt5)");
        *this *= QSqrt5(o.a_, -o.b_);
        a_ /= norm;
        b_ /= norm;
        return *this;
    }
    friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
    friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
    friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
    friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
    friend QSqrt5 operator-(const QSqrt5& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QSqrt5& x, const QSqrt5& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const QSqrt5& x) {
        return os << x.a_ << "+" << x.b_ << "*sqrt5";
    }

private:
    Rational a_{0};
    Rational b_{0};
};

// Overflow-checked primitives shared by the integer elimination routines.

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 multiplication");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 subtraction");
    return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 addition");
    return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

inline std::int64_t abs_value(std::int64_t a) {
    if (a == INT64_MIN) throw Error(ErrorKind::Overflow, "int64 absolute value");
    return a < 0 ? -a : a;
}
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// Quotient rounded toward negative infinity.
template <typename Int>
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline BigInt to_big(std::int64_t v) { return BigInt(v); }
inline BigInt to_big(const BigInt& v) { return v; }

}  // namespace actdim

namespace Eigen {

template <>
struct NumTraits<actdim::Rational> : GenericNumTraits<actdim::Rational> {
    using Real = actdim::Rational;
    using NonInteger = actdim::Rational;
    using Nested = actdim::Rational;
    using Literal = actdim::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<actdim::QSqrt5> : GenericNumTraits<actdim::QSqrt5> {
    using Real = actdim::QSqrt5;
    using NonInteger = actdim::QSqrt5;
    using Nested = actdim::QSqrt5;
    using Literal = actdim::QSqrt5;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
