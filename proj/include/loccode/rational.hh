#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace loccode
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Exact rational in canonical form (positive denominator, reduced).
    class Rational
    {
        public:
            Rational() = default;
            Rational(long long numerator, long long denominator = 1) :
                _value(BigInt(numerator), BigInt(denominator))
            {
            }
            Rational(const BigInt & numerator, const BigInt & denominator) :
                _value(numerator, denominator)
            {
            }

            auto numerator() const -> BigInt { return boost::multiprecision::numerator(_value); }
            auto denominator() const -> BigInt { return boost::multiprecision::denominator(_value); }

            /// Smallest integer not below the value.
            auto ceil() const -> BigInt
            {
                auto n = numerator(), d = denominator();
                BigInt q = n / d;
                if (q * d < n)
                    ++q;
                return q;
            }

            auto to_double() const -> double { return _value.convert_to<double>(); }

            /// Always "p/q", also for integers.
            auto str() const -> std::string { return numerator().str() + "/" + denominator().str(); }

            auto operator+=(const Rational & o) -> Rational & { _value += o._value; return *this; }
            auto operator-=(const Rational & o) -> Rational & { _value -= o._value; return *this; }
            auto operator*=(const Rational & o) -> Rational & { _value *= o._value; return *this; }
            auto operator/=(const Rational & o) -> Rational & { _value /= o._value; return *this; }

            friend auto operator+(Rational a, const Rational & b) -> Rational { return a += b; }
            friend auto operator-(Rational a, const Rational & b) -> Rational { return a -= b; }
            friend auto operator*(Rational a, const Rational & b) -> Rational { return a *= b; }
            friend auto operator/(Rational a, const Rational & b) -> Rational { return a /= b; }

            friend auto operator==(const Rational & a, const Rational & b) -> bool { return a._value == b._value; }
            friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
            {
                if (a._value < b._value)
                    return std::strong_ordering::less;
                if (b._value < a._value)
                    return std::strong_ordering::greater;
                return std::strong_ordering::equal;
            }

        private:
            boost::multiprecision::cpp_rational _value;
    };
}
