#pragma once

// Exact rational numbers backed by GMP.
//
// Every density, matrix entry and bound in turankit is a Rational. Values
// are always canonical (lowest terms, positive denominator), so equality
// is structural and string renderings are unique.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace turankit {

using Integer = mpz_class;

template <std::integral T>
Integer toInteger(T value) {
    if constexpr (std::is_signed_v<T>)
        return Integer(static_cast<long>(value));
    else
        return Integer(static_cast<unsigned long>(value));
}

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value) : value_(toInteger(value)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    template <std::integral A, std::integral B>
    Rational(A num, B den) : Rational(toInteger(num), toInteger(den)) {}

    /// Parses "p", "-p" or "p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text) {
        auto bad = [&] {
            return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        };
        auto isInteger = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!isInteger(text)) throw bad();
            return Rational(Integer(std::string(text[0] == '+' ? text.substr(1) : text)));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!isInteger(num) || !isInteger(den) || den.front() == '-' || den.front() == '+') throw bad();
        if (num.front() == '+') num.remove_prefix(1);
        Integer d(std::string{den});
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(Integer(std::string{num}), d);
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool isZero() const { return sign() == 0; }
    bool isInteger() const { return value_.get_den() == 1; }

    double toDouble() const { return value_.get_d(); }

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string str() const {
        if (isInteger()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    /// Decimal rendering truncated toward zero after `digits` fractional
    /// digits. Approximate by construction; never feed it back into exact paths.
    std::string decimal(int digits = 12) const {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        Integer num = abs(value_.get_num()) * scale;
        Integer q = num / value_.get_den();
        std::string s = q.get_str();
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        if (sign() < 0) s.insert(0, "-");
        return s;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Integer power, exponent may be negative for nonzero bases.
    friend Rational pow(const Rational& base, int exponent) {
        if (exponent < 0) return Rational(1) / pow(base, -exponent);
        Rational result(1);
        Rational b = base;
        for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
            if (e & 1U) result *= b;
            b *= b;
        }
        return result;
    }

    friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

private:
    mpq_class value_{0};
};

}  // namespace turankit
