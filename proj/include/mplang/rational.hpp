#ifndef MPLANG_RATIONAL_HPP
#define MPLANG_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace mplang {

// Exact rational scalar. Always kept in canonical reduced form:
// denominator > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on
    // malformed input or zero denominator.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class floor() const;
    mpz_class ceil() const;

    double to_double() const { return q_.get_d(); }

    // Canonical form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    std::size_t hash() const;

private:
    mpq_class q_;
};

// lcm(a, b) for positive integers.
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace mplang

template <>
struct std::hash<mplang::Rational> {
    std::size_t operator()(const mplang::Rational& r) const { return r.hash(); }
};

#endif
