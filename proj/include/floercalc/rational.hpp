#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "floercalc/errors.hpp"

namespace floercalc {

inline mpz_class to_mpz(long long v) {
    static_assert(sizeof(long) == sizeof(long long),
                  "LP64 assumed for long long -> mpz conversion");
    return mpz_class(static_cast<long>(v));
}

// Exact rational number backed by arbitrary-precision integers.
// Invariants: stored in lowest terms, denominator > 0; equality and ordering
// are exact. All point counts and thresholds in the library live here.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(long long n) { q_ = to_mpz(n); }
    Rational(const mpz_class& n) : q_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw range_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long long num, long long den)
        : Rational(to_mpz(num), to_mpz(den)) {}

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    Rational frac() const { return *this - Rational(floor()); }

    double to_double() const { return q_.get_d(); }

    // Always "num/den", even for integers; keeps machine output uniform.
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.q_ == 0) throw range_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

// (( r )): 0 on integers, r - floor(r) - 1/2 otherwise. Odd and 1-periodic.
inline Rational sawtooth(const Rational& r) {
    if (r.is_integer()) return Rational(0);
    return r.frac() - Rational(1, 2);
}

} // namespace floercalc
