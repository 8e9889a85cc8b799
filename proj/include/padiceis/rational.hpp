#pragma once

#include <gmpxx.h>

#include <string>

#include "padiceis/errors.hpp"

namespace padiceis {

using Int = mpz_class;

// Exact rational in lowest terms, denominator > 0.  Thin wrapper over
// mpq_class that guarantees canonical form at every construction boundary
// and provides the parsing/printing conventions used by the serializers.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    static Rational parse(const std::string& s); // "a" or "a/b"

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational pow_int(long e) const;
    Rational inverse() const;

    // true when the denominator is 1 or a power of q
    bool denominator_power_of(long q) const;

    std::string str() const;

private:
    mpq_class v_;
};

// p-adic valuation of a nonzero integer / rational.
long vp(const Int& n, long p);
long vp(const Rational& x, long p);

// v_p(n!) by the Legendre sum.
long vp_factorial(unsigned long n, long p);

Int factorial(unsigned long n);

// C(a, n) for arbitrary integer a (falling factorial over n!), exact.
Int binomial(const Int& a, unsigned long n);

// Exact Bernoulli number, convention B_1 = -1/2, by the defining recursion
// sum_{j=0}^{m} C(m+1,j) B_j = 0.  Values are cached.
const Rational& bernoulli(unsigned k);

// zeta(1-k) = -B_k/k for k >= 1.
Rational zeta_neg(unsigned k);

// sigma_k(m) = sum of d^k over divisors d of m.
Int divisor_sigma(unsigned k, unsigned long m);

bool is_prime(long p);

Int pow_int(const Int& base, unsigned long e);

} // namespace padiceis
