#include "padiceis/rational.hpp"

#include <mutex>
#include <vector>

namespace padiceis {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) fail_domain("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail_parse("not a rational: '" + s + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) fail_domain("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (v_ == 0) fail_domain("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (v_ == 0) {
        if (e < 0) fail_domain("negative power of zero");
        return Rational(0);
    }
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

bool Rational::denominator_power_of(long q) const {
    Int d = v_.get_den();
    if (d == 1) return true;
    if (q < 2) return false;
    Int qq(q), rem;
    while (d > 1) {
        Int quo;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t(), qq.get_mpz_t());
        if (rem != 0) return false;
        d = quo;
    }
    return true;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long vp(const Int& n, long p) {
    if (p < 2) fail_domain("vp: p must be >= 2");
    if (n == 0) fail_domain("valuation of zero");
    Int stripped, pz(p);
    mp_bitcnt_t cnt = mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    return static_cast<long>(cnt);
}

long vp(const Rational& x, long p) {
    if (x.is_zero()) fail_domain("valuation of zero");
    long v = vp(x.num(), p);
    if (x.den() != 1) v -= vp(x.den(), p);
    return v;
}

long vp_factorial(unsigned long n, long p) {
    if (p < 2) fail_domain("vp_factorial: p must be >= 2");
    long total = 0;
    unsigned long q = n;
    while (q > 0) {
        q /= static_cast<unsigned long>(p);
        total += static_cast<long>(q);
    }
    return total;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& a, unsigned long n) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), n);
    return r;
}

const Rational& bernoulli(unsigned k) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        unsigned long m = table.size();
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        Rational acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += Rational(binomial(Int(m + 1), j)) * table[j];
        table.push_back(-acc / Rational(Int(m + 1)));
    }
    return table[k];
}

Rational zeta_neg(unsigned k) {
    if (k == 0) fail_domain("zeta_neg requires k >= 1");
    return -bernoulli(k) / Rational(Int(k));
}

Int divisor_sigma(unsigned k, unsigned long m) {
    if (m < 1) fail_domain("divisor_sigma: m must be >= 1");
    Int total(1);
    unsigned long rest = m;
    for (unsigned long d = 2; d * d <= rest; ++d) {
        if (rest % d) continue;
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        // sum_{i=0}^{e} d^{ik}
        Int geom(0), dk = pow_int(Int(d), k), term(1);
        for (unsigned i = 0; i <= e; ++i) {
            geom += term;
            term *= dk;
        }
        total *= geom;
    }
    if (rest > 1) total *= pow_int(Int(rest), k) + 1;
    return total;
}

bool is_prime(long p) {
    if (p < 2) return false;
    Int z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace padiceis
