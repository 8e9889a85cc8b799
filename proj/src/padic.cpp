#include "padiceis/padic.hpp"

namespace padiceis {

PadicRing::PadicRing(long p, int K) : p_(p), K_(K) {
    if (!is_prime(p)) fail_domain("p-adic ring: " + std::to_string(p) + " is not prime");
    if (K < 1) fail_domain("p-adic ring: modulus exponent K must be >= 1");
    auto pw = std::make_shared<std::vector<Int>>();
    pw->reserve(static_cast<std::size_t>(K) + 1);
    Int cur(1);
    for (int e = 0; e <= K; ++e) {
        pw->push_back(cur);
        cur *= p;
    }
    pw_ = std::move(pw);
}

const Int& PadicRing::ppow(int e) const {
    if (!valid()) fail_internal("use of invalid p-adic ring");
    if (e < 0 || e > K_) fail_internal("p-power exponent out of range");
    return (*pw_)[static_cast<std::size_t>(e)];
}

PadicRing::Elem PadicRing::from_mpz(const Int& n) const {
    Int v;
    mpz_fdiv_r(v.get_mpz_t(), n.get_mpz_t(), modulus().get_mpz_t());
    return {v, K_};
}

PadicRing::Elem PadicRing::from_rational(const Rational& x) const {
    if (x.is_zero()) return zero();
    Int den = x.den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
        fail_domain("rational " + x.str() + " is not a " + std::to_string(p_) + "-adic integer");
    Elem d = from_mpz(den);
    return mul(from_mpz(x.num()), inv(d));
}

PadicRing::Elem PadicRing::make(const Int& v, int prec) const {
    if (prec < 0 || prec > K_) fail_domain("precision out of range");
    Elem e = from_mpz(v);
    e.prec = prec;
    return e;
}

int PadicRing::val_lb(const Elem& a) const {
    if (a.v == 0) return a.prec;
    long w = vp(a.v, p_);
    return w >= a.prec ? a.prec : static_cast<int>(w);
}

PadicRing::Elem PadicRing::add(const Elem& a, const Elem& b) const {
    Elem r = from_mpz(a.v + b.v);
    r.prec = a.prec < b.prec ? a.prec : b.prec;
    return r;
}

PadicRing::Elem PadicRing::sub(const Elem& a, const Elem& b) const {
    Elem r = from_mpz(a.v - b.v);
    r.prec = a.prec < b.prec ? a.prec : b.prec;
    return r;
}

PadicRing::Elem PadicRing::neg(const Elem& a) const {
    Elem r = from_mpz(-a.v);
    r.prec = a.prec;
    return r;
}

PadicRing::Elem PadicRing::mul(const Elem& a, const Elem& b) const {
    Elem r = from_mpz(a.v * b.v);
    int p1 = a.prec + val_lb(b);
    int p2 = b.prec + val_lb(a);
    int pr = p1 < p2 ? p1 : p2;
    r.prec = pr < K_ ? pr : K_;
    return r;
}

PadicRing::Elem PadicRing::inv(const Elem& a) const {
    if (!is_unit(a)) fail_precision("p-adic inverse of a non-unit (or uncertified unit)");
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), modulus().get_mpz_t()) == 0)
        fail_internal("modular inverse failed for a unit");
    return {r, a.prec};
}

PadicRing::Elem PadicRing::div(const Elem& a, const Elem& b) const {
    if (b.v == 0) fail_precision("p-adic division by zero residue");
    long w = vp(b.v, p_);
    if (w >= b.prec) fail_precision("p-adic division: divisor valuation not certified");
    if (w == 0) return mul(a, inv(b));
    const Int& pw = ppow(static_cast<int>(w));
    if (!mpz_divisible_p(a.v.get_mpz_t(), pw.get_mpz_t()))
        fail_precision("p-adic division: numerator not divisible by p^" + std::to_string(w));
    Elem num{Int(a.v / pw), a.prec};
    Elem unit{Int(b.v / pw), b.prec};
    Elem r = mul(num, inv(unit));
    int pr = (a.prec < b.prec ? a.prec : b.prec) - static_cast<int>(w);
    if (pr < 1) fail_precision("p-adic division destroyed all certified digits");
    r.prec = pr < r.prec ? pr : r.prec;
    return r;
}

PadicRing::Elem PadicRing::div_small(const Elem& a, long m) const {
    if (m == 0) fail_domain("division by zero");
    long mm = m < 0 ? -m : m;
    if (mm % p_ == 0)
        fail_precision("non-invertible denominator " + std::to_string(m) + " in Z/" + std::to_string(p_) +
                       "^" + std::to_string(K_));
    Elem r = mul(a, inv(from_long(mm)));
    return m < 0 ? neg(r) : r;
}

bool PadicRing::eq(const Elem& a, const Elem& b) const {
    int m = a.prec < b.prec ? a.prec : b.prec;
    Int d = a.v - b.v;
    return mpz_divisible_p(d.get_mpz_t(), ppow(m).get_mpz_t()) != 0;
}

std::string PadicRing::str(const Elem& a) const {
    Int shown;
    mpz_fdiv_r(shown.get_mpz_t(), a.v.get_mpz_t(), ppow(a.prec).get_mpz_t());
    return shown.get_str() + " + O(" + std::to_string(p_) + "^" + std::to_string(a.prec) + ")";
}

} // namespace padiceis
