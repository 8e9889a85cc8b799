#pragma once

#include <memory>
#include <string>
#include <vector>

#include "padiceis/rational.hpp"

namespace padiceis {

/**
 * Residue arithmetic in Z/p^K with conservative precision tracking.
 *
 * An element stores a representative v in [0, p^K) together with the number
 * of guaranteed p-adic digits `prec` <= K: the true value is congruent to v
 * mod p^prec, and nothing is claimed beyond that.  Propagation rules:
 *
 *   add/sub:  prec = min(prec_a, prec_b)
 *   mul:      prec = min(prec_a + val(b), prec_b + val(a), K)
 *   division: by an element of valuation w costs w digits
 *
 * where val() is the certified lower bound for the valuation (capped at the
 * element's own precision, since digits beyond it are unknown).  Claiming
 * more precision than these rules allow is treated as a bug class of its
 * own and is what the K-vs-K' agreement property tests target.
 */
struct PadicElem {
    Int v;
    int prec = 0;
};

class PadicRing {
public:
    using Elem = PadicElem;

    PadicRing() = default; // invalid placeholder; valid() == false
    PadicRing(long p, int K);

    bool valid() const { return p_ != 0; }
    long p() const { return p_; }
    int prec_cap() const { return K_; }
    const Int& modulus() const { return ppow(K_); }
    const Int& ppow(int e) const;

    bool operator==(const PadicRing& o) const { return p_ == o.p_ && K_ == o.K_; }
    bool operator!=(const PadicRing& o) const { return !(*this == o); }

    Elem zero() const { return {Int(0), K_}; }
    Elem one() const { return {Int(1), K_}; }
    Elem from_long(long n) const { return from_mpz(Int(n)); }
    Elem from_mpz(const Int& n) const;
    Elem from_rational(const Rational& x) const; // fails unless v_p(x) >= 0
    Elem make(const Int& v, int prec) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_long(const Elem& a, long n) const { return mul(a, from_long(n)); }
    Elem inv(const Elem& a) const; // a must be a certified unit
    Elem div(const Elem& a, const Elem& b) const;
    // exact division by a small integer constant; fails when p | m
    // ("non-invertible denominator"), callers integrate rationally instead
    Elem div_small(const Elem& a, long m) const;

    // canonical (droppable) zero: residue 0 known to full precision
    bool is_zero(const Elem& a) const { return a.prec >= K_ && a.v == 0; }
    bool is_unit(const Elem& a) const { return a.prec >= 1 && a.v % p_ != 0; }
    // agreement on the shared certified digits
    bool eq(const Elem& a, const Elem& b) const;
    // certified lower bound for v_p, capped at the tracked precision
    int val_lb(const Elem& a) const;

    std::string str(const Elem& a) const;

private:
    long p_ = 0;
    int K_ = 0;
    std::shared_ptr<const std::vector<Int>> pw_;
};

} // namespace padiceis
