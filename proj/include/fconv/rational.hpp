#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace fconv {

/// Exact rational number backed by GMP's mpq_t. Always canonical:
/// gcd(|num|, den) = 1 and den >= 1; zero is 0/1.
class Rational {
public:
    Rational() { mpq_init(v_); }

    Rational(long n) {  // NOLINT: implicit by design, mirrors integer literals
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }

    Rational(long num, unsigned long den);

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }

    ~Rational() { mpq_clear(v_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_minus_one() const { return mpq_cmp_si(v_, -1, 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    /// True when the denominator is 1 and the numerator fits a long.
    bool fits_long() const;
    long to_long() const;  // valid only when fits_long()

    /// Largest of the numerator's and denominator's bit lengths.
    std::size_t bit_length() const {
        std::size_t n = mpz_sizeinbase(mpq_numref(v_), 2);
        std::size_t d = mpz_sizeinbase(mpq_denref(v_), 2);
        return n > d ? n : d;
    }

    /// Canonical form: "p" when the denominator is 1, else "p/q".
    std::string to_string() const;

    /// Parses "p" or "p/q". Throws DomainError on malformed text or zero denominator.
    static Rational from_string(const std::string& s);

private:
    mpq_t v_;
};

/// Tally of exact rational operations performed by an engine run. Subtractions
/// count as additions. max_bit_length tracks the largest numerator/denominator
/// bit length among produced results.
struct OpCounter {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
    std::size_t max_bit_length = 0;

    void reset() { *this = OpCounter{}; }

    void note(const Rational& r) {
        std::size_t b = r.bit_length();
        if (b > max_bit_length) max_bit_length = b;
    }
};

inline Rational counted_mul(const Rational& a, const Rational& b, OpCounter* c) {
    Rational r = a * b;
    if (c) {
        ++c->multiplications;
        c->note(r);
    }
    return r;
}

inline void counted_add_assign(Rational& dst, const Rational& x, OpCounter* c) {
    dst += x;
    if (c) {
        ++c->additions;
        c->note(dst);
    }
}

inline void counted_sub_assign(Rational& dst, const Rational& x, OpCounter* c) {
    dst -= x;
    if (c) {
        ++c->additions;
        c->note(dst);
    }
}

inline void counted_mul_assign(Rational& dst, const Rational& x, OpCounter* c) {
    dst *= x;
    if (c) {
        ++c->multiplications;
        c->note(dst);
    }
}

/// dst += coeff * x. Coefficients 0 and +-1 take the add/sub path and perform
/// no multiplication; only executed operations are tallied.
inline void accumulate_scaled(Rational& dst, const Rational& coeff, const Rational& x,
                              OpCounter* c) {
    if (coeff.is_zero()) return;
    if (coeff.is_one()) {
        counted_add_assign(dst, x, c);
    } else if (coeff.is_minus_one()) {
        counted_sub_assign(dst, x, c);
    } else {
        counted_add_assign(dst, counted_mul(coeff, x, c), c);
    }
}

}  // namespace fconv
