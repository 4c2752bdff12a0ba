#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermcert {

/// Exact arbitrary-precision arithmetic used throughout. All certificate-grade
/// comparisons are made on these types; doubles appear only in reported roots.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline std::string fraction_str(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_fraction(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a fraction: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Closed interval [lo, hi] with exact rational endpoints. Enclosures of
/// irrational quantities (n-th roots, Perron roots) are carried this way so
/// that verdict comparisons stay exact.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }

    static RationalInterval point(const Rational& v) { return RationalInterval(v, v); }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    double mid_double() const { return (lo.get_d() + hi.get_d()) / 2.0; }

    RationalInterval divided_by(const Rational& d) const {
        if (d <= 0) throw std::invalid_argument("interval division by nonpositive value");
        return RationalInterval(lo / d, hi / d);
    }
};

/// Encloses q^(1/n) in an interval of width 10^-scale_digits (or a point when
/// q is an exact n-th power of a rational). Pure integer arithmetic: finds r
/// with (r/M)^n <= q < ((r+1)/M)^n for M = 10^scale_digits.
inline RationalInterval nth_root_enclosure(const Rational& q, unsigned long n,
                                           unsigned scale_digits = 12) {
    if (q < 0) throw std::invalid_argument("nth_root_enclosure: negative input");
    if (n == 0) throw std::invalid_argument("nth_root_enclosure: zero degree");
    if (q == 0) return RationalInterval::point(0);
    if (n == 1) return RationalInterval::point(q);

    Rational c = q;
    c.canonicalize();
    {
        Integer rn, rd;
        int exact_n = mpz_root(rn.get_mpz_t(), c.get_num().get_mpz_t(), n);
        int exact_d = mpz_root(rd.get_mpz_t(), c.get_den().get_mpz_t(), n);
        if (exact_n && exact_d) return RationalInterval::point(Rational(rn, rd));
    }

    const Integer M = ipow(10ul, scale_digits);
    // floor((q * M^n)^(1/n)) via integer n-th root of floor(num*M^n/den).
    Integer scaled = c.get_num() * ipow(M, n);
    scaled /= c.get_den();
    Integer r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n);
    // mpz_root floors against the floored quotient; fix up against q itself.
    auto below = [&](const Integer& x) { return Rational(ipow(x, n)) <= c * Rational(ipow(M, n)); };
    while (!below(r)) r -= 1;
    while (below(r + 1)) r += 1;
    return RationalInterval(Rational(r, M), Rational(r + 1, M));
}

/// User-facing error for exceeded enumeration/power budgets; carries how far
/// the computation got before stopping.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(const std::string& what, int completed)
        : std::runtime_error(what), completed_(completed) {}
    int completed() const { return completed_; }

  private:
    int completed_;
};

}  // namespace hermcert
