#include "hermcert/padic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hermcert {

bool is_prime(long p) {
    if (p >= (1L << 31))
        throw std::invalid_argument("primality check limited to p < 2^31");
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Rational nu_m(int m, const Rational& t) {
    if (m < 0) throw std::invalid_argument("nu_m: m must be >= 0");
    Rational out(1);
    Rational partial(1);  // 1 + t + ... + t^{i-1}, built incrementally
    Rational tpow(1);
    for (int i = 1; i <= m; ++i) {
        out *= partial;
        tpow *= t;
        partial += tpow;
    }
    out.canonicalize();
    return out;
}

Rational nu_lambda(const Signature& lambda, const Rational& t) {
    std::map<long, int> multiplicity;
    for (long v : lambda.lambda) {
        if (v < 0)
            throw std::invalid_argument("nu_lambda: entries must be nonnegative (shift first)");
        ++multiplicity[v];
    }
    Rational out(1);
    for (const auto& [value, count] : multiplicity) out *= nu_m(count, t);
    out.canonicalize();
    return out;
}

Rational inner_rho(const Signature& lambda) {
    int n = lambda.rank();
    Rational s(0);
    for (int i = 0; i < n; ++i)
        s += Rational(lambda.lambda[static_cast<std::size_t>(i)]) * Rational(n - 1 - 2 * i, 2);
    s.canonicalize();
    return s;
}

HeckeMeasure hecke_measure(int n, long p, const Signature& lambda) {
    if (lambda.rank() != n)
        throw std::invalid_argument("hecke_measure: rank does not match signature length");
    if (n < 1) throw std::invalid_argument("hecke_measure: rank must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("hecke_measure: p = " + std::to_string(p) +
                                                  " is not prime");

    // The coset depends only on the multiset of entries (the maximal compact
    // subgroup contains the permutation matrices) and is unchanged by central
    // shifts; sort to dominant order and shift nonnegative so the closed form
    // applies.
    Signature shifted = lambda;
    std::sort(shifted.lambda.begin(), shifted.lambda.end(), std::greater<long>());
    long min_entry = shifted.lambda.back();
    if (min_entry < 0)
        for (long& v : shifted.lambda) v -= min_entry;

    Rational two_rho = 2 * inner_rho(shifted);
    if (two_rho.get_den() != 1)
        throw std::logic_error("hecke_measure: 2<lambda,rho> is not an integer");
    if (two_rho < 0) throw std::logic_error("hecke_measure: negative exponent in dominant order");

    Rational t(1, p);
    Rational value = Rational(ipow(Integer(p), two_rho.get_num().get_ui())) * nu_m(n, t) /
                     nu_lambda(shifted, t);
    value.canonicalize();
    if (value.get_den() != 1 || value <= 0)
        throw std::logic_error("hecke_measure: value " + fraction_str(value) +
                               " is not a positive integer (coset counts must be)");
    HeckeMeasure m;
    m.value = value.get_num();
    m.n = n;
    m.p = p;
    m.lambda = lambda;
    return m;
}

Integer gl_growth_lower(int n, long p) {
    if (n < 2) throw std::invalid_argument("gl_growth_lower: rank must be >= 2");
    if (!is_prime(p)) throw std::invalid_argument("gl_growth_lower: p must be prime");
    return ipow(Integer(p), static_cast<unsigned long>(2 * (n - 1)));
}

std::vector<double> gl_growth_sequence(int n, long p, int k_max) {
    std::vector<double> out;
    for (int k = 1; k <= k_max; ++k) {
        Signature lam;
        lam.lambda.assign(static_cast<std::size_t>(n), 0);
        lam.lambda.front() = k;
        lam.lambda.back() = -k;
        HeckeMeasure m = hecke_measure(n, p, lam);
        out.push_back(std::pow(m.value.get_d(), 1.0 / k));
    }
    return out;
}

GlCriterionResult gl_criterion(int n, long p) {
    if (n < 2) throw std::invalid_argument("gl_criterion: rank must be >= 2");
    if (!is_prime(p)) throw std::invalid_argument("gl_criterion: p must be prime");

    Rational t(1, p);
    Rational one_minus(1);
    one_minus -= t;
    Rational ineq = 2 * one_minus * one_minus -
                    (Rational(1) - rational_pow(t, static_cast<unsigned long>(n - 1))) *
                        (Rational(1) - rational_pow(t, static_cast<unsigned long>(n)));
    ineq.canonicalize();

    Signature lam;
    lam.lambda.assign(static_cast<std::size_t>(n), 0);
    lam.lambda.front() = 1;
    lam.lambda.back() = -1;

    GlCriterionResult res;
    res.inequality_value = ineq;
    res.mu_KgK = hecke_measure(n, p, lam).value;
    res.omega_lower = gl_growth_lower(n, p);
    res.verdict = double_coset_criterion(
        Rational(res.mu_KgK), RationalInterval::point(Rational(res.omega_lower)),
        GrowthProvenance::ExactClosedForm, /*symmetric=*/true);
    res.verdict.criterion = "p-adic general linear growth (omega >= p^(2(n-1)) vs mu/2)";
    res.verdict.notes.push_back(
        "symmetry holds because the maximal compact subgroup contains all permutation matrices");

    // The inequality route and the double-coset route are algebraically the
    // same comparison; a disagreement would be an arithmetic bug.
    bool ineq_certifies = ineq > 0;
    if (ineq_certifies != (res.verdict.verdict == Verdict::Certified))
        throw std::logic_error("gl_criterion: inequality route disagrees with coset route");
    return res;
}

std::vector<ScanRow> inequality_scan(int n_min, int n_max, long p_min, long p_max) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("inequality_scan: bad rank range");
    std::vector<ScanRow> rows;
    for (long p = std::max(2L, p_min); p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (int n = n_min; n <= n_max; ++n) {
            GlCriterionResult r = gl_criterion(n, p);
            ScanRow row;
            row.n = n;
            row.p = p;
            row.value = r.inequality_value;
            row.sign = r.inequality_value > 0 ? 1 : (r.inequality_value < 0 ? -1 : 0);
            row.certified = r.verdict.verdict == Verdict::Certified;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

HeckeMeasure sl_measure(int n, long p, const Signature& lambda) {
    long sum = std::accumulate(lambda.lambda.begin(), lambda.lambda.end(), 0L);
    if (sum != 0)
        throw std::invalid_argument(
            "sl_measure: signature sums to " + std::to_string(sum) +
            "; the diagonal element has determinant valuation != 0 and is not in the special "
            "linear group");
    HeckeMeasure m = hecke_measure(n, p, lambda);
    m.note = "special linear double coset; left-coset count equals the general linear one "
             "(determinant-one rescaling of coset representatives is a bijection)";
    return m;
}

}  // namespace hermcert
