#pragma once

#include <string>
#include <vector>

#include "hermcert/criteria.hpp"
#include "hermcert/rational.hpp"

namespace hermcert {

/// Integer cocharacter signature (lambda_1, ..., lambda_n) indexing the
/// diagonal double coset K diag(p^lambda_1, ..., p^lambda_n) K. Entries may be
/// negative; measure computations shift by a constant tuple first.
struct Signature {
    std::vector<long> lambda;

    int rank() const { return static_cast<int>(lambda.size()); }
};

struct HeckeMeasure {
    Integer value;  // left-coset count; asserted to be a positive integer
    int n = 0;
    long p = 0;
    Signature lambda;
    std::string note;
};

/// Deterministic trial-division primality for p < 2^31.
bool is_prime(long p);

/// nu_m(t) = prod_{i=1}^m (1 + t + ... + t^{i-1}), the cancelled form of
/// (1-t)^{-m} prod (1 - t^i); exact.
Rational nu_m(int m, const Rational& t);

/// nu_lambda(t) = prod over distinct values i >= 0 of nu_{multiplicity of i};
/// zero parts are counted. Entries must be nonnegative (shift first).
Rational nu_lambda(const Signature& lambda, const Rational& t);

/// <lambda, rho> with rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2); exact, and
/// 2<lambda, rho> is always an integer for integer lambda.
Rational inner_rho(const Signature& lambda);

/// mu(K pi^lambda K) = p^{2<lambda,rho>} nu_n(1/p) / nu_lambda(1/p), evaluated
/// after sorting lambda (the coset depends only on the multiset; the formula
/// requires the dominant order) and shifting all entries nonnegative (a
/// central shift leaves the measure unchanged). The result is asserted to be
/// a positive integer.
HeckeMeasure hecke_measure(int n, long p, const Signature& lambda);

/// p^{2(n-1)}, the growth lower bound for the double coset of
/// diag(p, 1, ..., 1, p^-1).
Integer gl_growth_lower(int n, long p);

/// Per-k values mu(K pi^{k lambda} K)^{1/k} for inspection (doubles).
std::vector<double> gl_growth_sequence(int n, long p, int k_max);

struct GlCriterionResult {
    CriterionVerdict verdict;
    Rational inequality_value;  // 2(1-1/p)^2 - (1-p^{1-n})(1-p^{-n})
    Integer mu_KgK;
    Integer omega_lower;
};

/// Growth criterion for the general linear group over the p-adics: evaluates
/// the exact inequality and, independently, the double-coset criterion with
/// mu = hecke_measure(n, p, (1, 0, ..., 0, -1)) and omega >= p^{2(n-1)}
/// (symmetry holds since the maximal compact subgroup contains all permutation
/// matrices). The two routes must agree.
GlCriterionResult gl_criterion(int n, long p);

struct ScanRow {
    int n = 0;
    long p = 0;
    Rational value;
    int sign = 0;
    bool certified = false;
};

/// Exact sign table of the criterion inequality over n in [n_min, n_max] and
/// primes p in [p_min, p_max].
std::vector<ScanRow> inequality_scan(int n_min, int n_max, long p_min, long p_max);

/// Same measure for the special linear group: the left-coset counts of KgK
/// agree with the general linear ones for determinant-one g, which requires
/// the signature to sum to zero.
HeckeMeasure sl_measure(int n, long p, const Signature& lambda);

}  // namespace hermcert
