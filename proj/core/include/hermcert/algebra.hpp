#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "hermcert/group.hpp"
#include "hermcert/rational.hpp"
#include "hermcert/word.hpp"

namespace hermcert {

/// Finitely supported function from group elements to exact rationals, the
/// working representation of elements of the l1 group algebra. Zeros are never
/// stored; all arithmetic is exact.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(BackendPtr backend) : backend_(std::move(backend)) {}

    static AlgebraElement delta(BackendPtr backend, const Word& g, const Rational& c = Rational(1));

    const BackendPtr& backend() const { return backend_; }
    std::size_t support_size() const { return coeff_.size(); }
    bool is_zero() const { return coeff_.empty(); }

    /// Coefficient at g (zero when absent).
    Rational at(const Word& g) const;
    /// Adds c to the coefficient at g, dropping the entry when it cancels.
    void add_term(const Word& g, const Rational& c);

    Rational l1_norm() const;
    bool is_nonnegative() const;

    const std::unordered_map<Word, Rational, WordHash>& terms() const { return coeff_; }
    /// Terms in canonical (shortlex) order, for deterministic output.
    std::vector<std::pair<Word, Rational>> sorted_terms() const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.coeff_ == b.coeff_;
    }

  private:
    BackendPtr backend_;
    std::unordered_map<Word, Rational, WordHash> coeff_;
};

/// Convolution (x*y)(g) = sum_h x(h) y(h^-1 g), support-driven.
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);

/// Involution x*(g) = conj(x(g^-1)); conjugation is the identity on rationals.
AlgebraElement involution(const AlgebraElement& x);

/// Exact n-th convolution power by iterated convolution. Throws
/// BudgetExceeded (carrying the largest completed power) if any intermediate
/// support exceeds support_budget.
AlgebraElement power(const AlgebraElement& x, int n, std::size_t support_budget = 1u << 22);

/// Powers x^1 .. x^n, same budget semantics.
std::vector<AlgebraElement> powers_through(const AlgebraElement& x, int n,
                                           std::size_t support_budget = 1u << 22);

/// The selfadjoint witness (1/|S|) * indicator(S) for a finite symmetric set
/// with |S| >= 2; its l1 norm is exactly 1 and it is fixed by the involution.
AlgebraElement witness_element(const GeneratingSet& s);

/// min over 1 <= n <= m of ||x^n||_1^(1/n), as a rational enclosure. The l1
/// norm is submultiplicative, so every term (hence the min) is a valid upper
/// bound on the spectral radius.
RationalInterval spectral_radius_upper(const AlgebraElement& x, int m);

/// Line-based serialization: one `word numerator denominator` triple per term,
/// in canonical order. Words are rendered with word_to_text (groupspec.hpp).
std::string serialize_element(const AlgebraElement& x);

}  // namespace hermcert
