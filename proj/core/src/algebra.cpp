#include "hermcert/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hermcert/groupspec.hpp"

namespace hermcert {

AlgebraElement AlgebraElement::delta(BackendPtr backend, const Word& g, const Rational& c) {
    AlgebraElement x(std::move(backend));
    x.add_term(g, c);
    return x;
}

Rational AlgebraElement::at(const Word& g) const {
    auto it = coeff_.find(g);
    return it == coeff_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Word& g, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeff_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

Rational AlgebraElement::l1_norm() const {
    Rational s(0);
    for (const auto& [g, c] : coeff_) s += abs(c);
    return s;
}

bool AlgebraElement::is_nonnegative() const {
    for (const auto& [g, c] : coeff_)
        if (c < 0) return false;
    return true;
}

std::vector<std::pair<Word, Rational>> AlgebraElement::sorted_terms() const {
    std::vector<std::pair<Word, Rational>> out(coeff_.begin(), coeff_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

namespace {
void check_same_backend(const AlgebraElement& x, const AlgebraElement& y) {
    if (!x.backend() || !y.backend())
        throw std::invalid_argument("algebra element has no backend");
    if (x.backend()->id() != y.backend()->id())
        throw std::invalid_argument("algebra elements belong to different backends");
}
}  // namespace

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_backend(x, y);
    const GroupBackend& g = *x.backend();
    AlgebraElement out(x.backend());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term(g.multiply(a, b), ca * cb);
    return out;
}

AlgebraElement involution(const AlgebraElement& x) {
    if (!x.backend()) throw std::invalid_argument("algebra element has no backend");
    const GroupBackend& g = *x.backend();
    AlgebraElement out(x.backend());
    for (const auto& [a, c] : x.terms()) out.add_term(g.invert(a), c);
    return out;
}

AlgebraElement power(const AlgebraElement& x, int n, std::size_t support_budget) {
    if (n < 1) throw std::invalid_argument("power: exponent must be >= 1");
    AlgebraElement acc = x;
    for (int k = 2; k <= n; ++k) {
        acc = convolve(acc, x);
        if (acc.support_size() > support_budget)
            throw BudgetExceeded("power: support budget exceeded at power " + std::to_string(k),
                                 k - 1);
    }
    return acc;
}

std::vector<AlgebraElement> powers_through(const AlgebraElement& x, int n,
                                           std::size_t support_budget) {
    if (n < 1) throw std::invalid_argument("powers_through: exponent must be >= 1");
    std::vector<AlgebraElement> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(x);
    for (int k = 2; k <= n; ++k) {
        out.push_back(convolve(out.back(), x));
        if (out.back().support_size() > support_budget)
            throw BudgetExceeded("powers_through: support budget exceeded at power " +
                                     std::to_string(k),
                                 k - 1);
    }
    return out;
}

AlgebraElement witness_element(const GeneratingSet& s) {
    if (!s.backend) throw std::invalid_argument("witness_element: generating set has no backend");
    if (s.size() < 2) throw std::invalid_argument("witness_element: |S| must be >= 2");
    if (!s.symmetric)
        throw std::invalid_argument("witness_element: S must be symmetric (closed under inverses)");
    AlgebraElement f(s.backend);
    Rational c(1, s.size());
    for (const Word& w : s.elements) f.add_term(w, c);
    return f;
}

RationalInterval spectral_radius_upper(const AlgebraElement& x, int m) {
    if (m < 1) throw std::invalid_argument("spectral_radius_upper: m must be >= 1");
    if (x.is_zero()) throw std::invalid_argument("spectral_radius_upper: zero element");
    std::optional<RationalInterval> best;
    AlgebraElement acc = x;
    for (int n = 1; n <= m; ++n) {
        if (n > 1) acc = convolve(acc, x);
        RationalInterval root = nth_root_enclosure(acc.l1_norm(), static_cast<unsigned long>(n));
        if (!best) {
            best = root;
        } else {
            // Enclosure of min(previous, current).
            if (root.lo < best->lo) best->lo = root.lo;
            if (root.hi < best->hi) best->hi = root.hi;
        }
    }
    return *best;
}

std::string serialize_element(const AlgebraElement& x) {
    std::ostringstream os;
    for (const auto& [w, c] : x.sorted_terms()) {
        Rational q = c;
        q.canonicalize();
        os << word_to_text(*x.backend(), w) << " " << q.get_num().get_str() << " "
           << q.get_den().get_str() << "\n";
    }
    return os.str();
}

}  // namespace hermcert
