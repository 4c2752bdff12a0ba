#include "hermcert/properties.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hermcert/algebra.hpp"
#include "hermcert/padic.hpp"

namespace hermcert {

namespace {

// All signatures with entries in [lo, hi] of the given rank.
void for_each_signature(int rank, long lo, long hi,
                        const std::function<void(const Signature&)>& fn) {
    Signature sig;
    sig.lambda.assign(static_cast<std::size_t>(rank), lo);
    while (true) {
        fn(sig);
        int i = rank - 1;
        while (i >= 0 && sig.lambda[static_cast<std::size_t>(i)] == hi) {
            sig.lambda[static_cast<std::size_t>(i)] = lo;
            --i;
        }
        if (i < 0) break;
        ++sig.lambda[static_cast<std::size_t>(i)];
    }
}

PropertyResult run_check(const std::string& name, const std::function<std::string()>& body) {
    PropertyResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

}  // namespace

std::vector<PropertyResult> hecke_property_suite() {
    std::vector<PropertyResult> out;
    const std::vector<long> primes{2, 3, 5, 7};

    out.push_back(run_check("hecke-integrality", [&] {
        long count = 0;
        for (int n = 1; n <= 5; ++n) {
            for (long p : primes) {
                for_each_signature(n, -3, 3, [&](const Signature& sig) {
                    HeckeMeasure m = hecke_measure(n, p, sig);  // integrality asserted inside
                    if (m.value < 1) throw std::logic_error("measure below 1");
                    ++count;
                });
            }
        }
        return std::to_string(count) + " measures, all positive integers";
    }));

    out.push_back(run_check("hecke-shift-invariance", [&] {
        long count = 0;
        for (int n = 1; n <= 4; ++n) {
            for (long p : {2L, 5L}) {
                for_each_signature(n, -3, 3, [&](const Signature& sig) {
                    Integer base = hecke_measure(n, p, sig).value;
                    for (long c = -2; c <= 2; ++c) {
                        if (c == 0) continue;
                        Signature shifted = sig;
                        for (long& v : shifted.lambda) v += c;
                        if (hecke_measure(n, p, shifted).value != base)
                            throw std::logic_error("shift by " + std::to_string(c) +
                                                   " changed the measure");
                        ++count;
                    }
                });
            }
        }
        return std::to_string(count) + " shifted signatures agree";
    }));

    out.push_back(run_check("hecke-permutation-invariance", [&] {
        std::mt19937 rng(7);
        long count = 0;
        for (int n = 2; n <= 5; ++n) {
            for (long p : {2L, 7L}) {
                for_each_signature(n, -2, 2, [&](const Signature& sig) {
                    Integer base = hecke_measure(n, p, sig).value;
                    Signature perm = sig;
                    std::shuffle(perm.lambda.begin(), perm.lambda.end(), rng);
                    if (hecke_measure(n, p, perm).value != base)
                        throw std::logic_error("permutation changed the measure");
                    ++count;
                });
            }
        }
        return std::to_string(count) + " permuted signatures agree";
    }));

    out.push_back(run_check("hecke-closed-form-agreement", [&] {
        long count = 0;
        for (int n = 2; n <= 6; ++n) {
            for (long p : {2L, 3L, 5L}) {
                Rational t(1, p);
                for (int k = 1; k <= 6; ++k) {
                    Signature sig;
                    sig.lambda.assign(static_cast<std::size_t>(n), 0);
                    sig.lambda.front() = k;
                    sig.lambda.back() = -k;
                    Rational closed =
                        Rational(ipow(Integer(p), static_cast<unsigned long>(2 * k * (n - 1)))) *
                        (Rational(1) - rational_pow(t, static_cast<unsigned long>(n - 1))) *
                        (Rational(1) - rational_pow(t, static_cast<unsigned long>(n))) /
                        ((Rational(1) - t) * (Rational(1) - t));
                    closed.canonicalize();
                    if (Rational(hecke_measure(n, p, sig).value) != closed)
                        throw std::logic_error("closed form disagrees at n=" + std::to_string(n) +
                                               " p=" + std::to_string(p) +
                                               " k=" + std::to_string(k));
                    ++count;
                }
            }
        }
        return std::to_string(count) + " closed-form values agree";
    }));

    return out;
}

std::vector<PropertyResult> algebra_property_suite(unsigned seed, int pairs) {
    std::vector<PropertyResult> out;
    auto backend = std::make_shared<FreeGroup>(2);

    std::mt19937 rng(seed);
    auto random_element = [&](bool nonnegative) {
        std::uniform_int_distribution<int> support_size(1, 6);
        std::uniform_int_distribution<int> word_len(0, 4);
        std::uniform_int_distribution<int> letter(1, 2);
        std::uniform_int_distribution<int> sign(0, 1);
        std::uniform_int_distribution<int> num(1, 9);
        std::uniform_int_distribution<int> den(1, 9);
        AlgebraElement x(backend);
        int k = support_size(rng);
        for (int i = 0; i < k; ++i) {
            Word raw;
            int len = word_len(rng);
            for (int j = 0; j < len; ++j)
                raw.push_back(sign(rng) ? letter(rng) : -letter(rng));
            Rational c(num(rng), den(rng));
            if (!nonnegative && sign(rng)) c = -c;
            x.add_term(backend->canonicalize(raw), c);
        }
        return x;
    };

    out.push_back(run_check("algebra-norm-submultiplicative", [&] {
        for (int i = 0; i < pairs; ++i) {
            AlgebraElement x = random_element(false);
            AlgebraElement y = random_element(false);
            if (convolve(x, y).l1_norm() > x.l1_norm() * y.l1_norm())
                throw std::logic_error("||x*y|| > ||x|| ||y|| at pair " + std::to_string(i));
        }
        return std::to_string(pairs) + " random pairs";
    }));

    out.push_back(run_check("algebra-nonnegative-norm-multiplicative", [&] {
        for (int i = 0; i < pairs; ++i) {
            AlgebraElement x = random_element(true);
            AlgebraElement y = random_element(true);
            if (convolve(x, y).l1_norm() != x.l1_norm() * y.l1_norm())
                throw std::logic_error("nonnegative norm equality failed at pair " +
                                       std::to_string(i));
        }
        return std::to_string(pairs) + " random nonnegative pairs";
    }));

    out.push_back(run_check("algebra-involution-isometric-antihomomorphism", [&] {
        for (int i = 0; i < pairs; ++i) {
            AlgebraElement x = random_element(false);
            AlgebraElement y = random_element(false);
            if (involution(x).l1_norm() != x.l1_norm())
                throw std::logic_error("involution is not isometric at pair " + std::to_string(i));
            if (involution(involution(x)) != x)
                throw std::logic_error("involution is not involutive at pair " +
                                       std::to_string(i));
            if (involution(convolve(x, y)) != convolve(involution(y), involution(x)))
                throw std::logic_error("(x*y)^* != y^* x^* at pair " + std::to_string(i));
        }
        return std::to_string(pairs) + " random pairs";
    }));

    out.push_back(run_check("algebra-delta-unit", [&] {
        AlgebraElement e = AlgebraElement::delta(backend, backend->identity_word());
        for (int i = 0; i < pairs / 10; ++i) {
            AlgebraElement x = random_element(false);
            if (convolve(e, x) != x || convolve(x, e) != x)
                throw std::logic_error("delta_e is not the unit at pair " + std::to_string(i));
        }
        return std::to_string(pairs / 10) + " random elements";
    }));

    return out;
}

std::vector<PropertyResult> table_property_suite(const BallTable& table) {
    std::vector<PropertyResult> out;

    out.push_back(run_check("table-submultiplicativity", [&] {
        SubmultiplicativityReport rep = check_submultiplicative(table);
        if (!rep.ok) throw std::logic_error(rep.violation);
        return std::to_string(rep.pairs_checked) + " pairs";
    }));

    out.push_back(run_check("table-balls-nondecreasing", [&] {
        const auto& b = table.ball_sizes();
        for (std::size_t n = 1; n < b.size(); ++n)
            if (b[n] < b[n - 1]) throw std::logic_error("ball sizes decreased at " + std::to_string(n));
        return std::string("radii 0..") + std::to_string(table.completed_radius());
    }));

    out.push_back(run_check("table-sphere-difference-identity", [&] {
        const auto& b = table.ball_sizes();
        const auto& s = table.sphere_sizes();
        for (std::size_t n = 1; n < b.size(); ++n)
            if (s[n] != b[n] - b[n - 1])
                throw std::logic_error("sphere size mismatch at " + std::to_string(n));
        return std::string("ok");
    }));

    return out;
}

}  // namespace hermcert
