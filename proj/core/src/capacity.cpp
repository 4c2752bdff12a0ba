#include "hermcert/capacity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hermcert {

CapacityBounds sphere_mass_lower(const AlgebraElement& f, const BallTable& table, int n_max,
                                 std::size_t support_budget) {
    if (!f.backend() || !table.backend() || f.backend()->id() != table.backend()->id())
        throw std::invalid_argument("sphere_mass_lower: element and table backends differ");
    if (!f.is_nonnegative())
        throw std::invalid_argument("sphere_mass_lower: witness must be nonnegative");
    if (n_max < 1) throw std::invalid_argument("sphere_mass_lower: n_max must be >= 1");
    if (n_max > table.completed_radius())
        throw std::invalid_argument("sphere_mass_lower: table only enumerated to radius " +
                                    std::to_string(table.completed_radius()));

    // Support must be exactly S: the proof bounds f^n pointwise on products of
    // n generators.
    {
        const auto& gens = table.generators().elements;
        if (f.support_size() != gens.size())
            throw std::invalid_argument("sphere_mass_lower: support of f differs from S");
        for (const Word& w : gens)
            if (f.at(w) == 0)
                throw std::invalid_argument("sphere_mass_lower: support of f differs from S");
    }

    CapacityBounds out;
    AlgebraElement acc = f;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            acc = convolve(acc, f);
            if (acc.support_size() > support_budget)
                throw BudgetExceeded("sphere_mass_lower: support budget exceeded at power " +
                                         std::to_string(n),
                                     n - 1);
        }
        Rational mass(0);
        for (const auto& [g, c] : acc.terms()) {
            auto len = table.length_of(g);
            if (len && *len == n) mass += c;
        }
        out.degrees.push_back(n);
        out.lower_sphere_masses.push_back(mass);
        out.lower_sphere_roots.push_back(nth_root_enclosure(mass, static_cast<unsigned long>(n)));
    }
    return out;
}

void attach_growth_lower(CapacityBounds& bounds, const RationalInterval& omega,
                         GrowthProvenance provenance, int set_size, const std::string& note) {
    if (set_size < 2) throw std::invalid_argument("attach_growth_lower: |S| must be >= 2");
    ProvenancedInterval p;
    p.value = omega.divided_by(Rational(set_size));
    p.provenance = provenance;
    p.note = note;
    bounds.lower_limit = p;
}

LpResult lp_l1_minimize(const std::vector<AlgebraElement>& columns, const AlgebraElement& target) {
    for (const auto& col : columns) {
        if (!col.backend() || col.backend()->id() != target.backend()->id())
            throw std::invalid_argument("lp_l1_minimize: mixed backends");
    }
    // Deterministic row order: shortlex over the union support.
    std::map<std::pair<std::size_t, Word>, std::size_t> row_of;
    auto key = [](const Word& w) { return std::make_pair(w.size(), w); };
    auto add_rows = [&](const AlgebraElement& x) {
        for (const auto& [g, c] : x.terms()) row_of.emplace(key(g), 0);
    };
    add_rows(target);
    for (const auto& col : columns) add_rows(col);
    std::size_t m = 0;
    for (auto& [k, idx] : row_of) idx = m++;

    std::vector<Rational> t(m, Rational(0));
    for (const auto& [g, c] : target.terms()) t[row_of.at(key(g))] = c;
    std::vector<std::vector<Rational>> cols(columns.size(), std::vector<Rational>(m, Rational(0)));
    for (std::size_t l = 0; l < columns.size(); ++l)
        for (const auto& [g, c] : columns[l].terms()) cols[l][row_of.at(key(g))] = c;

    return l1_minimize(cols, t);
}

LpUpperResult capacity_upper_lp(const AlgebraElement& f, int n, std::size_t support_budget) {
    if (n < 1) throw std::invalid_argument("capacity_upper_lp: degree must be >= 1");
    std::vector<AlgebraElement> cols;
    cols.push_back(AlgebraElement::delta(f.backend(), f.backend()->identity_word()));
    AlgebraElement target = f;
    if (n > 1) {
        auto pws = powers_through(f, n, support_budget);
        for (int k = 1; k < n; ++k) cols.push_back(pws[static_cast<std::size_t>(k - 1)]);
        target = pws[static_cast<std::size_t>(n - 1)];
    }
    LpUpperResult r;
    r.lp = lp_l1_minimize(cols, target);
    r.optimum = r.lp.optimum;
    r.root = nth_root_enclosure(r.optimum, static_cast<unsigned long>(n));
    return r;
}

CertificateResult frw_certificate(const CapacityBounds& lower, const RationalInterval& r_upper) {
    if (!lower.lower_limit)
        throw std::invalid_argument(
            "frw_certificate: no rigorous capacity lower limit present "
            "(refusing to certify from empirical per-n data)");
    GrowthProvenance prov = lower.lower_limit->provenance;
    if (prov == GrowthProvenance::Empirical)
        throw std::invalid_argument(
            "frw_certificate: lower limit has empirical provenance; a closed-form, "
            "Perron-enclosure or asserted growth value is required");

    CertificateResult cert;
    cert.capacity_lower = lower.lower_limit->value;
    cert.spectral_upper = r_upper;
    cert.provenance = prov;
    Rational half_r = r_upper.hi / 2;
    cert.margin = lower.lower_limit->value.lo - half_r;
    cert.margin.canonicalize();
    if (cert.margin > 0) {
        cert.verdict = FrwVerdict::NotHermitian;
    } else {
        cert.verdict = FrwVerdict::Inconclusive;
        cert.boundary_equality = cert.margin == 0;
    }
    return cert;
}

}  // namespace hermcert
