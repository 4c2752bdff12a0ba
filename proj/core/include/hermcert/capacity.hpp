#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermcert/algebra.hpp"
#include "hermcert/ball.hpp"
#include "hermcert/growth.hpp"
#include "hermcert/rational.hpp"
#include "hermcert/simplex.hpp"

namespace hermcert {

struct ProvenancedInterval {
    RationalInterval value;
    GrowthProvenance provenance = GrowthProvenance::Empirical;
    std::string note;
};

/// Two-sided capacity data for a witness element: per-degree lower bounds from
/// sphere masses, an optional rigorous limit from a growth value, per-degree
/// upper estimates from the l1 polynomial minimization and the spectral
/// radius bound.
struct CapacityBounds {
    std::vector<int> degrees;
    std::vector<Rational> lower_sphere_masses;          // m_n, exact
    std::vector<RationalInterval> lower_sphere_roots;   // m_n^(1/n)
    std::optional<ProvenancedInterval> lower_limit;     // sigma(S)/|S|
    std::vector<int> upper_degrees;
    std::vector<Rational> upper_lp_values;              // exact LP optima
    std::vector<RationalInterval> upper_lp_roots;       // optimum^(1/n)
    std::optional<RationalInterval> spectral_upper;
};

/// Exact mass of f^n on the sphere of radius n (elements of S-length exactly
/// n) for n = 1..n_max, with root enclosures. Requires f nonnegative with
/// support exactly the table's generating set; every polynomial of degree
/// < n is supported inside the ball of radius n-1, so these masses lower-bound
/// the monic minimization at degree n.
CapacityBounds sphere_mass_lower(const AlgebraElement& f, const BallTable& table, int n_max,
                                 std::size_t support_budget = 1u << 22);

/// Attaches the rigorous capacity lower limit sigma(S)/|S| derived from a
/// growth enclosure with certifiable provenance.
void attach_growth_lower(CapacityBounds& bounds, const RationalInterval& omega,
                         GrowthProvenance provenance, int set_size, const std::string& note = "");

/// Inner minimization of the capacity definition: minimize
/// ||target + sum c_l columns[l]||_1 over real c, exactly. Columns are
/// expected to be delta_e, f, ..., f^(n-1) and the target f^n.
LpResult lp_l1_minimize(const std::vector<AlgebraElement>& columns, const AlgebraElement& target);

struct LpUpperResult {
    Rational optimum;
    RationalInterval root;
    LpResult lp;
};

/// Per-degree upper estimate (min over real degree-<n polynomials of
/// ||f^n + p(f)||_1)^(1/n). Real coefficients only, so this upper-bounds the
/// complex per-degree infimum; reported raw, never extrapolated.
LpUpperResult capacity_upper_lp(const AlgebraElement& f, int n,
                                std::size_t support_budget = 1u << 22);

enum class FrwVerdict { NotHermitian, Inconclusive };

/// Outcome of the capacity-vs-spectral-radius rule: a selfadjoint element
/// with real spectrum has capacity at most half its spectral radius, so
/// cap lower > R upper / 2 certifies non-real spectrum.
struct CertificateResult {
    FrwVerdict verdict = FrwVerdict::Inconclusive;
    Rational margin;  // lower.lo - R.hi/2; positive only for NotHermitian
    bool boundary_equality = false;
    RationalInterval capacity_lower;
    RationalInterval spectral_upper;
    GrowthProvenance provenance = GrowthProvenance::Empirical;
    std::string rule = "selfadjoint elements with real spectrum satisfy cap(f) <= R(f)/2";
};

/// Applies the rule above with exact comparisons on enclosure endpoints.
/// Refuses (throws std::invalid_argument) when no rigorous lower limit is
/// present: empirical per-n data never certifies.
CertificateResult frw_certificate(const CapacityBounds& lower, const RationalInterval& r_upper);

}  // namespace hermcert
