#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermcert/ball.hpp"
#include "hermcert/group.hpp"
#include "hermcert/rational.hpp"

namespace hermcert {

/// Where a growth value (or any asserted bound) comes from. Only the first
/// four are accepted by certificate-producing code paths; empirical per-n
/// data never certifies anything.
enum class GrowthProvenance {
    ExactClosedForm,
    PerronEnclosure,
    PaperConstant,
    UserAsserted,
    Empirical,
};

const char* provenance_name(GrowthProvenance p);

struct GrowthEstimate {
    // Index n; entry 0 is unused padding so estimates line up with radii.
    std::vector<double> per_n_ball_roots;
    std::vector<double> per_n_sphere_roots;
    std::vector<double> per_n_sphere_ratios;
    double fekete_upper = 0;       // min over n of |B_n|^(1/n); upper bound on omega
    double last_sphere_ratio = 0;  // |sphere_n|/|sphere_{n-1}| at the deepest radius
    std::optional<RationalInterval> exact_value;
    GrowthProvenance provenance = GrowthProvenance::Empirical;
    std::vector<std::string> notes;
};

/// Empirical roots and the Fekete upper bound from an enumerated table.
/// Counting measure is exactly submultiplicative, so every ball root is a
/// valid upper bound on the growth rate.
GrowthEstimate growth_estimate(const BallTable& table);

struct ExactGrowthOptions {
    Rational tolerance = Rational(1, 100000000);  // enclosure width target
    int bfs_depth = 8;
    int max_bfs_depth = 20;
    int max_power_iterations = 4000;
};

/// Rigorous growth values for the closed-form families:
///   - free groups with the standard symmetric generators: exactly 2*rank - 1;
///   - free products of cyclic groups with any finite symmetric set: a
///     rational enclosure of the Perron root of the geodesic normal-form
///     transition automaton (Collatz-Wielandt bounds on exact integers).
/// Returns nullopt when no rigorous value is available for the input.
std::optional<GrowthEstimate> exact_growth(const GeneratingSet& s,
                                           const ExactGrowthOptions& options = {});

/// Copies the exact value (and provenance) of `exact` into `estimate`.
void merge_exact(GrowthEstimate& estimate, const GrowthEstimate& exact);

struct ThetaReport {
    RationalInterval value;
    bool outside_unit_interval = false;
};

/// Normalized growth index (omega - 1)/(|S| - 2). Requires |S| >= 3.
ThetaReport theta_index(const RationalInterval& omega, int set_size);

}  // namespace hermcert
