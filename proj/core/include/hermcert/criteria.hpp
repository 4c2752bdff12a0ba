#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermcert/growth.hpp"
#include "hermcert/rational.hpp"

namespace hermcert {

enum class Verdict { Certified, EqualityBoundary, Inconclusive };

const char* verdict_name(Verdict v);

/// A growth-criterion outcome with its exact margin (omega lower bound minus
/// the threshold) and the provenance of the growth value that produced it.
/// EqualityBoundary is surfaced as its own verdict because the threshold is
/// sharp: there are groups meeting it exactly that the criteria cannot decide.
struct CriterionVerdict {
    Verdict verdict = Verdict::Inconclusive;
    Rational margin;
    GrowthProvenance provenance = GrowthProvenance::Empirical;
    std::string criterion;
    std::vector<std::string> notes;
};

/// Measure-level data for the general growth threshold. For unimodular groups
/// the modular weight is identically 1 and integral_S_delta is just mu(S).
struct CriterionInput {
    Rational integral_S_delta;  // integral over S of Delta^(-1/2)
    Rational mu_K;
    Rational inf_delta_S;       // inf over S of Delta^(-1/2)
    std::optional<Rational> mu_S;
    RationalInterval omega_lower;
    GrowthProvenance omega_provenance = GrowthProvenance::Empirical;
    bool unimodular = false;
};

/// Validates positivity and the mean >= inf consistency check; throws on
/// violation.
void validate_criterion_input(const CriterionInput& input);

/// The threshold integral_S_delta / (2 mu(K) inf_delta_S); a growth rate
/// strictly above it certifies the group non-Hermitian.
Rational general_threshold(const CriterionInput& input);

/// Discrete specialization: omega > |S|/2.
CriterionVerdict discrete_criterion(int set_size, const RationalInterval& omega_lower,
                                    GrowthProvenance provenance);

/// Totally disconnected specialization for a symmetric double coset KgK with
/// mu(K) = 1: certified iff the coset is symmetric, mu(KgK) > 1 and
/// omega > mu(KgK)/2. Symmetry cannot be derived from measure data; the
/// caller asserts it and the assertion is recorded.
CriterionVerdict double_coset_criterion(const Rational& mu_KgK,
                                        const RationalInterval& omega_lower,
                                        GrowthProvenance provenance, bool symmetric);

/// Free Burnside conditional certificate: the published spherical growth
/// bound for B(2, n), odd n >= 665, gives omega >= adian_rate against the
/// threshold |S|/2 = 2 for the canonical four-element generating set. The
/// rate is an input constant, never recomputed.
CriterionVerdict burnside_check(const Rational& adian_rate = Rational(29, 10));

}  // namespace hermcert
