#include "hermcert/criteria.hpp"

#include <stdexcept>

namespace hermcert {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "CERTIFIED";
        case Verdict::EqualityBoundary: return "EQUALITY_BOUNDARY";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

void validate_criterion_input(const CriterionInput& input) {
    if (input.integral_S_delta <= 0 || input.mu_K <= 0 || input.inf_delta_S <= 0)
        throw std::invalid_argument("criterion input: measures and weights must be positive");
    if (input.mu_S) {
        if (*input.mu_S <= 0) throw std::invalid_argument("criterion input: mu(S) must be positive");
        // The mean of the weight over S can never fall below its infimum.
        if (input.inf_delta_S > input.integral_S_delta / *input.mu_S)
            throw std::invalid_argument(
                "criterion input: inf of the weight exceeds its mean over S");
    }
    if (input.unimodular && input.mu_S && input.integral_S_delta != *input.mu_S)
        throw std::invalid_argument(
            "criterion input: unimodular flag set but integral differs from mu(S)");
}

Rational general_threshold(const CriterionInput& input) {
    validate_criterion_input(input);
    Rational t = input.integral_S_delta / (2 * input.mu_K * input.inf_delta_S);
    t.canonicalize();
    return t;
}

namespace {
CriterionVerdict compare_to_threshold(const RationalInterval& omega_lower,
                                      const Rational& threshold, GrowthProvenance provenance,
                                      std::string criterion) {
    CriterionVerdict v;
    v.criterion = std::move(criterion);
    v.provenance = provenance;
    v.margin = omega_lower.lo - threshold;
    v.margin.canonicalize();
    if (v.margin > 0)
        v.verdict = Verdict::Certified;
    else if (v.margin == 0)
        v.verdict = Verdict::EqualityBoundary;
    else
        v.verdict = Verdict::Inconclusive;
    return v;
}
}  // namespace

CriterionVerdict discrete_criterion(int set_size, const RationalInterval& omega_lower,
                                    GrowthProvenance provenance) {
    if (set_size < 2) throw std::invalid_argument("discrete_criterion: |S| must be >= 2");
    CriterionVerdict v = compare_to_threshold(omega_lower, Rational(set_size, 2), provenance,
                                              "discrete-growth (omega > |S|/2)");
    if (v.verdict == Verdict::EqualityBoundary)
        v.notes.push_back("growth meets the threshold exactly; the bound is sharp and equality "
                          "certifies nothing");
    return v;
}

CriterionVerdict double_coset_criterion(const Rational& mu_KgK,
                                        const RationalInterval& omega_lower,
                                        GrowthProvenance provenance, bool symmetric) {
    if (mu_KgK < 1)
        throw std::invalid_argument("double_coset_criterion: mu(KgK) must be >= 1");
    CriterionVerdict v = compare_to_threshold(omega_lower, mu_KgK / 2, provenance,
                                              "double-coset-growth (omega > mu(KgK)/2)");
    if (!symmetric) {
        v.verdict = Verdict::Inconclusive;
        v.notes.push_back("coset symmetry KgK = Kg^-1K not asserted");
        return v;
    }
    v.notes.push_back("coset symmetry KgK = Kg^-1K asserted by caller");
    if (mu_KgK <= 1) {
        v.verdict = Verdict::Inconclusive;
        v.notes.push_back("mu(KgK) = 1: the coset is a single compact piece and cannot certify");
    }
    return v;
}

CriterionVerdict burnside_check(const Rational& adian_rate) {
    // Canonical generating set of B(2, n): two generators and their inverses.
    RationalInterval omega(adian_rate, adian_rate);
    CriterionVerdict v = discrete_criterion(4, omega, GrowthProvenance::PaperConstant);
    v.criterion = "burnside-spherical-growth (asserted rate vs |S|/2 = 2)";
    v.notes.push_back(
        "spherical growth rate of free Burnside groups B(2, n), odd n >= 665, is a published "
        "bound taken as an input constant; no enumeration is attempted");
    return v;
}

}  // namespace hermcert
