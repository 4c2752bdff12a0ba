#pragma once

#include <optional>
#include <vector>

#include "hermcert/criteria.hpp"
#include "hermcert/rational.hpp"

namespace hermcert {

/// A locally finite tree described by the periodic degree sequence along a
/// translation axis: degrees[i] is the common degree of the vertices in
/// sphere i around the base point, extended periodically with period k equal
/// to the translation length. Degrees below 2 end the tree and are rejected.
struct TreeSpec {
    std::vector<int> degrees;
    int translation_length = 0;

    static TreeSpec make(std::vector<int> degrees, std::optional<int> k = std::nullopt);
};

/// |sphere_n| = deg_0 * prod_{i=1}^{n-1} (deg_i - 1), exact.
Integer sphere_size(const TreeSpec& tree, int n);

/// mu(K g^power K) = |sphere_{power*k}| for the vertex stabilizer K and a
/// translation g of length k.
Integer double_coset_measure(const TreeSpec& tree, int power);

/// Exact value of lim mu(K g^n K)^(1/n) = (deg_0 - 1) * prod_{i>=1} (deg_i-1);
/// lower-bounds the growth rate of KgK.
Integer tree_growth_lower(const TreeSpec& tree);

struct TreeCriterionResult {
    CriterionVerdict verdict;
    Integer mu_KgK;
    Integer growth_lower;
    bool two_thirds_holds = false;     // growth_lower >= (2/3) mu(KgK)
    bool two_thirds_equality = false;  // equality case (base degree exactly 3)
    int base_rotation = 0;             // axis base point chosen (index into degrees)
};

/// Full tree criterion: requires a degree >= 3 somewhere on the axis (the
/// base point is rotated there if needed), computes mu(KgK) and the growth
/// lower bound, and delegates to the double-coset criterion with the
/// symmetry justified by the transitive sphere action.
TreeCriterionResult tree_criterion(const TreeSpec& tree);

}  // namespace hermcert
