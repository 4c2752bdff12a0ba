#pragma once

#include <string>
#include <vector>

#include "hermcert/ball.hpp"

namespace hermcert {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Hecke measure invariants on fixed grids: integrality (entries -3..3,
/// n <= 5, p in {2,3,5,7}), invariance under constant shifts c in -2..2 and
/// under permutations of the signature, and agreement with the specialized
/// closed form for k(1,0,...,0,-1) signatures (k <= 6, n <= 6, p in {2,3,5}).
std::vector<PropertyResult> hecke_property_suite();

/// Exact algebra identities on random rational-coefficient pairs:
/// ||x*y|| <= ||x|| ||y|| with equality for nonnegative pairs, the involution
/// being an isometric anti-homomorphism, and delta_e acting as the unit.
std::vector<PropertyResult> algebra_property_suite(unsigned seed = 1u, int pairs = 1000);

/// Consistency checks on an enumerated table: ball and sphere
/// submultiplicativity over all stored pairs, nondecreasing balls,
/// sphere/ball difference identity.
std::vector<PropertyResult> table_property_suite(const BallTable& table);

}  // namespace hermcert
