#pragma once

#include <vector>

#include "sympvoa/weights.hpp"
#include "sympvoa/zeros.hpp"

namespace sympvoa {

// Weights of level n - 3/2 whose adjacent finite-coordinate pairs
// (lambda(h_j), lambda(h_{j+1})), j = 1..l-1, all lie in zero component i.
// Sorted and deduplicated.
std::vector<AffineWeight> pairwise_weight_set(int i, int n, int ell);

// Membership of lambda in the classification list: level n - 3/2 and all
// adjacent pairs inside a single zero component.
bool check_module(const AffineWeight& lambda, int n);

// The level-1 weight Lambda subtracted in the recursion step from n+1 down
// to n: lambda in the (n+1)-list, not the seed weight, gives
// lambda - Lambda in the n-list with Lambda a fundamental weight.
AffineWeight induction_step_weight(const AffineWeight& lambda, int i, int n);

struct ClassificationReport {
    int n = 0;
    int ell = 0;
    std::vector<AffineWeight> pairwise1, pairwise2;  // from the zero sets
    WeightSet recursive1, recursive2;                // from the base-set recursion
    bool match1 = false, match2 = false;             // the two routes agree
    bool disjoint = false;                           // components do not overlap
    std::vector<AffineWeight> modules;               // the final list, sorted
};

ClassificationReport classify(int n, int ell);

}  // namespace sympvoa
