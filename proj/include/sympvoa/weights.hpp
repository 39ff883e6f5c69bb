#pragma once

#include "sympvoa/cartan.hpp"

namespace sympvoa {

enum class SetLabel { S1, S2, PPlus1 };

struct WeightSet {
    SetLabel label;
    int n = 0;
    int ell = 0;
    std::vector<AffineWeight> members;  // sorted canonically, deduplicated

    bool contains(const AffineWeight& w) const {
        for (const auto& m : members)
            if (m.same_lambda(w)) return true;
        return false;
    }
};

// {Lambda_0, ..., Lambda_l}, the level-1 dominant integral weights.
WeightSet p_plus_1(int ell);

// Recursive enumeration of S_i^n starting from the two-element base sets.
WeightSet enumerate_S(int i, int n, int ell);

}  // namespace sympvoa
