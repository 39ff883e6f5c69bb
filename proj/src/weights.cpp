#include "sympvoa/weights.hpp"

#include <algorithm>
#include <set>

namespace sympvoa {

static std::vector<AffineWeight> sorted_unique(std::set<std::vector<Rat>> keys) {
    std::vector<AffineWeight> out;
    for (auto& k : keys) out.push_back(weight_from_lambda({k.begin(), k.end()}));
    return out;
}

WeightSet p_plus_1(int ell) {
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");
    WeightSet ws;
    ws.label = SetLabel::PPlus1;
    ws.n = 1;
    ws.ell = ell;
    for (int i = 0; i <= ell; ++i) ws.members.push_back(fundamental_weight(ell, i));
    return ws;
}

WeightSet enumerate_S(int i, int n, int ell) {
    if (i != 1 && i != 2) throw std::invalid_argument("set index must be 1 or 2");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");

    // Base: S_1^1 = {-1/2 L0, -3/2 L0 + L1}, S_2^1 = {-1/2 Ll, -3/2 Ll + L_{l-1}}.
    const int anchor = (i == 1) ? 0 : ell;
    const int partner = (i == 1) ? 1 : ell - 1;
    std::set<std::vector<Rat>> keys;
    {
        AffineWeight a = rat(-1, 2) * fundamental_weight(ell, anchor);
        AffineWeight b = rat(-3, 2) * fundamental_weight(ell, anchor) + fundamental_weight(ell, partner);
        keys.insert(a.lambda);
        keys.insert(b.lambda);
    }
    const WeightSet p1 = p_plus_1(ell);
    for (int m = 1; m < n; ++m) {
        // S_i^{m+1} = {S_i^m + P_+^1} u {-(m+3/2) L_anchor + (2m+1) L_partner}
        std::set<std::vector<Rat>> next;
        for (const auto& k : keys) {
            AffineWeight w = weight_from_lambda({k.begin(), k.end()});
            for (const auto& f : p1.members) next.insert((w + f).lambda);
        }
        AffineWeight exceptional =
            (Rat(-m) - rat(3, 2)) * fundamental_weight(ell, anchor) +
            Rat(2 * m + 1) * fundamental_weight(ell, partner);
        next.insert(exceptional.lambda);
        keys = std::move(next);
    }

    WeightSet ws;
    ws.label = (i == 1) ? SetLabel::S1 : SetLabel::S2;
    ws.n = n;
    ws.ell = ell;
    ws.members = sorted_unique(std::move(keys));
    return ws;
}

}  // namespace sympvoa
