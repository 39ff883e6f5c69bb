#include "sympvoa/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sympvoa {

namespace {

// Successor map h1 -> {h2 : (h1, h2) in the component}.
std::map<Rat, std::vector<Rat>> successor_map(const ZeroSet& zs) {
    std::map<Rat, std::vector<Rat>> succ;
    for (const auto& p : zs) succ[p.h1].push_back(p.h2);
    return succ;
}

void extend(const std::map<Rat, std::vector<Rat>>& succ, std::vector<Rat>& coords,
            int ell, std::vector<std::vector<Rat>>& out) {
    if (static_cast<int>(coords.size()) == ell) {
        out.push_back(coords);
        return;
    }
    auto it = succ.find(coords.back());
    if (it == succ.end()) return;
    for (const Rat& next : it->second) {
        coords.push_back(next);
        extend(succ, coords, ell, out);
        coords.pop_back();
    }
}

}  // namespace

std::vector<AffineWeight> pairwise_weight_set(int i, int n, int ell) {
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");
    const ZeroSet zs = zero_component(i, n);
    const auto succ = successor_map(zs);
    const Rat level = Rat(2 * n - 3, 2);

    std::vector<std::vector<Rat>> tuples;
    for (const auto& [h1, ignored] : succ) {
        std::vector<Rat> coords{h1};
        extend(succ, coords, ell, tuples);
    }

    std::vector<AffineWeight> out;
    for (const auto& coords : tuples) out.push_back(weight_from_finite(ell, level, coords));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AffineWeight& a, const AffineWeight& b) {
                              return a.same_lambda(b);
                          }),
              out.end());
    return out;
}

bool check_module(const AffineWeight& lambda, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (lambda.level() != Rat(2 * n - 3, 2)) return false;
    const int ell = lambda.ell();
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");
    for (int i : {1, 2}) {
        const ZeroSet zs = zero_component(i, n);
        bool all = true;
        for (int j = 1; j < ell && all; ++j)
            all = zs.count({lambda.finite_coord(j), lambda.finite_coord(j + 1)}) > 0;
        if (all) return true;
    }
    return false;
}

AffineWeight induction_step_weight(const AffineWeight& lambda, int i, int n) {
    const int ell = lambda.ell();
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");
    if (lambda.level() != Rat(2 * (n + 1) - 3, 2))
        throw std::invalid_argument("weight must have the level of the larger list");

    auto in_list = [&](const AffineWeight& w) {
        const ZeroSet zs = zero_component(i, n);
        for (int j = 1; j < ell; ++j)
            if (!zs.count({w.finite_coord(j), w.finite_coord(j + 1)})) return false;
        return true;
    };

    if (i != 1 && i != 2) throw std::invalid_argument("component index must be 1 or 2");

    // A coordinate-wise rule from the pair shifts alone is not well defined:
    // the shifted copies of a zero component overlap it, so a pair does not
    // determine its shift class.  A valid fundamental weight always exists,
    // so scan for it.
    for (int t = 0; t <= ell; ++t) {
        AffineWeight step = fundamental_weight(ell, t);
        if (in_list(lambda - step)) return step;
    }
    throw std::logic_error("no fundamental weight steps down the list");
}

ClassificationReport classify(int n, int ell) {
    ClassificationReport rep;
    rep.n = n;
    rep.ell = ell;
    rep.pairwise1 = pairwise_weight_set(1, n, ell);
    rep.pairwise2 = pairwise_weight_set(2, n, ell);
    rep.recursive1 = enumerate_S(1, n, ell);
    rep.recursive2 = enumerate_S(2, n, ell);

    auto same_list = [](const std::vector<AffineWeight>& a, const std::vector<AffineWeight>& b) {
        if (a.size() != b.size()) return false;
        for (size_t k = 0; k < a.size(); ++k)
            if (!a[k].same_lambda(b[k])) return false;
        return true;
    };
    rep.match1 = same_list(rep.pairwise1, rep.recursive1.members);
    rep.match2 = same_list(rep.pairwise2, rep.recursive2.members);

    rep.disjoint = true;
    for (const auto& w : rep.pairwise1)
        if (rep.recursive2.contains(w)) rep.disjoint = false;

    rep.modules = rep.pairwise1;
    rep.modules.insert(rep.modules.end(), rep.pairwise2.begin(), rep.pairwise2.end());
    std::sort(rep.modules.begin(), rep.modules.end());
    rep.modules.erase(std::unique(rep.modules.begin(), rep.modules.end(),
                                  [](const AffineWeight& a, const AffineWeight& b) {
                                      return a.same_lambda(b);
                                  }),
                      rep.modules.end());
    return rep;
}

}  // namespace sympvoa
