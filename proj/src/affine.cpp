#include "sympvoa/affine.hpp"

#include <sstream>
#include <stdexcept>

#include "sympvoa/zeros.hpp"

namespace sympvoa {

void TruncatedVerma::accumulate(Element& into, const Element& v, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [m, c] : v) {
        auto [it, inserted] = into.emplace(m, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) into.erase(it);
        }
    }
}

std::string TruncatedVerma::to_string(const SpAlgebra& g, const Mono& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (const auto& [mode, gi] : m) os << g.gen(gi).name << "(" << mode << ") ";
    os << "1";
    return os.str();
}

// Sorts a word of negative-mode factors into the canonical basis order.
// Swapping two negative modes only produces further negative modes and no
// central term (the mode sum stays below zero), so this closes.
TruncatedVerma::Element TruncatedVerma::normalize_creation(const Mono& word) {
    auto found = memo_.find(word);
    if (found != memo_.end()) return found->second;

    Element result;
    size_t descent = word.size();
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) { descent = i; break; }

    if (descent == word.size()) {
        if (t_degree(word) <= max_degree_) result = {{word, Rat(1)}};
    } else {
        Mono swapped = word;
        std::swap(swapped[descent], swapped[descent + 1]);
        result = normalize_creation(swapped);
        const auto& [m1, g1] = word[descent];
        const auto& [m2, g2] = word[descent + 1];
        for (const auto& [d, c] : g_.bracket(g1, g2)) {
            Mono shorter(word.begin(), word.begin() + descent);
            shorter.push_back({m1 + m2, d});
            shorter.insert(shorter.end(), word.begin() + descent + 2, word.end());
            accumulate(result, normalize_creation(shorter), c);
        }
    }
    memo_.emplace(word, result);
    return result;
}

TruncatedVerma::Element TruncatedVerma::apply_mode(int gen_idx, int m, const Element& v) {
    Element out;
    for (const auto& [mono, c] : v) {
        if (m < 0) {
            Mono word;
            word.reserve(mono.size() + 1);
            word.push_back({m, gen_idx});
            word.insert(word.end(), mono.begin(), mono.end());
            accumulate(out, normalize_creation(word), c);
            continue;
        }
        // Nonnegative mode: commute past the leading factor.  The top
        // vector is killed by every nonnegative finite mode.
        if (mono.empty()) continue;
        const auto [m0, g0] = mono.front();
        const Element rest{{Mono(mono.begin() + 1, mono.end()), Rat(1)}};
        Element pushed = apply_mode(gen_idx, m, rest);
        accumulate(out, apply_mode(g0, m0, pushed), c);
        for (const auto& [d, cd] : g_.bracket(gen_idx, g0))
            accumulate(out, apply_mode(d, m + m0, rest), c * cd);
        if (m + m0 == 0)
            accumulate(out, rest, c * Rat(m) * g_.form(gen_idx, g0) * level_);
    }
    return out;
}

TruncatedVerma::Element build_singular_vector(TruncatedVerma& module, int n) {
    const SpAlgebra& g = module.algebra();
    if (g.ell() != 2) throw std::invalid_argument("singular vector needs rank 2");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (module.max_degree() < 2 * n)
        throw std::invalid_argument("degree bound too small for the vector");

    const int a = g.root_index({1, 1});
    const int b = g.root_index({2, 0});
    const int c = g.root_index({0, 2});

    TruncatedVerma::Element v = module.top();
    for (int i = 0; i < n; ++i) {
        TruncatedVerma::Element next = module.apply_mode(a, -1, module.apply_mode(a, -1, v));
        for (const auto& [m, coeff] : module.apply_mode(b, -1, module.apply_mode(c, -1, v))) {
            auto [it, inserted] = next.emplace(m, -coeff);
            if (!inserted) {
                it->second -= coeff;
                if (it->second == 0) next.erase(it);
            }
        }
        v = std::move(next);
    }
    return v;
}

SingularCheckReport singular_check(int n, const Rat& level_perturbation) {
    const SpAlgebra g(2);
    const Rat level = Rat(2 * n - 3, 2) + level_perturbation;
    TruncatedVerma module(g, level, 2 * n);
    TruncatedVerma::Element v = build_singular_vector(module, n);

    SingularCheckReport rep;
    const std::vector<std::pair<std::string, std::pair<int, int>>> raising{
        {"X[+e1-e2](0)", {g.root_index({1, -1}), 0}},
        {"X[+2e2](0)", {g.root_index({0, 2}), 0}},
        {"X[-2e1](1)", {g.root_index({-2, 0}), 1}},
    };
    for (const auto& [name, op] : raising) {
        TruncatedVerma::Element img = module.apply_mode(op.first, op.second, v);
        const bool killed = img.empty();
        rep.checks.emplace_back(name, killed);
        if (!killed) {
            rep.ok = false;
            if (rep.witness.empty())
                rep.witness = name + " -> " + rat_to_string(img.begin()->second) + " * " +
                              TruncatedVerma::to_string(g, img.begin()->first);
        }
    }
    return rep;
}

bool evaluate_module_criterion(const AffineWeight& lambda, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (lambda.level() != Rat(2 * n - 3, 2))
        throw std::invalid_argument("weight level must be n - 3/2");
    const int ell = lambda.ell();
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");

    const MultiPoly p1 = closed_form_p(1, n);
    const MultiPoly p2 = closed_form_p(2, n);
    const MultiPoly p3 = closed_form_p(3, n);
    for (int j = 1; j < ell; ++j) {
        const std::vector<Rat> pt{lambda.finite_coord(j), lambda.finite_coord(j + 1)};
        if (p1.eval(pt) != 0 || p2.eval(pt) != 0 || p3.eval(pt) != 0) return false;
    }
    return true;
}

}  // namespace sympvoa
