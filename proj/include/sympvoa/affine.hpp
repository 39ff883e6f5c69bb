#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sympvoa/cartan.hpp"
#include "sympvoa/weylreal.hpp"

namespace sympvoa {

// Degree-truncated generalized Verma module N(k Lambda_0): PBW monomials in
// negative modes X(-m), m >= 1, applied to a top vector annihilated by all
// finite zero modes, with c acting by the level.
class TruncatedVerma {
public:
    // One factor X_g(m); canonical order on (m, g) ascending.
    using Factor = std::pair<int, int>;  // (mode m < 0, generator index)
    using Mono = std::vector<Factor>;    // nondecreasing
    using Element = std::map<Mono, Rat>;

    TruncatedVerma(const SpAlgebra& g, Rat level, int max_degree)
        : g_(g), level_(std::move(level)), max_degree_(max_degree) {}

    const SpAlgebra& algebra() const { return g_; }
    const Rat& level() const { return level_; }
    int max_degree() const { return max_degree_; }

    Element top() const { return {{Mono{}, Rat(1)}}; }

    // X_g(m) applied to an element; creation for m < 0, otherwise commuted
    // rightward until it hits the top vector.
    Element apply_mode(int gen_idx, int m, const Element& v);

    static int t_degree(const Mono& m) {
        int d = 0;
        for (const auto& [mode, g] : m) d += -mode;
        return d;
    }

    static std::string to_string(const SpAlgebra& g, const Mono& m);

private:
    Element normalize_creation(const Mono& word);
    static void accumulate(Element& into, const Element& v, const Rat& scale);

    struct MonoHash {
        size_t operator()(const Mono& m) const {
            size_t h = 1469598103934665603ull;
            for (const auto& [a, b] : m) {
                h ^= static_cast<size_t>(a * 131 + b) + 0x9e3779b9;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    const SpAlgebra& g_;
    Rat level_;
    int max_degree_;
    std::unordered_map<Mono, Element, MonoHash> memo_;
};

// (X_{e1+e2}(-1)^2 - X_{2e1}(-1) X_{2e2}(-1))^n applied to the top vector.
TruncatedVerma::Element build_singular_vector(TruncatedVerma& module, int n);

struct SingularCheckReport {
    bool ok = true;
    // (operator description, annihilated?) per raising operator.
    std::vector<std::pair<std::string, bool>> checks;
    std::string witness;  // first surviving term on failure
};

// Annihilation of v_n by the Chevalley raising set
// {X_{alpha_1}(0), X_{alpha_2}(0), X_{-theta}(1)} at the given level.
SingularCheckReport singular_check(int n, const Rat& level_perturbation = Rat(0));

// Zero-evaluation of the classification polynomial triple at every adjacent
// pair of finite coordinates of lambda; requires level(lambda) = n - 3/2.
bool evaluate_module_criterion(const AffineWeight& lambda, int n);

}  // namespace sympvoa
