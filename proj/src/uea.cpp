#include "sympvoa/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympvoa {

void UEA::accumulate(Element& into, const Element& v, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [m, c] : v) {
        auto [it, inserted] = into.emplace(m, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) into.erase(it);
        }
    }
}

const UEA::Element& UEA::normalize(const Word& w) {
    auto found = memo_.find(w);
    if (found != memo_.end()) return found->second;

    Element result;
    size_t descent = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) { descent = i; break; }

    if (descent == w.size()) {
        Mono m(g_.dim(), 0);
        for (int g : w) m[g] += 1;
        result = {{m, Rat(1)}};
    } else {
        // x y = y x + [x, y]
        Word swapped = w;
        std::swap(swapped[descent], swapped[descent + 1]);
        result = normalize(swapped);
        for (const auto& [d, c] : g_.bracket(w[descent], w[descent + 1])) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + descent);
            shorter.push_back(d);
            shorter.insert(shorter.end(), w.begin() + descent + 2, w.end());
            accumulate(result, normalize(shorter), c);
        }
    }
    return memo_.emplace(w, std::move(result)).first->second;
}

static UEA::Word word_of(const UEA::Mono& m) {
    UEA::Word w;
    for (size_t g = 0; g < m.size(); ++g)
        for (int k = 0; k < m[g]; ++k) w.push_back(static_cast<int>(g));
    return w;
}

UEA::Element UEA::multiply(const Element& f, const Element& g) {
    Element out;
    for (const auto& [mf, cf] : f) {
        Word wf = word_of(mf);
        for (const auto& [mg, cg] : g) {
            Word w = wf;
            Word wg = word_of(mg);
            w.insert(w.end(), wg.begin(), wg.end());
            accumulate(out, normalize(w), cf * cg);
        }
    }
    return out;
}

UEA::Element UEA::commutator(const Element& f, const Element& g) {
    Element out = multiply(f, g);
    accumulate(out, multiply(g, f), Rat(-1));
    return out;
}

UEA::Element UEA::adjoint_power(int gen_idx, int k, Element f) {
    const Element x = generator(gen_idx);
    for (int i = 0; i < k; ++i) f = commutator(x, f);
    return f;
}

std::vector<int> UEA::weight_of(const Mono& m) const {
    std::vector<int> w(g_.ell(), 0);
    for (size_t g = 0; g < m.size(); ++g) {
        const auto& eps = g_.gen(static_cast<int>(g)).eps_weight;
        for (int i = 0; i < g_.ell(); ++i) w[i] += m[g] * eps[i];
    }
    return w;
}

bool UEA::is_weight_zero(const Element& f) const {
    for (const auto& [m, c] : f)
        if (weight_of(m) != std::vector<int>(g_.ell(), 0)) return false;
    return true;
}

MultiPoly UEA::hc_project(const Element& f) const {
    if (!is_weight_zero(f))
        throw std::invalid_argument("hc_project requires weight-zero input");
    const int ell = g_.ell();
    MultiPoly p(ell);
    for (const auto& [m, c] : f) {
        bool has_pos = false, has_neg = false;
        for (int g = 0; g < g_.dim(); ++g) {
            if (m[g] == 0) continue;
            if (g_.gen(g).kind == SpGenerator::PosRoot) has_pos = true;
            if (g_.gen(g).kind == SpGenerator::NegRoot) has_neg = true;
        }
        if (has_pos) continue;
        // Weight-zero monomial without n_+ factor can have no n_- factor.
        if (has_neg)
            throw std::logic_error("weight-zero monomial with n_- but no n_+ factor");
        MultiPoly::Expo e(ell, 0);
        for (int i = 1; i <= ell; ++i) e[i - 1] = m[g_.cartan_index(i)];
        p.add_term(e, c);
    }
    return p;
}

UEA::Element UEA::drop_n_plus(const Element& f) const {
    Element out;
    for (const auto& [m, c] : f) {
        bool has_pos = false;
        for (int g = 0; g < g_.dim(); ++g)
            if (m[g] > 0 && g_.gen(g).kind == SpGenerator::PosRoot) { has_pos = true; break; }
        if (!has_pos) out.emplace(m, c);
    }
    return out;
}

MultiPoly UEA::compute_p(int index, int n) {
    if (g_.ell() != 2) throw std::invalid_argument("classification polynomials need rank 2");
    if (n < 1) throw std::invalid_argument("n must be positive");

    auto root = [&](int c1, int c2) { return g_.root_index({c1, c2}); };
    const Element A = generator(root(1, 1));    // X_{e1+e2}
    const Element B = generator(root(2, 0));    // X_{2e1}
    const Element C = generator(root(0, 2));    // X_{2e2}
    const Element Am = generator(root(-1, -1));
    const Element Bm = generator(root(-2, 0));
    const Element Cm = generator(root(0, -2));

    auto power = [&](const Element& base, int k) {
        Element r = one();
        for (int i = 0; i < k; ++i) r = multiply(r, base);
        return r;
    };
    Element u;
    if (index == 1) {
        Element w = multiply(A, A);
        accumulate(w, multiply(B, C), Rat(-1));
        u = power(w, n);
        u = adjoint_power(root(-2, 0), 2 * n, u);
        u = adjoint_power(root(1, -1), 2 * n, u);
    } else if (index == 2) {
        Element w = multiply(A, A);
        accumulate(w, multiply(B, C), Rat(-1));
        u = power(w, n);
        u = adjoint_power(root(0, -2), n, u);
        u = adjoint_power(root(-2, 0), n, u);
    } else if (index == 3) {
        Element w = multiply(Am, Am);
        accumulate(w, multiply(Bm, Cm), Rat(-1));
        u = power(w, n);
        u = adjoint_power(root(1, 1), 2 * n, u);
    } else {
        throw std::invalid_argument("polynomial index must be 1, 2 or 3");
    }

    MultiPoly p = hc_project(u);
    if (p.is_zero()) throw std::logic_error("adjoint projection collapsed to zero");
    return p.monic();
}

// Row-echelon basis over monomials of UEA elements; returns true if the
// reduced element was independent (and absorbs it).
namespace {
class ElementEchelon {
public:
    bool absorb(UEA::Element e) {
        for (;;) {
            if (e.empty()) return false;
            const auto& lead = *e.rbegin();
            auto it = rows_.find(lead.first);
            if (it == rows_.end()) {
                Rat inv = Rat(1) / lead.second;
                UEA::Element scaled;
                for (const auto& [m, c] : e) scaled.emplace(m, c * inv);
                rows_.emplace(lead.first, std::move(scaled));
                return true;
            }
            const Rat f = lead.second;
            for (const auto& [m, c] : it->second) {
                auto [jt, inserted] = e.emplace(m, -f * c);
                if (!inserted) {
                    jt->second -= f * c;
                    if (jt->second == 0) e.erase(jt);
                }
            }
        }
    }
    size_t size() const { return rows_.size(); }

private:
    std::map<UEA::Mono, UEA::Element> rows_;
};
}  // namespace

std::vector<MultiPoly> UEA::adjoint_module_zero_weight(int n, int basis_cap) {
    if (g_.ell() != 2) throw std::invalid_argument("needs rank 2");
    auto root = [&](int c1, int c2) { return g_.root_index({c1, c2}); };
    Element w = multiply(generator(root(1, 1)), generator(root(1, 1)));
    accumulate(w, multiply(generator(root(2, 0)), generator(root(0, 2))), Rat(-1));
    Element seed = one();
    for (int i = 0; i < n; ++i) seed = multiply(seed, w);

    ElementEchelon span;
    std::vector<Element> frontier;
    std::vector<Element> members;
    if (span.absorb(seed)) {
        frontier.push_back(seed);
        members.push_back(seed);
    }
    while (!frontier.empty()) {
        if (span.size() > static_cast<size_t>(basis_cap))
            throw std::runtime_error("adjoint module did not close under the cap");
        std::vector<Element> next;
        for (const auto& f : frontier)
            for (int g = 0; g < g_.dim(); ++g) {
                Element img = commutator(generator(g), f);
                Element probe = img;
                if (span.absorb(std::move(probe))) {
                    next.push_back(img);
                    members.push_back(std::move(img));
                }
            }
        frontier = std::move(next);
    }

    // Zero-weight members, projected; echelonized over polynomial terms.
    std::vector<MultiPoly> polys;
    std::map<MultiPoly::Expo, MultiPoly> poly_rows;
    for (const auto& f : members) {
        if (!is_weight_zero(f)) continue;
        MultiPoly p = hc_project(f);
        for (;;) {
            if (p.is_zero()) break;
            auto lead = *p.terms().rbegin();
            auto it = poly_rows.find(lead.first);
            if (it == poly_rows.end()) {
                MultiPoly scaled = (Rat(1) / lead.second) * p;
                poly_rows.emplace(lead.first, scaled);
                polys.push_back(scaled);
                break;
            }
            p -= lead.second * it->second;
        }
    }
    return polys;
}

}  // namespace sympvoa
