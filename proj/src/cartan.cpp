#include "sympvoa/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sympvoa {

bool FiniteRootSystem::is_long(const std::vector<int>& root) const {
    // (eps_i|eps_j) = delta_ij / 2, so roots +-2 eps_i have square length 2.
    Rat len = 0;
    for (int x : root) len += Rat(x) * Rat(x) / 2;
    return len == 2;
}

FiniteRootSystem build_root_system(int ell) {
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");
    FiniteRootSystem rs;
    rs.ell = ell;

    auto eps = [ell](int i, int sign) {
        std::vector<int> v(ell, 0);
        v[i] = sign;
        return v;
    };
    auto add2 = [ell](std::vector<int> a, const std::vector<int>& b) {
        for (int i = 0; i < ell; ++i) a[i] += b[i];
        return a;
    };

    // Positive roots: eps_i - eps_j (i<j), then 2 eps_i, then eps_i + eps_j (i<j).
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            rs.positive_roots.push_back(add2(eps(i, 1), eps(j, -1)));
    for (int i = 0; i < ell; ++i) rs.positive_roots.push_back(eps(i, 2));
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            rs.positive_roots.push_back(add2(eps(i, 1), eps(j, 1)));

    for (const auto& r : rs.positive_roots) {
        rs.roots.push_back(r);
        std::vector<int> neg(r);
        for (int& x : neg) x = -x;
        rs.roots.push_back(neg);
    }

    for (int i = 0; i + 1 < ell; ++i)
        rs.simple_roots.push_back(add2(eps(i, 1), eps(i + 1, -1)));
    rs.simple_roots.push_back(eps(ell - 1, 2));
    rs.theta = eps(0, 2);
    return rs;
}

std::string AffineWeight::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= ell(); ++i) {
        if (lambda[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << rat_to_string(lambda[i]) << ")L" << i;
    }
    if (first) os << "0";
    if (delta != 0) os << " + (" << rat_to_string(delta) << ")d";
    return os.str();
}

AffineWeight weight_from_lambda(std::vector<Rat> coeffs) {
    AffineWeight w;
    w.lambda = std::move(coeffs);
    return w;
}

AffineWeight fundamental_weight(int ell, int i) {
    AffineWeight w;
    w.lambda.assign(ell + 1, Rat(0));
    w.lambda.at(i) = 1;
    return w;
}

AffineWeight weight_from_finite(int ell, const Rat& level, const std::vector<Rat>& finite) {
    if (static_cast<int>(finite.size()) != ell)
        throw std::invalid_argument("finite part must have length ell");
    AffineWeight w;
    w.lambda.assign(ell + 1, Rat(0));
    // lambda(h_j) = sum_{i>=j} a_i
    w.lambda[ell] = finite[ell - 1];
    for (int j = ell - 1; j >= 1; --j) w.lambda[j] = finite[j - 1] - finite[j];
    w.lambda[0] = level - finite[0];
    return w;
}

AffineWeight affine_rho(int ell) {
    AffineWeight w;
    w.lambda.assign(ell + 1, Rat(1));
    return w;
}

Coroot coroot_from_finite(int ell, const std::vector<int>& beta_eps, int c_mult) {
    // beta^v in the h basis: (2 eps_i)^v = h_i, (eps_i +- eps_j)^v = h_i +- h_j.
    std::vector<int> h(ell, 0);
    bool is_long = false;
    {
        int nonzero = 0;
        for (int x : beta_eps)
            if (x != 0) ++nonzero;
        is_long = (nonzero == 1);
    }
    for (int i = 0; i < ell; ++i) {
        if (beta_eps[i] == 0) continue;
        h[i] = is_long ? beta_eps[i] / 2 : beta_eps[i];
    }
    // Convert u*c + sum t_j h_j to alpha^v coords: s_0 = u, s_j = u + t_1+...+t_j.
    Coroot g;
    g.coords.assign(ell + 1, 0);
    g.coords[0] = c_mult;
    int partial = c_mult;
    for (int j = 1; j <= ell; ++j) {
        partial += h[j - 1];
        g.coords[j] = partial;
    }
    return g;
}

Rat pair(const AffineWeight& lambda, const Coroot& gamma) {
    if (lambda.lambda.size() != gamma.coords.size())
        throw std::invalid_argument("rank mismatch in pairing");
    Rat s = 0;
    for (size_t i = 0; i < gamma.coords.size(); ++i)
        s += Rat(gamma.coords[i]) * lambda.lambda[i];
    return s;
}

static Coroot unit_coroot(int ell, int i) {
    Coroot g;
    g.coords.assign(ell + 1, 0);
    g.coords[i] = 1;
    return g;
}

CorootSet simple_coroots(int ell) {
    CorootSet s;
    for (int i = 0; i <= ell; ++i) s.push_back(unit_coroot(ell, i));
    std::sort(s.begin(), s.end());
    return s;
}

CorootSet pi_1(int ell) {
    CorootSet s;
    Coroot g = unit_coroot(ell, 0);
    g.coords[0] = 2;
    g.coords[1] = 1;
    s.push_back(g);
    for (int i = 1; i <= ell; ++i) s.push_back(unit_coroot(ell, i));
    std::sort(s.begin(), s.end());
    return s;
}

CorootSet pi_2(int ell) {
    CorootSet s;
    for (int i = 0; i <= ell - 1; ++i) s.push_back(unit_coroot(ell, i));
    Coroot g = unit_coroot(ell, ell - 1);
    g.coords[ell] = 2;
    s.push_back(g);
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Coroot> real_coroots_up_to(int ell, int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    FiniteRootSystem rs = build_root_system(ell);
    std::set<Coroot> out;
    for (const auto& beta : rs.positive_roots)
        out.insert(coroot_from_finite(ell, beta, 0));
    for (int m = 1; m <= bound; ++m)
        for (const auto& beta : rs.roots) {
            int cmult = rs.is_long(beta) ? m : 2 * m;
            out.insert(coroot_from_finite(ell, beta, cmult));
        }
    return {out.begin(), out.end()};
}

AdmissibilityReport check_admissible(const AffineWeight& lambda, int bound) {
    const int ell = lambda.ell();
    AdmissibilityReport rep;
    const AffineWeight shifted = lambda + affine_rho(ell);
    const auto coroots = real_coroots_up_to(ell, bound);

    rep.cond1 = true;
    std::vector<Coroot> integral;
    for (const auto& g : coroots) {
        Rat p = pair(shifted, g);
        if (is_integer(p) && p <= 0) rep.cond1 = false;
        if (is_integer(pair(lambda, g))) integral.push_back(g);
    }

    // Minimal elements: not a sum of two or more elements of the integral set.
    // Every coordinate is nonnegative, so a coin-change style table over the
    // componentwise bounding box finds all sums of >= 1 element; gamma then
    // decomposes iff gamma - e is a nonzero table hit for some element e.
    std::vector<int> box(ell + 1, 0);
    for (const auto& g : integral)
        for (int i = 0; i <= ell; ++i) box[i] = std::max(box[i], g.coords[i]);
    std::vector<long> stride(ell + 1, 1);
    for (int i = ell - 1; i >= 0; --i) stride[i] = stride[i + 1] * (box[i + 1] + 1);
    const long total = stride[0] * (box[0] + 1);
    auto flatten = [&](const std::vector<int>& c) {
        long idx = 0;
        for (int i = 0; i <= ell; ++i) idx += stride[i] * c[i];
        return idx;
    };
    std::vector<char> reach(total, 0);
    reach[0] = 1;
    for (const auto& g : integral) {
        const long off = flatten(g.coords);
        // Ascending scan; validity of v - g is a per-coordinate check.
        std::vector<int> v(ell + 1, 0);
        for (long idx = 0; idx < total; ++idx) {
            bool ok = true;
            for (int i = 0; i <= ell && ok; ++i) ok = v[i] >= g.coords[i];
            if (ok && reach[idx - off]) reach[idx] = 1;
            for (int i = ell; i >= 0; --i) {
                if (++v[i] <= box[i]) break;
                v[i] = 0;
            }
        }
    }
    for (const auto& g : integral) {
        bool decomposable = false;
        for (const auto& e : integral) {
            std::vector<int> d(ell + 1);
            bool nonneg = true;
            bool nonzero = false;
            for (int i = 0; i <= ell; ++i) {
                d[i] = g.coords[i] - e.coords[i];
                if (d[i] < 0) nonneg = false;
                if (d[i] > 0) nonzero = true;
            }
            if (nonneg && nonzero && reach[flatten(d)]) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) rep.pi_lambda.push_back(g);
    }
    std::sort(rep.pi_lambda.begin(), rep.pi_lambda.end());

    // Rational span of pi_lambda must be all of Q^{ell+1}.
    std::map<int, std::vector<Rat>> rows_by_lead;
    for (const auto& g : rep.pi_lambda) {
        std::vector<Rat> row(g.coords.begin(), g.coords.end());
        for (;;) {
            int lead = -1;
            for (int i = 0; i <= ell; ++i)
                if (row[i] != 0) { lead = i; break; }
            if (lead < 0) break;
            auto it = rows_by_lead.find(lead);
            if (it == rows_by_lead.end()) {
                rows_by_lead.emplace(lead, row);
                break;
            }
            Rat f = row[lead] / it->second[lead];
            for (int i = 0; i <= ell; ++i) row[i] -= f * it->second[i];
        }
    }
    rep.cond2 = static_cast<int>(rows_by_lead.size()) == ell + 1;
    return rep;
}

}  // namespace sympvoa
