#include "sympvoa/weylreal.hpp"

#include <sstream>
#include <stdexcept>

namespace sympvoa {

WeylQuadratic WeylQuadratic::bracket(const WeylQuadratic& o) const {
    // [:xy:, :zw:] = w(y,z):xw: + w(y,w):xz: + w(x,z):yw: + w(x,w):yz:
    WeylQuadratic r(ell_);
    for (const auto& [xy, c1] : terms_)
        for (const auto& [zw, c2] : o.terms_) {
            const int x = xy.first, y = xy.second;
            const int z = zw.first, w = zw.second;
            const Rat c = c1 * c2;
            r.add_pair(x, w, c * omega(y, z));
            r.add_pair(x, z, c * omega(y, w));
            r.add_pair(y, w, c * omega(x, z));
            r.add_pair(y, z, c * omega(x, w));
        }
    return r;
}

static std::string eps_name(const std::vector<int>& eps) {
    std::ostringstream os;
    os << "X[";
    bool first = true;
    for (size_t i = 0; i < eps.size(); ++i) {
        if (eps[i] == 0) continue;
        if (!first || eps[i] < 0) os << (eps[i] > 0 ? "+" : "-");
        first = false;
        if (std::abs(eps[i]) == 2) os << "2";
        os << "e" << (i + 1);
    }
    os << "]";
    return os.str();
}

SpAlgebra::SpAlgebra(int ell) : ell_(ell) {
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");

    auto quad_for_root = [ell](const std::vector<int>& eps) {
        WeylQuadratic q(ell);
        // X_{e_i-e_j} = :a_i a_j^*:, X_{e_i+e_j} = :a_i a_j:,
        // X_{-(e_i+e_j)} = :a_i^* a_j^*:  (i = j gives the +-2e_i vectors).
        int pos1 = -1, pos2 = -1, neg1 = -1, neg2 = -1;
        for (int i = 0; i < ell; ++i) {
            for (int k = 0; k < eps[i]; ++k) (pos1 < 0 ? pos1 : pos2) = i;
            for (int k = 0; k < -eps[i]; ++k) (neg1 < 0 ? neg1 : neg2) = i;
        }
        if (pos1 >= 0 && neg1 >= 0)
            q.add_pair(pos1, ell + neg1, 1);            // :a_i a_j^*:
        else if (pos1 >= 0)
            q.add_pair(pos1, pos2, 1);                  // :a_i a_j:
        else
            q.add_pair(ell + neg1, ell + neg2, 1);      // :a_i^* a_j^*:
        return q;
    };

    // Positive roots, with eps_1 + eps_2 frozen as the last generator:
    // differences, long roots, then sums ordered so (1,2) comes last.
    std::vector<std::vector<int>> pos;
    auto eps_vec = [ell](int i, int ci, int j, int cj) {
        std::vector<int> v(ell, 0);
        v[i] += ci;
        if (j >= 0) v[j] += cj;
        return v;
    };
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) pos.push_back(eps_vec(i, 1, j, -1));
    for (int i = 0; i < ell; ++i) pos.push_back(eps_vec(i, 2, -1, 0));
    for (int i = ell - 1; i >= 0; --i)
        for (int j = ell - 1; j > i; --j)
            if (!(i == 0 && j == 1)) pos.push_back(eps_vec(i, 1, j, 1));
    pos.push_back(eps_vec(0, 1, 1, 1));

    auto push_root = [&](const std::vector<int>& eps, SpGenerator::Kind kind) {
        SpGenerator g;
        g.kind = kind;
        g.eps_weight = eps;
        g.name = eps_name(eps);
        g.quad = quad_for_root(eps);
        root_lookup_[eps] = static_cast<int>(gens_.size());
        gens_.push_back(std::move(g));
    };

    for (const auto& p : pos) {
        std::vector<int> neg(p);
        for (int& x : neg) x = -x;
        push_root(neg, SpGenerator::NegRoot);
    }
    for (int i = 0; i < ell; ++i) {
        SpGenerator g;
        g.kind = SpGenerator::Cartan;
        g.eps_weight.assign(ell, 0);
        g.name = "h" + std::to_string(i + 1);
        WeylQuadratic q(ell);
        q.add_pair(i, ell + i, -1);  // h_i = -:a_i a_i^*:
        g.quad = q;
        gens_.push_back(std::move(g));
    }
    for (const auto& p : pos) push_root(p, SpGenerator::PosRoot);

    // Bracket table via the Weyl-algebra commutator.
    const int d = dim();
    brackets_.assign(d, std::vector<std::map<int, Rat>>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            brackets_[a][b] = decompose(gens_[a].quad.bracket(gens_[b].quad));

    // Trace form on the defining 2l-dimensional space:
    // ad(:xy:) v = w(y,v) x + w(x,v) y.
    auto action_matrix = [&](const WeylQuadratic& q) {
        std::vector<std::vector<Rat>> m(2 * ell, std::vector<Rat>(2 * ell, Rat(0)));
        for (const auto& [xy, c] : q.terms()) {
            const int x = xy.first, y = xy.second;
            for (int v = 0; v < 2 * ell; ++v) {
                m[x][v] += c * q.omega(y, v);
                m[y][v] += c * q.omega(x, v);
            }
        }
        return m;
    };
    std::vector<std::vector<std::vector<Rat>>> mats;
    for (const auto& g : gens_) mats.push_back(action_matrix(g.quad));
    form_.assign(d, std::vector<Rat>(d, Rat(0)));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Rat tr = 0;
            for (int i = 0; i < 2 * ell; ++i)
                for (int k = 0; k < 2 * ell; ++k) tr += mats[a][i][k] * mats[b][k][i];
            form_[a][b] = tr;
        }
}

int SpAlgebra::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (gens_[i].name == name) return i;
    throw std::invalid_argument("unknown generator: " + name);
}

int SpAlgebra::cartan_index(int i) const {
    if (i < 1 || i > ell_) throw std::invalid_argument("cartan index out of range");
    // Cartan block sits between the negative and positive root blocks.
    return static_cast<int>(ell_) * ell_ + (i - 1);
}

int SpAlgebra::root_index(const std::vector<int>& eps) const {
    auto it = root_lookup_.find(eps);
    if (it == root_lookup_.end()) throw std::invalid_argument("not a root");
    return it->second;
}

std::map<int, Rat> SpAlgebra::decompose(const WeylQuadratic& q) const {
    std::map<int, Rat> out;
    for (const auto& [key, c] : q.terms()) {
        const int p = key.first, s = key.second;
        int idx;
        Rat coeff = c;
        if (p < ell_ && s < ell_) {
            std::vector<int> eps(ell_, 0);
            eps[p] += 1;
            eps[s] += 1;
            idx = root_index(eps);
        } else if (p >= ell_ && s >= ell_) {
            std::vector<int> eps(ell_, 0);
            eps[p - ell_] -= 1;
            eps[s - ell_] -= 1;
            idx = root_index(eps);
        } else if (p == s - ell_) {
            idx = cartan_index(p + 1);  // :a_i a_i^*: = -h_i
            coeff = -coeff;
        } else {
            std::vector<int> eps(ell_, 0);
            eps[p] += 1;
            eps[s - ell_] -= 1;
            idx = root_index(eps);
        }
        out[idx] += coeff;
        if (out[idx] == 0) out.erase(idx);
    }
    return out;
}

}  // namespace sympvoa
