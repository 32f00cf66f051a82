#include "hhkit/simplicial.hpp"

#include <algorithm>
#include <set>

#include "hhkit/sparse.hpp"

namespace hhkit {

long SimplicialComplex::simplex_count() const {
    long n = 0;
    for (const auto& level : simplices) n += static_cast<long>(level.size());
    return n;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d >= (int)simplices.size()) return false;
    return std::find(simplices[d].begin(), simplices[d].end(), s) != simplices[d].end();
}

SimplicialComplex SimplicialComplex::from_facets(int nverts, const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> all;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) continue;
        // enumerate nonempty subsets
        int n = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.push_back(f[i]);
            all.insert(s);
        }
    }
    SimplicialComplex K;
    K.nverts = nverts;
    for (const auto& s : all) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= (int)K.simplices.size()) K.simplices.resize(d + 1);
        K.simplices[d].push_back(s);
    }
    for (auto& level : K.simplices) std::sort(level.begin(), level.end());
    return K;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& K) const {
    for (const auto& level : simplices)
        for (const auto& s : level)
            if (!K.has_simplex(s)) return false;
    return true;
}

namespace {

// Coboundary matrices with columns restricted to simplices outside L
// (relative cochains); L empty for the absolute case.
std::vector<int> cohomology_dims(const SimplicialComplex& K, const SimplicialComplex* L, Field f, int p_max) {
    if (L && !L->is_subcomplex_of(K)) fail("NotASubcomplex", "second complex is not a subcomplex of the first");
    auto in_L = [&](const std::vector<int>& s) { return L && L->has_simplex(s); };
    // index the allowed simplices per dimension
    std::vector<std::vector<std::vector<int>>> allowed(p_max + 2);
    std::vector<std::vector<int>> pos_of;  // parallel: position in `allowed`
    for (int d = 0; d <= p_max + 1; ++d)
        if (d < (int)K.simplices.size())
            for (const auto& s : K.simplices[d])
                if (!in_L(s)) allowed[d].push_back(s);
    std::vector<int> rank_d(p_max + 2, 0);  // rank of delta: C^d -> C^{d+1}
    for (int d = 0; d <= p_max; ++d) {
        auto find_col = [&](const std::vector<int>& s) -> int {
            auto it = std::lower_bound(allowed[d].begin(), allowed[d].end(), s);
            if (it == allowed[d].end() || *it != s) return -1;
            return static_cast<int>(it - allowed[d].begin());
        };
        SparseMatrix delta(f, static_cast<int>(allowed[d + 1].size()), static_cast<int>(allowed[d].size()));
        for (int r = 0; r < (int)allowed[d + 1].size(); ++r) {
            const auto& s = allowed[d + 1][r];
            Scalar sign = Scalar::one(f);
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face = s;
                face.erase(face.begin() + i);
                int c = find_col(face);
                if (c >= 0) delta.add(r, c, sign);
                sign = -sign;
            }
        }
        rank_d[d] = delta.rank();
    }
    std::vector<int> dims(p_max + 1, 0);
    for (int d = 0; d <= p_max; ++d) {
        int cd = static_cast<int>(allowed[d].size());
        int prev = d == 0 ? 0 : rank_d[d - 1];
        dims[d] = cd - rank_d[d] - prev;
    }
    return dims;
}

}  // namespace

std::vector<int> simplicial_cohomology(const SimplicialComplex& K, Field f, int p_max) {
    return cohomology_dims(K, nullptr, f, p_max);
}

std::vector<int> simplicial_cohomology_pair(const SimplicialComplex& K, const SimplicialComplex& L, Field f,
                                            int p_max) {
    return cohomology_dims(K, &L, f, p_max);
}

}  // namespace hhkit
