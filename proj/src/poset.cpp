#include "hhkit/poset.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

namespace hhkit {

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == label) return i;
    fail("UnknownElement", "no element named '" + label + "'");
}

Poset Poset::from_covers(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset X;
    X.elements = elements;
    int n = X.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (elements[i] == elements[j]) fail("DuplicateElement", "element '" + elements[i] + "' repeats");
    X.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) X.leq[i][i] = true;
    for (const auto& [a, b] : covers) X.leq[X.index_of(a)][X.index_of(b)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (X.leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (X.leq[k][j]) X.leq[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && X.leq[i][j] && X.leq[j][i])
                fail("NotAPartialOrder", "cycle through '" + elements[i] + "' and '" + elements[j] + "'");
    return X;
}

AlgP make_incidence(Field f, const Poset& X) {
    int n = X.size();
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> idx;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (X.leq[x][y]) {
                idx[{x, y}] = static_cast<int>(pairs.size());
                pairs.push_back({x, y});
            }
    auto A = std::make_shared<Algebra>();
    A->f = f;
    A->dim = static_cast<int>(pairs.size());
    A->name = "incidence(" + std::to_string(n) + " elements)";
    A->labels.resize(A->dim);
    for (int i = 0; i < A->dim; ++i) {
        auto [x, y] = pairs[i];
        A->labels[i] = x == y ? "e_" + X.elements[x] : "f_" + X.elements[x] + "," + X.elements[y];
    }
    A->mul.assign(A->dim, std::vector<Vec>(A->dim, zero_vec(f, A->dim)));
    for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j) {
            auto [x, y] = pairs[i];
            auto [z, w] = pairs[j];
            if (y == z) A->mul[i][j][idx[{x, w}]] = Scalar::one(f);
        }
    A->unit = zero_vec(f, A->dim);
    for (int x = 0; x < n; ++x) A->unit[idx[{x, x}]] = Scalar::one(f);
    for (int x = 0; x < n; ++x) A->everts.push_back(idx[{x, x}]);
    A->check();
    return A;
}

bool is_order_ideal(const Poset& X, const std::vector<int>& Y) {
    std::vector<bool> in(X.size(), false);
    for (int y : Y) {
        if (y < 0 || y >= X.size()) fail("UnknownElement", "index out of range");
        in[y] = true;
    }
    for (int y = 0; y < X.size(); ++y)
        if (in[y])
            for (int x = 0; x < X.size(); ++x)
                if (X.leq[x][y] && !in[x]) return false;
    return true;
}

namespace {

// All nonempty chains, each listed in increasing order.
std::vector<std::vector<int>> all_chains(const Poset& X, const std::vector<int>& verts) {
    // order the candidate vertices by a linear extension so chains extend forward
    std::vector<int> order = verts;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (X.leq[a][b] && a != b) return true;
        if (X.leq[b][a] && a != b) return false;
        return a < b;
    });
    std::vector<std::vector<int>> chains;
    std::vector<std::vector<int>> frontier;
    for (int v : order) frontier.push_back({v});
    while (!frontier.empty()) {
        chains.insert(chains.end(), frontier.begin(), frontier.end());
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier)
            for (int v : order)
                if (v != c.back() && X.leq[c.back()][v]) {
                    auto ext = c;
                    ext.push_back(v);
                    next.push_back(std::move(ext));
                }
        frontier = std::move(next);
    }
    return chains;
}

}  // namespace

Poset chain_poset(const Poset& X) {
    std::vector<int> verts(X.size());
    for (int i = 0; i < X.size(); ++i) verts[i] = i;
    auto chains = all_chains(X, verts);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    Poset C;
    for (const auto& c : chains) {
        std::string label = "{";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) label += ",";
            label += X.elements[c[i]];
        }
        label += "}";
        C.elements.push_back(label);
    }
    int m = static_cast<int>(chains.size());
    C.leq.assign(m, std::vector<bool>(m, false));
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int v : a)
            if (std::find(b.begin(), b.end(), v) == b.end()) return false;
        return true;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (subset(chains[i], chains[j])) C.leq[i][j] = true;
    return C;
}

SimplicialComplex order_complex(const Poset& X) {
    std::vector<int> verts(X.size());
    for (int i = 0; i < X.size(); ++i) verts[i] = i;
    return order_complex_restricted(X, verts);
}

SimplicialComplex order_complex_restricted(const Poset& X, const std::vector<int>& Y) {
    auto chains = all_chains(X, Y);
    SimplicialComplex K;
    K.nverts = X.size();
    for (auto& c : chains) {
        std::sort(c.begin(), c.end());
        int d = static_cast<int>(c.size()) - 1;
        if (d >= (int)K.simplices.size()) K.simplices.resize(d + 1);
        K.simplices[d].push_back(c);
    }
    for (auto& level : K.simplices) std::sort(level.begin(), level.end());
    return K;
}

PosetJob poset_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail("BadJson", e.what());
    }
    PosetJob job{Field::Q(), {}};
    if (j.contains("field")) {
        const auto& fj = j.at("field");
        if (fj.is_string())
            job.f = Field::parse(fj.get<std::string>());
        else if (fj.is_object() && fj.contains("Fp"))
            job.f = Field::Fp(static_cast<unsigned>(fj.at("Fp").get<long>()));
        else
            fail("BadJson", "field must be a string or {\"Fp\": p}");
    }
    if (!j.contains("elements")) fail("BadJson", "missing 'elements'");
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers"))
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) fail("BadJson", "each cover must be a pair");
            covers.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>()});
        }
    job.poset = Poset::from_covers(elements, covers);
    return job;
}

}  // namespace hhkit
