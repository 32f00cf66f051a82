#include "hhkit/quiver.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace hhkit {

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    fail("UnknownVertex", "unknown vertex " + label);
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    fail("MalformedPath", "unknown arrow " + name);
}

std::vector<std::vector<int>> minimal_relations(const std::vector<std::vector<int>>& rels) {
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        if (small.size() > big.size()) return false;
        for (size_t s = 0; s + small.size() <= big.size(); ++s)
            if (std::equal(small.begin(), small.end(), big.begin() + s)) return true;
        return false;
    };
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < rels.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < rels.size() && !redundant; ++j) {
            if (i == j) continue;
            if (rels[i] == rels[j] && j < i) redundant = true;  // keep first duplicate
            else if (rels[i] != rels[j] && contains(rels[i], rels[j])) redundant = true;
        }
        if (!redundant) out.push_back(rels[i]);
    }
    return out;
}

namespace {

struct Path {
    int src = 0, tgt = 0;
    std::vector<int> walk;  // arrow indices in traversal order; empty = trivial path at src
};

void validate(const QuiverPresentation& pres, int min_rel_len) {
    const Quiver& q = pres.quiver;
    if (q.vertices.empty()) fail("BadParameters", "quiver needs at least one vertex");
    for (const auto& a : q.arrows)
        if (a.src < 0 || a.src >= (int)q.vertices.size() || a.tgt < 0 || a.tgt >= (int)q.vertices.size())
            fail("BadParameters", "arrow endpoint out of range");
    for (const auto& rel : pres.relations) {
        if ((int)rel.size() < min_rel_len) fail("MalformedPath", "relation shorter than the allowed minimum");
        for (size_t i = 0; i < rel.size(); ++i) {
            if (rel[i] < 0 || rel[i] >= (int)q.arrows.size()) fail("MalformedPath", "relation uses unknown arrow");
            if (i + 1 < rel.size() && q.arrows[rel[i]].tgt != q.arrows[rel[i + 1]].src)
                fail("MalformedPath", "relation path is not composable");
        }
    }
}

bool ends_with_relation(const std::vector<int>& walk, const std::vector<std::vector<int>>& rels) {
    for (const auto& r : rels) {
        if (r.size() > walk.size()) continue;
        if (std::equal(r.begin(), r.end(), walk.end() - r.size())) return true;
    }
    return false;
}

bool contains_relation(const std::vector<int>& walk, const std::vector<std::vector<int>>& rels) {
    for (const auto& r : rels) {
        if (r.size() > walk.size()) continue;
        for (size_t s = 0; s + r.size() <= walk.size(); ++s)
            if (std::equal(r.begin(), r.end(), walk.begin() + s)) return true;
    }
    return false;
}

AlgP build_path_algebra(const QuiverPresentation& pres, int cap, int min_rel_len) {
    validate(pres, min_rel_len);
    const Quiver& q = pres.quiver;
    auto rels = minimal_relations(pres.relations);
    int nv = static_cast<int>(q.vertices.size());

    std::vector<Path> basis;
    for (int v = 0; v < nv; ++v) basis.push_back(Path{v, v, {}});
    // breadth-first by length, arrows tried in declaration order
    size_t frontier_begin = 0;
    while (frontier_begin < basis.size()) {
        size_t frontier_end = basis.size();
        for (size_t p = frontier_begin; p < frontier_end; ++p) {
            Path base = basis[p];
            for (int a = 0; a < (int)q.arrows.size(); ++a) {
                if (q.arrows[a].src != base.tgt) continue;
                Path ext{base.src, q.arrows[a].tgt, base.walk};
                ext.walk.push_back(a);
                if (ends_with_relation(ext.walk, rels)) continue;
                basis.push_back(std::move(ext));
                if ((int)basis.size() > cap) fail("InfiniteDimensional", "surviving path count exceeds the cap");
            }
        }
        frontier_begin = frontier_end;
    }

    std::map<std::vector<int>, int> walk_index;  // nonempty walks
    for (size_t i = 0; i < basis.size(); ++i)
        if (!basis[i].walk.empty()) walk_index[basis[i].walk] = static_cast<int>(i);

    int n = static_cast<int>(basis.size());
    auto A = std::make_shared<Algebra>();
    A->f = pres.f;
    A->dim = n;
    A->name = "path algebra (" + std::to_string(nv) + " vertices, " + std::to_string(q.arrows.size()) +
              " arrows, " + std::to_string(rels.size()) + " relations)";
    for (const auto& p : basis) {
        if (p.walk.empty()) {
            A->labels.push_back("e_" + q.vertices[p.src]);
        } else {
            std::string lab;  // product notation: last traversed arrow first
            for (auto it = p.walk.rbegin(); it != p.walk.rend(); ++it) lab += q.arrows[*it].name;
            A->labels.push_back(lab);
        }
    }
    Vec zero = zero_vec(pres.f, n);
    A->mul.assign(n, std::vector<Vec>(n, zero));
    // product b_i · b_j: traverse j first, then i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (basis[j].tgt != basis[i].src) continue;
            std::vector<int> walk = basis[j].walk;
            walk.insert(walk.end(), basis[i].walk.begin(), basis[i].walk.end());
            int target;
            if (walk.empty()) {
                target = basis[i].src;  // both trivial at the same vertex
            } else {
                if (contains_relation(walk, rels)) continue;
                auto it = walk_index.find(walk);
                if (it == walk_index.end()) fail("BadParameters", "path closure violated");
                target = it->second;
            }
            A->mul[i][j][target] = Scalar::one(pres.f);
        }
    A->unit = zero_vec(pres.f, n);
    for (int v = 0; v < nv; ++v) A->unit[v] = Scalar::one(pres.f);
    for (int v = 0; v < nv; ++v) A->everts.push_back(v);
    A->check();
    return A;
}

}  // namespace

AlgP make_path_algebra_quotient(const QuiverPresentation& pres, int cap) {
    return build_path_algebra(pres, cap, 2);
}

AlgP make_truncated_cycle(Field f, int n, int m, int cap) {
    if (n < 2 || m < 1) fail("BadParameters", "need n >= 2, m >= 1");
    // truncation length must be a multiple of n: conjugation by the sum of
    // arrows is then the identity and HH picks up the 2-periodic pattern
    int l = n * m;
    QuiverPresentation pres;
    pres.f = f;
    for (int v = 0; v < n; ++v) pres.quiver.vertices.push_back(std::to_string(v));
    for (int v = 0; v < n; ++v) pres.quiver.arrows.push_back({"a" + std::to_string(v), v, (v + 1) % n});
    for (int v = 0; v < n; ++v) {
        std::vector<int> rel;
        for (int s = 0; s < l; ++s) rel.push_back((v + s) % n);
        pres.relations.push_back(rel);
    }
    return build_path_algebra(pres, cap, 1);
}

bool internal_vertex_criterion(const QuiverPresentation& pres, int vertex) {
    if (vertex < 0 || vertex >= (int)pres.quiver.vertices.size()) fail("UnknownVertex", "vertex out of range");
    for (const auto& rel : minimal_relations(pres.relations))
        for (size_t i = 0; i + 1 < rel.size(); ++i)
            if (pres.quiver.arrows[rel[i]].tgt == vertex) return false;
    return true;
}

bool circuit_free_at(const Quiver& q, int vertex) {
    if (vertex < 0 || vertex >= (int)q.vertices.size()) fail("UnknownVertex", "vertex out of range");
    // reachability from vertex back to vertex along at least one arrow
    std::vector<int> stack;
    std::vector<bool> seen(q.vertices.size(), false);
    for (const auto& a : q.arrows)
        if (a.src == vertex && !seen[a.tgt]) {
            if (a.tgt == vertex) return false;
            seen[a.tgt] = true;
            stack.push_back(a.tgt);
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& a : q.arrows)
            if (a.src == v) {
                if (a.tgt == vertex) return false;
                if (!seen[a.tgt]) {
                    seen[a.tgt] = true;
                    stack.push_back(a.tgt);
                }
            }
    }
    return true;
}

QuiverPresentation quiver_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail("InputError", std::string("invalid JSON: ") + e.what());
    }
    QuiverPresentation pres;
    try {
        if (j.contains("field")) {
            if (j["field"].is_string()) pres.f = Field::parse(j["field"].get<std::string>());
            else if (j["field"].is_object() && j["field"].contains("Fp"))
                pres.f = Field::Fp(static_cast<unsigned>(j["field"]["Fp"].get<long>()));
            else fail("InputError", "bad field spec");
        } else {
            pres.f = Field::Q();
        }
        for (const auto& v : j.at("vertices")) pres.quiver.vertices.push_back(v.get<std::string>());
        if (j.contains("arrows"))
            for (const auto& a : j["arrows"]) {
                Quiver::Arrow arr;
                arr.name = a.at("name").get<std::string>();
                arr.src = pres.quiver.vertex_index(a.at("src").get<std::string>());
                arr.tgt = pres.quiver.vertex_index(a.at("tgt").get<std::string>());
                pres.quiver.arrows.push_back(arr);
            }
        if (j.contains("relations"))
            for (const auto& rel : j["relations"]) {
                std::vector<int> r;
                for (const auto& name : rel) r.push_back(pres.quiver.arrow_index(name.get<std::string>()));
                pres.relations.push_back(r);
            }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail("InputError", std::string("bad quiver JSON: ") + e.what());
    }
    for (const auto& a : pres.quiver.arrows)
        for (const auto& b : pres.quiver.arrows)
            if (&a != &b && a.name == b.name) fail("InputError", "duplicate arrow name " + a.name);
    return pres;
}

}  // namespace hhkit
