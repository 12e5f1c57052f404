#pragma once

#include <random>
#include <string>
#include <vector>

#include "actdim/complex.hpp"
#include "actdim/coxeter.hpp"

namespace fixtures {

inline std::vector<std::string> numbered(int n, int first = 0) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(first + i));
    return names;
}

inline actdim::SimplicialComplex make(int n, const std::vector<std::vector<actdim::Vertex>>& faces, int first = 0) {
    std::vector<actdim::Simplex> s;
    for (const auto& f : faces) s.emplace_back(f);
    return actdim::SimplicialComplex(numbered(n, first), s);
}

// Six-vertex projective plane, vertices 1..6.
inline actdim::SimplicialComplex rp2() {
    return make(6,
                {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                 {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}},
                1);
}

// Seven-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline actdim::SimplicialComplex torus7() {
    std::vector<std::vector<actdim::Vertex>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return make(7, faces);
}

inline actdim::SimplicialComplex annulus() {
    return make(6, {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {2, 0, 5}, {0, 5, 3}});
}

inline actdim::SimplicialComplex cycle(int n) {
    std::vector<std::vector<actdim::Vertex>> faces;
    for (int i = 0; i < n; ++i) faces.push_back({i, (i + 1) % n});
    return make(n, faces);
}

inline actdim::SimplicialComplex path(int n) {
    std::vector<std::vector<actdim::Vertex>> faces;
    for (int i = 0; i + 1 < n; ++i) faces.push_back({i, i + 1});
    if (n == 1) faces.push_back({0});
    return make(n, faces);
}

/// Random complex on `n` vertices: a handful of random faces of size ≤ max_size.
inline actdim::SimplicialComplex random_complex(std::mt19937& rng, int n, int max_size, const std::string& prefix = "v") {
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<int> size(1, std::min(max_size, n));
    std::vector<actdim::Simplex> faces;
    const int m = count(rng);
    for (int f = 0; f < m; ++f) {
        std::vector<actdim::Vertex> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(size(rng)));
        faces.emplace_back(all);
    }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return actdim::SimplicialComplex(names, faces);
}

/// Right-angled matrix with m(i, j) = ∞ exactly on the listed pairs (0-based).
inline actdim::CoxeterMatrix right_angled(int n, const std::vector<std::pair<int, int>>& free_pairs) {
    actdim::CoxeterMatrix m(n);
    for (auto [i, j] : free_pairs) m.set(i, j, actdim::kInfinity);
    return m;
}

}  // namespace fixtures
