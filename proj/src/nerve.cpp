#include "actdim/nerve.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "actdim/error.hpp"

namespace actdim {

const NerveFace& NerveLabeling::face(const Simplex& s) const {
    const auto idx = complex.index_of(s);
    if (!idx) throw Error(ErrorKind::NotASimplex, "not a face of the nerve");
    std::size_t offset = 0;
    for (int k = 0; k < s.dimension(); ++k) offset += complex.simplices(k).size();
    return faces[offset + *idx];
}

NerveLabeling build_nerve(const CoxeterMatrix& m) {
    const int n = m.rank();
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back(std::to_string(v + 1));

    // Level k holds the k-element generator sets with finite parabolic.
    std::vector<Simplex> all;
    std::set<std::vector<Vertex>> level;
    for (Vertex v = 0; v < n; ++v) level.insert({v});
    while (!level.empty()) {
        std::set<std::vector<Vertex>> next;
        for (const auto& s : level) {
            all.push_back(Simplex::from_sorted(s));
            for (Vertex v = s.back() + 1; v < n; ++v) {
                std::vector<Vertex> t = s;
                t.push_back(v);
                bool faces_present = true;
                for (std::size_t drop = 0; drop + 1 < t.size() && faces_present; ++drop) {
                    std::vector<Vertex> f = t;
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
                    faces_present = level.count(f) > 0;
                }
                if (!faces_present) continue;
                const std::vector<int> sub(t.begin(), t.end());
                if (is_finite(parabolic_submatrix(m, sub))) next.insert(std::move(t));
            }
        }
        level = std::move(next);
    }

    NerveLabeling out{m, SimplicialComplex(names, all), {}};
    for (int k = 0; k <= out.complex.top_dimension(); ++k) {
        for (const auto& s : out.complex.simplices(k)) {
            const std::vector<int> sub(s.begin(), s.end());
            auto sm = parabolic_submatrix(m, sub);
            auto types = classify(sm);
            const bool irr = types.size() == 1;
            out.faces.push_back({s, std::move(sm), std::move(types), irr});
        }
    }
    return out;
}

std::vector<NerveFace> spherical_faces(const NerveLabeling& n) { return n.faces; }

}  // namespace actdim
