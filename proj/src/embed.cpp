#include "actdim/embed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "actdim/error.hpp"
#include "actdim/homology.hpp"

namespace actdim {

std::string to_string(EmbedStatus s) {
    switch (s) {
        case EmbedStatus::Embeddable: return "Embeddable";
        case EmbedStatus::NotEmbeddable: return "NotEmbeddable";
        case EmbedStatus::ConditionalUnknown: return "ConditionalUnknown";
    }
    return "ConditionalUnknown";
}

namespace {

struct Builder {
    std::vector<std::string> names;
    std::vector<Simplex> simplices;

    explicit Builder(const SimplicialComplex& k) : names(k.names()), simplices(k.facets()) {}

    Vertex fresh(const std::string& stem) {
        std::set<std::string> used(names.begin(), names.end());
        for (int i = 1;; ++i) {
            std::string candidate = stem + std::to_string(i);
            if (!used.count(candidate)) {
                names.push_back(candidate);
                return static_cast<Vertex>(names.size() - 1);
            }
        }
    }
    SimplicialComplex build() const { return SimplicialComplex(names, simplices); }
};

SimplicialComplex connect_components(const SimplicialComplex& k, std::vector<std::string>& trace) {
    const auto comps = connected_components(k);
    if (comps.size() <= 1) return k;
    Builder b(k);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        b.simplices.push_back(Simplex{comps[0].front(), comps[i].front()});
        trace.push_back("edge " + k.name(comps[0].front()) + " " + k.name(comps[i].front()));
    }
    return b.build();
}

// BFS tree parents from the least vertex, neighbours in increasing order.
std::map<Vertex, Vertex> bfs_parents(const SimplicialComplex& k) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : k.simplices(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    const Vertex root = k.vertices().front();
    std::map<Vertex, Vertex> parent{{root, root}};
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[v])
            if (parent.emplace(w, v).second) queue.push_back(w);
    }
    return parent;
}

// Closed vertex path a → ... → b → a through the tree plus the edge {a, b}.
std::vector<Vertex> fundamental_cycle(const std::map<Vertex, Vertex>& parent, Vertex a, Vertex b) {
    auto to_root = [&](Vertex v) {
        std::vector<Vertex> p{v};
        while (parent.at(v) != v) {
            v = parent.at(v);
            p.push_back(v);
        }
        return p;
    };
    auto pa = to_root(a);
    auto pb = to_root(b);
    while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
        pa.pop_back();
        pb.pop_back();
    }
    // pa and pb now end at the common ancestor.
    std::vector<Vertex> cycle = pa;
    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

std::size_t homology_weight(const SimplicialComplex& k, int dim) {
    if (dim > k.top_dimension()) return 0;
    const auto h = homology(k, dim, dim == 0);
    return h.betti + h.torsion.size();
}

std::string describe(const SimplicialComplex& k, const std::vector<Vertex>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "-" : "") + k.name(path[i]);
    return out;
}

}  // namespace

Embeddability embeddable_in_contractible(const SimplicialComplex& k) {
    const int d = dimension(k);
    const auto top = cohomology(k, d, d == 0);
    if (!top.trivial())
        return {EmbedStatus::NotEmbeddable, "H^" + std::to_string(d) + " = " + top.to_string()};
    if (d != 2) return {EmbedStatus::Embeddable, "H^" + std::to_string(d) + " = 0"};
    std::vector<std::string> ignored;
    const auto c = connect_components(k, ignored);
    const auto cert = normal_generation_certificate(c);
    if (cert.verdict == Verdict::Verified)
        return {EmbedStatus::Embeddable, "H^2 = 0 and pi1 normally generated by rk H_1 elements: " + cert.witness};
    return {EmbedStatus::ConditionalUnknown, "H^2 = 0 but normal generation not certified: " + cert.witness};
}

EmbedResult embed_dim1(const SimplicialComplex& k) {
    const int d = dimension(k);
    if (d > 1) throw Error(ErrorKind::NotApplicable, "complex has dimension " + std::to_string(d));
    if (d == 1 && !cohomology(k, 1).trivial()) throw Error(ErrorKind::NotApplicable, "H^1 is nonzero");
    EmbedResult r;
    r.complex = connect_components(k, r.trace);
    r.acyclic = is_acyclic(*r.complex);
    r.pi1 = triviality_certificate(*r.complex);
    r.status = EmbedStatus::Embeddable;
    return r;
}

EmbedResult embed_general(const SimplicialComplex& k, int budget) {
    const auto gate = embeddable_in_contractible(k);
    if (gate.status != EmbedStatus::Embeddable) throw Error(ErrorKind::NotApplicable, gate.reason);
    const int d = dimension(k);
    if (d < 2) throw Error(ErrorKind::NotApplicable, "dimension below 2; use the graph procedure");

    EmbedResult r;
    SimplicialComplex c = connect_components(k, r.trace);
    auto exhausted = [&](const std::string& why) {
        std::string msg = why;
        for (const auto& t : r.trace) msg += "\n  " + t;
        return Error(ErrorKind::BudgetExhausted, msg);
    };

    for (int pass = 1; pass <= budget; ++pass) {
        const bool acyclic = is_acyclic(c);
        auto cert = triviality_certificate(c);
        if (acyclic && cert.verdict == Verdict::Verified) {
            r.status = EmbedStatus::Embeddable;
            r.acyclic = true;
            r.pi1 = std::move(cert);
            r.complex = std::move(c);
            r.trace.push_back("certified after " + std::to_string(pass - 1) + " passes");
            return r;
        }
        bool progress = false;

        if (cert.verdict != Verdict::Verified) {
            const auto p = tietze_simplify(edge_path_presentation(c));
            const auto parent = bfs_parents(c);
            std::map<std::string, Simplex> edge_of;
            for (const auto& e : c.simplices(1)) edge_of.emplace(c.name(e[0]) + "-" + c.name(e[1]), e);
            for (const auto& gen : p.generators) {
                const auto& e = edge_of.at(gen);
                const auto cycle = fundamental_cycle(parent, e[0], e[1]);
                Builder bld(c);
                const Vertex apex = bld.fresh("c");
                for (std::size_t i = 0; i < cycle.size(); ++i) {
                    const Vertex u = cycle[i];
                    const Vertex w = cycle[(i + 1) % cycle.size()];
                    bld.simplices.push_back(Simplex{apex, u, w});
                }
                auto next = bld.build();
                if (d == 2 && homology_weight(next, 2) > homology_weight(c, 2)) continue;
                r.trace.push_back("cone loop " + describe(c, cycle) + "-" + c.name(cycle.front()) + " at " +
                                  next.name(apex));
                c = std::move(next);
                progress = true;
            }
        }

        if (!progress) {
            for (int dim = 2; dim <= d - 1 && !progress; ++dim) {
                if (homology_weight(c, dim) == 0) continue;
                const auto basis = cycle_basis(c, dim);
                for (Eigen::Index col = 0; col < basis.cols(); ++col) {
                    const Eigen::VectorX<std::int64_t> z = basis.col(col);
                    if (is_boundary(c, dim, z)) continue;
                    Builder bld(c);
                    const Vertex apex = bld.fresh("c");
                    std::size_t support = 0;
                    for (Eigen::Index i = 0; i < z.size(); ++i) {
                        if (z(i) == 0) continue;
                        auto verts = std::vector<Vertex>(c.simplices(dim)[static_cast<std::size_t>(i)].begin(),
                                                         c.simplices(dim)[static_cast<std::size_t>(i)].end());
                        verts.push_back(apex);
                        bld.simplices.emplace_back(std::move(verts));
                        ++support;
                    }
                    auto next = bld.build();
                    r.trace.push_back("cone " + std::to_string(dim) + "-cycle support (" + std::to_string(support) +
                                      " simplices) at " + next.name(apex));
                    c = std::move(next);
                    progress = true;
                    break;
                }
            }
        }
        if (!progress) throw exhausted("no attachment applies");
    }
    throw exhausted("budget of " + std::to_string(budget) + " passes exhausted");
}

nlohmann::ordered_json to_json(const EmbedResult& r) {
    nlohmann::ordered_json j;
    j["status"] = to_string(r.status);
    j["acyclic"] = r.acyclic;
    if (r.pi1)
        j["pi1"] = {{"verdict", to_string(r.pi1->verdict)}, {"witness", r.pi1->witness}};
    else
        j["pi1"] = nullptr;
    j["trace"] = r.trace;
    if (r.complex) {
        j["vertices"] = r.complex->num_vertices();
        j["facets"] = r.complex->facets().size();
        j["dimension"] = r.complex->top_dimension();
    }
    return j;
}

}  // namespace actdim
