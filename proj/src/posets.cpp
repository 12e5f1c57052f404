#include "actdim/posets.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "actdim/error.hpp"
#include "actdim/homology.hpp"

namespace actdim {

Poset::Poset(std::vector<std::string> names, BoolMatrix leq) : names_(std::move(names)), leq_(std::move(leq)) {
    const auto n = static_cast<Eigen::Index>(names_.size());
    if (leq_.rows() != n || leq_.cols() != n) throw Error(ErrorKind::InvalidArgument, "order matrix size mismatch");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!leq_(i, i)) throw Error(ErrorKind::InvalidArgument, "order is not reflexive");
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && leq_(i, j) && leq_(j, i)) throw Error(ErrorKind::InvalidArgument, "order is not antisymmetric");
            if (!leq_(i, j)) continue;
            for (Eigen::Index k = 0; k < n; ++k)
                if (leq_(j, k) && !leq_(i, k)) throw Error(ErrorKind::InvalidArgument, "order is not transitive");
        }
    }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < size() && cover; ++k) cover = !(less(i, k) && less(k, j));
            if (cover) out.emplace_back(i, j);
        }
    }
    return out;
}

namespace {

std::vector<Simplex> all_simplices(const SimplicialComplex& k) {
    std::vector<Simplex> out;
    for (int d = 0; d <= k.top_dimension(); ++d)
        out.insert(out.end(), k.simplices(d).begin(), k.simplices(d).end());
    return out;
}

Poset simplex_poset(const SimplicialComplex& k, bool augmented) {
    dimension(k);
    const auto cells = all_simplices(k);
    const std::size_t shift = augmented ? 1 : 0;
    const auto n = static_cast<Eigen::Index>(cells.size() + shift);
    BoolMatrix leq = BoolMatrix::Constant(n, n, false);
    std::vector<std::string> names;
    if (augmented) {
        names.push_back("{}");
        leq.row(0).setConstant(true);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        names.push_back(simplex_to_string(k, cells[i]));
        for (std::size_t j = 0; j < cells.size(); ++j)
            leq(static_cast<Eigen::Index>(i + shift), static_cast<Eigen::Index>(j + shift)) = cells[i].is_face_of(cells[j]);
    }
    return Poset(std::move(names), std::move(leq));
}

// Position of s among all simplices of k in (dimension, lexicographic) order.
std::size_t global_index(const SimplicialComplex& k, const Simplex& s) {
    std::size_t offset = 0;
    for (int d = 0; d < s.dimension(); ++d) offset += k.simplices(d).size();
    return offset + *k.index_of(s);
}

std::string subset_name(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

}  // namespace

Poset face_poset(const SimplicialComplex& k) { return simplex_poset(k, false); }
Poset augmented_poset(const SimplicialComplex& k) { return simplex_poset(k, true); }

SimplicialComplex order_complex(const Poset& p) {
    std::vector<std::vector<std::size_t>> up(p.size());
    std::vector<bool> has_lower(p.size(), false);
    for (const auto& [i, j] : p.covers()) {
        up[i].push_back(j);
        has_lower[j] = true;
    }
    std::vector<Simplex> chains;
    std::vector<Vertex> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t v) {
        chain.push_back(static_cast<Vertex>(v));
        if (up[v].empty()) {
            std::vector<Vertex> sorted = chain;
            std::sort(sorted.begin(), sorted.end());
            chains.push_back(Simplex::from_sorted(std::move(sorted)));
        }
        for (std::size_t w : up[v]) extend(w);
        chain.pop_back();
    };
    for (std::size_t v = 0; v < p.size(); ++v)
        if (!has_lower[v]) extend(v);
    return SimplicialComplex(p.names(), chains);
}

SimplicialComplex dual_cone(const SimplicialComplex& k, const Simplex& s) {
    if (!k.contains(s)) throw Error(ErrorKind::NotASimplex, simplex_to_string(k, s) + " is not a simplex");
    const auto sd = barycentric_subdivision(k);
    const auto cells = all_simplices(k);
    std::vector<Vertex> above;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (s.is_face_of(cells[i])) above.push_back(static_cast<Vertex>(i));
    return induced_subcomplex(sd, above);
}

PosetOfGroups make_poset_of_groups(Poset p, std::vector<std::vector<int>> labels) {
    if (labels.size() != p.size()) throw Error(ErrorKind::InvalidArgument, "one label per poset element required");
    for (auto& l : labels) {
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw Error(ErrorKind::InvalidArgument, "label repeats a generator");
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.less(i, j) && !std::includes(labels[j].begin(), labels[j].end(), labels[i].begin(), labels[i].end()))
                throw Error(ErrorKind::InvalidArgument,
                            "labels are not monotone between " + p.name(i) + " and " + p.name(j));
    return {std::move(p), std::move(labels)};
}

PosetOfGroups artin_poset_of_groups(const NerveLabeling& n) {
    auto p = augmented_poset(n.complex);
    std::vector<std::vector<int>> labels{{}};
    for (const auto& f : n.faces) labels.emplace_back(f.simplex.begin(), f.simplex.end());
    return make_poset_of_groups(std::move(p), std::move(labels));
}

PosetOfGroups extend_over_embedding(const PosetOfGroups& g, const SimplicialComplex& l, const SimplicialComplex& c) {
    if (!is_full_subcomplex(c, l)) throw Error(ErrorKind::NotFullSubcomplex, "L is not a full subcomplex of C");
    const std::size_t cells = all_simplices(l).size();
    bool augmented = false;
    if (g.poset.size() == cells + 1)
        augmented = true;
    else if (g.poset.size() != cells)
        throw Error(ErrorKind::InvalidArgument, "poset of groups does not match the face poset of L");

    std::vector<std::vector<int>> labels;
    if (augmented) labels.push_back(g.labels[0]);
    for (const auto& s : all_simplices(c)) {
        std::vector<Vertex> meet;
        for (Vertex v : s)
            if (auto w = l.find(c.name(v)); w && std::binary_search(l.vertices().begin(), l.vertices().end(), *w))
                meet.push_back(*w);
        if (meet.empty()) {
            labels.emplace_back();
            continue;
        }
        std::sort(meet.begin(), meet.end());
        const std::size_t idx = global_index(l, Simplex::from_sorted(std::move(meet)));
        labels.push_back(g.labels[idx + (augmented ? 1 : 0)]);
    }
    return make_poset_of_groups(augmented ? augmented_poset(c) : face_poset(c), std::move(labels));
}

Word alternating_word(int i, int j, int m) {
    Word w;
    for (int t = 0; t < m; ++t) w.push_back((t % 2 == 0 ? i : j) + 1);
    return w;
}

Presentation colimit_presentation(const PosetOfGroups& g, const CoxeterMatrix& m) {
    std::set<int> gens;
    std::set<std::pair<int, int>> pairs;
    for (const auto& l : g.labels) {
        for (std::size_t a = 0; a < l.size(); ++a) {
            if (l[a] < 0 || l[a] >= m.rank()) throw Error(ErrorKind::InvalidArgument, "label outside the Coxeter matrix");
            gens.insert(l[a]);
            for (std::size_t b = a + 1; b < l.size(); ++b) pairs.insert({l[a], l[b]});
        }
    }
    Presentation p;
    std::map<int, int> letter;
    for (int v : gens) {
        p.generators.push_back("a" + std::to_string(v + 1));
        letter[v] = static_cast<int>(p.generators.size());
    }
    for (const auto& [i, j] : pairs) {
        const int label = m(i, j);
        if (label == kInfinity) continue;
        Word w = alternating_word(letter[i] - 1, letter[j] - 1, label);
        const Word rhs = inverse(alternating_word(letter[j] - 1, letter[i] - 1, label));
        w.insert(w.end(), rhs.begin(), rhs.end());
        p.relators.push_back(std::move(w));
    }
    return p;
}

BasicConstruction basic_construction(const CoxeterMatrix& m, std::size_t cap) {
    const auto group = enumerate_group(m, cap);
    const int n = m.rank();
    const std::size_t order = group.size();

    BasicConstruction out{m, order, {}, SimplicialComplex(), {}, {}, {}, {}, {}};
    for (std::size_t g = 0; g < order; ++g) out.group_words.push_back(group.word(g));

    std::map<unsigned, std::size_t> stratum_of_mask;
    for (int size = 0; size <= n; ++size) {
        std::vector<bool> sel(static_cast<std::size_t>(n), false);
        std::fill(sel.begin(), sel.begin() + size, true);
        do {
            std::vector<int> s;
            unsigned mask = 0;
            for (int i = 0; i < n; ++i)
                if (sel[static_cast<std::size_t>(i)]) {
                    s.push_back(i);
                    mask |= 1u << i;
                }
            stratum_of_mask[mask] = out.strata.size();
            out.strata.push_back(std::move(s));
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }

    // rep[S][g] = least element of the coset g·W_S.
    std::vector<std::vector<std::size_t>> rep(out.strata.size(), std::vector<std::size_t>(order, order));
    std::vector<std::map<std::size_t, Vertex>> vid(out.strata.size());
    std::vector<std::string> names;
    for (std::size_t si = 0; si < out.strata.size(); ++si) {
        const auto& s = out.strata[si];
        auto& r = rep[si];
        for (std::size_t g = 0; g < order; ++g) {
            if (r[g] != order) continue;
            r[g] = g;
            std::deque<std::size_t> queue{g};
            while (!queue.empty()) {
                const auto h = queue.front();
                queue.pop_front();
                for (int i : s) {
                    const auto x = group.right[h][static_cast<std::size_t>(i)];
                    if (r[x] == order) {
                        r[x] = g;
                        queue.push_back(x);
                    }
                }
            }
            vid[si][g] = static_cast<Vertex>(names.size());
            names.push_back(out.group_words[g] + "@" + subset_name(s));
            out.vertex_stratum.push_back(si);
            out.vertex_coset.push_back(g);
        }
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> orders;
    do orders.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Simplex> facets;
    for (std::size_t g = 0; g < order; ++g) {
        for (const auto& o : orders) {
            std::vector<Vertex> verts;
            unsigned mask = 0;
            verts.push_back(vid[0].at(rep[0][g]));
            for (int i : o) {
                mask |= 1u << i;
                const auto si = stratum_of_mask.at(mask);
                verts.push_back(vid[si].at(rep[si][g]));
            }
            std::sort(verts.begin(), verts.end());
            facets.push_back(Simplex::from_sorted(std::move(verts)));
        }
    }
    out.complex = SimplicialComplex(names, facets);

    out.action.assign(static_cast<std::size_t>(n), std::vector<Vertex>(names.size()));
    for (int i = 0; i < n; ++i) {
        for (std::size_t v = 0; v < names.size(); ++v) {
            const auto si = out.vertex_stratum[v];
            const auto moved = group.left[out.vertex_coset[v]][static_cast<std::size_t>(i)];
            out.action[static_cast<std::size_t>(i)][v] = vid[si].at(rep[si][moved]);
        }
    }
    for (std::size_t si = 0; si < out.strata.size(); ++si) out.fundamental_domain.push_back(vid[si].at(0));
    return out;
}

bool BasicConstructionReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

BasicConstructionReport verify_basic_construction(const BasicConstruction& u) {
    BasicConstructionReport report;
    const auto& k = u.complex;
    const std::size_t nv = k.names().size();
    const std::set<Simplex> facet_set(k.facets().begin(), k.facets().end());

    {
        bool ok = true;
        std::string detail = "every generator permutes the vertices and the facets";
        for (std::size_t i = 0; i < u.action.size() && ok; ++i) {
            std::vector<Vertex> sorted = u.action[i];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t v = 0; v < nv && ok; ++v) ok = sorted[v] == static_cast<Vertex>(v);
            for (const auto& f : k.facets()) {
                if (!ok) break;
                std::vector<Vertex> img;
                for (Vertex v : f) img.push_back(u.action[i][static_cast<std::size_t>(v)]);
                std::sort(img.begin(), img.end());
                ok = facet_set.count(Simplex::from_sorted(std::move(img))) > 0;
            }
            if (!ok) detail = "generator " + std::to_string(i + 1) + " is not a simplicial automorphism";
        }
        report.checks.push_back({"simplicial action", ok, detail});
    }

    // Orbits under the generated group.
    std::vector<std::size_t> orbit(nv, nv);
    std::vector<std::size_t> orbit_size;
    for (std::size_t v = 0; v < nv; ++v) {
        if (orbit[v] != nv) continue;
        const std::size_t id = orbit_size.size();
        orbit_size.push_back(0);
        std::deque<std::size_t> queue{v};
        orbit[v] = id;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            ++orbit_size[id];
            for (const auto& a : u.action) {
                const auto y = static_cast<std::size_t>(a[x]);
                if (orbit[y] == nv) {
                    orbit[y] = id;
                    queue.push_back(y);
                }
            }
        }
    }

    {
        const auto base = static_cast<std::size_t>(u.fundamental_domain.front());
        const std::size_t chambers = static_cast<std::size_t>(
            std::count(u.vertex_stratum.begin(), u.vertex_stratum.end(), std::size_t{0}));
        const bool ok = orbit_size[orbit[base]] == u.group_order && chambers == u.group_order;
        report.checks.push_back({"free transitive action on chambers", ok,
                                 "orbit of " + k.name(static_cast<Vertex>(base)) + " has " +
                                     std::to_string(orbit_size[orbit[base]]) + " of " + std::to_string(u.group_order) +
                                     " elements"});
    }

    std::vector<std::size_t> expected(u.strata.size());
    std::size_t expected_total = 0;
    for (std::size_t si = 0; si < u.strata.size(); ++si) {
        std::size_t local = 1;
        if (!u.strata[si].empty()) local = static_cast<std::size_t>(*group_order(parabolic_submatrix(u.matrix, u.strata[si])));
        expected[si] = u.group_order / local;
        expected_total += expected[si];
    }

    {
        bool ok = true;
        std::string detail = "each orbit meets the domain once and lies in one stratum";
        std::vector<std::size_t> hits(orbit_size.size(), 0);
        for (Vertex d : u.fundamental_domain) ++hits[orbit[static_cast<std::size_t>(d)]];
        for (std::size_t o = 0; o < hits.size() && ok; ++o)
            if (hits[o] != 1) {
                ok = false;
                detail = "an orbit meets the domain " + std::to_string(hits[o]) + " times";
            }
        for (std::size_t v = 0; v < nv && ok; ++v) {
            const auto d = static_cast<std::size_t>(u.fundamental_domain[u.vertex_stratum[v]]);
            if (orbit[v] != orbit[d]) {
                ok = false;
                detail = k.name(static_cast<Vertex>(v)) + " is not in the orbit of its stratum's domain vertex";
            }
        }
        for (std::size_t si = 0; si < u.strata.size() && ok; ++si) {
            const auto d = static_cast<std::size_t>(u.fundamental_domain[si]);
            if (orbit_size[orbit[d]] != expected[si]) {
                ok = false;
                detail = "stratum " + subset_name(u.strata[si]) + " orbit has size " +
                         std::to_string(orbit_size[orbit[d]]) + ", expected " + std::to_string(expected[si]);
            }
        }
        report.checks.push_back({"strict fundamental domain", ok, detail});
    }

    report.checks.push_back({"vertex count", nv == expected_total && k.num_vertices() == nv,
                             std::to_string(nv) + " vertices, formula gives " + std::to_string(expected_total)});

    {
        // Quotient by the action: send every vertex to the domain vertex of its orbit.
        std::vector<Simplex> images;
        for (const auto& f : k.facets()) {
            std::vector<Vertex> img;
            for (Vertex v : f) img.push_back(u.fundamental_domain[u.vertex_stratum[static_cast<std::size_t>(v)]]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            images.push_back(Simplex::from_sorted(std::move(img)));
        }
        const SimplicialComplex quotient(k.names(), images);
        const auto domain = induced_subcomplex(k, [&] {
            std::vector<Vertex> d = u.fundamental_domain;
            std::sort(d.begin(), d.end());
            return d;
        }());
        const auto y = order_complex(augmented_poset(standard_simplex(u.matrix.rank() - 1)));
        const bool ok = quotient.facets() == domain.facets() && is_isomorphic(domain, y);
        report.checks.push_back({"quotient is Y", ok,
                                 ok ? "the quotient equals the identity copy of Y"
                                    : "quotient and fundamental domain differ"});
    }

    const long long chi = k.euler_characteristic();
    report.checks.push_back({"Euler characteristic", chi == 1, "chi = " + std::to_string(chi)});

    const bool acyclic = is_acyclic(k);
    report.checks.push_back({"reduced homology vanishes", acyclic,
                             acyclic ? "all reduced groups are 0" : "some reduced homology group is nonzero"});

    const auto pi1 = triviality_certificate(k);
    report.checks.push_back({"trivial fundamental group", pi1.verdict == Verdict::Verified,
                             to_string(pi1.verdict) + ": " + pi1.witness});
    return report;
}

}  // namespace actdim
