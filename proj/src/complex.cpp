#include "actdim/complex.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "actdim/error.hpp"

namespace actdim {

// Simplex -------------------------------------------------------------------

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorKind::InvalidArgument, "simplex must be nonempty");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorKind::InvalidArgument, "simplex has a repeated vertex");
}

Simplex Simplex::from_sorted(std::vector<Vertex> sorted) {
    Simplex s;
    s.vertices_ = std::move(sorted);
    return s;
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

Simplex Simplex::facet_without(std::size_t i) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i) out.push_back(vertices_[j]);
    return from_sorted(std::move(out));
}

// SimplicialComplex ----------------------------------------------------------

struct SimplicialComplex::FaceIndex {
    std::once_flag once;
    std::vector<std::vector<Simplex>> by_dim;
    std::vector<std::map<Simplex, std::size_t>> position;
};

namespace {

std::vector<Simplex> maximal_only(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::vector<Simplex> kept;
    for (auto& s : simplices) {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](const Simplex& f) {
            return f.size() > s.size() && s.is_face_of(f);
        });
        if (!covered) kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

const std::vector<Simplex>& empty_simplex_list() {
    static const std::vector<Simplex> empty;
    return empty;
}

}  // namespace

SimplicialComplex::SimplicialComplex()
    : names_(std::make_shared<const std::vector<std::string>>()),
      index_(std::make_shared<FaceIndex>()) {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> names,
                                     const std::vector<Simplex>& simplices)
    : index_(std::make_shared<FaceIndex>()) {
    {
        std::set<std::string_view> seen;
        for (const auto& n : names)
            if (!seen.insert(n).second)
                throw Error(ErrorKind::InvalidArgument, "duplicate vertex name '" + n + "'");
    }
    for (const auto& s : simplices) {
        if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty simplex");
        if (s[0] < 0 || static_cast<std::size_t>(s[s.size() - 1]) >= names.size())
            throw Error(ErrorKind::InvalidArgument, "simplex vertex outside the name table");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    facets_ = maximal_only(simplices);
    std::set<Vertex> used;
    for (const auto& f : facets_) used.insert(f.begin(), f.end());
    vertices_.assign(used.begin(), used.end());
}

std::optional<Vertex> SimplicialComplex::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return static_cast<Vertex>(i);
    return std::nullopt;
}

int SimplicialComplex::top_dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dimension());
    return d;
}

const SimplicialComplex::FaceIndex& SimplicialComplex::face_index() const {
    std::call_once(index_->once, [this] {
        const int top = top_dimension();
        std::vector<std::set<Simplex>> faces(static_cast<std::size_t>(top + 1));
        for (const auto& f : facets_) {
            const std::size_t n = f.size();
            std::vector<Vertex> buf;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                buf.clear();
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::uint64_t{1} << i)) buf.push_back(f[i]);
                faces[buf.size() - 1].insert(Simplex::from_sorted(buf));
            }
        }
        index_->by_dim.resize(faces.size());
        index_->position.resize(faces.size());
        for (std::size_t d = 0; d < faces.size(); ++d) {
            index_->by_dim[d].assign(faces[d].begin(), faces[d].end());
            for (std::size_t i = 0; i < index_->by_dim[d].size(); ++i)
                index_->position[d].emplace(index_->by_dim[d][i], i);
        }
    });
    return *index_;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    const auto& idx = face_index();
    if (k < 0 || static_cast<std::size_t>(k) >= idx.by_dim.size()) return empty_simplex_list();
    return idx.by_dim[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty()) return std::nullopt;
    const auto& idx = face_index();
    const auto d = static_cast<std::size_t>(s.dimension());
    if (d >= idx.position.size()) return std::nullopt;
    auto it = idx.position[d].find(s);
    if (it == idx.position[d].end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    const auto& idx = face_index();
    std::vector<std::size_t> f;
    for (const auto& level : idx.by_dim) f.push_back(level.size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    long long sign = 1;
    for (auto n : f_vector()) {
        chi += sign * static_cast<long long>(n);
        sign = -sign;
    }
    return chi;
}

// Constructions --------------------------------------------------------------

SimplicialComplex simplex_complex(std::vector<std::string> names) {
    if (names.empty()) return SimplicialComplex();
    std::vector<Vertex> all(names.size());
    std::iota(all.begin(), all.end(), 0);
    return SimplicialComplex(std::move(names), {Simplex::from_sorted(std::move(all))});
}

SimplicialComplex standard_simplex(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n + 1; ++i) names.push_back(std::to_string(i));
    return simplex_complex(std::move(names));
}

SimplicialComplex simplex_boundary(int n) {
    const auto full = standard_simplex(n + 1);
    const auto& top = full.facets().front();
    std::vector<Simplex> faces;
    for (std::size_t i = 0; i < top.size(); ++i) faces.push_back(top.facet_without(i));
    return SimplicialComplex(full.names(), faces);
}

int dimension(const SimplicialComplex& k) {
    if (k.empty()) throw Error(ErrorKind::EmptyComplex, "dimension of the empty complex");
    return k.top_dimension();
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    if (!k.contains(s)) throw Error(ErrorKind::NotASimplex, "link of a non-simplex");
    std::vector<Simplex> parts;
    for (const auto& f : k.facets()) {
        if (!s.is_face_of(f)) continue;
        std::vector<Vertex> rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) parts.push_back(Simplex::from_sorted(std::move(rest)));
    }
    return SimplicialComplex(k.names(), parts);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<std::string> names;
    std::map<Simplex, Vertex> id;
    for (int d = 0; d <= k.top_dimension(); ++d) {
        for (const auto& s : k.simplices(d)) {
            id.emplace(s, static_cast<Vertex>(names.size()));
            names.push_back(simplex_to_string(k, s));
        }
    }
    std::vector<Simplex> chains;
    for (const auto& f : k.facets()) {
        std::vector<Vertex> order(f.begin(), f.end());
        do {
            std::vector<Vertex> chain;
            std::vector<Vertex> prefix;
            for (auto v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(id.at(Simplex::from_sorted(prefix)));
            }
            chains.emplace_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex(std::move(names), chains);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
    auto names = k.names();
    Vertex a;
    if (auto existing = k.find(apex)) {
        if (std::binary_search(k.vertices().begin(), k.vertices().end(), *existing))
            throw Error(ErrorKind::VertexClash, "cone apex '" + apex + "' is already a vertex");
        a = *existing;
    } else {
        a = static_cast<Vertex>(names.size());
        names.push_back(apex);
    }
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        std::vector<Vertex> v(f.begin(), f.end());
        v.insert(std::upper_bound(v.begin(), v.end(), a), a);
        out.push_back(Simplex::from_sorted(std::move(v)));
    }
    if (out.empty()) out.push_back(Simplex{a});
    return SimplicialComplex(std::move(names), out);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> names;
    std::map<Vertex, Vertex> from_a, from_b;
    std::set<std::string> seen;
    for (auto v : a.vertices()) {
        from_a[v] = static_cast<Vertex>(names.size());
        names.push_back(a.name(v));
        seen.insert(a.name(v));
    }
    for (auto v : b.vertices()) {
        if (seen.count(b.name(v)))
            throw Error(ErrorKind::VertexClash, "join operands share vertex '" + b.name(v) + "'");
        from_b[v] = static_cast<Vertex>(names.size());
        names.push_back(b.name(v));
    }
    auto remap = [](const Simplex& s, const std::map<Vertex, Vertex>& m) {
        std::vector<Vertex> out;
        for (auto v : s) out.push_back(m.at(v));
        return out;
    };
    std::vector<Simplex> out;
    if (a.empty() || b.empty()) {
        for (const auto& f : a.facets()) out.emplace_back(remap(f, from_a));
        for (const auto& f : b.facets()) out.emplace_back(remap(f, from_b));
    } else {
        for (const auto& fa : a.facets()) {
            auto va = remap(fa, from_a);
            for (const auto& fb : b.facets()) {
                auto v = va;
                auto vb = remap(fb, from_b);
                v.insert(v.end(), vb.begin(), vb.end());
                out.emplace_back(std::move(v));
            }
        }
    }
    return SimplicialComplex(std::move(names), out);
}

namespace {

using Adjacency = std::vector<std::vector<bool>>;

Adjacency one_skeleton(const SimplicialComplex& k) {
    const std::size_t n = k.names().size();
    Adjacency adj(n, std::vector<bool>(n, false));
    for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                adj[f[i]][f[j]] = adj[f[j]][f[i]] = true;
    return adj;
}

// Bron–Kerbosch with pivoting; stops at the first maximal clique rejected by `visit`.
bool for_each_maximal_clique(const Adjacency& adj, std::vector<Vertex> r, std::vector<Vertex> p,
                             std::vector<Vertex> x,
                             const std::function<bool(const std::vector<Vertex>&)>& visit) {
    if (p.empty() && x.empty()) return visit(r);
    Vertex pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (const auto& set : {p, x}) {
        for (auto u : set) {
            std::size_t c = 0;
            for (auto w : p) c += adj[u][w] ? 1 : 0;
            if (c >= best) { best = c; pivot = u; }
        }
    }
    std::vector<Vertex> candidates;
    for (auto v : p)
        if (!adj[pivot][v]) candidates.push_back(v);
    for (auto v : candidates) {
        std::vector<Vertex> r2 = r, p2, x2;
        r2.push_back(v);
        for (auto w : p)
            if (adj[v][w]) p2.push_back(w);
        for (auto w : x)
            if (adj[v][w]) x2.push_back(w);
        if (!for_each_maximal_clique(adj, r2, p2, x2, visit)) return false;
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
    return true;
}

}  // namespace

bool is_flag(const SimplicialComplex& k) {
    if (k.empty()) return true;
    const auto adj = one_skeleton(k);
    return for_each_maximal_clique(adj, {}, k.vertices(), {}, [&](const std::vector<Vertex>& c) {
        std::vector<Vertex> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        return k.contains(Simplex::from_sorted(std::move(sorted)));
    });
}

SimplicialComplex octahedralize(const SimplicialComplex& k) {
    std::vector<std::string> names;
    std::map<Vertex, Vertex> plus;
    for (auto v : k.vertices()) {
        plus[v] = static_cast<Vertex>(names.size());
        names.push_back(k.name(v) + "+");
        names.push_back(k.name(v) + "-");
    }
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        const std::size_t n = f.size();
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
            std::vector<Vertex> v;
            for (std::size_t i = 0; i < n; ++i)
                v.push_back(plus.at(f[i]) + ((signs >> i) & 1 ? 1 : 0));
            out.push_back(Simplex::from_sorted(std::move(v)));
        }
    }
    return SimplicialComplex(std::move(names), out);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> subset) {
    std::set<Vertex> keep(subset.begin(), subset.end());
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        std::vector<Vertex> v;
        for (auto x : f)
            if (keep.count(x)) v.push_back(x);
        if (!v.empty()) out.push_back(Simplex::from_sorted(std::move(v)));
    }
    return SimplicialComplex(k.names(), out);
}

bool is_full_subcomplex(const SimplicialComplex& k, std::span<const Vertex> subset) {
    for (auto v : subset)
        if (!std::binary_search(k.vertices().begin(), k.vertices().end(), v))
            throw Error(ErrorKind::InvalidArgument, "subset is not contained in the vertex set");
    return true;
}

namespace {

// Maps every used vertex of `sub` to the vertex of `k` with the same name.
std::optional<std::map<Vertex, Vertex>> match_by_name(const SimplicialComplex& k,
                                                       const SimplicialComplex& sub) {
    std::map<Vertex, Vertex> m;
    for (auto v : sub.vertices()) {
        auto w = k.find(sub.name(v));
        if (!w) return std::nullopt;
        m[v] = *w;
    }
    return m;
}

std::optional<Simplex> translate(const Simplex& s, const std::map<Vertex, Vertex>& m) {
    std::vector<Vertex> v;
    for (auto x : s) v.push_back(m.at(x));
    std::sort(v.begin(), v.end());
    return Simplex::from_sorted(std::move(v));
}

}  // namespace

bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& sub) {
    auto m = match_by_name(k, sub);
    if (!m) return false;
    for (const auto& f : sub.facets())
        if (!k.contains(*translate(f, *m))) return false;
    return true;
}

bool is_full_subcomplex(const SimplicialComplex& k, const SimplicialComplex& sub) {
    if (!is_subcomplex(k, sub)) return false;
    auto m = *match_by_name(k, sub);
    std::vector<Vertex> image;
    for (const auto& [from, to] : m) image.push_back(to);
    std::sort(image.begin(), image.end());
    const auto induced = induced_subcomplex(k, image);
    std::map<Vertex, Vertex> back;
    for (const auto& [from, to] : m) back[to] = from;
    for (const auto& f : induced.facets())
        if (!sub.contains(*translate(f, back))) return false;
    return true;
}

// Isomorphism ------------------------------------------------------------------

namespace {

struct Compact {
    int n = 0;
    std::vector<std::vector<int>> facets;
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> signature;
};

Compact compact(const SimplicialComplex& k) {
    Compact c;
    std::map<Vertex, int> local;
    for (auto v : k.vertices()) local[v] = c.n++;
    c.adj.assign(static_cast<std::size_t>(c.n), std::vector<bool>(static_cast<std::size_t>(c.n)));
    const int top = k.top_dimension();
    c.signature.assign(static_cast<std::size_t>(c.n), std::vector<int>(static_cast<std::size_t>(top + 2), 0));
    for (const auto& f : k.facets()) {
        std::vector<int> lf;
        for (auto v : f) lf.push_back(local.at(v));
        for (std::size_t i = 0; i < lf.size(); ++i) {
            c.signature[lf[i]][static_cast<std::size_t>(f.dimension())]++;
            for (std::size_t j = i + 1; j < lf.size(); ++j) c.adj[lf[i]][lf[j]] = c.adj[lf[j]][lf[i]] = true;
        }
        c.facets.push_back(std::move(lf));
    }
    for (int v = 0; v < c.n; ++v) {
        int deg = 0;
        for (int w = 0; w < c.n; ++w) deg += c.adj[v][w] ? 1 : 0;
        c.signature[v][static_cast<std::size_t>(top + 1)] = deg;
    }
    return c;
}

}  // namespace

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.num_vertices() > kIsomorphismVertexLimit || b.num_vertices() > kIsomorphismVertexLimit)
        throw Error(ErrorKind::TooLarge, "isomorphism search is limited to 24 vertices");
    if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return false;
    if (a.top_dimension() != b.top_dimension()) return false;
    const Compact ca = compact(a), cb = compact(b);
    {
        auto sa = ca.signature, sb = cb.signature;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    const int n = ca.n;
    if (n == 0) return true;
    std::set<std::vector<int>> b_facets;
    for (const auto& f : cb.facets) b_facets.insert(f);

    // Search order: each next vertex has the most already-ordered neighbours.
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int score = 0;
            for (int u : order) score += ca.adj[v][u] ? 1 : 0;
            if (score > best_score) { best = v; best_score = score; }
        }
        placed[best] = true;
        order.push_back(best);
    }
    std::vector<int> step_of(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) step_of[order[i]] = i;
    std::vector<std::vector<const std::vector<int>*>> check_at(static_cast<std::size_t>(n));
    for (const auto& f : ca.facets) {
        int last = 0;
        for (int v : f) last = std::max(last, step_of[v]);
        check_at[last].push_back(&f);
    }

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> extend = [&](int step) -> bool {
        if (step == n) return true;
        const int v = order[step];
        for (int w = 0; w < n; ++w) {
            if (used[w] || ca.signature[v] != cb.signature[w]) continue;
            bool ok = true;
            for (int s = 0; s < step && ok; ++s) {
                const int u = order[s];
                ok = ca.adj[v][u] == cb.adj[w][image[u]];
            }
            if (!ok) continue;
            image[v] = w;
            for (const auto* f : check_at[step]) {
                std::vector<int> img;
                for (int x : *f) img.push_back(image[x]);
                std::sort(img.begin(), img.end());
                if (!b_facets.count(img)) { ok = false; break; }
            }
            if (ok) {
                used[w] = true;
                if (extend(step + 1)) return true;
                used[w] = false;
            }
            image[v] = -1;
        }
        return false;
    };
    return extend(0);
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
    std::vector<Simplex> out;
    for (int d = 0; d <= std::min(dim, k.top_dimension()); ++d)
        for (const auto& s : k.simplices(d)) out.push_back(s);
    return SimplicialComplex(k.names(), out);
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k) {
    std::vector<Vertex> parent(k.names().size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Vertex(Vertex)> root = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& f : k.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            Vertex a = root(f[0]), b = root(f[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<Vertex, std::vector<Vertex>> groups;
    for (auto v : k.vertices()) groups[root(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [r, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const SimplicialComplex& k) { return connected_components(k).size() == 1; }

Simplex parse_simplex(const SimplicialComplex& k, std::string_view text) {
    std::vector<Vertex> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(start, comma - start);
        auto id = k.find(token);
        if (!id) throw Error(ErrorKind::NotASimplex, "unknown vertex '" + std::string(token) + "'");
        v.push_back(*id);
        start = comma + 1;
    }
    return Simplex(std::move(v));
}

std::string simplex_to_string(const SimplicialComplex& k, const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += k.name(s[i]);
    }
    return out + "]";
}

SimplicialComplex parse_complex(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<Simplex> faces;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string tok;
        std::vector<Vertex> face;
        bool first = true;
        while (tokens >> tok) {
            if (first && tok[0] == '#') break;
            first = false;
            auto [it, inserted] = ids.emplace(tok, static_cast<Vertex>(names.size()));
            if (inserted) names.push_back(tok);
            face.push_back(it->second);
        }
        if (face.empty()) continue;
        std::sort(face.begin(), face.end());
        if (std::adjacent_find(face.begin(), face.end()) != face.end())
            throw ParseError(lineno, "repeated vertex in facet");
        faces.push_back(Simplex::from_sorted(std::move(face)));
    }
    return SimplicialComplex(std::move(names), faces);
}

SimplicialComplex parse_complex(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_complex(in);
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_complex(in);
}

std::string format_complex(const SimplicialComplex& k) {
    std::string out;
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += k.name(f[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace actdim
