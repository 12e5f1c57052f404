#include "actdim/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "actdim/error.hpp"

namespace actdim {

CoxeterMatrix::CoxeterMatrix(int rank) {
    if (rank < 1) throw Error(ErrorKind::InvalidArgument, "Coxeter matrix rank must be at least 1");
    entries_ = Eigen::MatrixXi::Constant(rank, rank, 2);
    entries_.diagonal().setOnes();
}

CoxeterMatrix::CoxeterMatrix(Eigen::MatrixXi entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols())
        throw Error(ErrorKind::InvalidArgument, "Coxeter matrix must be square and nonempty");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        if (entries_(i, i) != 1) throw Error(ErrorKind::InvalidArgument, "diagonal entries must be 1");
        for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
            if (i == j) continue;
            if (entries_(i, j) != entries_(j, i))
                throw Error(ErrorKind::InvalidArgument, "Coxeter matrix must be symmetric");
            if (entries_(i, j) < 2)
                throw Error(ErrorKind::InvalidArgument, "off-diagonal labels must be at least 2");
        }
    }
}

CoxeterMatrix& CoxeterMatrix::set(int i, int j, int label) {
    if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
        throw Error(ErrorKind::InvalidArgument, "bad generator pair");
    if (label < 2) throw Error(ErrorKind::InvalidArgument, "off-diagonal labels must be at least 2");
    entries_(i, j) = entries_(j, i) = label;
    return *this;
}

std::vector<DiagramEdge> diagram_edges(const CoxeterMatrix& m) {
    std::vector<DiagramEdge> edges;
    for (int i = 0; i < m.rank(); ++i)
        for (int j = i + 1; j < m.rank(); ++j)
            if (m(i, j) >= 3) edges.push_back({i, j, m(i, j)});
    return edges;
}

std::string CoxeterType::name() const {
    switch (family) {
        case CoxeterFamily::A: return "A" + std::to_string(rank);
        case CoxeterFamily::B: return "B" + std::to_string(rank);
        case CoxeterFamily::D: return "D" + std::to_string(rank);
        case CoxeterFamily::E: return "E" + std::to_string(rank);
        case CoxeterFamily::F: return "F" + std::to_string(rank);
        case CoxeterFamily::H: return "H" + std::to_string(rank);
        case CoxeterFamily::I2: return "I2(" + std::to_string(p) + ")";
        case CoxeterFamily::Infinite: return "Infinite";
    }
    return "Infinite";
}

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::optional<BigInt> CoxeterType::order() const {
    switch (family) {
        case CoxeterFamily::A: return factorial(rank + 1);
        case CoxeterFamily::B: return BigInt(BigInt(1) << rank) * factorial(rank);
        case CoxeterFamily::D: return BigInt(BigInt(1) << (rank - 1)) * factorial(rank);
        case CoxeterFamily::I2: return BigInt(2 * p);
        case CoxeterFamily::H: return rank == 3 ? BigInt(120) : BigInt(14400);
        case CoxeterFamily::F: return BigInt(1152);
        case CoxeterFamily::E:
            if (rank == 6) return BigInt(51840);
            if (rank == 7) return BigInt(2903040);
            return BigInt(696729600);
        case CoxeterFamily::Infinite: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Component> irreducible_components(const CoxeterMatrix& m) {
    const int n = m.rank();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<Component> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members{s}, stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (w != v && comp[w] < 0 && m(v, w) >= 3) {
                    comp[w] = id;
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back({members, parabolic_submatrix(m, members)});
    }
    return out;
}

bool is_irreducible(const CoxeterMatrix& m) { return irreducible_components(m).size() == 1; }

namespace detail {

namespace {

Layout infinite(int n) {
    Layout l;
    l.type = {CoxeterFamily::Infinite, n, 0};
    l.order.resize(static_cast<std::size_t>(n));
    std::iota(l.order.begin(), l.order.end(), 0);
    return l;
}

// Walks a path starting at `start` away from `from`; returns visited vertices.
std::vector<int> walk_arm(const std::vector<std::vector<int>>& nbrs, int from, int start) {
    std::vector<int> arm{start};
    int prev = from, cur = start;
    while (true) {
        int next = -1;
        for (int w : nbrs[cur])
            if (w != prev) next = w;
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    return arm;
}

}  // namespace

Layout classify_layout(const CoxeterMatrix& m) {
    const int n = m.rank();
    if (!is_irreducible(m)) throw Error(ErrorKind::NotIrreducible, "Coxeter diagram is disconnected");
    Layout l = infinite(n);
    if (n == 1) {
        l.type = {CoxeterFamily::A, 1, 0};
        return l;
    }
    if (n == 2) {
        const int p = m(0, 1);
        if (p == kInfinity) return l;
        if (p == 3) l.type = {CoxeterFamily::A, 2, 0};
        else if (p == 4) l.type = {CoxeterFamily::B, 2, 0};
        else l.type = {CoxeterFamily::I2, 2, p};
        return l;
    }

    const auto edges = diagram_edges(m);
    if (static_cast<int>(edges.size()) != n - 1) return l;  // a cycle: never finite
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    std::vector<DiagramEdge> heavy;
    for (const auto& e : edges) {
        if (e.label >= 6) return l;
        if (e.label >= 4) heavy.push_back(e);
        nbrs[e.i].push_back(e.j);
        nbrs[e.j].push_back(e.i);
    }
    if (heavy.size() > 1) return l;
    std::vector<int> branch;
    for (int v = 0; v < n; ++v) {
        if (nbrs[v].size() >= 4) return l;
        if (nbrs[v].size() == 3) branch.push_back(v);
    }
    if (branch.size() > 1) return l;

    if (branch.size() == 1) {
        if (!heavy.empty()) return l;
        const int b = branch.front();
        std::vector<std::vector<int>> arms;
        for (int w : nbrs[b]) arms.push_back(walk_arm(nbrs, b, w));
        std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
            if (x.size() != y.size()) return x.size() < y.size();
            return x.front() < y.front();
        });
        const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
        if (p == 1 && q == 1) {
            l.type = {CoxeterFamily::D, n, 0};
            l.order = {arms[0][0], arms[1][0], b};
            l.order.insert(l.order.end(), arms[2].begin(), arms[2].end());
            return l;
        }
        if (p == 1 && q == 2 && r >= 2 && r <= 4) l.type = {CoxeterFamily::E, n, 0};
        return l;
    }

    // A path. Orient it from an end vertex.
    std::vector<int> ends;
    for (int v = 0; v < n; ++v)
        if (nbrs[v].size() == 1) ends.push_back(v);
    int start = ends.front();
    if (!heavy.empty()) {
        const auto& h = heavy.front();
        if (nbrs[h.i].size() == 1) start = h.i;
        else if (nbrs[h.j].size() == 1) start = h.j;
        else {
            // Heavy edge in the interior: only F4 qualifies.
            if (h.label == 4 && n == 4) l.type = {CoxeterFamily::F, 4, 0};
            return l;
        }
    }
    std::vector<int> path = walk_arm(nbrs, -1, start);
    if (heavy.empty()) {
        l.type = {CoxeterFamily::A, n, 0};
        l.order = path;
    } else if (heavy.front().label == 4) {
        l.type = {CoxeterFamily::B, n, 0};
        l.order = path;
    } else if (n == 3 || n == 4) {
        l.type = {CoxeterFamily::H, n, 0};
    }
    return l;
}

}  // namespace detail

CoxeterType classify_irreducible(const CoxeterMatrix& m) { return detail::classify_layout(m).type; }

std::vector<CoxeterType> classify(const CoxeterMatrix& m) {
    std::vector<CoxeterType> out;
    for (const auto& c : irreducible_components(m)) out.push_back(classify_irreducible(c.matrix));
    return out;
}

bool is_finite(const CoxeterMatrix& m) {
    const auto types = classify(m);
    return std::all_of(types.begin(), types.end(), [](const CoxeterType& t) { return t.is_finite(); });
}

std::optional<BigInt> group_order(const CoxeterMatrix& m) {
    BigInt total = 1;
    for (const auto& t : classify(m)) {
        auto o = t.order();
        if (!o) return std::nullopt;
        total *= *o;
    }
    return total;
}

CoxeterMatrix parabolic_submatrix(const CoxeterMatrix& m, std::span<const int> subset) {
    if (subset.empty()) throw Error(ErrorKind::EmptySubset, "parabolic subgroup needs a generator");
    const auto k = static_cast<Eigen::Index>(subset.size());
    Eigen::MatrixXi sub(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = m(subset[a], subset[b]);
    return CoxeterMatrix(std::move(sub));
}

// Text format ------------------------------------------------------------------

CoxeterMatrix parse_coxeter_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<CoxeterMatrix> m;
    std::set<std::pair<int, int>> seen;
    auto next_line = [&](std::vector<std::string>& tokens) {
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ss(line);
            tokens.clear();
            std::string t;
            while (ss >> t) tokens.push_back(t);
            if (tokens.empty() || tokens.front()[0] == '#') continue;
            return true;
        }
        return false;
    };
    auto parse_int = [&](const std::string& t, const char* what) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            throw ParseError(lineno, std::string("bad ") + what + " '" + t + "'");
        }
        if (pos != t.size()) throw ParseError(lineno, std::string("bad ") + what + " '" + t + "'");
        return v;
    };

    std::vector<std::string> tokens;
    if (!next_line(tokens)) throw ParseError(lineno, "missing 'rank n' header");
    if (tokens.size() != 2 || tokens[0] != "rank") throw ParseError(lineno, "expected 'rank n'");
    const int n = parse_int(tokens[1], "rank");
    if (n < 1) throw ParseError(lineno, "rank must be at least 1");
    m.emplace(n);
    while (next_line(tokens)) {
        if (tokens.size() != 3) throw ParseError(lineno, "expected 'i j m'");
        const int i = parse_int(tokens[0], "index");
        const int j = parse_int(tokens[1], "index");
        if (i < 1 || j < 1 || i > n || j > n) throw ParseError(lineno, "index out of range");
        if (i == j) throw ParseError(lineno, "diagonal entries are fixed to 1");
        int label;
        if (tokens[2] == "inf") label = kInfinity;
        else label = parse_int(tokens[2], "label");
        if (label < 2) throw ParseError(lineno, "label must be at least 2 or 'inf'");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
            throw ParseError(lineno, "duplicate pair " + std::to_string(i) + " " + std::to_string(j));
        m->set(i - 1, j - 1, label);
    }
    return *m;
}

CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_coxeter_matrix(in);
}

CoxeterMatrix read_coxeter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_coxeter_matrix(in);
}

std::string format_coxeter_matrix(const CoxeterMatrix& m) {
    std::string out = "rank " + std::to_string(m.rank()) + "\n";
    for (int i = 0; i < m.rank(); ++i)
        for (int j = i + 1; j < m.rank(); ++j)
            if (m(i, j) != 2)
                out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                       (m(i, j) == kInfinity ? std::string("inf") : std::to_string(m(i, j))) + "\n";
    return out;
}

// Standard matrices --------------------------------------------------------------

namespace {

CoxeterMatrix path_matrix(int n, int first_label) {
    CoxeterMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, 3);
    if (n >= 2) m.set(0, 1, first_label);
    return m;
}

}  // namespace

CoxeterMatrix type_a(int n) { return path_matrix(n, 3); }
CoxeterMatrix type_b(int n) { return path_matrix(n, 4); }
CoxeterMatrix type_h(int n) { return path_matrix(n, 5); }

CoxeterMatrix type_d(int n) {
    CoxeterMatrix m(n);
    for (int i = 0; i + 2 < n; ++i) m.set(i, i + 1, 3);
    m.set(n - 3, n - 1, 3);
    return m;
}

CoxeterMatrix type_e(int n) {
    // Chain 0-2-3-...-(n-1) with vertex 1 attached to 3.
    CoxeterMatrix m(n);
    m.set(0, 2, 3);
    m.set(1, 3, 3);
    for (int i = 2; i + 1 < n; ++i) m.set(i, i + 1, 3);
    return m;
}

CoxeterMatrix type_f4() {
    CoxeterMatrix m(4);
    m.set(0, 1, 3).set(1, 2, 4).set(2, 3, 3);
    return m;
}

CoxeterMatrix type_i2(int p) {
    CoxeterMatrix m(2);
    m.set(0, 1, p);
    return m;
}

CoxeterMatrix direct_sum(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    const int n = a.rank() + b.rank();
    Eigen::MatrixXi e = Eigen::MatrixXi::Constant(n, n, 2);
    e.topLeftCorner(a.rank(), a.rank()) = a.entries();
    e.bottomRightCorner(b.rank(), b.rank()) = b.entries();
    return CoxeterMatrix(std::move(e));
}

CoxeterMatrix permute(const CoxeterMatrix& m, std::span<const int> perm) {
    Eigen::MatrixXi e(m.rank(), m.rank());
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j) e(i, j) = m(perm[i], perm[j]);
    return CoxeterMatrix(std::move(e));
}

}  // namespace actdim
