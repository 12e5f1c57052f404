#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace actdim {

using Vertex = std::int32_t;

/// Nonempty, strictly increasing vertex list. The increasing order is the
/// orientation used by the boundary maps.
class Simplex {
public:
    Simplex() = default;
    /// Sorts the input; throws InvalidArgument on duplicates or an empty list.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    /// No validation; `sorted` must already be strictly increasing.
    static Simplex from_sorted(std::vector<Vertex> sorted);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    std::span<const Vertex> vertices() const { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(Vertex v) const;
    /// True when every vertex of this simplex is a vertex of `other`.
    bool is_face_of(const Simplex& other) const;
    /// This simplex with its i-th vertex removed (the i-th boundary face).
    Simplex facet_without(std::size_t i) const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<Vertex> vertices_;
};

/// Finite abstract simplicial complex stored by its facets.
///
/// Vertices are integer ids into a name table; ids give the total vertex
/// order. The name table may carry ids that no facet uses (links and
/// subcomplexes keep the parent's table). The face closure and per-dimension
/// simplex index are materialized on first use and shared between copies.
class SimplicialComplex {
public:
    /// The empty complex.
    SimplicialComplex();

    /// Builds a complex from arbitrary simplices; non-maximal ones are dropped.
    SimplicialComplex(std::vector<std::string> names, const std::vector<Simplex>& simplices);

    const std::vector<std::string>& names() const { return *names_; }
    const std::string& name(Vertex v) const { return (*names_)[static_cast<std::size_t>(v)]; }
    std::optional<Vertex> find(std::string_view name) const;

    /// Maximal simplices in increasing order.
    const std::vector<Simplex>& facets() const { return facets_; }
    /// Vertices used by some facet, increasing.
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    bool empty() const { return facets_.empty(); }

    /// -1 for the empty complex.
    int top_dimension() const;
    bool contains(const Simplex& s) const;

    /// All k-simplices in increasing order; empty when k is out of range.
    const std::vector<Simplex>& simplices(int k) const;
    /// Position of `s` in simplices(s.dimension()).
    std::optional<std::size_t> index_of(const Simplex& s) const;
    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

private:
    struct FaceIndex;
    const FaceIndex& face_index() const;

    std::shared_ptr<const std::vector<std::string>> names_;
    std::vector<Simplex> facets_;
    std::vector<Vertex> vertices_;
    std::shared_ptr<FaceIndex> index_;
};

// Constructions ------------------------------------------------------------

/// Full simplex on the given vertex names.
SimplicialComplex simplex_complex(std::vector<std::string> names);
/// Full simplex on vertices named 1..n+1 (dimension n).
SimplicialComplex standard_simplex(int n);
/// Boundary of the standard (n+1)-simplex, an n-sphere.
SimplicialComplex simplex_boundary(int n);

/// Maximal facet dimension; throws EmptyComplex.
int dimension(const SimplicialComplex& k);

/// Simplices t disjoint from s with t ∪ s in K. Throws NotASimplex.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);

/// Order complex of the face poset. Vertex i corresponds to the i-th simplex
/// of K in (dimension, lexicographic) order and is named "[a,b,...]".
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Cone with a new apex vertex; throws VertexClash when the name is in use.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

/// Join over disjoint vertex names; throws VertexClash otherwise. Used
/// vertices of `a` come first in the result's vertex order.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

bool is_flag(const SimplicialComplex& k);

/// Vertex set V × {±1}; vertex (v, +1) is named "v+" and precedes "v-".
SimplicialComplex octahedralize(const SimplicialComplex& k);

/// Subcomplex of all simplices with vertices in `subset`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> subset);

/// A vertex subset of K always spans a full (induced) subcomplex; throws
/// InvalidArgument when `subset` is not contained in the vertex set.
bool is_full_subcomplex(const SimplicialComplex& k, std::span<const Vertex> subset);

/// True when `sub` (matched to `k` by vertex names) is a subcomplex of `k`
/// and every simplex of `k` spanned by vertices of `sub` already lies in `sub`.
bool is_full_subcomplex(const SimplicialComplex& k, const SimplicialComplex& sub);

/// True when every simplex of `sub` is a simplex of `k` (matched by names).
bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& sub);

/// Vertex bijection carrying facets onto facets. Throws TooLarge above 24 vertices.
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

inline constexpr std::size_t kIsomorphismVertexLimit = 24;

SimplicialComplex skeleton(const SimplicialComplex& k, int dim);

/// Connected components as increasing vertex lists, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k);
bool is_connected(const SimplicialComplex& k);

/// Resolves comma separated vertex names ("a,b,c") to a simplex of K's table.
Simplex parse_simplex(const SimplicialComplex& k, std::string_view text);

std::string simplex_to_string(const SimplicialComplex& k, const Simplex& s);

// Text format: one facet per line, whitespace separated vertex names, lines
// starting with '#' ignored. Vertex order is order of first appearance.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex read_complex_file(const std::string& path);
std::string format_complex(const SimplicialComplex& k);

}  // namespace actdim
