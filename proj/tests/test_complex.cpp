#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "actdim/complex.hpp"
#include "actdim/error.hpp"
#include "actdim/homology.hpp"
#include "fixtures.hpp"

using namespace actdim;

namespace {

// Euler characteristic straight from the facets: inclusion of every nonempty subset.
long long brute_euler(const SimplicialComplex& k) {
    std::set<std::vector<Vertex>> faces;
    for (const auto& f : k.facets()) {
        const auto n = f.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            faces.insert(s);
        }
    }
    long long chi = 0;
    for (const auto& s : faces) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

// Boundary of the cross-polytope on k+1 axes: one vertex per sign, facets pick a sign per axis.
SimplicialComplex cross_polytope_boundary(int axes) {
    std::vector<std::string> names;
    for (int i = 0; i < axes; ++i) {
        names.push_back("p" + std::to_string(i));
        names.push_back("m" + std::to_string(i));
    }
    std::vector<Simplex> facets;
    for (unsigned signs = 0; signs < (1u << axes); ++signs) {
        std::vector<Vertex> f;
        for (int i = 0; i < axes; ++i) f.push_back(2 * i + ((signs >> i) & 1u));
        facets.emplace_back(f);
    }
    return SimplicialComplex(names, facets);
}

}  // namespace

TEST_CASE("simplex basics") {
    Simplex s{3, 1, 2};
    CHECK(s.dimension() == 2);
    CHECK(s[0] == 1);
    CHECK(Simplex{1, 2}.is_face_of(s));
    CHECK_FALSE(Simplex{0, 2}.is_face_of(s));
    CHECK(s.facet_without(0) == Simplex{2, 3});
    CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), Error);
    CHECK_THROWS_AS((Simplex{1, 1}), Error);
}

TEST_CASE("dimension") {
    CHECK(dimension(standard_simplex(0)) == 0);
    CHECK(dimension(standard_simplex(2)) == 2);
    CHECK(dimension(simplex_boundary(2)) == 2);
    CHECK(simplex_boundary(2).facets().size() == 4);
    try {
        dimension(SimplicialComplex());
        FAIL("expected EmptyComplex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyComplex);
    }
}

TEST_CASE("facets are reduced to an antichain") {
    auto k = fixtures::make(3, {{0, 1, 2}, {0, 1}, {2}});
    CHECK(k.facets().size() == 1);
    CHECK(k.f_vector() == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("link") {
    const auto s2 = simplex_boundary(2);
    const auto lk = link(s2, Simplex{0});
    CHECK(lk.facets().size() == 3);
    CHECK(is_isomorphic(lk, fixtures::cycle(3)));

    const auto tri = standard_simplex(2);
    CHECK(link(tri, Simplex{0, 1, 2}).empty());

    const auto p = fixtures::path(3);
    const auto lb = link(p, Simplex{1});
    CHECK(lb.facets() == std::vector<Simplex>{Simplex{0}, Simplex{2}});

    try {
        link(p, Simplex{0, 2});
        FAIL("expected NotASimplex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASimplex);
    }
}

TEST_CASE("barycentric subdivision") {
    const auto e = barycentric_subdivision(standard_simplex(1));
    CHECK(e.f_vector() == std::vector<std::size_t>{3, 2});
    const auto t = barycentric_subdivision(standard_simplex(2));
    CHECK(t.num_vertices() == 7);
    CHECK(t.facets().size() == 6);
    CHECK(t.name(6) == "[1,2,3]");

    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 7), 4);
        const auto sd = barycentric_subdivision(k);
        CHECK(sd.euler_characteristic() == brute_euler(k));
        CHECK(is_flag(sd));
    }
}

TEST_CASE("cone") {
    const auto two_points = fixtures::make(2, {{0}, {1}});
    CHECK(is_isomorphic(cone(two_points, "x"), fixtures::path(3)));
    const auto disk = cone(fixtures::cycle(3), "x");
    CHECK(disk.euler_characteristic() == 1);
    CHECK(is_acyclic(disk));
    const auto point = cone(SimplicialComplex(), "x");
    CHECK(point.num_vertices() == 1);
    CHECK(dimension(point) == 0);
    try {
        cone(fixtures::path(2), "0");
        FAIL("expected VertexClash");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VertexClash);
    }
}

TEST_CASE("join") {
    const auto a = simplex_complex({"a"});
    const auto b = simplex_complex({"b"});
    CHECK(is_isomorphic(join(a, b), standard_simplex(1)));

    const auto s0a = SimplicialComplex({"a", "b"}, {Simplex{0}, Simplex{1}});
    const auto s0b = SimplicialComplex({"c", "d"}, {Simplex{0}, Simplex{1}});
    CHECK(is_isomorphic(join(s0a, s0b), fixtures::cycle(4)));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto k = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 6), 3);
        CHECK(is_isomorphic(join(simplex_complex({"apex"}), k), cone(k, "apex")));
    }
    try {
        join(a, a);
        FAIL("expected VertexClash");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VertexClash);
    }
}

TEST_CASE("flagness") {
    CHECK(is_flag(fixtures::cycle(3)) == false);  // the 3-clique spans no triangle
    CHECK(is_flag(fixtures::cycle(4)));
    CHECK_FALSE(is_flag(simplex_boundary(2)));
    for (int n = 0; n <= 4; ++n) CHECK(is_flag(standard_simplex(n)));
}

TEST_CASE("octahedralization") {
    CHECK(octahedralize(standard_simplex(0)).facets().size() == 2);
    CHECK(is_isomorphic(octahedralize(standard_simplex(1)), fixtures::cycle(4)));
    for (int k = 0; k <= 3; ++k) CHECK(is_isomorphic(octahedralize(standard_simplex(k)), cross_polytope_boundary(k + 1)));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 3), 3, "a");
        const auto b = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 3), 3, "b");
        CHECK(is_isomorphic(octahedralize(join(a, b)), join(octahedralize(a), octahedralize(b))));
    }
}

TEST_CASE("full subcomplexes") {
    const auto tri = standard_simplex(2);
    const std::vector<Vertex> one{0};
    CHECK(is_full_subcomplex(tri, one));
    CHECK_FALSE(is_full_subcomplex(tri, simplex_boundary(1)));
    const auto points = fixtures::make(3, {{0}, {1}, {2}});
    const std::vector<Vertex> pair{0, 2};
    CHECK(is_full_subcomplex(points, pair));
    const std::vector<Vertex> outside{5};
    CHECK_THROWS_AS(is_full_subcomplex(points, outside), Error);

    const auto p = fixtures::path(3);
    const auto edge = fixtures::make(2, {{0, 1}});
    CHECK(is_full_subcomplex(p, edge));
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(fixtures::cycle(4), join(SimplicialComplex({"a", "b"}, {Simplex{0}, Simplex{1}}),
                                                 SimplicialComplex({"c", "d"}, {Simplex{0}, Simplex{1}}))));
    CHECK_FALSE(is_isomorphic(fixtures::path(3), fixtures::cycle(3)));
    CHECK_FALSE(is_isomorphic(fixtures::cycle(6), join(fixtures::make(2, {{0}, {1}}), fixtures::make(3, {{0}, {1}, {2}}, 5))));
    try {
        is_isomorphic(fixtures::path(25), fixtures::path(25));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("connected components") {
    const auto k = fixtures::make(5, {{0, 3}, {1, 2}, {4}});
    const auto comps = connected_components(k);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 3});
    CHECK(comps[1] == std::vector<Vertex>{1, 2});
    CHECK_FALSE(is_connected(k));
}

TEST_CASE("text round trip") {
    const auto k = parse_complex("# comment\na b c\nc d\n\ne\n");
    CHECK(k.names() == std::vector<std::string>{"a", "b", "c", "d", "e"});
    CHECK(k.facets().size() == 3);
    const auto again = parse_complex(format_complex(k));
    CHECK(again.facets() == k.facets());
    CHECK(simplex_to_string(k, parse_simplex(k, "c,a")) == "[a,c]");
    try {
        parse_complex("a b\nb b\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_simplex(k, "a,z"), Error);
}
