#include <catch_amalgamated.hpp>

#include <random>

#include "actdim/complex.hpp"
#include "actdim/error.hpp"
#include "actdim/homology.hpp"
#include "actdim/smith.hpp"
#include "fixtures.hpp"

using namespace actdim;

namespace {

AbelianGroup group(std::size_t betti, std::vector<int> torsion = {}) {
    AbelianGroup g;
    g.betti = betti;
    for (int t : torsion) g.torsion.emplace_back(t);
    return g;
}

// Rank over ℚ by fraction-free elimination.
std::size_t rational_rank(const DenseMatrix<std::int64_t>& a) {
    DenseMatrix<BigInt> m = a.cast<BigInt>();
    std::size_t rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index c = 0; c < m.cols() && row < m.rows(); ++c) {
        Eigen::Index p = row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.row(row).swap(m.row(p));
        for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const BigInt f = m(i, c), g = m(row, c);
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * g - m(row, j) * f;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("boundary matrices") {
    const auto e = standard_simplex(1);
    const auto d1 = boundary_matrix(e, 1);
    REQUIRE(d1.rows() == 2);
    REQUIRE(d1.cols() == 1);
    CHECK(d1(0, 0) == -1);
    CHECK(d1(1, 0) == 1);

    const auto c3 = boundary_matrix(fixtures::cycle(3), 1);
    CHECK(c3.rows() == 3);
    CHECK(c3.cols() == 3);
    CHECK(c3.colwise().sum().isZero());

    const auto t = standard_simplex(2);
    CHECK((boundary_matrix(t, 1) * boundary_matrix(t, 2)).isZero());
}

TEST_CASE("smith normal form") {
    const auto id = smith_normal_form<std::int64_t>(DenseMatrix<std::int64_t>::Identity(3, 3));
    CHECK(id.factors == std::vector<std::int64_t>{1, 1, 1});
    DenseMatrix<std::int64_t> d(2, 2);
    d << 2, 0, 0, 3;
    CHECK(smith_normal_form<std::int64_t>(d).factors == std::vector<std::int64_t>{1, 6});
    const auto z = smith_normal_form<std::int64_t>(DenseMatrix<std::int64_t>::Zero(3, 4));
    CHECK(z.rank == 0);
    CHECK(z.factors.empty());

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = 1 + static_cast<Eigen::Index>(rng() % 6);
        const auto cols = 1 + static_cast<Eigen::Index>(rng() % 6);
        DenseMatrix<std::int64_t> a(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = entry(rng);
        const auto s = smith_normal_form<std::int64_t>(a, true);
        DenseMatrix<std::int64_t> diag = DenseMatrix<std::int64_t>::Zero(rows, cols);
        for (std::size_t i = 0; i < s.rank; ++i) diag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = s.factors[i];
        CHECK((*s.left) * a * (*s.right) == diag);
        for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.factors[i + 1] % s.factors[i] == 0);
        CHECK(s.rank == rational_rank(a));
        const auto big = smith_normal_form<BigInt>(a.cast<BigInt>());
        REQUIRE(big.rank == s.rank);
        for (std::size_t i = 0; i < s.rank; ++i) CHECK(big.factors[i] == BigInt(s.factors[i]));
    }
}

TEST_CASE("int64 overflow falls back to big integers") {
    const std::int64_t x = 4611686018427387903LL;
    DenseMatrix<std::int64_t> a(2, 2);
    a << x, 2, 3, x;
    const auto g = cokernel(a);
    CHECK(g.betti == 0);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == BigInt(x) * BigInt(x) - 6);
}

TEST_CASE("spheres and standard examples") {
    for (int k = 0; k <= 4; ++k) {
        const auto s = simplex_boundary(k);
        CHECK(homology(s, k) == group(k == 0 ? 2 : 1));
        CHECK(homology(s, k, true) == group(1));
        if (k > 0) CHECK(homology(s, 0) == group(1));
        for (int j = 1; j < k; ++j) CHECK(homology(s, j).trivial());
    }
    CHECK(cohomology(simplex_boundary(2), 1).trivial());
    CHECK(homology(standard_simplex(0), 0) == group(1));

    const auto rp = fixtures::rp2();
    CHECK(homology(rp, 1) == group(0, {2}));
    CHECK(homology(rp, 2).trivial());
    CHECK(cohomology(rp, 2) == group(0, {2}));
    CHECK(cohomology(rp, 1).trivial());

    const auto t = fixtures::torus7();
    CHECK(homology(t, 1) == group(2));
    CHECK(homology(t, 2) == group(1));
    CHECK(t.euler_characteristic() == 0);
}

TEST_CASE("reduced and out of range degrees") {
    const auto two = fixtures::make(2, {{0}, {1}});
    CHECK(homology(two, 0) == group(2));
    CHECK(homology(two, 0, true) == group(1));
    CHECK(cohomology(two, 0, true) == group(1));
    CHECK(homology(standard_simplex(0), 0, true).trivial());
    try {
        homology(two, 1);
        FAIL("expected DimensionOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionOutOfRange);
    }
    CHECK_THROWS_AS(homology(two, -1), Error);
}

TEST_CASE("mod p betti numbers") {
    const auto rp = fixtures::rp2();
    CHECK(homology_mod_p(rp, 1, 2) == 1);
    CHECK(homology_mod_p(rp, 1, 3) == 0);
    CHECK(homology_mod_p(rp, 2, 2) == 1);
    CHECK(homology_mod_p(fixtures::cycle(5), 1, 2) == 1);
    try {
        homology_mod_p(rp, 1, 4);
        FAIL("expected NotPrime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrime);
    }
}

TEST_CASE("first betti number and top cohomology") {
    CHECK(h1_rank(fixtures::path(5)) == 0);
    const auto theta = fixtures::make(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 2}});
    CHECK(h1_rank(theta) == 2);
    CHECK(h1_rank(fixtures::cycle(4)) == 1);
    CHECK(is_top_cohomology_trivial(fixtures::path(4)));
    CHECK_FALSE(is_top_cohomology_trivial(simplex_boundary(2)));
    CHECK_FALSE(is_top_cohomology_trivial(fixtures::rp2()));
    CHECK(is_top_cohomology_trivial(standard_simplex(0)));
    CHECK_FALSE(is_top_cohomology_trivial(fixtures::make(2, {{0}, {1}})));
}

TEST_CASE("chain complex identities on random complexes") {
    std::mt19937 rng(500);
    for (int trial = 0; trial < 150; ++trial) {
        const auto k = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 8), 5);
        const int d = dimension(k);
        for (int i = 1; i < d; ++i) CHECK((boundary_matrix(k, i) * boundary_matrix(k, i + 1)).isZero());

        long long alt = 0;
        for (int i = 0; i <= d; ++i) {
            const auto h = homology(k, i);
            const auto c = cohomology(k, i);
            alt += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti);
            CHECK(c.betti == h.betti);
            if (i > 0) CHECK(c.torsion == homology(k, i - 1).torsion);
            for (int p : {2, 3}) {
                std::size_t expect = h.betti;
                for (const auto& t : h.torsion) expect += (t % p == 0);
                if (i > 0)
                    for (const auto& t : homology(k, i - 1).torsion) expect += (t % p == 0);
                CHECK(homology_mod_p(k, i, p) == expect);
            }
        }
        CHECK(alt == k.euler_characteristic());
        CHECK(is_acyclic(cone(k, "apex")));
    }
}

TEST_CASE("cycles and boundaries") {
    const auto c = fixtures::cycle(4);
    const auto basis = cycle_basis(c, 1);
    REQUIRE(basis.cols() == 1);
    CHECK((boundary_matrix(c, 1) * basis).isZero());
    CHECK_FALSE(is_boundary(c, 1, basis.col(0)));
    const auto disk = cone(c, "x");
    const auto z = cycle_basis(disk, 1);
    for (Eigen::Index j = 0; j < z.cols(); ++j) CHECK(is_boundary(disk, 1, z.col(j)));
}
