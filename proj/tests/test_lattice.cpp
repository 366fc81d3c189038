#include "doctest.h"

#include "coxhodge/errors.hpp"
#include "coxhodge/lattice_points.hpp"
#include "coxhodge/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace coxhodge;

namespace {

ZMat make_z(std::initializer_list<std::initializer_list<long>> rows) {
    ZMat m(static_cast<long>(rows.size()),
           rows.size() ? static_cast<long>(rows.begin()->size()) : 0);
    long i = 0;
    for (const auto& r : rows) {
        long j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

QMat make_q(std::initializer_list<std::initializer_list<long>> rows) {
    QMat m(static_cast<long>(rows.size()),
           rows.size() ? static_cast<long>(rows.begin()->size()) : 0);
    long i = 0;
    for (const auto& r : rows) {
        long j = 0;
        for (long v : r) m(i, j++) = mpq_class(v);
        ++i;
    }
    return m;
}

std::vector<mpz_class> zvec(std::initializer_list<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("smith normal form on known matrices") {
    auto s = smith_normal_form(make_z({{2, 0}, {0, 3}}));
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 6);
    CHECK(s.rank == 2);

    auto id = smith_normal_form(make_z({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.diag[0] == 1);
    CHECK(id.diag[1] == 1);
    CHECK(id.diag[2] == 1);

    auto t = smith_normal_form(make_z({{1, 0}, {1, 2}}));
    CHECK(t.diag[0] == 1);
    CHECK(t.diag[1] == 2);

    auto z = smith_normal_form(make_z({{0, 0}, {0, 0}}));
    CHECK(z.rank == 0);
    CHECK(z.diag[0] == 0);
    CHECK(z.diag[1] == 0);
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        long r = dim(rng), c = dim(rng);
        ZMat m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) m(i, j) = entry(rng);
        auto s = smith_normal_form(m); // internal check verifies U*m*V = diag
        for (size_t k = 0; k + 1 < s.diag.size(); ++k) {
            if (s.diag[k + 1] == 0) continue;
            REQUIRE(s.diag[k] != 0);
            CHECK(s.diag[k + 1] % s.diag[k] == 0);
        }
        QMat uq(r, r), vq(c, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) uq(i, j) = mpq_class(s.U(i, j));
        for (long i = 0; i < c; ++i)
            for (long j = 0; j < c; ++j) vq(i, j) = mpq_class(s.V(i, j));
        CHECK(abs(det_q(uq)) == 1);
        CHECK(abs(det_q(vq)) == 1);
    }
}

TEST_CASE("hermite form and reduction mod row lattice") {
    auto h = row_hermite_form(make_z({{2, 4}, {0, 3}}));
    REQUIRE(h.pivotCols.size() == 2);
    CHECK(h.basis(0, 0) == 2);
    CHECK(h.basis(1, 1) == 3);
    CHECK(h.basis(0, 1) >= 0);
    CHECK(h.basis(0, 1) < 3);

    // canonical form is unique: reducing any lattice translate gives the same answer
    auto v1 = reduce_mod_row_lattice(h, zvec({7, 5}));
    auto v2 = reduce_mod_row_lattice(h, zvec({7 + 2, 5 + 4}));
    auto v3 = reduce_mod_row_lattice(h, zvec({7, 5 + 3}));
    CHECK(v1 == v2);
    CHECK(v1 == v3);
    CHECK(v1[0] >= 0);
    CHECK(v1[0] < 2);
    CHECK(v1[1] >= 0);
    CHECK(v1[1] < 3);
}

TEST_CASE("rational rank, kernel, solve, determinant") {
    QMat a = make_q({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rational_rank(a) == 2);

    QMat k = rational_kernel(a);
    REQUIRE(k.cols() == 1);
    for (long i = 0; i < a.rows(); ++i) {
        mpq_class s = 0;
        for (long j = 0; j < 3; ++j) s += a(i, j) * k(j, 0);
        CHECK(s == 0);
    }

    QVec b(3);
    b(0) = 6; b(1) = 12; b(2) = 2;
    auto x = solve_rational(a, b);
    REQUIRE(x.has_value());
    for (long i = 0; i < 3; ++i) {
        mpq_class s = 0;
        for (long j = 0; j < 3; ++j) s += a(i, j) * (*x)(j);
        CHECK(s == b(i));
    }

    QVec bad(3);
    bad(0) = 1; bad(1) = 0; bad(2) = 0; // contradicts row2 = 2*row1
    CHECK(!solve_rational(a, bad).has_value());

    CHECK(det_q(make_q({{2, 1}, {1, 1}})) == 1);
    CHECK(det_q(make_q({{0, 1}, {1, 0}})) == -1);
    CHECK(det_q(a) == 0);
}

TEST_CASE("rank plus nullity equals column count on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        long r = dim(rng), c = dim(rng);
        QMat m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) m(i, j) = mpq_class(entry(rng));
        CHECK(rational_rank(m) + rational_kernel(m).cols() == c);
    }
}

TEST_CASE("integer kernel is saturated") {
    // kernel of (2 4) over Z must be generated by (2,-1), not (4,-2)
    ZMat k = integer_kernel(make_z({{2, 4}}));
    REQUIRE(k.cols() == 1);
    mpz_class g = gcd(k(0, 0), k(1, 0));
    CHECK(abs(g) == 1);
    CHECK(2 * k(0, 0) + 4 * k(1, 0) == 0);
}

TEST_CASE("complete_to_unimodular extends saturated rows") {
    ZMat rows = make_z({{1, 2, 3}});
    ZMat w = complete_to_unimodular(rows);
    QMat q(3, 3);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) q(i, j) = mpq_class(w(i, j));
    CHECK(det_q(q) == 1);
    // the first row must span the same rank-1 saturated lattice
    ZMat both(2, 3);
    for (long j = 0; j < 3; ++j) { both(0, j) = rows(0, j); both(1, j) = w(0, j); }
    CHECK(smith_normal_form(both).rank == 1);

    CHECK_THROWS_AS(complete_to_unimodular(make_z({{2, 4}})), std::logic_error);
}

TEST_CASE("linear programming basics") {
    // maximize x+y st x+y+s = 4, x<=3 (x + t = 3), all vars >= 0
    QMat a = make_q({{1, 1, 1, 0}, {1, 0, 0, 1}});
    QVec b(2); b(0) = 4; b(1) = 3;
    QVec c(4); c(0) = 1; c(1) = 1; c(2) = 0; c(3) = 0;
    LPResult r = lp_solve(a, b, c);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 4);

    // infeasible: x + y = -1 with x,y >= 0
    QMat a2 = make_q({{1, 1}});
    QVec b2(1); b2(0) = -1;
    QVec c2(2); c2(0) = 0; c2(1) = 0;
    CHECK(lp_solve(a2, b2, c2).status == LPStatus::Infeasible);

    // unbounded: maximize x with x - y = 0
    QMat a3 = make_q({{1, -1}});
    QVec b3(1); b3(0) = 0;
    QVec c3(2); c3(0) = 1; c3(1) = 0;
    CHECK(lp_solve(a3, b3, c3).status == LPStatus::Unbounded);
}

TEST_CASE("cone membership") {
    std::vector<LatticeVector> quadrant = {{1, 0}, {0, 1}};
    CHECK(cone_contains(quadrant, LatticeVector{2, 3}));
    CHECK(cone_contains(quadrant, LatticeVector{0, 0}));
    CHECK(!cone_contains(quadrant, LatticeVector{-1, 0}));

    std::vector<LatticeVector> halfplane = {{1, 0}, {-1, 0}, {0, 1}};
    CHECK(cone_contains(halfplane, LatticeVector{-5, 2}));
    CHECK(!cone_contains(halfplane, LatticeVector{0, -1}));
}

TEST_CASE("exposing normals certify faces") {
    std::vector<LatticeVector> gens = {{1, 0}, {0, 1}};
    auto u = exposing_normal(gens, {0}); // face spanned by (1,0)
    REQUIRE(u.has_value());
    CHECK((*u)(0) == 0);
    CHECK((*u)(1) > 0);
    // the diagonal of the quadrant is not a face
    std::vector<LatticeVector> gens2 = {{1, 0}, {0, 1}, {1, 1}};
    CHECK(!exposing_normal(gens2, {2}).has_value());
}

TEST_CASE("max barycentric coefficient detects the smallest face") {
    std::vector<LatticeVector> gens = {{1, 0}, {0, 1}};
    QVec p(2);
    p(0) = 3; p(1) = 0;
    CHECK(max_barycentric_coefficient(gens, p, 0) == 3);
    CHECK(max_barycentric_coefficient(gens, p, 1) == 0);
}

TEST_CASE("lattice points of a triangle") {
    // m1 >= -1, m2 >= -1, -m1 - m2 >= -1: triangle with 10 lattice points
    ZMat a = make_z({{1, 0}, {0, 1}, {-1, -1}});
    auto pts = lattice_points(a, zvec({-1, -1, -1}));
    CHECK(pts.size() == 10);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::count(pts.begin(), pts.end(), LatticeVector{0, 0}) == 1);
    CHECK(std::count(pts.begin(), pts.end(), LatticeVector{-1, 2}) == 1);
    CHECK(std::count(pts.begin(), pts.end(), LatticeVector{2, 2}) == 0);
}

TEST_CASE("lattice points of empty and degenerate regions") {
    // x >= 1 and -x >= 0 is empty
    ZMat a = make_z({{1}, {-1}});
    CHECK(lattice_points(a, zvec({1, 0})).empty());

    // x >= 0, -x >= 0, y >= 0, -y >= 0: single point
    ZMat b = make_z({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    auto pts = lattice_points(b, zvec({0, 0, 0, 0}));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == LatticeVector({0, 0}));

    // rational-only region: 2x >= 1 and -2x >= -1 has no integer points
    ZMat c = make_z({{2}, {-2}});
    CHECK(lattice_points(c, zvec({1, -1})).empty());
}

TEST_CASE("unbounded regions are rejected") {
    ZMat a = make_z({{1, 0}, {0, 1}}); // positive quadrant
    try {
        lattice_points(a, zvec({0, 0}));
        FAIL("expected MathError");
    } catch (const MathError& e) {
        CHECK(e.kind == "UnboundedRegion");
    }
    // a bounded slice of the same cone is fine
    ZMat b = make_z({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(lattice_points(b, zvec({0, 0, -2, -2})).size() == 9);
}

TEST_CASE("standard simplex points are closed under coordinate permutation") {
    // x,y,z >= 0, x+y+z <= 3
    ZMat a = make_z({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    auto pts = lattice_points(a, zvec({0, 0, 0, -3}));
    CHECK(pts.size() == 20);
    std::set<LatticeVector> s(pts.begin(), pts.end());
    for (const auto& p : pts) {
        LatticeVector q = {p[1], p[2], p[0]};
        LatticeVector r = {p[1], p[0], p[2]};
        CHECK(s.count(q) == 1);
        CHECK(s.count(r) == 1);
    }
}

TEST_CASE("zero-dimensional lattice has exactly the origin") {
    ZMat a(0, 0);
    auto pts = lattice_points(a, {});
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].empty());
}
