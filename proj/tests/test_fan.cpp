#include "doctest.h"

#include "coxhodge/errors.hpp"
#include "coxhodge/fan.hpp"
#include "fixtures.hpp"

#include <random>

using namespace coxhodge;

namespace {

void check_kind(const char* kind, const std::function<void()>& op) {
    try {
        op();
        FAIL("expected MathError ", kind);
    } catch (const MathError& e) {
        CHECK(e.kind == kind);
    }
}

// the generator relation satisfied by every interior ray of an ordered 2-cone
void check_euler_relations(const Fan& f, const SigmaOrdering& ord) {
    const auto& idx = ord.rayIndices;
    for (size_t k = 1; k + 1 < idx.size(); ++k) {
        const auto& prev = f.rays[static_cast<size_t>(idx[k - 1])];
        const auto& cur = f.rays[static_cast<size_t>(idx[k])];
        const auto& next = f.rays[static_cast<size_t>(idx[k + 1])];
        mpz_class mPrev = ord.subMults[k - 1]; // mult(cone(prev, cur))
        mpz_class mNext = ord.subMults[k];     // mult(cone(cur, next))
        mpz_class mWide = mult({prev, next});
        for (size_t j = 0; j < cur.size(); ++j) {
            mpz_class lhs = mNext * static_cast<long>(prev[j]) + mPrev * static_cast<long>(next[j]);
            CHECK(lhs == mWide * static_cast<long>(cur[j]));
        }
    }
}

} // namespace

TEST_CASE("standard fans validate as complete and simplicial") {
    for (const Fan& f : {fixtures::p2(), fixtures::p1xp1(), fixtures::blowup_p2(),
                         fixtures::weighted_p112(), fixtures::ladder(), fixtures::p3(),
                         fixtures::p4(), fixtures::octic(), fixtures::p12333()}) {
        FanReport rep = validate(f);
        CHECK(rep.simplicial);
        CHECK(rep.complete);
    }
}

TEST_CASE("validation flags structural defects") {
    Fan missing = fixtures::p2();
    missing.maxCones.pop_back(); // rays all still used by the two remaining cones
    FanReport rep = validate(missing);
    CHECK(rep.simplicial);
    CHECK(!rep.complete);

    Fan nonPrim = fixtures::p2();
    nonPrim.rays[0] = {2, 0};
    check_kind("MalformedFan", [&] { validate(nonPrim); });

    Fan dup = fixtures::p2();
    dup.rays[2] = {1, 0};
    check_kind("MalformedFan", [&] { validate(dup); });

    // cone(e1,e2) and cone(e1,(1,1)) overlap without a common face
    Fan overlap;
    overlap.dim = 2;
    overlap.rays = {{1, 0}, {0, 1}, {1, 1}};
    overlap.maxCones = {{0, 1}, {0, 2}};
    check_kind("MalformedFan", [&] { validate(overlap); });

    // (1,1) is interior to cone(e1,e2): redundant generator
    Fan redundant;
    redundant.dim = 2;
    redundant.rays = {{1, 0}, {0, 1}, {1, 1}};
    redundant.maxCones = {{0, 1, 2}};
    check_kind("MalformedFan", [&] { validate(redundant); });

    // opposite rays in one cone: not strongly convex
    Fan halfplane;
    halfplane.dim = 2;
    halfplane.rays = {{1, 0}, {-1, 0}, {0, 1}};
    halfplane.maxCones = {{0, 1, 2}};
    check_kind("MalformedFan", [&] { validate(halfplane); });
}

TEST_CASE("cone multiplicities") {
    CHECK(mult({{1, 0}, {0, 1}}) == 1);
    CHECK(mult({{1, 0}, {1, 2}}) == 2);
    CHECK(mult({{0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(mult({{-1, -2, -2, -2}, {1, 0, 0, 0}}) == 2);   // the octic's singular edge
    CHECK(mult({{-2, -3, -3, -3}, {1, 0, 0, 0}}) == 3);
    CHECK(mult(std::vector<LatticeVector>{{5, 3}}) == 1); // primitive single ray
    check_kind("NonSimplicialCone", [] { mult({{1, 0}, {2, 0}}); });
}

TEST_CASE("rank-2 multiplicity equals the absolute determinant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-7, 7);
    int done = 0;
    while (done < 50) {
        LatticeVector u = {entry(rng), entry(rng)}, v = {entry(rng), entry(rng)};
        mpz_class det = mpz_class(static_cast<long>(u[0])) * static_cast<long>(v[1]) -
                        mpz_class(static_cast<long>(u[1])) * static_cast<long>(v[0]);
        if (det == 0 || (u[0] == 0 && u[1] == 0) || (v[0] == 0 && v[1] == 0)) continue;
        if (primitive(u) != u || primitive(v) != v) continue;
        CHECK(mult({u, v}) == abs(det));
        ++done;
    }
}

TEST_CASE("ordering the rays of a 2-cone: single interior ray") {
    Fan f = fixtures::blowup_p2();
    SigmaOrdering ord = order_rays_in_2cone(f, {1, 0}, {0, 1});
    REQUIRE(ord.rayIndices.size() == 3);
    CHECK(ord.interiorCount() == 1);
    CHECK(f.rays[static_cast<size_t>(ord.rayIndices[0])] == LatticeVector({1, 0}));
    CHECK(f.rays[static_cast<size_t>(ord.rayIndices[1])] == LatticeVector({1, 1}));
    CHECK(f.rays[static_cast<size_t>(ord.rayIndices[2])] == LatticeVector({0, 1}));
    CHECK(ord.subMults == std::vector<mpz_class>{1, 1});
    CHECK(ord.coneMult == 1);
    check_euler_relations(f, ord);
}

TEST_CASE("ordering with no interior rays") {
    Fan f = fixtures::p2();
    SigmaOrdering ord = order_rays_in_2cone(f, {1, 0}, {0, 1});
    CHECK(ord.interiorCount() == 0);
    CHECK(ord.subMults.size() == 1);
    CHECK(ord.subMults[0] == ord.coneMult);
}

TEST_CASE("ordering a chain of interior rays") {
    Fan f = fixtures::ladder();
    SigmaOrdering ord = order_rays_in_2cone(f, {1, 0}, {1, 4});
    REQUIRE(ord.rayIndices.size() == 5);
    CHECK(ord.interiorCount() == 3);
    // monotone walk from one boundary to the other
    std::vector<LatticeVector> expect = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}};
    std::vector<LatticeVector> got;
    for (int i : ord.rayIndices) got.push_back(f.rays[static_cast<size_t>(i)]);
    if (got.front() != expect.front()) std::reverse(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(ord.subMults == std::vector<mpz_class>({1, 1, 1, 1}));
    CHECK(ord.coneMult == 4);
    check_euler_relations(f, ord);
}

TEST_CASE("ordering is independent of the boundary argument order") {
    Fan f = fixtures::ladder();
    SigmaOrdering a = order_rays_in_2cone(f, {1, 0}, {1, 4});
    SigmaOrdering b = order_rays_in_2cone(f, {1, 4}, {1, 0});
    CHECK(a.rayIndices == b.rayIndices);
    CHECK(a.subMults == b.subMults);
    CHECK(a.reversed == b.reversed);
}

TEST_CASE("ordering inside the singular edges of the weighted fans") {
    Fan oct = fixtures::octic();
    SigmaOrdering ord = order_rays_in_2cone(oct, {1, 0, 0, 0}, {-1, -2, -2, -2});
    CHECK(ord.interiorCount() == 1);
    CHECK(oct.rays[static_cast<size_t>(ord.rayIndices[1])] == LatticeVector({0, -1, -1, -1}));
    CHECK(ord.subMults == std::vector<mpz_class>({1, 1}));
    CHECK(ord.coneMult == 2);
    check_euler_relations(oct, ord);

    Fan w = fixtures::p12333();
    SigmaOrdering ord2 = order_rays_in_2cone(w, {-2, -3, -3, -3}, {1, 0, 0, 0});
    CHECK(ord2.interiorCount() == 2);
    CHECK(ord2.subMults == std::vector<mpz_class>({1, 1, 1}));
    CHECK(ord2.coneMult == 3);
    check_euler_relations(w, ord2);
    // the interior walk visits w1 then w2 (or the reverse, consistently)
    LatticeVector first = w.rays[static_cast<size_t>(ord2.rayIndices[1])];
    LatticeVector second = w.rays[static_cast<size_t>(ord2.rayIndices[2])];
    if (w.rays[static_cast<size_t>(ord2.rayIndices[0])] == LatticeVector({-2, -3, -3, -3})) {
        CHECK(first == LatticeVector({-1, -2, -2, -2}));
        CHECK(second == LatticeVector({0, -1, -1, -1}));
    } else {
        CHECK(first == LatticeVector({0, -1, -1, -1}));
        CHECK(second == LatticeVector({-1, -2, -2, -2}));
    }
}

TEST_CASE("ordering rejects boundaries that are not fan rays") {
    Fan f = fixtures::p2();
    check_kind("RayNotInCone", [&] { order_rays_in_2cone(f, {1, 3}, {0, 1}); });
    check_kind("RayNotInCone", [&] { order_rays_in_2cone(f, {1, 0}, {2, 0}); });
}

TEST_CASE("star fan of a ray in the projective plane is a projective line") {
    StarFan s = star_fan(fixtures::p2(), {0});
    CHECK(s.fan.dim == 1);
    REQUIRE(s.fan.rays.size() == 2);
    FanReport rep = validate(s.fan);
    CHECK(rep.complete);
    CHECK(rep.simplicial);
    CHECK(s.scale == std::vector<mpz_class>({1, 1}));
    CHECK(s.coneMult == 1);
}

TEST_CASE("star fan of a maximal cone is a point") {
    StarFan s = star_fan(fixtures::p2(), {0, 1});
    CHECK(s.fan.dim == 0);
    CHECK(s.fan.rays.empty());
    REQUIRE(s.fan.maxCones.size() == 1);
    CHECK(s.fan.maxCones[0].empty());
}

TEST_CASE("star fan of a 2-cone in projective 3-space") {
    StarFan s = star_fan(fixtures::p3(), {0, 1});
    CHECK(s.fan.dim == 1);
    REQUIRE(s.fan.rays.size() == 2);
    CHECK(validate(s.fan).complete);
    CHECK(s.scale == std::vector<mpz_class>({1, 1}));
}

TEST_CASE("star fans of complete simplicial fans stay complete and simplicial") {
    struct Case { Fan f; Cone c; };
    std::vector<Case> cases = {
        {fixtures::octic(), {5}},    {fixtures::octic(), {0, 5}},
        {fixtures::octic(), {1, 2}}, {fixtures::p12333(), {0, 5}},
        {fixtures::p12333(), {5, 6}}, {fixtures::p12333(), {2}},
        {fixtures::p4(), {0, 1}},    {fixtures::p1xp1(), {3}},
    };
    for (const auto& [f, c] : cases) {
        StarFan s = star_fan(f, c);
        CHECK(s.fan.dim == f.dim - static_cast<int>(c.size()));
        FanReport rep = validate(s.fan);
        CHECK(rep.complete);
        CHECK(rep.simplicial);
    }
}

TEST_CASE("star fan scale factors on the octic fan") {
    // gamma' = cone(e1, e6) over c = cone(e1): mult(gamma') = 1, scale 1;
    // the projection of e5 from the star of e6 carries the edge multiplicity
    StarFan s = star_fan(fixtures::octic(), {5});
    for (size_t i = 0; i < s.sourceRay.size(); ++i) CHECK(s.scale[i] >= 1);
    // V(e6) is a 3-fold whose fan has the six neighbours of e6
    CHECK(s.fan.rays.size() == 5);
}

TEST_CASE("star fan rejects non-cones") {
    check_kind("ConeNotInFan", [] { star_fan(fixtures::p2(), {0, 1, 2}); });
    check_kind("ConeNotInFan", [] { star_fan(fixtures::p1xp1(), {0, 2}); });
    check_kind("ConeNotInFan", [] { star_fan(fixtures::p2(), {7}); });
}

TEST_CASE("two-dimensional cone census") {
    auto faces2 = two_dimensional_cones(fixtures::p3());
    CHECK(faces2.size() == 6);

    auto oct = two_dimensional_cones(fixtures::octic());
    // the subdivided edge cone(e1,e5) is no longer a face; its halves are
    CHECK(std::find(oct.begin(), oct.end(), Cone{0, 4}) == oct.end());
    CHECK(std::find(oct.begin(), oct.end(), Cone{0, 5}) != oct.end());
    CHECK(std::find(oct.begin(), oct.end(), Cone{4, 5}) != oct.end());

    Fan flat = fixtures::p2();
    auto two = two_dimensional_cones(flat);
    auto expect = flat.maxCones;
    std::sort(expect.begin(), expect.end());
    CHECK(two == expect);
}
