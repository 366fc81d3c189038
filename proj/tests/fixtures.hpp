#pragma once

#include "coxhodge/fan.hpp"

// Fans used across the test suites.  All are complete and simplicial unless
// the name says otherwise; 0-based ray indices.

namespace fixtures {

using coxhodge::Fan;

// projective plane
inline Fan p2() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.maxCones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

inline Fan p1xp1() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.maxCones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

// projective plane blown up in one point: extra ray (1,1)
inline Fan blowup_p2() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {1, 1}, {0, 1}, {-1, -1}};
    f.maxCones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

// weighted projective plane with weights (1,1,2)
inline Fan weighted_p112() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -2}};
    f.maxCones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

// fan of a chain of cones between (1,0) and (1,4), completed below the x-axis
inline Fan ladder() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {-1, 0}, {0, -1}};
    f.maxCones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}};
    return f;
}

inline Fan p3() {
    Fan f;
    f.dim = 3;
    f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    f.maxCones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

inline Fan p4() {
    Fan f;
    f.dim = 4;
    f.rays = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
    f.maxCones = {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
    return f;
}

// Weighted projective 4-space with weights (1,1,2,2,2), its singular edge
// cone(e1, e5) subdivided at the midpoint ray e6 = (e1 + e5)/2.  The
// anticanonical octic hypersurface on this fan is the standard resolved
// example (h^{1,1} = 2, h^{2,1} = 86).
inline Fan octic() {
    Fan f;
    f.dim = 4;
    f.rays = {{1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},
              {0, 0, 0, 1},  {-1, -2, -2, -2}, {0, -1, -1, -1}};
    f.maxCones = {{0, 1, 2, 3}, {1, 2, 3, 4}, {0, 2, 3, 5}, {2, 3, 4, 5},
                  {0, 1, 3, 5}, {1, 3, 4, 5}, {0, 1, 2, 5}, {1, 2, 4, 5}};
    return f;
}

// Weighted projective 4-space with weights (1,2,3,3,3), the singular edge
// cone(v0, e1) subdivided at the two lattice points of the reflexive
// polytope on it: w1 = (-1,-2,-2,-2) and w2 = (0,-1,-1,-1).  The subdivided
// 2-cone has two adjacent interior rays and multiplicity 3.
inline Fan p12333() {
    Fan f;
    f.dim = 4;
    f.rays = {{-2, -3, -3, -3}, {1, 0, 0, 0},     {0, 1, 0, 0},   {0, 0, 1, 0},
              {0, 0, 0, 1},     {-1, -2, -2, -2}, {0, -1, -1, -1}};
    f.maxCones = {{1, 2, 3, 4}, {0, 2, 3, 4},
                  {0, 2, 3, 5}, {2, 3, 5, 6}, {1, 2, 3, 6},
                  {0, 2, 4, 5}, {2, 4, 5, 6}, {1, 2, 4, 6},
                  {0, 3, 4, 5}, {3, 4, 5, 6}, {1, 3, 4, 6}};
    return f;
}

} // namespace fixtures
