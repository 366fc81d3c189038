#pragma once

#include "coxhodge/linalg.hpp"

#include <vector>

// Rational polyhedral fans given by primitive ray generators and maximal
// cones.  Beyond validation (face compatibility, completeness by facet
// pairing, simpliciality) this module computes cone multiplicities, the
// ordered subdivision of a 2-cone by the rays of a finer fan (with a fixed
// orientation convention), and star fans on quotient lattices.

namespace coxhodge {

// Sorted, distinct ray indices into the owning fan.
using Cone = std::vector<int>;

struct Fan {
    int dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<Cone> maxCones;
};

struct FanReport {
    bool simplicial = false;
    bool complete = false;
};

// Structural checks throw MathError("MalformedFan", ...): non-primitive or
// duplicate rays, bad indices, unused rays, non-pointed cones, redundant
// generators, or two maximal cones that do not meet in a common face.
// Simpliciality and completeness are reported, not enforced.
FanReport validate(const Fan& f);

// Index of the sublattice spanned by the generators inside its saturation;
// requires linearly independent generators (MathError("NonSimplicialCone")).
mpz_class mult(const std::vector<LatticeVector>& generators);
mpz_class mult(const Fan& f, const Cone& c);

// The rays of `fine` inside a 2-cone, walked from one boundary ray to the
// other.  rayIndices = l_0, ..., l_{n+1} where l_0 and l_{n+1} are the
// boundary rays and n is the interior count; subMults[j-1] is the
// multiplicity of cone(l_{j-1}, l_j).  The boundary labelling is fixed so
// that the 2x2 determinant of the last two rows of the adapted unimodular
// basis against (e_{l_0}, e_{l_{n+1}}) equals +mult(sigma); `reversed`
// records that this flipped the lexicographic default.
struct SigmaOrdering {
    std::vector<int> rayIndices;
    std::vector<mpz_class> subMults;
    mpz_class coneMult;
    bool reversed = false;

    int interiorCount() const { return static_cast<int>(rayIndices.size()) - 2; }
};

SigmaOrdering order_rays_in_2cone(const Fan& fine, const LatticeVector& s,
                                  const LatticeVector& t);

// Fan of the orbit closure V(c): the quotient lattice is Z^{d-k} reached by
// `projection`, whose kernel is the saturated span of c.  Star ray r comes
// from the fan ray sourceRay[r] spanning, together with c, a (k+1)-cone
// gamma'; scale[r] = mult(gamma')/mult(c) in projection * e_{sourceRay[r]}
// = scale[r] * (primitive star ray).
struct StarFan {
    Fan fan;
    ZMat projection;
    std::vector<int> sourceRay;
    std::vector<mpz_class> scale;
    mpz_class coneMult;
};

// Throws MathError("ConeNotInFan") when c is not a face of any maximal cone.
StarFan star_fan(const Fan& f, const Cone& c);

// All 2-dimensional cones of the fan (exposed 2-faces of maximal cones),
// each as a sorted pair of ray indices, lexicographically ordered.
std::vector<Cone> two_dimensional_cones(const Fan& f);

} // namespace coxhodge
