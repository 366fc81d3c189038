#pragma once

#include "coxhodge/jacobian.hpp"

#include <string>
#include <vector>

// Cohomology of the ambient toric variety from its divisor-class
// presentation, the toric part of hypersurface cohomology as ranks of
// multiplication by the hypersurface class, the census of 2-cones of the
// quotient fan with their ray subdivisions, and the assembled Hodge
// decomposition of the middle cohomology of a big-and-nef regular
// hypersurface: a polynomial summand per grade, one cone summand per
// interior ray of each subdivided 2-cone, a toric summand on the diagonal,
// and recursively computed stratum summands from codimension-2 orbit
// closures (these appear first in ambient dimension 5).

namespace coxhodge {

// dims of H^{2k}(P_Sigma), k = 0..maxDegree: monomials in the ray classes
// free of Stanley-Reisner products, modulo multiples of the linear
// relations sum_i <m, e_i> D_i.  Throws MathError("FanNotComplete") or
// MathError("NonSimplicialCone") when the presentation does not apply.
std::vector<int> toric_cohomology_dims(const Fan& f, int maxDegree);

// dims of H^{2k}_toric(X), k = 0..d-1, for the hypersurface class beta:
// degree 0 is 1 (the hypersurface is nonempty and connected); in positive
// degrees the rank of cup-with-beta H^{2k}(P_Sigma) -> H^{2k+2}(P_Sigma).
// Throws MathError("NotSemiample").
std::vector<int> toric_part_of_hypersurface(const Fan& f, const DivisorClass& beta);

// One 2-cone of the quotient fan together with the fan rays it absorbs.
struct SigmaConeData {
    Cone quotientRays;      // the 2-cone, as quotient-fan ray indices
    SigmaOrdering ordering; // boundary-to-boundary walk; fan-ray indices
                            // when the quotient is full-dimensional
    Cone sigmaRays;         // fan rays whose image lies in the cone, sorted
    DivisorClass beta1;     // sum of the classes deg x_k over sigmaRays
};

struct SigmaXData {
    SemiampleAnalysis analysis;
    std::vector<SigmaConeData> cones; // lex order of quotientRays
};

// Census of the 2-cones of the quotient fan of beta.  When the Iitaka
// dimension equals the fan dimension the ordering walks the original fan
// rays inside each cone (so interiorCount counts rays the quotient
// forgets); otherwise the two lattices differ and the ordering degenerates
// to the boundary rays of the quotient cone itself.  Throws
// MathError("NotSemiample").
SigmaXData sigma_X_data(const Fan& f, const DivisorClass& beta);

// Exponents of every term rewritten over the quotient fan (the section
// spaces match lattice point by lattice point, so this is the polynomial
// cutting out the image hypersurface).
Polynomial pushforward_polynomial(const Fan& f, const SemiampleAnalysis& an,
                                  const Polynomial& p);

enum class HodgeLabel { Polynomial, SigmaPart, Toric, Stratum };

struct HodgeSummand {
    HodgeLabel kind = HodgeLabel::Polynomial;
    std::string label;
    int dim = 0;
    bool unknown = false;     // recursion budget ran out before this term
    DivisorClass pieceDegree; // Polynomial / SigmaPart: degree of the piece
    Cone sigmaRays;           // SigmaPart: rays of sigma; Stratum: the 2-cone
    int interiorRay = -1;     // SigmaPart: the interior ray this copy tracks
};

struct HodgeGrade {
    int p = 0;
    int q = 0; // p + q = d - 1
    int total = 0;
    std::vector<HodgeSummand> summands;
};

struct HodgeDecomposition {
    int d = 0;
    DivisorClass beta;
    std::vector<HodgeGrade> middle; // indexed by q = 0..d-1
    std::vector<int> toricDims;     // H^{2k}_toric(X), k = 0..d-1
    std::string regularity;         // "assumed" or "certified"
    bool strataComplete = true;     // no summand was left unknown
    bool strataBestEffort = false;  // stratum dims beyond the proven range
};

// Middle cohomology of the hypersurface cut out by poly, grade by grade:
// h^{d-1-q,q} = dim R_1(poly) in degree (q+1)beta - beta0, plus one copy of
// the cone piece in degree q*beta - beta0 + beta1 per interior ray of each
// subdivided 2-cone (grades 1..d-2), plus the toric part on the diagonal,
// plus stratum terms for d >= 5 computed by restricting to codimension-2
// orbit closures and recursing with the given budget.  Throws
// MathError("NotBigAndNef") unless the class is semiample of maximal
// Iitaka dimension, and MathError("RecursionDepthExceeded") for a negative
// budget; an exhausted budget instead marks the affected stratum summands
// unknown.  Regularity is assumed; with certify set, a certificate is
// attempted through quasismooth_witness on the x_i f_i span.
HodgeDecomposition middle_cohomology(const Fan& f, const Polynomial& poly,
                                     int recurseDepth = 2, bool certify = false,
                                     int witnessKMax = 6);

} // namespace coxhodge
