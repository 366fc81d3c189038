#pragma once

#include "coxhodge/fan.hpp"
#include "coxhodge/linalg.hpp"

#include <vector>

// Torus-invariant divisors and their classes in the Chow group Z^n / M,
// Cartier/support-function data, the semiample classification (polytope,
// Iitaka dimension, quotient fan), and the monomial pushforward along the
// quotient map.  Everything is exact; the quotient fan built by gluing
// equal-support-function cones is verified against the normal fan of the
// polytope on every call.

namespace coxhodge {

// Coefficients a_1..a_n of D = sum a_i D_i, indexed like the fan rays.
using Divisor = std::vector<long long>;

struct DivisorClass {
    Divisor representative;
    Divisor canonicalForm; // unique coset representative; classes equal iff equal

    bool operator==(const DivisorClass& o) const { return canonicalForm == o.canonicalForm; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
    bool operator<(const DivisorClass& o) const { return canonicalForm < o.canonicalForm; }
    bool is_zero() const {
        for (long long c : canonicalForm)
            if (c) return false;
        return true;
    }
};

DivisorClass divisor_class(const Fan& f, const Divisor& coeffs);
DivisorClass class_add(const Fan& f, const DivisorClass& a, const DivisorClass& b);
DivisorClass class_sub(const Fan& f, const DivisorClass& a, const DivisorClass& b);
DivisorClass class_scale(const Fan& f, long long k, const DivisorClass& a);
// class of sum(exponents_i * D_i); throws MathError("LengthMismatch")
DivisorClass degree_of_monomial(const Fan& f, const LatticeVector& exponents);
// class of (1, ..., 1)
DivisorClass anticanonical_class(const Fan& f);

// m_sigma per maximal cone with <m_sigma, e_i> = -a_i on the cone's rays.
// Throws MathError("NotCartier") when some solution is missing or fractional.
using SupportFunctionData = std::vector<LatticeVector>;
SupportFunctionData cartier_data(const Fan& f, const Divisor& a);

bool is_semiample(const Fan& f, const Divisor& a);
// Dimension of the section polytope; only defined for semiample divisors
// (MathError("NotSemiample") otherwise).
int iitaka_dim(const Fan& f, const Divisor& a);

struct SemiampleAnalysis {
    Divisor divisor;
    SupportFunctionData mSigma;    // per maximal cone of the input fan
    int kappa = 0;
    std::vector<LatticeVector> vertices;      // of the polytope: distinct m_sigma
    std::vector<LatticeVector> latticePoints; // of the polytope, lex order

    ZMat nPrimeBasis;   // d x (d-kappa) columns spanning N' (collapsed directions)
    ZMat projection;    // kappa x d, kernel N'; the quotient map on N
    ZMat dualLift;      // d x kappa: mbar = (m - p*mRef) * dualLift
    LatticeVector mRef; // base vertex anchoring polytope coordinates

    Fan quotientFan;    // complete fan on Z^kappa (trivial when kappa = 0)
    Divisor pushforwardDivisor;    // abar over quotientFan rays
    std::vector<bool> rayStatus;   // fan ray survives as a quotient ray?
    std::vector<int> rayImage;     // quotient ray index, or -1
    std::vector<Cone> coneMap;     // per maximal cone: its glued quotient cone
};

// Throws MathError("NotSemiample"); the glued fan is checked to coincide
// with the normal fan of the polytope (mutual generator membership).
SemiampleAnalysis semiample_quotient(const Fan& f, const Divisor& a);

// Smallest cone of the quotient fan containing the image of cone(c).
Cone smallest_containing_cone(const Fan& f, const SemiampleAnalysis& an, const Cone& c);

// Exponents over the quotient fan of the monomial attached to the same
// lattice point; input must have degree p*[D] for some integer p >= 0
// (MathError("DegreeNotMultipleOfD") otherwise).
LatticeVector pushforward_monomial(const Fan& f, const SemiampleAnalysis& an,
                                   const LatticeVector& exponents);

// Coefficients over star.fan of the restriction of the Cartier divisor a to
// the orbit closure V(c): shift a to vanish on the rays of c, then divide
// each off-cone coefficient by the ray's scale factor (exact by
// Cartier-ness).  `star` must be star_fan(f, c).
Divisor restricted_divisor(const Fan& f, const Cone& c, const StarFan& star, const Divisor& a);

} // namespace coxhodge
