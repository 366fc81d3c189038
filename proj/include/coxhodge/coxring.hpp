#pragma once

#include "coxhodge/divisors.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/scalars.hpp"

#include <map>
#include <vector>

// The homogeneous coordinate ring of a fan: one variable per ray, graded by
// divisor classes.  Sparse polynomials over Gaussian rationals, graded-piece
// enumeration through the representative's polytope, partial derivatives,
// restriction to orbit closures, and the two special polynomials formed from
// boundary partials (G) and from terms orthogonal to a 2-cone (H).

namespace coxhodge {

// Exponent vector over the fan rays, all entries nonnegative.
using Monomial = LatticeVector;

struct Polynomial {
    DivisorClass degree;
    std::map<Monomial, GaussRat> terms; // zero coefficients never stored

    bool is_zero() const { return terms.empty(); }
};

struct GradedBasis {
    DivisorClass degree;
    std::vector<Monomial> monomials; // lex-sorted, one per lattice point
};

// Builds a polynomial and checks every term against the declared degree
// (MathError("GradeMismatch") otherwise); drops zero coefficients.
Polynomial make_polynomial(const Fan& f, const DivisorClass& degree,
                           const std::vector<std::pair<Monomial, GaussRat>>& terms);

Polynomial poly_add(const Fan& f, const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const GaussRat& c, Polynomial p);
Polynomial poly_mul(const Fan& f, const Polynomial& p, const Polynomial& q);

// All monomials of the given degree, via the lattice points of the
// representative's polytope; exponents a_i + <m, e_i>.
GradedBasis monomials_of_degree(const Fan& f, const DivisorClass& alpha);

Polynomial partial_derivative(const Fan& f, const Polynomial& p, int i);

// Sum of x_i^{k_i} over all rays i admitting k_i >= 1 with [k_i D_i] = alpha,
// with unit coefficients; terms for unmatched rays are simply absent.
Polynomial fermat_polynomial(const Fan& f, const DivisorClass& alpha);

// Restriction to the orbit closure V(c): terms divisible by a variable of c
// die; a surviving term's exponent on star ray r is its exponent on the
// source ray divided by the ray scale (MathError("NonIntegralExponent") if
// the division fails, which signals an inconsistent degree representative).
Polynomial restrict_to_star(const Fan& f, const Cone& c, const StarFan& star,
                            const Polynomial& p);

// x_s f_s x_t f_t prod_{k outside sigma} x_k / (mult(sigma) prod_{k in sigma} x_k)
// for the boundary rays s, t of the ordered 2-cone; the quotient must be a
// polynomial (MathError("NotDivisible") otherwise).  Degree:
// 2 deg f + deg prod(all x) - 2 sum_{k in sigma} deg x_k.
Polynomial special_polynomial_G(const Fan& f, const SigmaOrdering& ordering,
                                const Polynomial& poly);

// sqrt(-1) * (terms of poly whose lattice point is orthogonal to the 2-cone)
// / prod_{k in sigma} x_k; requires deg poly = anticanonical
// (MathError("NotAnticanonical")).
Polynomial special_polynomial_H(const Fan& f, const SigmaOrdering& ordering,
                                const Polynomial& poly);

} // namespace coxhodge
