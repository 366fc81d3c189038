#ifndef COXHODGE_JACOBIAN_HPP
#define COXHODGE_JACOBIAN_HPP

#include "coxhodge/coxring.hpp"
#include "coxhodge/divisors.hpp"

#include <map>
#include <optional>
#include <vector>

// Degree-wise exact linear algebra for the Jacobian-type ideals of a
// homogeneous polynomial f: the partial-derivative ideal J, the ideal J0
// generated by x_i df/dx_i, their cone-extended variants, and the saturated
// quotient rings obtained as degree-wise ideal quotients by a monomial.  All
// subspaces are kept in reduced row-echelon form with a fixed pivot rule
// (lex-largest monomial eliminated first), so every basis and normal form is
// deterministic.

namespace coxhodge {

enum class IdealKind { J, J0, Jsigma, Jsigma0 };

// sigma is a set of fan ray indices (the rays of a cone of a coarser fan,
// not necessarily a cone of `f` itself); present iff the kind asks for it.
// `saturating` turns the spec into a degree-wise ideal quotient when
// quotient_piece is called with saturate = true.
struct IdealSpec {
    IdealKind kind = IdealKind::J;
    std::optional<Cone> sigma;
    std::optional<Monomial> saturating;
};

IdealSpec spec_J();
IdealSpec spec_J0();
// J0 saturated by the product of all variables.
IdealSpec spec_J1(const Fan& f);
IdealSpec spec_Jsigma(Cone sigma);
IdealSpec spec_Jsigma0(Cone sigma);
// Jsigma0 saturated by the product of the variables outside sigma.
IdealSpec spec_Jsigma1(const Fan& f, Cone sigma);

// A subspace of the degree-gamma graded piece of the Cox ring.  Columns are
// indexed by the ascending-lex monomial basis `ambient`; rows are sparse, in
// reduced row-echelon form where each row's pivot is its *rightmost* nonzero
// entry (normalized to 1 and eliminated from every other row), listed by
// descending pivot column.
struct Subspace {
    GradedBasis ambient;
    std::vector<std::map<int, GaussRat>> rows;
    std::vector<int> pivotColumns;
    int rank() const { return static_cast<int>(rows.size()); }
};

// Reduce a sparse coordinate vector modulo the subspace rows (in place).
void reduce_by_subspace(const Subspace& sub, std::map<int, GaussRat>& v);

struct QuotientPiece {
    DivisorClass degree;
    GradedBasis ambientBasis;
    Subspace idealSubspace;
    // Non-pivot monomials in ascending lex order: a basis of the quotient.
    std::vector<Monomial> quotientBasisMonomials;
    // ambient index -> position in quotientBasisMonomials, or -1 on pivots.
    std::vector<int> normalFormMap;
    int dim() const { return static_cast<int>(quotientBasisMonomials.size()); }
};

// Span of {g * m : g generator of the spec'd ideal, m monomial of matching
// degree} inside S_gamma.  Generators whose complementary degree has an empty
// monomial basis contribute nothing.  The saturating monomial is ignored.
Subspace ideal_span(const Fan& f, const Polynomial& poly, const IdealSpec& spec,
                    const DivisorClass& gamma);

// The quotient S_gamma / I_gamma.  With saturate = true, I_gamma is the
// degree-wise ideal quotient {A : A * spec.saturating in I_{gamma + deg}},
// computed as the preimage of the span under the multiplication map.
QuotientPiece quotient_piece(const Fan& f, const Polynomial& poly, const IdealSpec& spec,
                             const DivisorClass& gamma, bool saturate);

// Coordinates of p modulo the ideal subspace over quotientBasisMonomials.
std::vector<GaussRat> normal_form(const QuotientPiece& piece, const Polynomial& p);

// Solve (prod x_i) * Q == P modulo J0 in degree d*beta, where beta = deg poly
// and deg P = d*beta; returns Q as a combination of the quotient basis of the
// saturated piece in degree d*beta - beta0.  The two quotient pieces must
// have equal dimensions (the multiplication map is an isomorphism for
// regular f); a dimension gap or an unsolvable system signals non-regularity.
Polynomial mu_inverse(const Fan& f, const Polynomial& poly, const Polynomial& P);

struct WitnessResult {
    bool certified = false;
    int k = 0;             // certifying power when certified, else kMax
    bool exhausted = false;
};

// Sufficient certificate that the chosen generators (partials for kind J,
// x_i * partials for kind J0) have no common zero on the toric variety:
// certified when for some k <= kMax every degree-k product of the irrelevant
// ideal generators prod_{rho not in sigma} x_i lies in the span degree-wise.
// Exhaustion is inconclusive, not a refutation.
WitnessResult quasismooth_witness(const Fan& f, const Polynomial& poly, int kMax,
                                  IdealKind kind = IdealKind::J);

} // namespace coxhodge

#endif
