#ifndef COXHODGE_LINALG_HPP
#define COXHODGE_LINALG_HPP

#include "coxhodge/scalars.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

// Exact dense linear algebra over GMP scalars held in Eigen containers:
// Smith/Hermite normal forms, rational rank/kernel/solve, unimodular
// completions, and a small exact simplex used for all cone membership and
// face-exposure questions. Everything is deterministic (fixed pivot order).

namespace coxhodge {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using ZMat = Mat<mpz_class>;
using ZVec = Vec<mpz_class>;
using QMat = Mat<mpq_class>;
using QVec = Vec<mpq_class>;
using GMat = Mat<GaussRat>;
using GVec = Vec<GaussRat>;

// Lattice points of N or M in a fixed basis; callers track which lattice.
using LatticeVector = std::vector<long long>;

QVec to_qvec(const LatticeVector& v);
ZVec to_zvec(const LatticeVector& v);
LatticeVector to_lattice(const ZVec& v);     // entries must fit in long long
LatticeVector to_lattice_q(const QVec& v);   // entries must be integers

mpz_class dot_z(const LatticeVector& a, const LatticeVector& b);
LatticeVector primitive(const LatticeVector& v); // v / gcd(|v_i|), v != 0

// Plain О(n^3) products written out by hand; Eigen's expression templates are
// avoided on GMP scalars in core paths.
QMat mat_mul(const QMat& a, const QMat& b);
ZMat mat_mul(const ZMat& a, const ZMat& b);

// ---------------------------------------------------------------- Smith form

struct SmithResult {
    std::vector<mpz_class> diag; // d1 | d2 | ..., nonnegative, zeros trailing
    ZMat U;                      // r x r unimodular
    ZMat V;                      // c x c unimodular, U*A*V = diag
    int rank = 0;                // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const ZMat& a);

// --------------------------------------------------------------- Hermite form

struct HermiteResult {
    ZMat basis;                  // r x c, canonical row Hermite form of the row lattice
    std::vector<int> pivotCols;  // strictly increasing, one per basis row
};

HermiteResult row_hermite_form(const ZMat& a);

// Canonical representative of `v` modulo the row lattice described by `h`.
// Two vectors are congruent iff their reductions are equal.
std::vector<mpz_class> reduce_mod_row_lattice(const HermiteResult& h,
                                              std::vector<mpz_class> v);

// ------------------------------------------------------- rational elimination

struct RrefResult {
    QMat m;                      // reduced row echelon form
    std::vector<int> pivotCols;  // ascending
    int rank = 0;
};

RrefResult rref(QMat a);

long rational_rank(const QMat& a);
// Columns form a basis of { x : a x = 0 }.
QMat rational_kernel(const QMat& a);
// One solution of a x = b, free variables set to zero; nullopt if inconsistent.
std::optional<QVec> solve_rational(const QMat& a, const QVec& b);

mpq_class det_q(const QMat& a);

// Saturated integer kernel of an integer matrix: columns are a lattice basis
// of { v in Z^c : a v = 0 }, extendable to a basis of Z^c.
ZMat integer_kernel(const ZMat& a);

// Exact inverse of a unimodular integer matrix.
ZMat unimodular_inverse(const ZMat& u);

// Given k independent rows spanning a *saturated* rank-k sublattice of Z^d,
// return a d x d unimodular matrix whose first k rows span the same lattice
// and whose determinant is +1.
ZMat complete_to_unimodular(const ZMat& rows);

// ------------------------------------------------------------------- simplex

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    mpq_class value;
    QVec x;
};

// maximize c.x subject to A x = b, x >= 0 (two-phase, Bland's rule).
LPResult lp_solve(const QMat& a, const QVec& b, const QVec& c);

bool lp_feasible(const QMat& a, const QVec& b);

// Is p a nonnegative combination of the given generators (columns)?
bool cone_contains(const std::vector<QVec>& generators, const QVec& p);
bool cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& p);

// A vector u with <u, gens[i]> = 0 for i in face, >= 1 for the rest;
// nullopt when no such u exists (i.e. the subset is not an exposed face).
std::optional<QVec> exposing_normal(const std::vector<LatticeVector>& generators,
                                    const std::vector<int>& faceIndices);

// max lambda_idx over { lambda >= 0 : sum lambda_i g_i = p }; requires p in
// the cone and the cone pointed (so the value is finite).
mpq_class max_barycentric_coefficient(const std::vector<LatticeVector>& generators,
                                      const QVec& p, int idx);

} // namespace coxhodge

#endif
