#include "coxhodge/jacobian.hpp"

#include "coxhodge/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace coxhodge {

namespace {

[[noreturn]] void fail(const char* kind, const std::string& msg) {
    throw MathError(kind, msg);
}

using SparseRow = std::map<int, GaussRat>;

// Subtract c * (row without its pivot entry) from v; the caller has already
// removed the pivot coordinate from v.
void eliminate_pivot(SparseRow& v, const GaussRat& c, int pivot, const SparseRow& row) {
    for (const auto& [col, val] : row)
        if (col != pivot) {
            auto it = v.find(col);
            if (it == v.end())
                v.emplace(col, -(c * val));
            else {
                it->second -= c * val;
                if (it->second.is_zero())
                    v.erase(it);
            }
        }
}

// Incrementally built row-echelon form with the rightmost-pivot convention:
// a row's pivot is its largest column index, normalized to 1.  finalize()
// back-substitutes once, after which the rows are the canonical RREF of the
// span (independent of insertion order).
struct SparseRref {
    std::map<int, SparseRow, std::greater<int>> pivotRows;

    // Eliminate every pivot column from v, walking v's support downward;
    // eliminating pivot p only introduces columns < p.  Works on both the
    // echelon and the finalized form.
    void reduce(SparseRow& v) const {
        int cursor = std::numeric_limits<int>::max();
        while (!v.empty()) {
            auto it = v.lower_bound(cursor); // first key >= cursor
            if (it == v.begin())
                break;
            --it; // largest key < cursor
            int col = it->first;
            auto pr = pivotRows.find(col);
            if (pr == pivotRows.end()) {
                cursor = col;
                continue;
            }
            GaussRat c = it->second;
            v.erase(it);
            eliminate_pivot(v, c, col, pr->second);
            cursor = col;
        }
    }

    bool insert(SparseRow v) {
        reduce(v);
        if (v.empty())
            return false;
        int p = v.rbegin()->first;
        GaussRat lead = v.rbegin()->second;
        for (auto& [col, val] : v)
            val /= lead;
        pivotRows.emplace(p, std::move(v));
        return true;
    }

    // Back-substitution pass, ascending pivots: afterwards no row contains
    // another row's pivot column.
    void finalize() {
        for (auto it = pivotRows.rbegin(); it != pivotRows.rend(); ++it) {
            SparseRow body = std::move(it->second);
            body.erase(it->first);
            reduce(body); // touches only smaller pivots, already finalized
            body.emplace(it->first, GaussRat(1));
            it->second = std::move(body);
        }
    }

    Subspace to_subspace(GradedBasis ambient) {
        finalize();
        Subspace out;
        out.ambient = std::move(ambient);
        for (const auto& [p, row] : pivotRows) {
            out.pivotColumns.push_back(p);
            out.rows.push_back(row);
        }
        return out;
    }
};

Polynomial variable_poly(const Fan& f, int i) {
    Monomial m(f.rays.size(), 0);
    m[i] = 1;
    return make_polynomial(f, degree_of_monomial(f, m), {{m, GaussRat(1)}});
}

int ambient_index(const GradedBasis& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.monomials.begin(), basis.monomials.end(), m);
    if (it == basis.monomials.end() || *it != m)
        throw std::logic_error("monomial is not in the ambient graded basis");
    return static_cast<int>(it - basis.monomials.begin());
}

std::vector<Polynomial> ideal_generators(const Fan& f, const Polynomial& poly,
                                         const IdealSpec& spec) {
    bool coneKind = spec.kind == IdealKind::Jsigma || spec.kind == IdealKind::Jsigma0;
    if (coneKind != spec.sigma.has_value())
        throw std::logic_error("ideal spec: sigma must be present exactly for the cone kinds");
    bool euler = spec.kind == IdealKind::J0 || spec.kind == IdealKind::Jsigma0;

    std::vector<Polynomial> gens;
    for (size_t i = 0; i < f.rays.size(); ++i) {
        Polynomial g = partial_derivative(f, poly, static_cast<int>(i));
        if (euler)
            g = poly_mul(f, variable_poly(f, static_cast<int>(i)), g);
        if (!g.is_zero())
            gens.push_back(std::move(g));
    }
    if (coneKind)
        for (int k : *spec.sigma)
            gens.push_back(variable_poly(f, k));
    return gens;
}

// Kernel of the linear map "multiply by sat, then reduce modulo spanUp",
// expressed as a subspace of the degree-gamma piece.
Subspace saturated_subspace(const Fan& f, const GradedBasis& ambient, const Monomial& sat,
                            const Subspace& spanUp) {
    // Equations indexed by the surviving coordinates upstairs.
    std::map<int, SparseRow> equations;
    for (size_t j = 0; j < ambient.monomials.size(); ++j) {
        Monomial shifted = ambient.monomials[j];
        for (size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += sat[i];
        SparseRow unit{{ambient_index(spanUp.ambient, shifted), GaussRat(1)}};
        reduce_by_subspace(spanUp, unit);
        for (const auto& [t, c] : unit)
            equations[t][static_cast<int>(j)] = c;
    }

    SparseRref system;
    for (auto& [t, row] : equations)
        system.insert(std::move(row));
    system.finalize();

    std::vector<bool> isPivot(ambient.monomials.size(), false);
    for (const auto& [p, row] : system.pivotRows)
        isPivot[p] = true;

    SparseRref kernel;
    for (size_t j = 0; j < ambient.monomials.size(); ++j) {
        if (isPivot[j])
            continue;
        SparseRow v{{static_cast<int>(j), GaussRat(1)}};
        for (const auto& [p, row] : system.pivotRows) {
            auto it = row.find(static_cast<int>(j));
            if (it != row.end())
                v[p] = -it->second;
        }
        kernel.insert(std::move(v));
    }
    return kernel.to_subspace(ambient);
}

} // namespace

IdealSpec spec_J() { return {IdealKind::J, std::nullopt, std::nullopt}; }

IdealSpec spec_J0() { return {IdealKind::J0, std::nullopt, std::nullopt}; }

IdealSpec spec_J1(const Fan& f) {
    return {IdealKind::J0, std::nullopt, Monomial(f.rays.size(), 1)};
}

IdealSpec spec_Jsigma(Cone sigma) { return {IdealKind::Jsigma, std::move(sigma), std::nullopt}; }

IdealSpec spec_Jsigma0(Cone sigma) {
    return {IdealKind::Jsigma0, std::move(sigma), std::nullopt};
}

IdealSpec spec_Jsigma1(const Fan& f, Cone sigma) {
    Monomial sat(f.rays.size(), 1);
    for (int k : sigma)
        sat[k] = 0;
    return {IdealKind::Jsigma0, std::move(sigma), std::move(sat)};
}

void reduce_by_subspace(const Subspace& sub, SparseRow& v) {
    int cursor = std::numeric_limits<int>::max();
    while (!v.empty()) {
        auto it = v.lower_bound(cursor);
        if (it == v.begin())
            break;
        --it;
        int col = it->first;
        // pivotColumns is sorted descending
        auto pr = std::lower_bound(sub.pivotColumns.begin(), sub.pivotColumns.end(), col,
                                   std::greater<int>());
        if (pr == sub.pivotColumns.end() || *pr != col) {
            cursor = col;
            continue;
        }
        GaussRat c = it->second;
        v.erase(it);
        eliminate_pivot(v, c, col, sub.rows[pr - sub.pivotColumns.begin()]);
        cursor = col;
    }
}

Subspace ideal_span(const Fan& f, const Polynomial& poly, const IdealSpec& spec,
                    const DivisorClass& gamma) {
    GradedBasis ambient = monomials_of_degree(f, gamma);
    SparseRref rref;
    if (!ambient.monomials.empty()) {
        for (const Polynomial& g : ideal_generators(f, poly, spec)) {
            GradedBasis cofactors =
                monomials_of_degree(f, class_sub(f, gamma, g.degree));
            for (const Monomial& m : cofactors.monomials) {
                SparseRow row;
                for (const auto& [v, c] : g.terms) {
                    Monomial prod(v.size());
                    for (size_t i = 0; i < v.size(); ++i)
                        prod[i] = v[i] + m[i];
                    row[ambient_index(ambient, prod)] += c;
                }
                rref.insert(std::move(row));
            }
        }
    }
    return rref.to_subspace(std::move(ambient));
}

QuotientPiece quotient_piece(const Fan& f, const Polynomial& poly, const IdealSpec& spec,
                             const DivisorClass& gamma, bool saturate) {
    QuotientPiece piece;
    piece.degree = gamma;
    if (!saturate) {
        piece.idealSubspace = ideal_span(f, poly, spec, gamma);
    } else {
        if (!spec.saturating)
            throw std::logic_error("quotient_piece: spec has no saturating monomial");
        GradedBasis ambient = monomials_of_degree(f, gamma);
        DivisorClass up = class_add(f, gamma, degree_of_monomial(f, *spec.saturating));
        Subspace spanUp = ideal_span(f, poly, spec, up);
        piece.idealSubspace =
            saturated_subspace(f, ambient, *spec.saturating, spanUp);
    }
    piece.ambientBasis = piece.idealSubspace.ambient;

    std::vector<bool> isPivot(piece.ambientBasis.monomials.size(), false);
    for (int p : piece.idealSubspace.pivotColumns)
        isPivot[p] = true;
    piece.normalFormMap.assign(piece.ambientBasis.monomials.size(), -1);
    for (size_t j = 0; j < piece.ambientBasis.monomials.size(); ++j)
        if (!isPivot[j]) {
            piece.normalFormMap[j] = static_cast<int>(piece.quotientBasisMonomials.size());
            piece.quotientBasisMonomials.push_back(piece.ambientBasis.monomials[j]);
        }
    return piece;
}

std::vector<GaussRat> normal_form(const QuotientPiece& piece, const Polynomial& p) {
    if (p.degree != piece.degree)
        fail("DegreeMismatch", "polynomial degree differs from the quotient piece degree");
    SparseRow v;
    for (const auto& [m, c] : p.terms)
        v[ambient_index(piece.ambientBasis, m)] = c;
    reduce_by_subspace(piece.idealSubspace, v);
    std::vector<GaussRat> out(piece.quotientBasisMonomials.size(), GaussRat(0));
    for (const auto& [idx, c] : v) {
        int q = piece.normalFormMap[idx];
        if (q < 0)
            throw std::logic_error("reduction left a pivot coordinate");
        out[q] = c;
    }
    return out;
}

Polynomial mu_inverse(const Fan& f, const Polynomial& poly, const Polynomial& P) {
    DivisorClass dBeta = class_scale(f, f.dim, poly.degree);
    if (P.degree != dBeta)
        fail("DegreeMismatch", "mu_inverse input must live in degree dim * deg(poly)");
    DivisorClass target = class_sub(f, dBeta, anticanonical_class(f));

    QuotientPiece r1 = quotient_piece(f, poly, spec_J1(f), target, true);
    QuotientPiece r0 = quotient_piece(f, poly, spec_J0(), dBeta, false);
    if (r1.dim() != r0.dim())
        fail("DimensionMismatch",
             "multiplication by the product of variables is not square: " +
                 std::to_string(r1.dim()) + " vs " + std::to_string(r0.dim()));

    const int k = r1.dim();
    Monomial ones(f.rays.size(), 1);
    GMat M(k, k);
    for (int c = 0; c < k; ++c) {
        Monomial shifted = r1.quotientBasisMonomials[c];
        for (size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += ones[i];
        std::vector<GaussRat> col =
            normal_form(r0, make_polynomial(f, dBeta, {{shifted, GaussRat(1)}}));
        for (int r = 0; r < k; ++r)
            M(r, c) = col[r];
    }
    std::vector<GaussRat> rhs = normal_form(r0, P);

    // Exact Gauss-Jordan on the augmented system.
    GMat A(k, k + 1);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c)
            A(r, c) = M(r, c);
        A(r, k) = rhs[r];
    }
    std::vector<int> pivotOfCol(k, -1);
    int rank = 0;
    for (int c = 0; c < k && rank < k; ++c) {
        int sel = -1;
        for (int r = rank; r < k; ++r)
            if (!A(r, c).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        for (int j = 0; j <= k; ++j)
            std::swap(A(sel, j), A(rank, j));
        GaussRat lead = A(rank, c);
        for (int j = 0; j <= k; ++j)
            A(rank, j) /= lead;
        for (int r = 0; r < k; ++r)
            if (r != rank && !A(r, c).is_zero()) {
                GaussRat m = A(r, c);
                for (int j = 0; j <= k; ++j)
                    A(r, j) -= m * A(rank, j);
            }
        pivotOfCol[c] = rank;
        ++rank;
    }
    for (int r = rank; r < k; ++r)
        if (!A(r, k).is_zero())
            fail("NoSolution", "the multiplication map does not reach the target class");
    if (rank < k)
        fail("NoSolution", "the multiplication map is singular; the input is not regular");

    std::vector<std::pair<Monomial, GaussRat>> terms;
    for (int c = 0; c < k; ++c)
        terms.emplace_back(r1.quotientBasisMonomials[c], A(pivotOfCol[c], k));
    return make_polynomial(f, target, terms);
}

WitnessResult quasismooth_witness(const Fan& f, const Polynomial& poly, int kMax,
                                  IdealKind kind) {
    if (kMax < 1)
        throw std::logic_error("quasismooth_witness: kMax must be at least 1");
    if (kind != IdealKind::J && kind != IdealKind::J0)
        throw std::logic_error("quasismooth_witness: kind must be J or J0");
    IdealSpec spec{kind, std::nullopt, std::nullopt};

    std::vector<Monomial> gens;
    for (const Cone& c : f.maxCones) {
        Monomial y(f.rays.size(), 1);
        for (int r : c)
            y[r] = 0;
        if (std::find(gens.begin(), gens.end(), y) == gens.end())
            gens.push_back(std::move(y));
    }

    // If every generator's k-th power lies in the span of the ideal
    // generators degree-wise, the ideal's zero locus misses the complement of
    // the irrelevant locus: a sufficient certificate.
    for (int k = 1; k <= kMax; ++k) {
        bool all = true;
        std::map<Divisor, Subspace> spans;
        for (const Monomial& y : gens) {
            Monomial power(y.size());
            for (size_t i = 0; i < y.size(); ++i)
                power[i] = y[i] * k;
            DivisorClass cls = degree_of_monomial(f, power);
            auto it = spans.find(cls.canonicalForm);
            if (it == spans.end())
                it = spans.emplace(cls.canonicalForm, ideal_span(f, poly, spec, cls)).first;
            SparseRow unit{{ambient_index(it->second.ambient, power), GaussRat(1)}};
            reduce_by_subspace(it->second, unit);
            if (!unit.empty()) {
                all = false;
                break;
            }
        }
        if (all)
            return {true, k, false};
    }
    return {false, kMax, true};
}

} // namespace coxhodge
