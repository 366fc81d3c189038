#include "coxhodge/linalg.hpp"

#include "coxhodge/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace coxhodge {

QVec to_qvec(const LatticeVector& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q(static_cast<long>(i)) = mpq_class(static_cast<long>(v[i]));
    return q;
}

ZVec to_zvec(const LatticeVector& v) {
    ZVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i) z(static_cast<long>(i)) = mpz_class(static_cast<long>(v[i]));
    return z;
}

LatticeVector to_lattice(const ZVec& v) {
    LatticeVector out(static_cast<size_t>(v.size()));
    for (long i = 0; i < v.size(); ++i) {
        if (!v(i).fits_slong_p())
            throw std::runtime_error("lattice coordinate overflows machine integer");
        out[static_cast<size_t>(i)] = v(i).get_si();
    }
    return out;
}

LatticeVector to_lattice_q(const QVec& v) {
    LatticeVector out(static_cast<size_t>(v.size()));
    for (long i = 0; i < v.size(); ++i) {
        mpq_class q = v(i);
        q.canonicalize();
        if (q.get_den() != 1)
            throw std::runtime_error("expected integral vector entry, got " + q.get_str());
        if (!q.get_num().fits_slong_p())
            throw std::runtime_error("lattice coordinate overflows machine integer");
        out[static_cast<size_t>(i)] = q.get_num().get_si();
    }
    return out;
}

mpz_class dot_z(const LatticeVector& a, const LatticeVector& b) {
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += mpz_class(static_cast<long>(a[i])) * mpz_class(static_cast<long>(b[i]));
    return s;
}

LatticeVector primitive(const LatticeVector& v) {
    mpz_class g = 0;
    for (long long x : v) g = gcd(g, mpz_class(static_cast<long>(x)));
    if (g == 0) throw std::runtime_error("primitive() of zero vector");
    LatticeVector out = v;
    long long gl = g.get_si();
    for (auto& x : out) x /= gl;
    return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    QMat r(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) {
            mpq_class s = 0;
            for (long k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

ZMat mat_mul(const ZMat& a, const ZMat& b) {
    ZMat r(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) {
            mpz_class s = 0;
            for (long k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(ZMat& m, long i, long j) { if (i != j) m.row(i).swap(m.row(j)); }
void swap_cols(ZMat& m, long i, long j) { if (i != j) m.col(i).swap(m.col(j)); }

// row_i -= q * row_t, mirrored in U (U tracks left ops: U row_i -= q * U row_t)
void row_op(ZMat& a, ZMat& u, long i, long t, const mpz_class& q) {
    for (long j = 0; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
    for (long j = 0; j < u.cols(); ++j) u(i, j) -= q * u(t, j);
}

void col_op(ZMat& a, ZMat& v, long j, long t, const mpz_class& q) {
    for (long i = 0; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
    for (long i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, t);
}

} // namespace

SmithResult smith_normal_form(const ZMat& a0) {
    const long r = a0.rows(), c = a0.cols();
    ZMat a = a0;
    ZMat u = ZMat::Identity(r, r);
    ZMat v = ZMat::Identity(c, c);
    const long k = std::min(r, c);

    for (long t = 0; t < k; ++t) {
        // Move the absolutely smallest nonzero entry of the trailing block to (t,t),
        // then alternately clear its row and column; remainders shrink the pivot,
        // so this terminates.
        while (true) {
            long pi = -1, pj = -1;
            mpz_class best = 0;
            for (long i = t; i < r; ++i)
                for (long j = t; j < c; ++j)
                    if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < best)) {
                        best = abs(a(i, j));
                        pi = i; pj = j;
                    }
            if (pi < 0) break; // trailing block zero
            swap_rows(a, t, pi); swap_rows(u, t, pi);
            swap_cols(a, t, pj); swap_cols(v, t, pj);

            bool clean = true;
            for (long i = t + 1; i < r; ++i)
                if (a(i, t) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                    row_op(a, u, i, t, q);
                    if (a(i, t) != 0) clean = false;
                }
            for (long j = t + 1; j < c; ++j)
                if (a(t, j) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                    col_op(a, v, j, t, q);
                    if (a(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            bool rowZero = true, colZero = true;
            for (long i = t + 1; i < r; ++i) colZero = colZero && a(i, t) == 0;
            for (long j = t + 1; j < c; ++j) rowZero = rowZero && a(t, j) == 0;
            if (rowZero && colZero) break;
        }
        if (a(t, t) == 0) break;
    }

    // Divisibility chain: if d_t does not divide d_{t+1}, fold row t+1 into row t
    // and re-clear; gcd strictly decreases the pivot, so this terminates.
    for (long t = 0; t + 1 < k; ++t) {
        while (a(t, t) != 0 && a(t + 1, t + 1) != 0 && a(t + 1, t + 1) % a(t, t) != 0) {
            for (long j = 0; j < c; ++j) a(t, j) += a(t + 1, j);
            for (long j = 0; j < r; ++j) u(t, j) += u(t + 1, j);
            // local re-elimination of the 2x2 block at (t, t)
            for (long s = t; s < k; ++s) {
                while (true) {
                    long pi = -1, pj = -1;
                    mpz_class best = 0;
                    for (long i = s; i < r; ++i)
                        for (long j = s; j < c; ++j)
                            if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < best)) {
                                best = abs(a(i, j)); pi = i; pj = j;
                            }
                    if (pi < 0) break;
                    swap_rows(a, s, pi); swap_rows(u, s, pi);
                    swap_cols(a, s, pj); swap_cols(v, s, pj);
                    bool clean = true;
                    for (long i = s + 1; i < r; ++i)
                        if (a(i, s) != 0) {
                            mpz_class q;
                            mpz_fdiv_q(q.get_mpz_t(), a(i, s).get_mpz_t(), a(s, s).get_mpz_t());
                            row_op(a, u, i, s, q);
                            if (a(i, s) != 0) clean = false;
                        }
                    for (long j = s + 1; j < c; ++j)
                        if (a(s, j) != 0) {
                            mpz_class q;
                            mpz_fdiv_q(q.get_mpz_t(), a(s, j).get_mpz_t(), a(s, s).get_mpz_t());
                            col_op(a, v, j, s, q);
                            if (a(s, j) != 0) clean = false;
                        }
                    if (clean) {
                        bool rowZero = true, colZero = true;
                        for (long i = s + 1; i < r; ++i) colZero = colZero && a(i, s) == 0;
                        for (long j = s + 1; j < c; ++j) rowZero = rowZero && a(s, j) == 0;
                        if (rowZero && colZero) break;
                    }
                }
                if (a(s, s) == 0) break;
            }
        }
    }

    for (long t = 0; t < k; ++t)
        if (a(t, t) < 0) {
            for (long j = 0; j < c; ++j) a(t, j) = -a(t, j);
            for (long j = 0; j < r; ++j) u(t, j) = -u(t, j);
        }

    SmithResult res;
    res.U = u;
    res.V = v;
    res.diag.resize(static_cast<size_t>(k));
    for (long t = 0; t < k; ++t) {
        res.diag[static_cast<size_t>(t)] = a(t, t);
        if (a(t, t) != 0) res.rank = static_cast<int>(t) + 1;
    }

    // The transforms are cheap to verify; a silent error here would poison
    // every downstream rank, so always check.
    ZMat check = mat_mul(mat_mul(u, a0), v);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) {
            mpz_class want = (i == j && i < k) ? res.diag[static_cast<size_t>(i)] : mpz_class(0);
            if (check(i, j) != want) throw std::logic_error("smith_normal_form: verification failed");
        }
    return res;
}

// --------------------------------------------------------------- Hermite form

HermiteResult row_hermite_form(const ZMat& a0) {
    ZMat h = a0;
    const long r = h.rows(), c = h.cols();
    long row = 0;
    std::vector<int> pivots;
    for (long col = 0; col < c && row < r; ++col) {
        // gcd-combine everything at or below `row` in this column into `row`
        while (true) {
            long best = -1;
            for (long i = row; i < r; ++i)
                if (h(i, col) != 0 && (best < 0 || abs(h(i, col)) < abs(h(best, col))))
                    best = i;
            if (best < 0) break;
            if (best != row) h.row(row).swap(h.row(best));
            bool done = true;
            for (long i = row + 1; i < r; ++i)
                if (h(i, col) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
                    for (long j = 0; j < c; ++j) h(i, j) -= q * h(row, j);
                    if (h(i, col) != 0) done = false;
                }
            if (done) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0)
            for (long j = 0; j < c; ++j) h(row, j) = -h(row, j);
        for (long i = 0; i < row; ++i) { // canonicalize entries above the pivot
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
            if (q != 0)
                for (long j = 0; j < c; ++j) h(i, j) -= q * h(row, j);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    HermiteResult res;
    res.basis = h.topRows(row);
    res.pivotCols = std::move(pivots);
    return res;
}

std::vector<mpz_class> reduce_mod_row_lattice(const HermiteResult& h, std::vector<mpz_class> v) {
    for (size_t t = 0; t < h.pivotCols.size(); ++t) {
        long col = h.pivotCols[t];
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v[static_cast<size_t>(col)].get_mpz_t(),
                   h.basis(static_cast<long>(t), col).get_mpz_t());
        if (q != 0)
            for (long j = 0; j < h.basis.cols(); ++j)
                v[static_cast<size_t>(j)] -= q * h.basis(static_cast<long>(t), j);
    }
    return v;
}

// ------------------------------------------------------- rational elimination

RrefResult rref(QMat a) {
    const long r = a.rows(), c = a.cols();
    RrefResult res;
    long row = 0;
    for (long col = 0; col < c && row < r; ++col) {
        long piv = -1;
        for (long i = row; i < r; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) a.row(row).swap(a.row(piv));
        mpq_class inv = a(row, col);
        for (long j = col; j < c; ++j) a(row, j) = canonical(a(row, j) / inv);
        for (long i = 0; i < r; ++i)
            if (i != row && a(i, col) != 0) {
                mpq_class f = a(i, col);
                for (long j = col; j < c; ++j) a(i, j) = canonical(a(i, j) - f * a(row, j));
            }
        res.pivotCols.push_back(static_cast<int>(col));
        ++row;
    }
    res.m = std::move(a);
    res.rank = static_cast<int>(row);
    return res;
}

long rational_rank(const QMat& a) { return rref(a).rank; }

QMat rational_kernel(const QMat& a) {
    RrefResult r = rref(a);
    const long c = a.cols();
    std::vector<bool> isPivot(static_cast<size_t>(c), false);
    for (int p : r.pivotCols) isPivot[static_cast<size_t>(p)] = true;
    QMat k(c, c - r.rank);
    k.setConstant(mpq_class(0));
    long idx = 0;
    for (long j = 0; j < c; ++j) {
        if (isPivot[static_cast<size_t>(j)]) continue;
        for (int t = 0; t < r.rank; ++t)
            k(r.pivotCols[static_cast<size_t>(t)], idx) = -r.m(t, j);
        k(j, idx) = 1;
        ++idx;
    }
    return k;
}

std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
    const long r = a.rows(), c = a.cols();
    QMat aug(r, c + 1);
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < c; ++j) aug(i, j) = a(i, j);
        aug(i, c) = b(i);
    }
    RrefResult rr = rref(aug);
    for (int p : rr.pivotCols)
        if (p == static_cast<int>(c)) return std::nullopt; // pivot in rhs column
    QVec x(c);
    x.setConstant(mpq_class(0));
    for (size_t t = 0; t < rr.pivotCols.size(); ++t)
        x(rr.pivotCols[t]) = rr.m(static_cast<long>(t), c);
    return x;
}

mpq_class det_q(const QMat& a0) {
    QMat a = a0;
    const long n = a.rows();
    if (n != a.cols()) throw std::logic_error("det_q: non-square");
    mpq_class det = 1;
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long i = col; i < n; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) { a.row(col).swap(a.row(piv)); det = -det; }
        det *= a(col, col);
        mpq_class inv = a(col, col);
        for (long i = col + 1; i < n; ++i)
            if (a(i, col) != 0) {
                mpq_class f = canonical(a(i, col) / inv);
                for (long j = col; j < n; ++j) a(i, j) = canonical(a(i, j) - f * a(col, j));
            }
    }
    return canonical(det);
}

ZMat integer_kernel(const ZMat& a) {
    SmithResult s = smith_normal_form(a);
    const long c = a.cols();
    ZMat k(c, c - s.rank);
    for (long j = 0; j < c - s.rank; ++j)
        for (long i = 0; i < c; ++i) k(i, j) = s.V(i, s.rank + j);
    return k;
}

ZMat unimodular_inverse(const ZMat& u) {
    const long n = u.rows();
    QMat q(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) q(i, j) = mpq_class(u(i, j));
    // u^{-1} column by column
    ZMat inv(n, n);
    for (long j = 0; j < n; ++j) {
        QVec e(n);
        e.setConstant(mpq_class(0));
        e(j) = 1;
        auto x = solve_rational(q, e);
        if (!x) throw std::logic_error("unimodular_inverse: singular input");
        for (long i = 0; i < n; ++i) {
            mpq_class v = canonical((*x)(i));
            if (v.get_den() != 1) throw std::logic_error("unimodular_inverse: not unimodular");
            inv(i, j) = v.get_num();
        }
    }
    return inv;
}

ZMat complete_to_unimodular(const ZMat& rows) {
    const long k = rows.rows(), d = rows.cols();
    if (k == 0) {
        return ZMat::Identity(d, d);
    }
    SmithResult s = smith_normal_form(rows);
    if (s.rank != k) throw std::logic_error("complete_to_unimodular: dependent rows");
    for (int i = 0; i < k; ++i)
        if (s.diag[static_cast<size_t>(i)] != 1)
            throw std::logic_error("complete_to_unimodular: row lattice not saturated");
    // U*rows*V = [I 0]  =>  rows = U^{-1} [I 0] V^{-1}; the first k rows of
    // V^{-1} span the same lattice as the rows, and V^{-1} is unimodular.
    ZMat w = unimodular_inverse(s.V);
    // determinant sign fix: flip the last row if needed
    QMat q(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) q(i, j) = mpq_class(w(i, j));
    if (det_q(q) < 0)
        for (long j = 0; j < d; ++j) w(d - 1, j) = -w(d - 1, j);
    return w;
}

// ------------------------------------------------------------------- simplex

namespace {

// Dense two-phase primal simplex, Bland's rule throughout (anti-cycling).
// Maximizes c.x subject to T x = b, x >= 0.
struct Tableau {
    QMat t;                  // m x (n+1), last column is rhs
    std::vector<int> basis;  // basis[i] = column basic in row i

    long rows() const { return t.rows(); }
    long cols() const { return t.cols() - 1; }

    void pivot(long r, long c) {
        mpq_class p = t(r, c);
        for (long j = 0; j <= cols(); ++j) t(r, j) = canonical(t(r, j) / p);
        for (long i = 0; i < rows(); ++i) {
            if (i == r || t(i, c) == 0) continue;
            mpq_class f = t(i, c);
            for (long j = 0; j <= cols(); ++j) t(i, j) = canonical(t(i, j) - f * t(r, j));
        }
        basis[static_cast<size_t>(r)] = static_cast<int>(c);
    }

    // Maximize over the given cost vector (reduced against the current basis
    // inside); returns false when unbounded. `allowed` masks usable columns.
    bool optimize(const QVec& cost, const std::vector<bool>& allowed, mpq_class& value,
                  QVec& reduced) {
        const long m = rows(), n = cols();
        reduced = QVec(n);
        while (true) {
            // reduced costs  c_j - c_B . (column j)
            for (long j = 0; j < n; ++j) {
                mpq_class rj = cost(j);
                for (long i = 0; i < m; ++i) {
                    int bi = basis[static_cast<size_t>(i)];
                    if (cost(bi) != 0) rj -= cost(bi) * t(i, j);
                }
                reduced(j) = canonical(rj);
            }
            long enter = -1;
            for (long j = 0; j < n; ++j)
                if (allowed[static_cast<size_t>(j)] && reduced(j) > 0) { enter = j; break; }
            if (enter < 0) break;
            long leave = -1;
            mpq_class bestRatio;
            for (long i = 0; i < m; ++i) {
                if (t(i, enter) <= 0) continue;
                mpq_class ratio = canonical(t(i, n) / t(i, enter));
                if (leave < 0 || ratio < bestRatio ||
                    (ratio == bestRatio &&
                     basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    leave = i;
                    bestRatio = ratio;
                }
            }
            if (leave < 0) return false; // unbounded direction
            pivot(leave, enter);
        }
        value = 0;
        for (long i = 0; i < m; ++i) value += cost(basis[static_cast<size_t>(i)]) * t(i, n);
        value = canonical(value);
        return true;
    }
};

} // namespace

LPResult lp_solve(const QMat& a, const QVec& b, const QVec& c) {
    const long m = a.rows(), n = a.cols();
    Tableau tab;
    tab.t = QMat(m, n + m + 1);
    tab.t.setConstant(mpq_class(0));
    for (long i = 0; i < m; ++i) {
        bool flip = b(i) < 0;
        for (long j = 0; j < n; ++j) tab.t(i, j) = flip ? mpq_class(-a(i, j)) : a(i, j);
        tab.t(i, n + i) = 1; // artificial
        tab.t(i, n + m) = flip ? mpq_class(-b(i)) : b(i);
        tab.basis.push_back(static_cast<int>(n + i));
    }

    LPResult res;

    // Phase I: maximize minus the sum of artificials.
    QVec costI(n + m);
    for (long j = 0; j < n; ++j) costI(j) = 0;
    for (long j = n; j < n + m; ++j) costI(j) = -1;
    std::vector<bool> allowAll(static_cast<size_t>(n + m), true);
    mpq_class valI;
    QVec reduced;
    tab.optimize(costI, allowAll, valI, reduced); // bounded by construction
    if (valI != 0) {
        res.status = LPStatus::Infeasible;
        return res;
    }
    // Drive leftover artificials out of the basis where possible.
    for (long i = 0; i < m; ++i) {
        if (tab.basis[static_cast<size_t>(i)] < n) continue;
        long enter = -1;
        for (long j = 0; j < n; ++j)
            if (tab.t(i, j) != 0) { enter = j; break; }
        if (enter >= 0) tab.pivot(i, enter);
        // else: redundant row; harmless to leave (its rhs is zero).
    }

    // Phase II on original columns only.
    QVec costII(n + m);
    for (long j = 0; j < n; ++j) costII(j) = c(j);
    for (long j = n; j < n + m; ++j) costII(j) = 0;
    std::vector<bool> allowReal(static_cast<size_t>(n + m), false);
    for (long j = 0; j < n; ++j) allowReal[static_cast<size_t>(j)] = true;
    mpq_class valII;
    if (!tab.optimize(costII, allowReal, valII, reduced)) {
        res.status = LPStatus::Unbounded;
        return res;
    }
    res.status = LPStatus::Optimal;
    res.value = valII;
    res.x = QVec(n);
    res.x.setConstant(mpq_class(0));
    for (long i = 0; i < m; ++i)
        if (tab.basis[static_cast<size_t>(i)] < n)
            res.x(tab.basis[static_cast<size_t>(i)]) = tab.t(i, n + m);
    return res;
}

bool lp_feasible(const QMat& a, const QVec& b) {
    QVec c(a.cols());
    c.setConstant(mpq_class(0));
    return lp_solve(a, b, c).status == LPStatus::Optimal;
}

bool cone_contains(const std::vector<QVec>& generators, const QVec& p) {
    const long d = p.size();
    if (generators.empty()) {
        for (long i = 0; i < d; ++i)
            if (p(i) != 0) return false;
        return true;
    }
    QMat a(d, static_cast<long>(generators.size()));
    for (size_t j = 0; j < generators.size(); ++j)
        for (long i = 0; i < d; ++i) a(i, static_cast<long>(j)) = generators[j](i);
    return lp_feasible(a, p);
}

bool cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& p) {
    std::vector<QVec> g;
    g.reserve(generators.size());
    for (const auto& v : generators) g.push_back(to_qvec(v));
    return cone_contains(g, to_qvec(p));
}

std::optional<QVec> exposing_normal(const std::vector<LatticeVector>& generators,
                                    const std::vector<int>& faceIndices) {
    if (generators.empty()) return std::nullopt;
    const long d = static_cast<long>(generators[0].size());
    std::vector<bool> inFace(generators.size(), false);
    for (int i : faceIndices) inFace[static_cast<size_t>(i)] = true;

    // unknowns: u = up - um (2d columns), then one slack per non-face generator
    long nOther = 0;
    for (bool f : inFace) nOther += f ? 0 : 1;
    const long ncols = 2 * d + nOther;
    const long nrows = static_cast<long>(generators.size());
    QMat a(nrows, ncols);
    a.setConstant(mpq_class(0));
    QVec b(nrows);
    long slack = 0;
    for (long i = 0; i < nrows; ++i) {
        for (long j = 0; j < d; ++j) {
            mpq_class g(static_cast<long>(generators[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            a(i, j) = g;
            a(i, d + j) = -g;
        }
        if (inFace[static_cast<size_t>(i)]) {
            b(i) = 0;
        } else {
            a(i, 2 * d + slack) = -1; // <u, g> - s = 1
            b(i) = 1;
            ++slack;
        }
    }
    QVec c(ncols);
    c.setConstant(mpq_class(0));
    LPResult r = lp_solve(a, b, c);
    if (r.status != LPStatus::Optimal) return std::nullopt;
    QVec u(d);
    for (long j = 0; j < d; ++j) u(j) = canonical(r.x(j) - r.x(d + j));
    return u;
}

mpq_class max_barycentric_coefficient(const std::vector<LatticeVector>& generators,
                                      const QVec& p, int idx) {
    const long d = p.size();
    QMat a(d, static_cast<long>(generators.size()));
    for (size_t j = 0; j < generators.size(); ++j)
        for (long i = 0; i < d; ++i)
            a(i, static_cast<long>(j)) = mpq_class(static_cast<long>(generators[j][static_cast<size_t>(i)]));
    QVec c(static_cast<long>(generators.size()));
    c.setConstant(mpq_class(0));
    c(idx) = 1;
    LPResult r = lp_solve(a, p, c);
    if (r.status == LPStatus::Infeasible)
        throw std::logic_error("max_barycentric_coefficient: point not in cone");
    if (r.status == LPStatus::Unbounded)
        throw std::logic_error("max_barycentric_coefficient: cone not pointed");
    return r.value;
}

} // namespace coxhodge
