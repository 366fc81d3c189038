#include "coxhodge/lattice_points.hpp"

#include "coxhodge/errors.hpp"

#include <algorithm>
#include <set>

namespace coxhodge {

namespace {

// One inequality sum_j row[j]*x_j >= row[d] over the first `vars` variables.
using Row = std::vector<mpz_class>;

// Divide out the gcd of the variable coefficients, rounding the bound up
// (valid for integer solutions).  Returns false for a constant row, after
// checking it; a violated constant row throws EmptyMarker via flag.
bool normalize_row(Row& row, long vars, bool& infeasible) {
    mpz_class g = 0;
    for (long j = 0; j < vars; ++j) g = gcd(g, row[static_cast<size_t>(j)]);
    if (g == 0) {
        if (row[static_cast<size_t>(vars)] > 0) infeasible = true;
        return false;
    }
    if (g > 1) {
        for (long j = 0; j < vars; ++j) row[static_cast<size_t>(j)] /= g;
        mpz_class b;
        mpz_cdiv_q(b.get_mpz_t(), row[static_cast<size_t>(vars)].get_mpz_t(), g.get_mpz_t());
        row[static_cast<size_t>(vars)] = b;
    }
    return true;
}

} // namespace

std::vector<LatticeVector> lattice_points(const ZMat& A, const std::vector<mpz_class>& b) {
    const long d = A.cols();
    const long n = A.rows();

    bool infeasible = false;
    std::set<Row> pool;
    for (long i = 0; i < n; ++i) {
        Row row(static_cast<size_t>(d) + 1);
        for (long j = 0; j < d; ++j) row[static_cast<size_t>(j)] = A(i, j);
        row[static_cast<size_t>(d)] = b[static_cast<size_t>(i)];
        if (normalize_row(row, d, infeasible)) pool.insert(std::move(row));
        if (infeasible) return {};
    }
    if (d == 0) return {LatticeVector{}}; // the origin of the zero lattice

    // systems[k] holds the rows whose highest-index nonzero coefficient is
    // x_{k-1}; eliminating x_{k-1} combines each positive/negative pair.
    std::vector<std::vector<Row>> systems(static_cast<size_t>(d) + 1);
    for (long k = d; k >= 1; --k) {
        std::set<Row> lower;
        std::vector<Row> pos, neg;
        for (const Row& row : pool) {
            const mpz_class& a = row[static_cast<size_t>(k - 1)];
            if (a == 0) lower.insert(row);
            else if (a > 0) pos.push_back(row);
            else neg.push_back(row);
        }
        systems[static_cast<size_t>(k)] = pos;
        systems[static_cast<size_t>(k)].insert(systems[static_cast<size_t>(k)].end(),
                                               neg.begin(), neg.end());
        for (const Row& p : pos)
            for (const Row& nn : neg) {
                Row comb(static_cast<size_t>(d) + 1, mpz_class(0));
                const mpz_class cp = -nn[static_cast<size_t>(k - 1)]; // > 0
                const mpz_class cn = p[static_cast<size_t>(k - 1)];   // > 0
                for (long j = 0; j <= d; ++j)
                    comb[static_cast<size_t>(j)] =
                        cp * p[static_cast<size_t>(j)] + cn * nn[static_cast<size_t>(j)];
                if (normalize_row(comb, k - 1, infeasible)) lower.insert(std::move(comb));
                if (infeasible) return {};
            }
        pool = std::move(lower);
    }

    std::vector<LatticeVector> out;
    std::vector<mpz_class> value(static_cast<size_t>(d));

    // Enumerate x_0, then x_1 given x_0, ...; at each level the surviving
    // rows give ceil/floor bounds once the prefix is substituted in.
    auto enumerate = [&](auto&& self, long k) -> void {
        bool hasLo = false, hasHi = false;
        mpz_class lo, hi;
        for (const Row& row : systems[static_cast<size_t>(k)]) {
            mpz_class rhs = row[static_cast<size_t>(d)];
            for (long j = 0; j < k - 1; ++j)
                rhs -= row[static_cast<size_t>(j)] * value[static_cast<size_t>(j)];
            const mpz_class& a = row[static_cast<size_t>(k - 1)];
            mpz_class bound;
            if (a > 0) {
                mpz_cdiv_q(bound.get_mpz_t(), rhs.get_mpz_t(), a.get_mpz_t());
                if (!hasLo || bound > lo) { lo = bound; hasLo = true; }
            } else {
                mpz_fdiv_q(bound.get_mpz_t(), rhs.get_mpz_t(), a.get_mpz_t());
                if (!hasHi || bound < hi) { hi = bound; hasHi = true; }
            }
        }
        if (!hasLo || !hasHi)
            fail("UnboundedRegion", "polyhedron has an unbounded direction in coordinate " +
                                        std::to_string(k - 1));
        for (mpz_class x = lo; x <= hi; ++x) {
            value[static_cast<size_t>(k - 1)] = x;
            if (k == d) {
                LatticeVector pt(static_cast<size_t>(d));
                for (long j = 0; j < d; ++j) {
                    if (!value[static_cast<size_t>(j)].fits_slong_p())
                        throw std::runtime_error("lattice point overflows machine integer");
                    pt[static_cast<size_t>(j)] = value[static_cast<size_t>(j)].get_si();
                }
                out.push_back(std::move(pt));
            } else {
                self(self, k + 1);
            }
        }
    };
    enumerate(enumerate, 1);
    return out;
}

} // namespace coxhodge
