#include "coxhodge/divisors.hpp"

#include "coxhodge/errors.hpp"
#include "coxhodge/lattice_points.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace coxhodge {

namespace {

[[noreturn]] void fail(const char* kind, const std::string& msg) {
    throw MathError(kind, msg);
}

mpz_class zz(long long x) { return mpz_class(static_cast<long>(x)); }
mpq_class qq(long long x) { return mpq_class(static_cast<long>(x)); }

void check_length(const Fan& f, size_t got, const char* what) {
    if (got != f.rays.size())
        fail("LengthMismatch", std::string(what) + " has " + std::to_string(got) +
                                   " entries but the fan has " + std::to_string(f.rays.size()) +
                                   " rays");
}

// Rows are the images of the dual basis of M under m -> (<m, e_i>)_i, i.e.
// row j lists the j-th coordinates of all rays.
ZMat relation_rows(const Fan& f) {
    const int n = static_cast<int>(f.rays.size());
    ZMat r(f.dim, n);
    for (int j = 0; j < f.dim; ++j)
        for (int i = 0; i < n; ++i)
            r(j, i) = zz(f.rays[i][j]);
    return r;
}

Divisor to_divisor(const std::vector<mpz_class>& v) {
    Divisor out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p())
            throw std::logic_error("divisor coefficient overflows long long");
        out[i] = v[i].get_si();
    }
    return out;
}

LatticeVector apply_projection(const ZMat& p, const LatticeVector& v) {
    LatticeVector out(p.rows());
    for (int t = 0; t < p.rows(); ++t) {
        mpz_class s = 0;
        for (int j = 0; j < p.cols(); ++j)
            s += p(t, j) * zz(v[j]);
        if (!s.fits_slong_p())
            throw std::logic_error("projected coordinate overflows long long");
        out[t] = s.get_si();
    }
    return out;
}

bool is_zero_vector(const LatticeVector& v) {
    for (long long x : v)
        if (x) return false;
    return true;
}

LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

// Coordinates of diff in the quotient dual lattice; asserts diff lies in the
// annihilator of N' (projection^T * result == diff).
LatticeVector quotient_dual_coords(const SemiampleAnalysis& an, const LatticeVector& diff) {
    const int d = static_cast<int>(diff.size());
    const int kappa = an.kappa;
    LatticeVector mbar(kappa);
    for (int t = 0; t < kappa; ++t) {
        mpz_class s = 0;
        for (int j = 0; j < d; ++j)
            s += zz(diff[j]) * an.dualLift(j, t);
        if (!s.fits_slong_p())
            throw std::logic_error("quotient dual coordinate overflows long long");
        mbar[t] = s.get_si();
    }
    for (int j = 0; j < d; ++j) {
        mpz_class s = 0;
        for (int t = 0; t < kappa; ++t)
            s += an.projection(t, j) * zz(mbar[t]);
        if (s != zz(diff[j]))
            throw std::logic_error("lattice point does not lie in the polytope's affine hull");
    }
    return mbar;
}

} // namespace

DivisorClass divisor_class(const Fan& f, const Divisor& coeffs) {
    check_length(f, coeffs.size(), "divisor");
    HermiteResult h = row_hermite_form(relation_rows(f));
    std::vector<mpz_class> v(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        v[i] = zz(coeffs[i]);
    DivisorClass out;
    out.representative = coeffs;
    out.canonicalForm = to_divisor(reduce_mod_row_lattice(h, std::move(v)));
    return out;
}

DivisorClass class_add(const Fan& f, const DivisorClass& a, const DivisorClass& b) {
    check_length(f, a.representative.size(), "divisor");
    check_length(f, b.representative.size(), "divisor");
    Divisor sum(a.representative.size());
    for (size_t i = 0; i < sum.size(); ++i)
        sum[i] = a.representative[i] + b.representative[i];
    return divisor_class(f, sum);
}

DivisorClass class_sub(const Fan& f, const DivisorClass& a, const DivisorClass& b) {
    check_length(f, a.representative.size(), "divisor");
    check_length(f, b.representative.size(), "divisor");
    Divisor diff(a.representative.size());
    for (size_t i = 0; i < diff.size(); ++i)
        diff[i] = a.representative[i] - b.representative[i];
    return divisor_class(f, diff);
}

DivisorClass class_scale(const Fan& f, long long k, const DivisorClass& a) {
    check_length(f, a.representative.size(), "divisor");
    Divisor scaled(a.representative.size());
    for (size_t i = 0; i < scaled.size(); ++i)
        scaled[i] = k * a.representative[i];
    return divisor_class(f, scaled);
}

DivisorClass degree_of_monomial(const Fan& f, const LatticeVector& exponents) {
    check_length(f, exponents.size(), "exponent vector");
    return divisor_class(f, Divisor(exponents.begin(), exponents.end()));
}

DivisorClass anticanonical_class(const Fan& f) {
    return divisor_class(f, Divisor(f.rays.size(), 1));
}

SupportFunctionData cartier_data(const Fan& f, const Divisor& a) {
    check_length(f, a.size(), "divisor");
    SupportFunctionData out;
    out.reserve(f.maxCones.size());
    for (size_t s = 0; s < f.maxCones.size(); ++s) {
        const Cone& c = f.maxCones[s];
        QMat rows(static_cast<int>(c.size()), f.dim);
        QVec rhs(static_cast<int>(c.size()));
        for (size_t r = 0; r < c.size(); ++r) {
            for (int j = 0; j < f.dim; ++j)
                rows(static_cast<int>(r), j) = qq(f.rays[c[r]][j]);
            rhs(static_cast<int>(r)) = qq(-a[c[r]]);
        }
        auto sol = solve_rational(rows, rhs);
        if (!sol)
            fail("NotCartier", "no linear function agrees with the divisor on maximal cone #" +
                                   std::to_string(s));
        LatticeVector m(f.dim);
        for (int j = 0; j < f.dim; ++j) {
            if ((*sol)(j).get_den() != 1)
                fail("NotCartier", "the linear function on maximal cone #" + std::to_string(s) +
                                       " has fractional coordinates");
            if (!(*sol)(j).get_num().fits_slong_p())
                throw std::logic_error("support function coordinate overflows long long");
            m[j] = (*sol)(j).get_num().get_si();
        }
        out.push_back(std::move(m));
    }
    return out;
}

bool is_semiample(const Fan& f, const Divisor& a) {
    SupportFunctionData mS = cartier_data(f, a);
    for (const LatticeVector& m : mS)
        for (size_t j = 0; j < f.rays.size(); ++j)
            if (dot_z(m, f.rays[j]) < zz(-a[j]))
                return false;
    return true;
}

int iitaka_dim(const Fan& f, const Divisor& a) {
    if (!is_semiample(f, a))
        fail("NotSemiample", "Iitaka dimension is only defined for semiample divisors");
    SupportFunctionData mS = cartier_data(f, a);
    if (mS.empty())
        return 0;
    QMat diffs(static_cast<int>(mS.size()) - 1, f.dim);
    for (size_t s = 1; s < mS.size(); ++s)
        for (int j = 0; j < f.dim; ++j)
            diffs(static_cast<int>(s) - 1, j) = qq(mS[s][j] - mS[0][j]);
    return static_cast<int>(rational_rank(diffs));
}

SemiampleAnalysis semiample_quotient(const Fan& f, const Divisor& a) {
    SupportFunctionData mS = cartier_data(f, a);
    for (const LatticeVector& m : mS)
        for (size_t j = 0; j < f.rays.size(); ++j)
            if (dot_z(m, f.rays[j]) < zz(-a[j]))
                fail("NotSemiample", "the support function is not convex along ray #" +
                                         std::to_string(j));

    const int d = f.dim;
    const int n = static_cast<int>(f.rays.size());
    SemiampleAnalysis an;
    an.divisor = a;
    an.mSigma = mS;

    std::map<LatticeVector, std::vector<int>> groups;
    for (size_t s = 0; s < mS.size(); ++s)
        groups[mS[s]].push_back(static_cast<int>(s));
    for (const auto& [v, g] : groups)
        an.vertices.push_back(v);
    an.mRef = an.vertices.front();

    ZMat diffRows(static_cast<int>(an.vertices.size()) - 1, d);
    for (size_t t = 1; t < an.vertices.size(); ++t)
        for (int j = 0; j < d; ++j)
            diffRows(static_cast<int>(t) - 1, j) = zz(an.vertices[t][j] - an.vertices[0][j]);
    an.nPrimeBasis = integer_kernel(diffRows);
    an.kappa = d - static_cast<int>(an.nPrimeBasis.cols());

    SmithResult snf = smith_normal_form(an.nPrimeBasis);
    for (const mpz_class& s : snf.diag)
        if (s != 1)
            throw std::logic_error("kernel basis is not saturated");
    an.projection = snf.U.bottomRows(an.kappa);
    an.dualLift = unimodular_inverse(snf.U).rightCols(an.kappa);

    // Lattice points of the polytope { m : <m, e_i> >= -a_i }.
    {
        ZMat A(n, d);
        std::vector<mpz_class> b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < d; ++j)
                A(i, j) = zz(f.rays[i][j]);
            b[i] = zz(-a[i]);
        }
        an.latticePoints = lattice_points(A, b);
    }

    // Glue: per support-function value, the cone spanned by the images of
    // all rays of its maximal cones, presented by its extreme generators.
    std::vector<LatticeVector> rayImg(n);
    for (int i = 0; i < n; ++i)
        rayImg[i] = apply_projection(an.projection, f.rays[i]);

    std::vector<std::vector<LatticeVector>> gluedGens;
    std::set<LatticeVector> allRays;
    for (const auto& [v, g] : groups) {
        std::set<LatticeVector> prims;
        for (int s : g)
            for (int i : f.maxCones[s])
                if (!is_zero_vector(rayImg[i]))
                    prims.insert(primitive(rayImg[i]));
        std::vector<LatticeVector> cand(prims.begin(), prims.end());
        std::vector<LatticeVector> extreme;
        for (size_t k = 0; k < cand.size(); ++k) {
            std::vector<LatticeVector> others;
            for (size_t l = 0; l < cand.size(); ++l)
                if (l != k)
                    others.push_back(cand[l]);
            if (!cone_contains(others, cand[k]))
                extreme.push_back(cand[k]);
        }
        for (const LatticeVector& r : extreme)
            allRays.insert(r);
        gluedGens.push_back(std::move(extreme));
    }

    an.quotientFan.dim = an.kappa;
    an.quotientFan.rays.assign(allRays.begin(), allRays.end());
    std::map<LatticeVector, int> rayIndex;
    for (size_t r = 0; r < an.quotientFan.rays.size(); ++r)
        rayIndex[an.quotientFan.rays[r]] = static_cast<int>(r);
    for (const auto& gens : gluedGens) {
        Cone c;
        for (const LatticeVector& g : gens)
            c.push_back(rayIndex.at(g));
        std::sort(c.begin(), c.end());
        an.quotientFan.maxCones.push_back(std::move(c));
    }

    // Check the glued fan against the normal fan of the polytope: at each
    // vertex the cone spanned by the images of the binding rays must agree
    // with the glued cone (mutual membership of generators).
    {
        size_t group = 0;
        for (const auto& [v, g] : groups) {
            std::set<LatticeVector> binding;
            for (int i = 0; i < n; ++i)
                if (dot_z(v, f.rays[i]) == zz(-a[i]) && !is_zero_vector(rayImg[i]))
                    binding.insert(primitive(rayImg[i]));
            std::vector<LatticeVector> bind(binding.begin(), binding.end());
            for (const LatticeVector& x : gluedGens[group])
                if (!cone_contains(bind, x))
                    throw std::logic_error("glued cone exceeds the polytope's normal cone");
            for (const LatticeVector& x : bind)
                if (!cone_contains(gluedGens[group], x))
                    throw std::logic_error("polytope normal cone exceeds the glued cone");
            ++group;
        }
    }

    // Pushforward divisor: cut the image polytope out by the quotient rays.
    std::vector<LatticeVector> vertImgs;
    for (const LatticeVector& v : an.vertices)
        vertImgs.push_back(quotient_dual_coords(an, subtract(v, an.mRef)));
    an.pushforwardDivisor.resize(an.quotientFan.rays.size());
    for (size_t r = 0; r < an.quotientFan.rays.size(); ++r) {
        mpz_class best;
        for (size_t t = 0; t < vertImgs.size(); ++t) {
            mpz_class val = dot_z(vertImgs[t], an.quotientFan.rays[r]);
            if (t == 0 || val < best)
                best = val;
        }
        best = -best;
        if (!best.fits_slong_p())
            throw std::logic_error("pushforward coefficient overflows long long");
        an.pushforwardDivisor[r] = best.get_si();
    }

    an.rayStatus.assign(n, false);
    an.rayImage.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (is_zero_vector(rayImg[i]))
            continue;
        auto it = rayIndex.find(primitive(rayImg[i]));
        if (it != rayIndex.end()) {
            an.rayStatus[i] = true;
            an.rayImage[i] = it->second;
        }
    }

    std::map<LatticeVector, int> groupOf;
    {
        int g = 0;
        for (const auto& [v, idxs] : groups)
            groupOf[v] = g++;
    }
    an.coneMap.resize(f.maxCones.size());
    for (size_t s = 0; s < f.maxCones.size(); ++s)
        an.coneMap[s] = an.quotientFan.maxCones[groupOf.at(mS[s])];

    return an;
}

Cone smallest_containing_cone(const Fan& f, const SemiampleAnalysis& an, const Cone& c) {
    for (int i : c)
        if (i < 0 || i >= static_cast<int>(f.rays.size()))
            fail("RayNotInCone", "ray index out of range");
    LatticeVector q(an.kappa, 0);
    for (int i : c) {
        LatticeVector img = apply_projection(an.projection, f.rays[i]);
        for (int t = 0; t < an.kappa; ++t)
            q[t] += img[t];
    }
    if (is_zero_vector(q))
        return {};
    for (const Cone& mc : an.quotientFan.maxCones) {
        std::vector<LatticeVector> gens;
        for (int r : mc)
            gens.push_back(an.quotientFan.rays[r]);
        if (!cone_contains(gens, q))
            continue;
        Cone face;
        for (size_t k = 0; k < gens.size(); ++k)
            if (max_barycentric_coefficient(gens, to_qvec(q), static_cast<int>(k)) > 0)
                face.push_back(mc[k]);
        return face;
    }
    throw std::logic_error("image point escapes the complete quotient fan");
}

LatticeVector pushforward_monomial(const Fan& f, const SemiampleAnalysis& an,
                                   const LatticeVector& exponents) {
    check_length(f, exponents.size(), "exponent vector");
    const int d = f.dim;
    const int n = static_cast<int>(f.rays.size());

    if (an.kappa == 0) {
        // Trivial class: the monomial must itself have degree zero.
        QMat rows(n, d);
        QVec rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < d; ++j)
                rows(i, j) = qq(f.rays[i][j]);
            rhs(i) = qq(exponents[i]);
        }
        auto sol = solve_rational(rows, rhs);
        bool ok = sol.has_value();
        if (ok)
            for (int j = 0; j < d; ++j)
                if ((*sol)(j).get_den() != 1)
                    ok = false;
        if (!ok)
            fail("DegreeNotMultipleOfD",
                 "the divisor class is trivial but the monomial degree is not");
        return {};
    }

    QMat rows(n, d + 1);
    QVec rhs(n);
    for (int i = 0; i < n; ++i) {
        rows(i, 0) = qq(an.divisor[i]);
        for (int j = 0; j < d; ++j)
            rows(i, 1 + j) = qq(f.rays[i][j]);
        rhs(i) = qq(exponents[i]);
    }
    if (rational_rank(rows) != d + 1)
        throw std::logic_error("degree system is rank-deficient for a positive-kappa divisor");
    auto sol = solve_rational(rows, rhs);
    if (!sol)
        fail("DegreeNotMultipleOfD", "monomial degree is not a multiple of the divisor class");
    for (int j = 0; j <= d; ++j)
        if ((*sol)(j).get_den() != 1)
            fail("DegreeNotMultipleOfD", "monomial degree is not an integer multiple of the class");
    mpz_class pz = (*sol)(0).get_num();
    if (pz < 0)
        fail("DegreeNotMultipleOfD", "monomial degree is a negative multiple of the class");
    long long p = pz.get_si();
    LatticeVector m(d);
    for (int j = 0; j < d; ++j)
        m[j] = (*sol)(1 + j).get_num().get_si();

    LatticeVector diff(d);
    for (int j = 0; j < d; ++j)
        diff[j] = m[j] - p * an.mRef[j];
    LatticeVector mbar = quotient_dual_coords(an, diff);

    LatticeVector out(an.quotientFan.rays.size());
    for (size_t r = 0; r < an.quotientFan.rays.size(); ++r) {
        mpz_class val = zz(p) * zz(an.pushforwardDivisor[r]) +
                        dot_z(mbar, an.quotientFan.rays[r]);
        if (val < 0 || !val.fits_slong_p())
            throw std::logic_error("pushforward monomial has an invalid exponent");
        out[r] = val.get_si();
    }
    return out;
}

Divisor restricted_divisor(const Fan& f, const Cone& c, const StarFan& star, const Divisor& a) {
    SupportFunctionData mS = cartier_data(f, a);
    int tau = -1;
    for (size_t s = 0; s < f.maxCones.size(); ++s)
        if (std::includes(f.maxCones[s].begin(), f.maxCones[s].end(), c.begin(), c.end())) {
            tau = static_cast<int>(s);
            break;
        }
    if (tau < 0)
        fail("ConeNotInFan", "the cone is not a face of any maximal cone");

    Divisor out(star.fan.rays.size());
    for (size_t r = 0; r < star.fan.rays.size(); ++r) {
        int k = star.sourceRay[r];
        mpz_class shifted = zz(a[k]) + dot_z(mS[tau], f.rays[k]);
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(),
                    star.scale[r].get_mpz_t());
        if (rem != 0)
            throw std::logic_error("restricted coefficient is not integral");
        if (!q.fits_slong_p())
            throw std::logic_error("restricted coefficient overflows long long");
        out[r] = q.get_si();
    }
    return out;
}

} // namespace coxhodge
