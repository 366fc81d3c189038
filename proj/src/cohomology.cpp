#include "coxhodge/cohomology.hpp"

#include "coxhodge/errors.hpp"
#include "coxhodge/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace coxhodge {

namespace {

[[noreturn]] void fail(const char* kind, const std::string& msg) {
    throw MathError(kind, msg);
}

std::string cone_label(const Cone& c) {
    std::string s = "{";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "}";
}

void enumerate_in_cone(const Cone& c, size_t pos, int left, LatticeVector& cur,
                       std::set<LatticeVector>& out) {
    if (pos + 1 == c.size()) {
        cur[c[pos]] = left;
        out.insert(cur);
        cur[c[pos]] = 0;
        return;
    }
    for (int t = 0; t <= left; ++t) {
        cur[c[pos]] = t;
        enumerate_in_cone(c, pos + 1, left - t, cur, out);
        cur[c[pos]] = 0;
    }
}

// Monomials in the ray classes of total degree k whose support spans a cone
// (equivalently, lies inside some maximal cone), sorted.
std::vector<LatticeVector> sr_free_monomials(const Fan& f, int k) {
    std::set<LatticeVector> out;
    LatticeVector cur(f.rays.size(), 0);
    for (const Cone& c : f.maxCones)
        enumerate_in_cone(c, 0, k, cur, out);
    return {out.begin(), out.end()};
}

int index_of(const std::vector<LatticeVector>& basis, const LatticeVector& v) {
    auto it = std::lower_bound(basis.begin(), basis.end(), v);
    if (it == basis.end() || *it != v) return -1;
    return static_cast<int>(it - basis.begin());
}

// Rows spanning the degree-|basis| piece of the linear-relation ideal:
// every product of sum_i <m, e_i> D_i with a monomial one degree down,
// projected to the Stanley-Reisner-free basis.
QMat relation_rows(const Fan& f, const std::vector<LatticeVector>& lower,
                   const std::vector<LatticeVector>& basis) {
    int rows = static_cast<int>(lower.size()) * f.dim;
    QMat rel = QMat::Zero(rows, static_cast<int>(basis.size()));
    int r = 0;
    for (const LatticeVector& a : lower)
        for (int j = 0; j < f.dim; ++j, ++r)
            for (size_t i = 0; i < f.rays.size(); ++i) {
                long long w = f.rays[i][j];
                if (w == 0) continue;
                LatticeVector b = a;
                ++b[i];
                int idx = index_of(basis, b);
                if (idx >= 0) rel(r, idx) += static_cast<long>(w);
            }
    return rel;
}

long rank_of(const QMat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return rational_rank(a);
}

// Dimension of the weight part contributed by the affine piece of the
// hypersurface: zero unless the Iitaka dimension is a+b+1, in which case it
// is the polynomial-part piece of the ample model in bidegree (a, b).
int gr_dim(const Fan& f, const Polynomial& g, int a, int b) {
    if (g.is_zero()) return 0;
    const Divisor& rep = g.degree.representative;
    int kappa = iitaka_dim(f, rep);
    if (kappa != a + b + 1) return 0;
    if (kappa == f.dim) {
        DivisorClass target =
            class_sub(f, class_scale(f, b + 1, g.degree), anticanonical_class(f));
        return quotient_piece(f, g, spec_J1(f), target, true).dim();
    }
    SemiampleAnalysis an = semiample_quotient(f, rep);
    Polynomial model = pushforward_polynomial(f, an, g);
    const Fan& qf = an.quotientFan;
    DivisorClass target =
        class_sub(qf, class_scale(qf, b + 1, model.degree), anticanonical_class(qf));
    return quotient_piece(qf, model, spec_J1(qf), target, true).dim();
}

// Residue Hodge dimension h^{a,b} of the hypersurface of g below the middle:
// its own affine contribution, the affine contributions of its ray strata,
// and recursion into 2-cone strata while the budget lasts.
int residue_dim(const Fan& f, const Polynomial& g, int a, int b, int depth,
                bool& unknown) {
    if (a < 0 || b < 0) return 0;
    if (g.is_zero()) {
        unknown = true;
        return 0;
    }
    int val = gr_dim(f, g, a, b);
    if (a >= 1 && b >= 1)
        for (int r = 0; r < static_cast<int>(f.rays.size()); ++r) {
            StarFan star = star_fan(f, {r});
            Polynomial gr = restrict_to_star(f, {r}, star, g);
            if (gr.is_zero())
                unknown = true;
            else
                val += gr_dim(star.fan, gr, a - 1, b - 1);
        }
    if (a >= 2 && b >= 2)
        for (const Cone& tau : two_dimensional_cones(f)) {
            if (depth <= 0) {
                unknown = true;
                continue;
            }
            StarFan star = star_fan(f, tau);
            Polynomial gt = restrict_to_star(f, tau, star, g);
            val += residue_dim(star.fan, gt, a - 2, b - 2, depth - 1, unknown);
        }
    return val;
}

} // namespace

std::vector<int> toric_cohomology_dims(const Fan& f, int maxDegree) {
    if (maxDegree < 0)
        throw std::logic_error("toric_cohomology_dims: negative degree bound");
    FanReport report = validate(f);
    if (!report.simplicial)
        fail("NonSimplicialCone", "divisor-class presentation needs a simplicial fan");
    if (!report.complete)
        fail("FanNotComplete", "divisor-class presentation needs a complete fan");
    std::vector<int> dims;
    std::vector<LatticeVector> lower;
    for (int k = 0; k <= maxDegree; ++k) {
        std::vector<LatticeVector> basis = sr_free_monomials(f, k);
        dims.push_back(static_cast<int>(basis.size()) -
                       static_cast<int>(rank_of(relation_rows(f, lower, basis))));
        lower = std::move(basis);
    }
    return dims;
}

std::vector<int> toric_part_of_hypersurface(const Fan& f, const DivisorClass& beta) {
    if (!is_semiample(f, beta.representative))
        fail("NotSemiample", "toric part needs a semiample hypersurface class");
    FanReport report = validate(f);
    if (!report.simplicial)
        fail("NonSimplicialCone", "divisor-class presentation needs a simplicial fan");
    if (!report.complete)
        fail("FanNotComplete", "divisor-class presentation needs a complete fan");

    std::vector<int> dims(f.dim, 0);
    dims[0] = 1; // the hypersurface is nonempty and connected
    std::vector<LatticeVector> basisK = sr_free_monomials(f, 1);
    for (int k = 1; k < f.dim; ++k) {
        std::vector<LatticeVector> basisUp = sr_free_monomials(f, k + 1);
        QMat rel = relation_rows(f, basisK, basisUp);
        QMat both = QMat::Zero(rel.rows() + static_cast<int>(basisK.size()),
                               static_cast<int>(basisUp.size()));
        both.topRows(rel.rows()) = rel;
        for (size_t t = 0; t < basisK.size(); ++t)
            for (size_t i = 0; i < f.rays.size(); ++i) {
                long long w = beta.representative[i];
                if (w == 0) continue;
                LatticeVector b = basisK[t];
                ++b[i];
                int idx = index_of(basisUp, b);
                if (idx >= 0)
                    both(rel.rows() + static_cast<int>(t), idx) += static_cast<long>(w);
            }
        dims[k] = static_cast<int>(rank_of(both) - rank_of(rel));
        basisK = std::move(basisUp);
    }
    return dims;
}

SigmaXData sigma_X_data(const Fan& f, const DivisorClass& beta) {
    SigmaXData out{semiample_quotient(f, beta.representative), {}};
    const SemiampleAnalysis& an = out.analysis;
    const Fan& qf = an.quotientFan;
    if (an.kappa < 2) return out;
    for (const Cone& c : two_dimensional_cones(qf)) {
        SigmaConeData data;
        data.quotientRays = c;
        for (int k = 0; k < static_cast<int>(f.rays.size()); ++k) {
            Cone small = smallest_containing_cone(f, an, {k});
            if (small.empty()) continue;
            bool inside = true;
            for (int r : small)
                inside = inside && std::binary_search(c.begin(), c.end(), r);
            if (inside) data.sigmaRays.push_back(k);
        }
        if (an.kappa == f.dim) {
            int k0 = -1, k1 = -1;
            for (int k = 0; k < static_cast<int>(f.rays.size()); ++k) {
                if (an.rayImage[k] == c[0]) k0 = k;
                if (an.rayImage[k] == c[1]) k1 = k;
            }
            if (k0 < 0 || k1 < 0)
                throw std::logic_error("sigma_X_data: quotient ray without a source ray");
            data.ordering = order_rays_in_2cone(f, f.rays[k0], f.rays[k1]);
        } else {
            data.ordering = order_rays_in_2cone(qf, qf.rays[c[0]], qf.rays[c[1]]);
        }
        Divisor ind(f.rays.size(), 0);
        for (int k : data.sigmaRays) ind[k] = 1;
        data.beta1 = divisor_class(f, ind);
        out.cones.push_back(std::move(data));
    }
    return out;
}

Polynomial pushforward_polynomial(const Fan& f, const SemiampleAnalysis& an,
                                  const Polynomial& p) {
    const Fan& qf = an.quotientFan;
    std::vector<std::pair<Monomial, GaussRat>> terms;
    for (const auto& [m, c] : p.terms)
        terms.emplace_back(pushforward_monomial(f, an, m), c);
    DivisorClass degree = terms.empty()
                              ? divisor_class(qf, an.pushforwardDivisor)
                              : degree_of_monomial(qf, terms.front().first);
    return make_polynomial(qf, degree, terms);
}

HodgeDecomposition middle_cohomology(const Fan& f, const Polynomial& poly,
                                     int recurseDepth, bool certify,
                                     int witnessKMax) {
    if (recurseDepth < 0)
        fail("RecursionDepthExceeded", "recursion budget must be nonnegative");
    const Divisor& rep = poly.degree.representative;
    if (!is_semiample(f, rep))
        fail("NotBigAndNef", "hypersurface class is not semiample, hence not big and nef");
    int d = f.dim;
    int kappa = iitaka_dim(f, rep);
    if (kappa != d)
        fail("NotBigAndNef", "hypersurface class has Iitaka dimension " +
                                 std::to_string(kappa) + " < " + std::to_string(d));

    HodgeDecomposition dec;
    dec.d = d;
    dec.beta = poly.degree;
    dec.toricDims = toric_part_of_hypersurface(f, poly.degree);
    dec.regularity = "assumed";
    if (certify && quasismooth_witness(f, poly, witnessKMax, IdealKind::J0).certified)
        dec.regularity = "certified";

    SigmaXData sx = sigma_X_data(f, poly.degree);
    DivisorClass beta0 = anticanonical_class(f);
    std::vector<Cone> twoCones; // strata sources, original fan
    if (d >= 5) twoCones = two_dimensional_cones(f);

    for (int q = 0; q < d; ++q) {
        HodgeGrade grade;
        grade.q = q;
        grade.p = d - 1 - q;

        HodgeSummand body;
        body.kind = HodgeLabel::Polynomial;
        body.label = "Polynomial(" + std::to_string(q) + ")";
        body.pieceDegree = class_sub(f, class_scale(f, q + 1, poly.degree), beta0);
        body.dim = quotient_piece(f, poly, spec_J1(f), body.pieceDegree, true).dim();
        grade.summands.push_back(std::move(body));

        if (q >= 1 && q <= d - 2)
            for (const SigmaConeData& sc : sx.cones) {
                int n = sc.ordering.interiorCount();
                if (n <= 0) continue;
                DivisorClass gamma = class_add(
                    f, class_sub(f, class_scale(f, q, poly.degree), beta0), sc.beta1);
                int dimPiece =
                    quotient_piece(f, poly, spec_Jsigma1(f, sc.sigmaRays), gamma, true)
                        .dim();
                for (int t = 1; t <= n; ++t) {
                    HodgeSummand s;
                    s.kind = HodgeLabel::SigmaPart;
                    s.sigmaRays = sc.sigmaRays;
                    s.interiorRay = sc.ordering.rayIndices[t];
                    s.pieceDegree = gamma;
                    s.dim = dimPiece;
                    s.label = "SigmaPart(sigma=" + cone_label(sc.sigmaRays) +
                              ", ray=" + std::to_string(s.interiorRay) + ")";
                    grade.summands.push_back(std::move(s));
                }
            }

        if (grade.p == q) {
            HodgeSummand s;
            s.kind = HodgeLabel::Toric;
            s.dim = dec.toricDims[q];
            s.label = "Toric(" + std::to_string(q) + "," + std::to_string(q) + ")";
            grade.summands.push_back(std::move(s));
        }

        if (d >= 5 && q >= 2 && q <= d - 3)
            for (const Cone& tau : twoCones) {
                HodgeSummand s;
                s.kind = HodgeLabel::Stratum;
                s.sigmaRays = tau;
                s.label = "Stratum(tau=" + cone_label(tau) + ")";
                if (recurseDepth == 0) {
                    s.unknown = true;
                } else {
                    StarFan star = star_fan(f, tau);
                    Polynomial gt = restrict_to_star(f, tau, star, poly);
                    bool unknown = false;
                    s.dim = residue_dim(star.fan, gt, grade.p - 2, q - 2,
                                        recurseDepth - 1, unknown);
                    s.unknown = unknown;
                }
                if (s.unknown) dec.strataComplete = false;
                if (d > 5) dec.strataBestEffort = true;
                grade.summands.push_back(std::move(s));
            }

        grade.total = 0;
        for (const HodgeSummand& s : grade.summands) grade.total += s.dim;
        dec.middle.push_back(std::move(grade));
    }
    return dec;
}

} // namespace coxhodge
