#include "coxhodge/fan.hpp"

#include "coxhodge/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace coxhodge {

namespace {

std::vector<LatticeVector> generators_of(const Fan& f, const Cone& c) {
    std::vector<LatticeVector> g;
    g.reserve(c.size());
    for (int i : c) g.push_back(f.rays[static_cast<size_t>(i)]);
    return g;
}

ZMat rows_matrix(const std::vector<LatticeVector>& vs, long d) {
    ZMat m(static_cast<long>(vs.size()), d);
    for (size_t i = 0; i < vs.size(); ++i)
        for (long j = 0; j < d; ++j)
            m(static_cast<long>(i), j) = static_cast<long>(vs[i][static_cast<size_t>(j)]);
    return m;
}

QMat rows_matrix_q(const std::vector<LatticeVector>& vs, long d) {
    QMat m(static_cast<long>(vs.size()), d);
    for (size_t i = 0; i < vs.size(); ++i)
        for (long j = 0; j < d; ++j)
            m(static_cast<long>(i), j) = mpq_class(static_cast<long>(vs[i][static_cast<size_t>(j)]));
    return m;
}

long rank_of(const std::vector<LatticeVector>& vs, long d) {
    if (vs.empty()) return 0;
    return rational_rank(rows_matrix_q(vs, d));
}

bool is_pointed(const std::vector<LatticeVector>& gens) {
    return exposing_normal(gens, {}).has_value();
}

// Does any point satisfy x in cone(a), x in cone(b), <u, x> >= 1?
bool meets_beyond(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b,
                  const QVec& u, long d) {
    const long na = static_cast<long>(a.size()), nb = static_cast<long>(b.size());
    QMat m(d + 1, na + nb + 1);
    m.setConstant(mpq_class(0));
    QVec rhs(d + 1);
    for (long j = 0; j < d; ++j) rhs(j) = 0;
    for (long i = 0; i < na; ++i) {
        for (long j = 0; j < d; ++j)
            m(j, i) = mpq_class(static_cast<long>(a[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        mpq_class dot = 0;
        for (long j = 0; j < d; ++j) dot += u(j) * m(j, i);
        m(d, i) = canonical(dot);
    }
    for (long i = 0; i < nb; ++i)
        for (long j = 0; j < d; ++j)
            m(j, na + i) =
                mpq_class(-static_cast<long>(b[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    m(d, na + nb) = -1; // slack: <u, x> - s = 1
    rhs(d) = 1;
    return lp_feasible(m, rhs);
}

// Exposed facets of one maximal cone, as sorted global ray-index sets.
std::set<Cone> facets_of(const Fan& f, const Cone& c) {
    const long d = f.dim;
    auto gens = generators_of(f, c);
    const size_t n = gens.size();
    std::set<Cone> facets;
    // walk all (d-1)-subsets of the generators
    auto emit = [&](const std::vector<size_t>& pick) {
        std::vector<LatticeVector> sub;
        for (size_t p : pick) sub.push_back(gens[p]);
        if (rank_of(sub, d) != d - 1) return;
        QMat kern = rational_kernel(rows_matrix_q(sub, d));
        if (kern.cols() != 1) return;
        QVec u(d);
        for (long j = 0; j < d; ++j) u(j) = kern(j, 0);
        bool pos = true, neg = true;
        std::vector<mpq_class> vals(n);
        for (size_t i = 0; i < n; ++i) {
            mpq_class s = 0;
            for (long j = 0; j < d; ++j)
                s += u(j) * mpq_class(static_cast<long>(gens[i][static_cast<size_t>(j)]));
            vals[i] = canonical(s);
            if (vals[i] > 0) neg = false;
            if (vals[i] < 0) pos = false;
        }
        if (!pos && !neg) return; // hyperplane cuts the cone: not a facet
        Cone facet;
        for (size_t i = 0; i < n; ++i)
            if (vals[i] == 0) facet.push_back(c[i]);
        std::sort(facet.begin(), facet.end());
        facets.insert(std::move(facet));
    };
    if (d == 1) {
        emit({});
        return facets;
    }
    // iterative choose(n, d-1)
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (pick.size() == static_cast<size_t>(d - 1)) {
            emit(pick);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return facets;
}

} // namespace

FanReport validate(const Fan& f) {
    const long d = f.dim;
    if (d < 1) fail("MalformedFan", "fan dimension must be positive");
    std::set<LatticeVector> seen;
    for (const auto& r : f.rays) {
        if (static_cast<long>(r.size()) != d)
            fail("MalformedFan", "ray with wrong coordinate count");
        bool zero = std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
        if (zero) fail("MalformedFan", "zero ray");
        if (primitive(r) != r) fail("MalformedFan", "non-primitive ray");
        if (!seen.insert(r).second) fail("MalformedFan", "duplicate ray");
    }
    if (f.maxCones.empty()) fail("MalformedFan", "fan has no maximal cones");

    std::vector<bool> used(f.rays.size(), false);
    for (const auto& c : f.maxCones) {
        if (c.empty()) fail("MalformedFan", "empty maximal cone");
        for (size_t t = 0; t < c.size(); ++t) {
            if (c[t] < 0 || c[t] >= static_cast<int>(f.rays.size()))
                fail("MalformedFan", "ray index out of range");
            if (t > 0 && c[t] <= c[t - 1])
                fail("MalformedFan", "cone ray indices must be sorted and distinct");
            used[static_cast<size_t>(c[t])] = true;
        }
        auto gens = generators_of(f, c);
        if (!is_pointed(gens)) fail("MalformedFan", "maximal cone is not strongly convex");
        // every listed generator must be extreme
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<LatticeVector> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (cone_contains(others, gens[i]))
                fail("MalformedFan", "redundant generator in maximal cone");
        }
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i]) fail("MalformedFan", "ray " + std::to_string(i) + " unused by every cone");

    // pairwise: intersection must be the cone on the common rays, a face of both
    for (size_t a = 0; a < f.maxCones.size(); ++a)
        for (size_t b = a + 1; b < f.maxCones.size(); ++b) {
            const Cone& ca = f.maxCones[a];
            const Cone& cb = f.maxCones[b];
            std::vector<int> commonA, commonB; // positions within each cone
            for (size_t i = 0; i < ca.size(); ++i)
                if (std::find(cb.begin(), cb.end(), ca[i]) != cb.end())
                    commonA.push_back(static_cast<int>(i));
            for (size_t i = 0; i < cb.size(); ++i)
                if (std::find(ca.begin(), ca.end(), cb[i]) != ca.end())
                    commonB.push_back(static_cast<int>(i));
            auto gensA = generators_of(f, ca);
            auto gensB = generators_of(f, cb);
            auto u1 = exposing_normal(gensA, commonA);
            auto u2 = exposing_normal(gensB, commonB);
            if (!u1 || !u2)
                fail("MalformedFan", "maximal cones " + std::to_string(a) + " and " +
                                         std::to_string(b) + " do not meet in a common face");
            if (meets_beyond(gensA, gensB, *u1, d))
                fail("MalformedFan", "maximal cones " + std::to_string(a) + " and " +
                                         std::to_string(b) + " overlap beyond their common face");
        }

    FanReport rep;
    rep.simplicial = true;
    bool fullDim = true;
    for (const auto& c : f.maxCones) {
        auto gens = generators_of(f, c);
        long r = rank_of(gens, d);
        if (r != d) fullDim = false;
        if (static_cast<long>(c.size()) != d || r != d) rep.simplicial = false;
    }

    rep.complete = false;
    if (fullDim) {
        std::map<Cone, std::vector<size_t>> shared;
        std::vector<std::set<Cone>> coneFacets;
        for (size_t a = 0; a < f.maxCones.size(); ++a) {
            coneFacets.push_back(facets_of(f, f.maxCones[a]));
            for (const auto& fc : coneFacets.back()) shared[fc].push_back(a);
        }
        bool paired = true;
        for (const auto& [facet, owners] : shared)
            if (owners.size() != 2) paired = false;
        if (paired) {
            // connectivity through shared facets
            std::vector<int> comp(f.maxCones.size(), -1);
            std::vector<size_t> stack = {0};
            comp[0] = 0;
            while (!stack.empty()) {
                size_t cur = stack.back();
                stack.pop_back();
                for (const auto& fc : coneFacets[cur])
                    for (size_t nb : shared[fc])
                        if (comp[nb] < 0) {
                            comp[nb] = 0;
                            stack.push_back(nb);
                        }
            }
            rep.complete =
                std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
        }
    }
    return rep;
}

mpz_class mult(const std::vector<LatticeVector>& generators) {
    if (generators.empty()) return 1;
    const long d = static_cast<long>(generators[0].size());
    ZMat m = rows_matrix(generators, d);
    SmithResult s = smith_normal_form(m);
    if (s.rank != static_cast<int>(generators.size()))
        fail("NonSimplicialCone", "generators are linearly dependent");
    mpz_class p = 1;
    for (int i = 0; i < s.rank; ++i) p *= s.diag[static_cast<size_t>(i)];
    return p;
}

mpz_class mult(const Fan& f, const Cone& c) { return mult(generators_of(f, c)); }

SigmaOrdering order_rays_in_2cone(const Fan& fine, const LatticeVector& s0,
                                  const LatticeVector& t0) {
    const long d = fine.dim;
    LatticeVector s = s0, t = t0;
    if (t < s) std::swap(s, t); // canonical input order; orientation fixed below

    QMat bnd(d, 2);
    for (long j = 0; j < d; ++j) {
        bnd(j, 0) = mpq_class(static_cast<long>(s[static_cast<size_t>(j)]));
        bnd(j, 1) = mpq_class(static_cast<long>(t[static_cast<size_t>(j)]));
    }
    if (rational_rank(bnd) != 2) fail("RayNotInCone", "boundary generators are collinear");

    struct Tagged {
        int ray;
        mpq_class alpha, beta;
    };
    std::vector<Tagged> inside;
    for (size_t i = 0; i < fine.rays.size(); ++i) {
        QVec rhs(d);
        for (long j = 0; j < d; ++j)
            rhs(j) = mpq_class(static_cast<long>(fine.rays[i][static_cast<size_t>(j)]));
        auto sol = solve_rational(bnd, rhs);
        if (!sol) continue;
        mpq_class a = canonical((*sol)(0)), b = canonical((*sol)(1));
        if (a < 0 || b < 0) continue;
        inside.push_back({static_cast<int>(i), a, b});
    }
    std::sort(inside.begin(), inside.end(), [](const Tagged& x, const Tagged& y) {
        // compare beta/alpha, treating alpha = 0 as +infinity
        return x.beta * y.alpha < y.beta * x.alpha;
    });
    if (inside.size() < 2 || fine.rays[static_cast<size_t>(inside.front().ray)] != s ||
        fine.rays[static_cast<size_t>(inside.back().ray)] != t)
        fail("RayNotInCone", "boundary rays of the 2-cone are not rays of the fine fan");
    for (size_t i = 0; i + 1 < inside.size(); ++i)
        if (inside[i].beta * inside[i + 1].alpha == inside[i + 1].beta * inside[i].alpha)
            fail("RayNotInCone", "two fine rays are parallel inside the 2-cone");

    SigmaOrdering ord;
    for (const auto& tg : inside) ord.rayIndices.push_back(tg.ray);
    ord.coneMult = mult({s, t});

    // Adapted basis: rows 1..d-2 span the saturated annihilator of span(s,t);
    // the whole matrix is unimodular with determinant +1.  The 2x2 pairing
    // determinant of its last two rows against (e_{l_0}, e_{l_{n+1}}) is
    // +-mult(sigma); pick the boundary labelling making it positive.
    ZMat span2(2, d);
    for (long j = 0; j < d; ++j) {
        span2(0, j) = static_cast<long>(s[static_cast<size_t>(j)]);
        span2(1, j) = static_cast<long>(t[static_cast<size_t>(j)]);
    }
    ZMat kern = integer_kernel(span2); // d x (d-2), saturated
    ZMat kernRows(kern.cols(), d);
    for (long i = 0; i < kern.cols(); ++i)
        for (long j = 0; j < d; ++j) kernRows(i, j) = kern(j, i);
    ZMat W = complete_to_unimodular(kernRows);
    auto pair_row = [&](long row, const LatticeVector& v) {
        mpz_class acc = 0;
        for (long j = 0; j < d; ++j) acc += W(row, j) * mpz_class(static_cast<long>(v[static_cast<size_t>(j)]));
        return acc;
    };
    const LatticeVector& head = fine.rays[static_cast<size_t>(ord.rayIndices.front())];
    const LatticeVector& tail = fine.rays[static_cast<size_t>(ord.rayIndices.back())];
    mpz_class det2 = pair_row(d - 2, head) * pair_row(d - 1, tail) -
                     pair_row(d - 1, head) * pair_row(d - 2, tail);
    if (abs(det2) != ord.coneMult)
        throw std::logic_error("order_rays_in_2cone: orientation determinant mismatch");
    if (det2 < 0) {
        std::reverse(ord.rayIndices.begin(), ord.rayIndices.end());
        ord.reversed = true;
    }

    for (size_t j = 1; j < ord.rayIndices.size(); ++j)
        ord.subMults.push_back(mult({fine.rays[static_cast<size_t>(ord.rayIndices[j - 1])],
                                     fine.rays[static_cast<size_t>(ord.rayIndices[j])]}));
    return ord;
}

StarFan star_fan(const Fan& f, const Cone& c) {
    const long d = f.dim;
    const long k = static_cast<long>(c.size());
    for (int i : c)
        if (i < 0 || i >= static_cast<int>(f.rays.size()))
            fail("ConeNotInFan", "ray index out of range");

    std::vector<size_t> containing;
    for (size_t a = 0; a < f.maxCones.size(); ++a) {
        const Cone& mc = f.maxCones[a];
        if (std::includes(mc.begin(), mc.end(), c.begin(), c.end())) containing.push_back(a);
    }
    if (containing.empty())
        fail("ConeNotInFan", "the given rays do not span a face of any maximal cone");

    auto gens = generators_of(f, c);
    if (rank_of(gens, d) != k) fail("NonSimplicialCone", "star of a non-simplicial cone");
    mpz_class cMult = mult(gens);

    // projection with kernel = saturated span of c: bottom rows of the left
    // Smith transform of the generator-column matrix
    ZMat g(d, k);
    for (long j = 0; j < k; ++j)
        for (long i = 0; i < d; ++i)
            g(i, j) = static_cast<long>(gens[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    SmithResult snf = smith_normal_form(g);
    ZMat p(d - k, d);
    for (long i = 0; i < d - k; ++i)
        for (long j = 0; j < d; ++j) p(i, j) = snf.U(k + i, j);

    StarFan star;
    star.projection = p;
    star.coneMult = cMult;
    star.fan.dim = static_cast<int>(d - k);

    // star rays: one per fan ray j with c + j spanning a cone of f
    std::map<int, int> rayIndexOf; // fan ray -> star ray position
    for (size_t a : containing) {
        for (int j : f.maxCones[a]) {
            if (std::find(c.begin(), c.end(), j) != c.end()) continue;
            if (rayIndexOf.count(j)) continue;
            ZVec img(d - k);
            for (long i = 0; i < d - k; ++i) {
                mpz_class acc = 0;
                for (long col = 0; col < d; ++col)
                    acc += p(i, col) *
                           mpz_class(static_cast<long>(f.rays[static_cast<size_t>(j)][static_cast<size_t>(col)]));
                img(i) = acc;
            }
            LatticeVector imgL = to_lattice(img);
            bool zero = std::all_of(imgL.begin(), imgL.end(), [](long long x) { return x == 0; });
            if (zero) throw std::logic_error("star_fan: ray image vanished");
            LatticeVector prim = primitive(imgL);
            // scale = mult(c + ray j) / mult(c), an integer by the quotient
            // lattice index formula; cross-check against the image.
            auto gplus = gens;
            gplus.push_back(f.rays[static_cast<size_t>(j)]);
            mpz_class gMult = mult(gplus);
            if (gMult % cMult != 0) throw std::logic_error("star_fan: non-integral scale");
            mpz_class lambda = gMult / cMult;
            for (size_t t = 0; t < imgL.size(); ++t)
                if (mpz_class(static_cast<long>(imgL[t])) !=
                    lambda * mpz_class(static_cast<long>(prim[t])))
                    throw std::logic_error("star_fan: scale does not match image");
            rayIndexOf[j] = static_cast<int>(star.fan.rays.size());
            star.fan.rays.push_back(prim);
            star.sourceRay.push_back(j);
            star.scale.push_back(lambda);
        }
    }
    // distinct source rays must give distinct star rays
    {
        std::set<LatticeVector> uniq(star.fan.rays.begin(), star.fan.rays.end());
        if (uniq.size() != star.fan.rays.size())
            throw std::logic_error("star_fan: colliding ray images");
    }

    for (size_t a : containing) {
        Cone img;
        for (int j : f.maxCones[a])
            if (auto it = rayIndexOf.find(j); it != rayIndexOf.end()) img.push_back(it->second);
        std::sort(img.begin(), img.end());
        star.fan.maxCones.push_back(std::move(img));
    }
    std::sort(star.fan.maxCones.begin(), star.fan.maxCones.end());
    star.fan.maxCones.erase(std::unique(star.fan.maxCones.begin(), star.fan.maxCones.end()),
                            star.fan.maxCones.end());
    return star;
}

std::vector<Cone> two_dimensional_cones(const Fan& f) {
    std::set<Cone> out;
    for (const auto& c : f.maxCones) {
        auto gens = generators_of(f, c);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) {
                std::vector<LatticeVector> pair = {gens[i], gens[j]};
                if (rank_of(pair, f.dim) != 2) continue;
                if (!exposing_normal(gens, {static_cast<int>(i), static_cast<int>(j)}))
                    continue;
                Cone face = {c[i], c[j]};
                std::sort(face.begin(), face.end());
                out.insert(std::move(face));
            }
    }
    return {out.begin(), out.end()};
}

} // namespace coxhodge
