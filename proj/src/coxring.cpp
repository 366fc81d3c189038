#include "coxhodge/coxring.hpp"

#include "coxhodge/errors.hpp"
#include "coxhodge/lattice_points.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coxhodge {

namespace {

[[noreturn]] void fail(const char* kind, const std::string& msg) {
    throw MathError(kind, msg);
}

mpz_class zz(long long x) { return mpz_class(static_cast<long>(x)); }

void insert_term(std::map<Monomial, GaussRat>& terms, Monomial m, const GaussRat& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms.emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

Divisor indicator(const Fan& f, const std::vector<int>& rays) {
    Divisor d(f.rays.size(), 0);
    for (int k : rays)
        d[k] = 1;
    return d;
}

} // namespace

Polynomial make_polynomial(const Fan& f, const DivisorClass& degree,
                           const std::vector<std::pair<Monomial, GaussRat>>& terms) {
    Polynomial p;
    p.degree = degree;
    for (const auto& [m, c] : terms) {
        if (m.size() != f.rays.size())
            fail("LengthMismatch", "monomial exponent vector does not match the ray count");
        for (long long e : m)
            if (e < 0)
                throw std::logic_error("monomial exponent is negative");
        if (degree_of_monomial(f, m) != degree)
            fail("GradeMismatch", "term degree differs from the declared degree");
        insert_term(p.terms, m, c);
    }
    return p;
}

Polynomial poly_add(const Fan& f, const Polynomial& p, const Polynomial& q) {
    (void)f;
    if (p.degree != q.degree)
        fail("GradeMismatch", "cannot add polynomials of different degrees");
    Polynomial out = p;
    for (const auto& [m, c] : q.terms)
        insert_term(out.terms, m, c);
    return out;
}

Polynomial poly_scale(const GaussRat& c, Polynomial p) {
    if (c.is_zero()) {
        p.terms.clear();
        return p;
    }
    for (auto& [m, a] : p.terms)
        a *= c;
    return p;
}

Polynomial poly_mul(const Fan& f, const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    out.degree = class_add(f, p.degree, q.degree);
    for (const auto& [mp, cp] : p.terms)
        for (const auto& [mq, cq] : q.terms) {
            Monomial m(mp.size());
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = mp[i] + mq[i];
            insert_term(out.terms, std::move(m), cp * cq);
        }
    return out;
}

GradedBasis monomials_of_degree(const Fan& f, const DivisorClass& alpha) {
    if (alpha.representative.size() != f.rays.size())
        fail("LengthMismatch", "divisor length does not match the ray count");
    const int n = static_cast<int>(f.rays.size());
    ZMat A(n, f.dim);
    std::vector<mpz_class> b(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < f.dim; ++j)
            A(i, j) = zz(f.rays[i][j]);
        b[i] = zz(-alpha.representative[i]);
    }
    GradedBasis out;
    out.degree = alpha;
    for (const LatticeVector& m : lattice_points(A, b)) {
        Monomial v(n);
        for (int i = 0; i < n; ++i) {
            mpz_class e = zz(alpha.representative[i]) + dot_z(m, f.rays[i]);
            v[i] = e.get_si();
        }
        out.monomials.push_back(std::move(v));
    }
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
}

Polynomial partial_derivative(const Fan& f, const Polynomial& p, int i) {
    if (i < 0 || i >= static_cast<int>(f.rays.size()))
        fail("RayNotInCone", "variable index out of range");
    Divisor delta(f.rays.size(), 0);
    delta[i] = 1;
    Polynomial out;
    out.degree = class_sub(f, p.degree, divisor_class(f, delta));
    for (const auto& [m, c] : p.terms) {
        if (m[i] == 0)
            continue;
        Monomial dm = m;
        dm[i] -= 1;
        insert_term(out.terms, std::move(dm), c * GaussRat(mpq_class(static_cast<long>(m[i]))));
    }
    return out;
}

Polynomial fermat_polynomial(const Fan& f, const DivisorClass& alpha) {
    Polynomial out;
    out.degree = alpha;
    for (size_t i = 0; i < f.rays.size(); ++i) {
        Divisor pure(f.rays.size(), 0);
        for (long long k = 1; k <= 200; ++k) {
            pure[i] = k;
            if (divisor_class(f, pure) == alpha) {
                insert_term(out.terms, Monomial(pure.begin(), pure.end()), GaussRat(1));
                break;
            }
        }
    }
    return out;
}

Polynomial restrict_to_star(const Fan& f, const Cone& c, const StarFan& star,
                            const Polynomial& p) {
    Divisor b = restricted_divisor(f, c, star, p.degree.representative);
    std::vector<std::pair<Monomial, GaussRat>> terms;
    for (const auto& [v, coeff] : p.terms) {
        bool survives = true;
        for (int k : c)
            if (v[k] != 0) {
                survives = false;
                break;
            }
        if (!survives)
            continue;
        Monomial w(star.fan.rays.size());
        for (size_t r = 0; r < star.fan.rays.size(); ++r) {
            long long src = v[star.sourceRay[r]];
            mpz_class q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), zz(src).get_mpz_t(),
                        star.scale[r].get_mpz_t());
            if (rem != 0)
                fail("NonIntegralExponent",
                     "restricted exponent is fractional; the degree representative is "
                     "inconsistent with the monomial");
            w[r] = q.get_si();
        }
        terms.emplace_back(std::move(w), coeff);
    }
    return make_polynomial(star.fan, divisor_class(star.fan, b), terms);
}

Polynomial special_polynomial_G(const Fan& f, const SigmaOrdering& ordering,
                                const Polynomial& poly) {
    const int n = static_cast<int>(f.rays.size());
    const int s = ordering.rayIndices.front();
    const int t = ordering.rayIndices.back();

    Polynomial prod = poly_mul(f, partial_derivative(f, poly, s), partial_derivative(f, poly, t));

    std::vector<bool> inSigma(n, false);
    for (int k : ordering.rayIndices)
        inSigma[k] = true;
    // x_s f_s x_t f_t prod_{outside} x_k / prod_{inside} x_k: on exponents the
    // boundary factors cancel, interior rays lose one, outside rays gain one.
    LatticeVector delta(n, 0);
    for (int k = 0; k < n; ++k)
        delta[k] = inSigma[k] ? -1 : 1;
    delta[s] = 0;
    delta[t] = 0;

    DivisorClass beta1 = divisor_class(f, indicator(f, ordering.rayIndices));
    DivisorClass degree = class_sub(
        f, class_add(f, class_scale(f, 2, poly.degree), anticanonical_class(f)),
        class_scale(f, 2, beta1));

    GaussRat scale(mpq_class(1) / mpq_class(ordering.coneMult));
    std::vector<std::pair<Monomial, GaussRat>> terms;
    for (const auto& [m, coeff] : prod.terms) {
        Monomial w(n);
        for (int k = 0; k < n; ++k) {
            w[k] = m[k] + delta[k];
            if (w[k] < 0)
                fail("NotDivisible", "boundary-partial product is not divisible by the cone "
                                     "variables; the degree is not semiample for this cone");
        }
        terms.emplace_back(std::move(w), coeff * scale);
    }
    return make_polynomial(f, degree, terms);
}

Polynomial special_polynomial_H(const Fan& f, const SigmaOrdering& ordering,
                                const Polynomial& poly) {
    if (poly.degree != anticanonical_class(f))
        fail("NotAnticanonical", "the orthogonal-slice polynomial needs an anticanonical input");
    const int n = static_cast<int>(f.rays.size());
    const int s = ordering.rayIndices.front();
    const int t = ordering.rayIndices.back();

    std::vector<bool> inSigma(n, false);
    for (int k : ordering.rayIndices)
        inSigma[k] = true;

    DivisorClass degree =
        class_sub(f, anticanonical_class(f), divisor_class(f, indicator(f, ordering.rayIndices)));

    std::vector<std::pair<Monomial, GaussRat>> terms;
    for (const auto& [v, coeff] : poly.terms) {
        // Lattice point of the anticanonical polytope: v_i = 1 + <m, e_i>.
        QMat rows(n, f.dim);
        QVec rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < f.dim; ++j)
                rows(i, j) = mpq_class(static_cast<long>(f.rays[i][j]));
            rhs(i) = mpq_class(static_cast<long>(v[i] - 1));
        }
        auto sol = solve_rational(rows, rhs);
        if (!sol)
            throw std::logic_error("anticanonical monomial has no lattice point");
        LatticeVector m(f.dim);
        for (int j = 0; j < f.dim; ++j) {
            if ((*sol)(j).get_den() != 1)
                throw std::logic_error("anticanonical lattice point is fractional");
            m[j] = (*sol)(j).get_num().get_si();
        }
        if (dot_z(m, f.rays[s]) != 0 || dot_z(m, f.rays[t]) != 0)
            continue;
        Monomial w = v;
        for (int k = 0; k < n; ++k)
            if (inSigma[k]) {
                w[k] -= 1;
                if (w[k] < 0)
                    fail("NotDivisible", "orthogonal term is not divisible by a cone variable");
            }
        terms.emplace_back(std::move(w), coeff * GaussRat::unit_i());
    }
    return make_polynomial(f, degree, terms);
}

} // namespace coxhodge
