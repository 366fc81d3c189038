#ifndef COXHODGE_SCALARS_HPP
#define COXHODGE_SCALARS_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

// Exact scalar types: arbitrary-precision integers (mpz_class), rationals
// (mpq_class) and Gaussian rationals (pairs of rationals). Eigen NumTraits
// specializations let the GMP types live inside Eigen's dense containers;
// the heavy algorithms are hand-rolled loops, Eigen is storage and shape.

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50,
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 100,
    };
};

} // namespace Eigen

namespace coxhodge {

using Rational = mpq_class;

inline mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

// a Gaussian rational re + im*i with eager canonical form.
struct GaussRat {
    mpq_class re{0};
    mpq_class im{0};

    GaussRat() = default;
    GaussRat(long r) : re(r) {}
    GaussRat(const mpq_class& r) : re(r) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_imaginary() const { return re == 0; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const {
        mpq_class n = o.re * o.re + o.im * o.im; // nonzero unless o == 0
        return GaussRat(canonical((re * o.re + im * o.im) / n),
                        canonical((im * o.re - re * o.im) / n));
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

} // namespace coxhodge

namespace Eigen {

template <>
struct NumTraits<coxhodge::GaussRat> : GenericNumTraits<coxhodge::GaussRat> {
    typedef coxhodge::GaussRat Real;
    typedef coxhodge::GaussRat NonInteger;
    typedef coxhodge::GaussRat Nested;
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 12,
        AddCost = 120,
        MulCost = 400,
    };
};

} // namespace Eigen

namespace coxhodge {

inline std::string to_fraction_string(const mpq_class& q) {
    return q.get_str(); // canonical "p" or "p/q" with q > 0
}

inline std::string to_string(const GaussRat& g) {
    if (g.im == 0) return to_fraction_string(g.re);
    if (g.re == 0) return to_fraction_string(g.im) + "*i";
    return to_fraction_string(g.re) + (g.im > 0 ? "+" : "") + to_fraction_string(g.im) + "*i";
}

} // namespace coxhodge

#endif
