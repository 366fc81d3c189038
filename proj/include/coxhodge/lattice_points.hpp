#pragma once

#include "coxhodge/linalg.hpp"

#include <vector>

namespace coxhodge {

// All integer points m with A*m >= b, in lexicographically ascending order.
//
// The region must be bounded; when a feasible direction escapes to infinity
// the call throws MathError("UnboundedRegion") rather than returning a
// truncated list.  Works by Fourier-Motzkin elimination (last variable
// first), then nested interval enumeration, so the output is exact whenever
// it returns.
std::vector<LatticeVector> lattice_points(const ZMat& A, const std::vector<mpz_class>& b);

} // namespace coxhodge
