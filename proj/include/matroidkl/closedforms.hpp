#pragma once

#include <map>

#include "matroidkl/matroid.hpp"
#include "matroidkl/poly.hpp"

namespace matroidkl {

struct PavingProfile {
    int k = 0, n = 0;
    std::map<int, int> lambda;  // h -> number of stressed hyperplanes, h >= k
};

// P/Q/Z of U_{k,n} by the tableaux formulas.
IntPoly p_uniform(int k, int n);
IntPoly q_uniform(int k, int n);
IntPoly z_uniform(int k, int n);

// gamma vector of Z_{U_{k,n}}; the fractional prefactor of the coefficient
// formula is asserted to divide exactly.
GammaVector gamma_uniform(int k, int n);

// Delta polynomials of a size-h relaxation at rank k, each computed by the
// uniform-difference route and the tableaux route and asserted equal.
IntPoly p_kh(int k, int h);
IntPoly q_kh(int k, int h);
IntPoly z_kh(int k, int h);
IntPoly g_kh(int k, int h);

IntPoly paving_P(const PavingProfile& prof);
IntPoly paving_Q(const PavingProfile& prof);
IntPoly paving_Z(const PavingProfile& prof);
GammaVector paving_gamma(const PavingProfile& prof);

IntPoly thagomizer_P(int n);
GammaVector thagomizer_gamma(int n);

// true iff the paving P/Q/Z are coefficient-wise at most the uniform ones
bool domination_check(const PavingProfile& prof);

// Profile of an actual paving matroid (throws NotPaving otherwise).
PavingProfile profile_from_matroid(const Matroid& m);

// the gamma coefficients as a polynomial in t
IntPoly gamma_poly(const GammaVector& g);

}  // namespace matroidkl
