#pragma once

#include "matroidkl/matroid.hpp"
#include "matroidkl/poly.hpp"

namespace matroidkl {

// Corank-nullity subset expansion; throws GroundSetTooLarge above the cap.
BiPoly tutte(const Matroid& m, int cap = 20);

// chi_M(t) = (-1)^k T_M(1-t, 0); zero polynomial when M has loops. Computed
// both via the Tutte specialization and via the Möbius function of the flat
// lattice and asserted equal.
IntPoly characteristic(const Matroid& m);

// coefficient of x^1 y^0 in the Tutte polynomial
Int beta(const Matroid& m);

// Memoized Kazhdan-Lusztig recursion state for one root matroid. Both
// recursions run on the root's lattice of flats: P and Z are tabulated for
// every contraction M_F (keyed by flat), Q for every localization M^F, with
// interval characteristic polynomials obtained from Möbius rows/columns.
class KLCache {
  public:
    explicit KLCache(const Matroid& m);

    const Matroid& root() const { return m_; }
    const FlatLattice& lattice() const { return lat_; }

    const IntPoly& P() const;  // P of the root (0 if the root has loops)
    const IntPoly& Q() const;
    const IntPoly& Z() const;
    GammaVector gamma() const;

    // P of the contraction M_F / Q of the localization M^F, F a flat
    const IntPoly& P_contraction(Subset flat) const;
    const IntPoly& Q_localization(Subset flat) const;

  private:
    void compute_pz();
    void compute_q() const;

    Matroid m_;
    FlatLattice lat_;
    bool loopless_;
    IntPoly zero_;
    std::vector<IntPoly> p_contr_, z_contr_;
    mutable std::vector<IntPoly> q_loc_, q_v_;
    mutable bool q_done_ = false;
};

IntPoly kl_P(const Matroid& m);
IntPoly kl_Q(const Matroid& m);
IntPoly kl_Z(const Matroid& m);
GammaVector gamma(const Matroid& m);

}  // namespace matroidkl
