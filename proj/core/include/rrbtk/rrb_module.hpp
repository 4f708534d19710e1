#pragma once

#include <vector>

#include "rrbtk/finite_group.hpp"
#include "rrbtk/rrb.hpp"

namespace rrbtk {

/// Coefficients for cohomology: a trivial-action quadruple (K, L, alpha, S)
/// with K, L abelian, made into a module over the base (A, B, beta, T)
/// by the quadruple (nu, mu, sigma, f). Verified on construction.
struct RRBModule {
    RRBGroup base;      // (A, B, beta, T)
    RRBGroup coeff;     // (K, L, alpha trivial, S); K, L abelian
    GroupAction nu;     // B on K, covariant
    GroupAction mu;     // A on K, contravariant
    GroupAction sigma;  // B on L, contravariant
    std::vector<std::vector<int>> f;  // f[l][a] in K

    static RRBModule make(RRBGroup base, RRBGroup coeff, GroupAction nu, GroupAction mu,
                          GroupAction sigma, std::vector<std::vector<int>> f);

    /// All four maps trivial — the setting of central extensions.
    static RRBModule trivial(RRBGroup base, RRBGroup coeff);

    const FiniteGroup& A() const { return base.H; }
    const FiniteGroup& B() const { return base.G; }
    const FiniteGroup& K() const { return coeff.H; }
    const FiniteGroup& L() const { return coeff.G; }
    int T(int a) const { return base.R[a]; }
    int S(int k) const { return coeff.R[k]; }
    int beta(int b, int a) const { return base.phi.apply(b, a); }

    bool is_central() const;
};

}  // namespace rrbtk
