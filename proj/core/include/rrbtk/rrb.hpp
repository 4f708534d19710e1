#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrbtk/finite_group.hpp"

namespace rrbtk {

/// A quadruple (H, G, phi, R): phi an action of G on H by automorphisms
/// and R: H -> G satisfying R(h1) R(h2) = R(h1 phi_{R(h1)}(h2)).
/// Verified on construction.
struct RRBGroup {
    FiniteGroup H;
    FiniteGroup G;
    GroupAction phi;     // actor G, space H, homomorphism variance
    std::vector<int> R;  // H index -> G index

    /// Scans the defining identity over all |H|^2 pairs; throws
    /// NotRotaBaxter(h1, h2) at the first failing pair.
    static RRBGroup make(FiniteGroup h, FiniteGroup g, GroupAction phi, std::vector<int> r);

    int phi_apply(int g, int h) const { return phi.apply(g, h); }
    /// Descendent operation h1 ∘ h2 = h1 * phi_{R(h1)}(h2).
    int circ(int h1, int h2) const { return H.mul(h1, phi.apply(R[h1], h2)); }
    bool phi_is_trivial() const { return phi.is_trivial(); }
};

/// (G, G, conjugation, R) with R(hl) = l^{-1} for an exact factorization
/// G = H_sub * L_sub, H_sub ∩ L_sub = {1}.
RRBGroup from_exact_factorization(const FiniteGroup& g, const std::vector<int>& h_sub,
                                  const std::vector<int>& l_sub);

/// (G, G^op, phi_x(y) = x^{-1} y x, identity map).
RRBGroup from_opposite(const FiniteGroup& g);

/// (G, G, adjoint action, R) — the absolute Rota-Baxter case.
RRBGroup rota_baxter_group(const FiniteGroup& g, std::vector<int> r);

/// All operators R with R(1) = 1 for the given action, in lexicographic
/// order of the R array. Forward-propagates the defining identity to
/// prune; throws SearchBudgetExceeded past `budget` nodes.
std::vector<std::vector<int>> enumerate_rb_operators(const FiniteGroup& h, const FiniteGroup& g,
                                                     const GroupAction& phi,
                                                     long budget = 50'000'000);

/// The group H^(∘R); also verifies that R is a homomorphism from it
/// to G (violations abort as internal errors).
FiniteGroup descendent_group(const RRBGroup& rrb);

/// A morphism of RRB groups: eta R = R' psi and psi phi_g = phi'_{eta(g)} psi.
struct RRBHom {
    RRBGroup source;
    RRBGroup target;
    GroupHom psi;  // H -> H'
    GroupHom eta;  // G -> G'

    static RRBHom make(RRBGroup source, RRBGroup target, GroupHom psi, GroupHom eta);
    static RRBHom identity(const RRBGroup& rrb);
};

struct RRBIdeal {
    RRBGroup parent;
    std::vector<int> k_elems;  // sorted subset of H
    std::vector<int> l_elems;  // sorted subset of G
};

/// Result of the ideal test: either a verified ideal or the list of
/// violated conditions.
struct IdealReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::optional<RRBIdeal> ideal;  // present exactly when ok
};

IdealReport is_ideal(const RRBGroup& rrb, std::vector<int> k_elems, std::vector<int> l_elems);

struct RRBQuotient {
    RRBGroup quotient;
    RRBHom projection;
    std::vector<int> h_class;  // H index -> quotient H index
    std::vector<int> g_class;  // G index -> quotient G index
};

/// (H/K, G/L, induced action, induced operator) with canonical
/// minimal-representative cosets, plus the projection morphism.
RRBQuotient quotient(const RRBGroup& rrb, const RRBIdeal& ideal);

struct RRBCenter {
    std::vector<int> h_part;  // Z(H) ∩ ker(phi R) ∩ Fix(phi)
    std::vector<int> g_part;  // ker phi
};

RRBCenter center(const RRBGroup& rrb);

RRBIdeal kernel(const RRBHom& h);

/// The image of a morphism, restricted to its own carrier (element i of
/// the result corresponds to h_elems[i] / g_elems[i] of the target).
struct RRBSubgroup {
    RRBGroup ambient;
    std::vector<int> h_elems;
    std::vector<int> g_elems;
    RRBGroup restricted;
};

RRBSubgroup image(const RRBHom& h);

/// Restriction of an RRB structure to a pair of closed subsets.
RRBGroup sub_rrb(const RRBGroup& rrb, const std::vector<int>& h_elems,
                 const std::vector<int>& g_elems);

/// Searches for a pair of isomorphisms compatible with both squares.
bool rrb_isomorphic(const RRBGroup& a, const RRBGroup& b, long budget = 50'000'000);

}  // namespace rrbtk
