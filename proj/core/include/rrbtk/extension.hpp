#pragma once

#include <optional>
#include <vector>

#include "rrbtk/cohomology.hpp"
#include "rrbtk/rrb.hpp"
#include "rrbtk/rrb_module.hpp"

namespace rrbtk {

/// An extension of RRB groups: kernel -> total -> quot with an
/// embedding and an epimorphism, exact in the middle (componentwise).
struct RRBExtension {
    RRBGroup kernel;  // (K, L, alpha, S)
    RRBGroup total;   // (H, G, phi, R)
    RRBGroup quot;    // (A, B, beta, T)
    RRBHom incl;
    RRBHom proj;
    bool abelian = false;  // K, L abelian and the kernel action trivial
    bool central = false;  // incl lands in the center pair of the total

    /// Verifies embedding/epimorphism/exactness and computes the flags.
    static RRBExtension verify(RRBGroup kernel, RRBGroup total, RRBGroup quot, RRBHom incl,
                               RRBHom proj);

    // Pullback of an element of H (resp. G) lying in the image of the
    // embedding to its kernel index; -1 when outside the image.
    std::vector<int> k_of_h;
    std::vector<int> l_of_g;
};

/// Normalized set-theoretic sections sH: A -> H, sG: B -> G of the
/// projection pair (sH(1) = 1, sG(1) = 1); not homomorphisms in general.
struct SectionPair {
    std::vector<int> sH;
    std::vector<int> sG;
};

/// The first normalized section in index order.
SectionPair any_section(const RRBExtension& e);
/// All normalized sections would be huge; this returns a second one
/// differing from any_section wherever a fiber has more than one point.
SectionPair another_section(const RRBExtension& e);

/// The associated action (nu, mu, sigma, f) of an abelian extension as
/// a verified module; independent of the section used internally.
RRBModule action_from_extension(const RRBExtension& e);
RRBModule action_from_extension(const RRBExtension& e, const SectionPair& s);

/// The 2-cocycle (tau1, tau2, rho, chi) induced by a section; verified
/// to lie in ker d2 for the associated action.
RRBCochain2 cocycle_from_extension(const RRBExtension& e, const SectionPair& s);
RRBCochain2 cocycle_from_extension(const RRBExtension& e, const SectionPair& s,
                                   const RRBModule& m);

/// Builds the extension on A x K, B x L with the twisted operations;
/// throws NotACocycle unless z is in ker d2. The canonical sections are
/// a -> (a, 1) and b -> (b, 1).
RRBExtension extension_from_cocycle(const RRBModule& m, const RRBCochain2& z);
SectionPair canonical_section(const RRBModule& m, const RRBExtension& e);

/// An equivalence (eta, zeta): total1 -> total2 restricting to the
/// identity on the kernel and inducing the identity on the quotient.
struct EquivalenceWitness {
    std::vector<int> eta;   // H1 index -> H2 index
    std::vector<int> zeta;  // G1 index -> G2 index
};

struct EquivalenceReport {
    bool equivalent = false;
    std::optional<EquivalenceWitness> witness;
};

/// Decides equivalence of two abelian extensions of the same data by
/// the coboundary test on the difference of their cocycles; throws
/// ActionMismatch when the associated actions differ. With
/// cross_validate, additionally runs an exhaustive witness search (all
/// kernel-valued correction functions, capped by `budget`) and insists
/// the two answers agree.
EquivalenceReport equivalent(const RRBExtension& e1, const RRBExtension& e2,
                             bool cross_validate = false, long budget = 1'000'000);

/// One verified representative extension per equivalence class; the
/// list length equals |H^2| of the module. Throws TooLarge when the
/// class group exceeds `max_classes`.
std::vector<RRBExtension> enumerate_ext(const RRBModule& m, long max_classes = 1 << 16);

/// The split extension on A x_mu K and B x_sigma L with
/// phi_{(b,l)}(a,k) = (beta_b(a), nu_b(f(l,a) k)) and
/// R(a,k) = (T(a), S(nu^{-1}_{T(a)}(k))); the canonical section pair is
/// verified to be a morphism of RRB groups.
RRBExtension semidirect(const RRBModule& m);

struct SplitReport {
    bool split = false;
    std::optional<SectionPair> section;  // a homomorphic section pair
};

/// Searches for a section pair that is a morphism of RRB groups; for
/// abelian extensions the answer is cross-checked against triviality of
/// the cocycle class. Throws SearchBudgetExceeded.
SplitReport split_classify(const RRBExtension& e, long budget = 1'000'000);

}  // namespace rrbtk
