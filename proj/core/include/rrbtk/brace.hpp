#pragma once

#include <utility>
#include <vector>

#include "rrbtk/abelian.hpp"
#include "rrbtk/finite_group.hpp"
#include "rrbtk/rrb.hpp"

namespace rrbtk {

/// A skew left brace: two group structures on one carrier linked by
/// a ∘ (b · c) = (a ∘ b) · a^{-1} · (a ∘ c). Verified on construction.
struct SkewLeftBrace {
    FiniteGroup dot;
    FiniteGroup circ;

    static SkewLeftBrace make(FiniteGroup dot, FiniteGroup circ);

    int order() const { return dot.order(); }
    int identity() const { return dot.identity(); }
    /// λ_a(b) = a^{-1} · (a ∘ b)
    int lambda(int a, int b) const { return dot.mul(dot.inv(a), circ.mul(a, b)); }
    bool is_trivial() const { return dot.same_table(circ); }

    /// λ as a verified action of the circ group on the dot group.
    GroupAction lambda_action() const;
};

SkewLeftBrace brace_new(std::vector<std::vector<int>> dot_table,
                        std::vector<std::vector<int>> circ_table);

/// (H, ·, ∘_R) for a verified RRB group; failure is an internal error.
SkewLeftBrace induced_brace(const RRBGroup& rrb);

/// (H^(·), H^(∘), λ, id).
RRBGroup rrb_from_brace(const SkewLeftBrace& b);

/// A set-theoretic Yang-Baxter solution r(x,y) = (sigma_x(y), tau_y(x)),
/// checked for the braid equation, bijectivity, and non-degeneracy.
struct YBESolution {
    int n;
    std::vector<std::vector<std::pair<int, int>>> r;

    std::pair<int, int> apply(int x, int y) const { return r[x][y]; }
};

/// r(x,y) = (λ_x(y), λ_x(y)^{∘-1} ∘ x ∘ y); all three checks are
/// mandatory and throw SolutionCheckFailed.
YBESolution ybe_solution(const SkewLeftBrace& b);

/// A map preserving both operations.
struct BraceHom {
    SkewLeftBrace source;
    SkewLeftBrace target;
    std::vector<int> image;

    static BraceHom make(SkewLeftBrace source, SkewLeftBrace target, std::vector<int> image);
    int operator()(int x) const { return image[x]; }
};

/// The first component of an RRB morphism, as a morphism of the
/// induced braces.
BraceHom brace_hom_from_rrb_hom(const RRBHom& h);

/// Actions (xi, zeta, eps) of a brace M on an abelian group I
/// satisfying the two compatibility identities.
struct GoodTriplet {
    SkewLeftBrace m;
    FiniteGroup i;
    GroupAction xi;    // circ group on I, covariant
    GroupAction zeta;  // dot group on I, contravariant
    GroupAction eps;   // circ group on I, contravariant

    static GoodTriplet trivial(const SkewLeftBrace& m, const FiniteGroup& i);
};

GoodTriplet good_triplet_verify(const SkewLeftBrace& m, const FiniteGroup& i, GroupAction xi,
                                GroupAction zeta, GroupAction eps);

/// A pair (g, f) of 2-cochains M x M -> I vanishing on degenerate
/// tuples; stored as full tables.
struct BraceCocyclePair {
    std::vector<std::vector<int>> g;
    std::vector<std::vector<int>> f;
};

/// Does the pair satisfy the three cocycle conditions for the triplet?
bool brace_pair_is_cocycle(const GoodTriplet& t, const BraceCocyclePair& p);

/// Is the pair the coboundary of some theta: M -> I? Decided by a
/// lattice membership test.
bool brace_pair_is_coboundary(const GoodTriplet& t, const BraceCocyclePair& p);

/// Coboundary pair of a normalized map theta (theta[1] = 1).
BraceCocyclePair brace_coboundary(const GoodTriplet& t, const std::vector<int>& theta);

struct BraceH2Result {
    std::vector<mpz_class> factors;
    mpz_class order;
    std::vector<BraceCocyclePair> representatives;
};

/// Invariant factors of Z²_N / B²_N, computed by linearizing the three
/// cocycle conditions and the coboundary map over the coordinates of I.
BraceH2Result brace_h2(const GoodTriplet& t);

/// A short exact sequence of braces with abelian kernel (trivial brace).
struct BraceExtension {
    SkewLeftBrace kernel;
    SkewLeftBrace total;
    SkewLeftBrace quot;
    BraceHom incl;
    BraceHom proj;

    static BraceExtension make(SkewLeftBrace kernel, SkewLeftBrace total, SkewLeftBrace quot,
                               BraceHom incl, BraceHom proj);
};

/// A normalized set-theoretic section of proj (proj(s[a]) = a, s[1] = 1).
std::vector<int> canonical_section(const BraceExtension& e);

/// The associated action (xi, zeta, eps) of an extension, verified as
/// a good triplet and independent of the section.
GoodTriplet brace_extension_triplet(const BraceExtension& e);

/// The class map Λ: τ(m1,m2) = s(m1·m2)^{-1} s(m1) s(m2) (dot) and
/// τ̃(m1,m2) = s(m1∘m2)^{-1} · (s(m1) ∘ s(m2)) (dot inverse/product
/// outside, circ inside); verified to land in Z²_N.
BraceCocyclePair brace_extension_cocycle(const BraceExtension& e, const std::vector<int>& s);

}  // namespace rrbtk
