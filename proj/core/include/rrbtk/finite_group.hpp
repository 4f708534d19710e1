#pragma once

#include <string>
#include <vector>

namespace rrbtk {

/// A finite group given by its Cayley table over dense indices 0..n-1.
/// The identity is computed, never assumed to sit at index 0. Instances
/// are verified on construction and immutable afterwards.
class FiniteGroup {
public:
    /// Verifies the table (Latin square, associativity, identity, inverses)
    /// and throws NotAGroup on failure.
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::string label = "");

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
    static FiniteGroup opposite(const FiniteGroup& g);
    static FiniteGroup symmetric(int n);  // n <= 5
    static FiniteGroup dihedral(int n);   // order 2n, n >= 1

    int order() const { return order_; }
    int mul(int i, int j) const { return table_[i * order_ + j]; }
    int inv(int i) const { return inverses_[i]; }
    int identity() const { return identity_; }
    const std::string& label() const { return label_; }

    bool is_abelian() const;
    int element_order(int x) const;
    /// x * y * x^{-1}
    int conj(int x, int y) const { return mul(mul(x, y), inv(x)); }

    std::vector<std::vector<int>> table_rows() const;

    bool same_table(const FiniteGroup& other) const {
        return order_ == other.order_ && table_ == other.table_;
    }

    /// Closure of a subset under multiplication and inverse; sorted indices.
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
    bool is_subgroup(const std::vector<int>& elems) const;
    bool is_normal(const std::vector<int>& subgroup) const;

    /// Left cosets of a subgroup, each sorted, ordered by minimal representative.
    std::vector<std::vector<int>> cosets(const std::vector<int>& subgroup) const;

    /// Elements of maximal order first tie-broken by index; used by searches.
    std::vector<int> elements_by_decreasing_order() const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    std::vector<int> table_;  // row-major, table_[i*order_+j] = i*j
    int identity_ = 0;
    std::vector<int> inverses_;
    std::string label_;
};

/// A homomorphism between finite groups, stored as the image array.
struct GroupHom {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<int> image;

    /// Verifies image[x*y] = image[x]*image[y]; throws NotAHomomorphism.
    static GroupHom make(FiniteGroup domain, FiniteGroup codomain, std::vector<int> image);
    static GroupHom identity(const FiniteGroup& g);
    static GroupHom trivial(const FiniteGroup& domain, const FiniteGroup& codomain);

    int operator()(int x) const { return image[x]; }
    bool is_injective() const;
    bool is_surjective() const;
    std::vector<int> kernel_elements() const;
    std::vector<int> image_elements() const;
};

enum class Variance { Hom, AntiHom };

/// An action of `actor` on `space` by automorphisms. Covariant actions
/// satisfy perms[g1*g2] = perms[g1] o perms[g2]; contravariant ones
/// compose the other way round.
struct GroupAction {
    FiniteGroup actor;
    FiniteGroup space;
    std::vector<std::vector<int>> perms;
    Variance variance = Variance::Hom;

    static GroupAction make(FiniteGroup actor, FiniteGroup space,
                            std::vector<std::vector<int>> perms,
                            Variance variance = Variance::Hom);
    static GroupAction trivial(const FiniteGroup& actor, const FiniteGroup& space,
                               Variance variance = Variance::Hom);
    /// phi_g(x) = g x g^{-1}
    static GroupAction adjoint(const FiniteGroup& g);

    int apply(int g, int x) const { return perms[g][x]; }
    int apply_inverse(int g, int x) const { return perms[actor.inv(g)][x]; }
    bool is_trivial() const;
};

/// All automorphisms of G, found by backtracking on generator images.
/// Each entry is a permutation of 0..|G|-1. Throws SearchBudgetExceeded
/// if the search tree grows past `budget` nodes.
std::vector<std::vector<int>> automorphism_group(const FiniteGroup& g,
                                                 long budget = 50'000'000);

/// All isomorphisms G1 -> G2 (empty if none).
std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                               long budget = 50'000'000);

/// A small generating set, chosen greedily by decreasing element order.
std::vector<int> generating_set(const FiniteGroup& g);

/// All homomorphisms G1 -> G2 (by backtracking on generator images).
std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                                long budget = 50'000'000);

}  // namespace rrbtk
