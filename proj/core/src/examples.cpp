#include "rrbtk/examples.hpp"

#include "rrbtk/bridge.hpp"
#include "rrbtk/errors.hpp"

namespace rrbtk {

namespace {

int element_of_order(const FiniteGroup& g, int order) {
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == order) return x;
    throw InternalInvariantViolation("expected element order not found");
}

}  // namespace

std::vector<ExampleDocument> bundled_examples() {
    std::vector<ExampleDocument> out;

    {
        FiniteGroup s3 = FiniteGroup::symmetric(3);
        auto h_sub = s3.generated_subgroup({element_of_order(s3, 3)});
        auto l_sub = s3.generated_subgroup({element_of_order(s3, 2)});
        RRBGroup r = from_exact_factorization(s3, h_sub, l_sub);
        out.push_back({"s3-exact-factorization", make_document("rrb", rrb_to_json(r))});
    }
    {
        RRBGroup r = from_opposite(FiniteGroup::symmetric(3));
        out.push_back({"s3-opposite", make_document("rrb", rrb_to_json(r))});
    }
    {
        RRBGroup r = from_opposite(FiniteGroup::cyclic(6));
        out.push_back({"z6-opposite", make_document("rrb", rrb_to_json(r))});
    }
    {
        // Trivial action; R is then an operator exactly when it is a
        // homomorphism — here reduction of Z/4 onto Z/2.
        FiniteGroup z4 = FiniteGroup::cyclic(4);
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        GroupAction phi = GroupAction::trivial(z2, z4, Variance::Hom);
        RRBGroup r = RRBGroup::make(z4, z2, phi, {0, 1, 0, 1});
        out.push_back({"z4-homomorphism-operator", make_document("rrb", rrb_to_json(r))});
    }
    {
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        GroupAction phi = GroupAction::trivial(z2, z2, Variance::Hom);
        RRBGroup base = RRBGroup::make(z2, z2, phi, {0, 1});
        RRBGroup coeff = RRBGroup::make(z2, z2, phi, {0, 1});
        RRBModule m = RRBModule::trivial(base, coeff);
        out.push_back({"z2-trivial-module", make_document("module", module_to_json(m))});
    }
    {
        SkewLeftBrace b = zp2_brace_extension(2).total;
        out.push_back({"z4-nontrivial-brace", make_document("brace", brace_to_json(b))});
    }
    return out;
}

}  // namespace rrbtk
