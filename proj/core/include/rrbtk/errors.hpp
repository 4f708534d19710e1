#pragma once

#include <stdexcept>
#include <string>

namespace rrbtk {

struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& reason)
        : std::runtime_error("not a group: " + reason) {}
};

struct NotAbelian : std::runtime_error {
    NotAbelian() : std::runtime_error("group is not abelian") {}
};

struct NotAHomomorphism : std::runtime_error {
    explicit NotAHomomorphism(const std::string& reason)
        : std::runtime_error("not a homomorphism: " + reason) {}
};

struct NotAnAction : std::runtime_error {
    explicit NotAnAction(const std::string& reason)
        : std::runtime_error("not a group action: " + reason) {}
};

struct NotRotaBaxter : std::runtime_error {
    int h1, h2;
    NotRotaBaxter(int h1_, int h2_)
        : std::runtime_error("operator identity fails at pair (" + std::to_string(h1_) +
                             ", " + std::to_string(h2_) + ")"),
          h1(h1_), h2(h2_) {}
};

struct NotExactFactorization : std::runtime_error {
    explicit NotExactFactorization(const std::string& reason)
        : std::runtime_error("not an exact factorization: " + reason) {}
};

struct NotRRBHom : std::runtime_error {
    explicit NotRRBHom(const std::string& reason)
        : std::runtime_error("not a morphism of relative Rota-Baxter groups: " + reason) {}
};

struct NotABrace : std::runtime_error {
    int a, b, c;
    NotABrace(int a_, int b_, int c_)
        : std::runtime_error("brace law fails at (" + std::to_string(a_) + ", " +
                             std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct SolutionCheckFailed : std::runtime_error {
    explicit SolutionCheckFailed(const std::string& what_failed)
        : std::runtime_error("Yang-Baxter solution check failed: " + what_failed) {}
};

struct NotGoodTriplet : std::runtime_error {
    int identity_no;
    NotGoodTriplet(int identity_no_, const std::string& witness)
        : std::runtime_error("good-triplet identity " + std::to_string(identity_no_) +
                             " fails at " + witness),
          identity_no(identity_no_) {}
};

struct NotAModule : std::runtime_error {
    int condition_no;
    NotAModule(int condition_no_, const std::string& witness)
        : std::runtime_error("module condition " + std::to_string(condition_no_) +
                             " fails at " + witness),
          condition_no(condition_no_) {}
};

struct NotCentralModule : std::runtime_error {
    NotCentralModule() : std::runtime_error("module action is not trivial") {}
};

struct NotInC0 : std::runtime_error {
    NotInC0() : std::runtime_error("pair is not in the degree-0 cochain group") {}
};

struct NotACocycle : std::runtime_error {
    explicit NotACocycle(const std::string& witness)
        : std::runtime_error("quadruple is not a 2-cocycle: " + witness) {}
};

struct NotAnExtension : std::runtime_error {
    explicit NotAnExtension(const std::string& reason)
        : std::runtime_error("not an extension: " + reason) {}
};

struct ActionMismatch : std::runtime_error {
    ActionMismatch() : std::runtime_error("associated actions differ") {}
};

struct NotBijective : std::runtime_error {
    explicit NotBijective(const std::string& which)
        : std::runtime_error(which + " is not bijective") {}
};

struct SearchBudgetExceeded : std::runtime_error {
    SearchBudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what_)
        : std::runtime_error("problem too large: " + what_) {}
};

struct InternalInvariantViolation : std::logic_error {
    explicit InternalInvariantViolation(const std::string& what_)
        : std::logic_error("internal invariant violated: " + what_) {}
};

struct BadDocument : std::runtime_error {
    explicit BadDocument(const std::string& reason)
        : std::runtime_error("bad input document: " + reason) {}
};

}  // namespace rrbtk
