#pragma once

#include <string>
#include <vector>

#include "rrbtk/io.hpp"

namespace rrbtk {

/// A ready-to-run input document with a stable name.
struct ExampleDocument {
    std::string name;
    Json doc;
};

/// The documents shipped with the command-line tool:
///   - s3-exact-factorization: R(hl) = l^{-1} on S3 = A3 * <transposition>
///   - s3-opposite, z6-opposite: (G, G^op, conjugation, id)
///   - z4-homomorphism-operator: trivial action, R = reduction mod 2
///   - z2-trivial-module: the all-trivial module over order-2 data
///   - z4-nontrivial-brace: x o y = x + y + 2xy on Z/4
/// Every document passes its own `verify`.
std::vector<ExampleDocument> bundled_examples();

}  // namespace rrbtk
