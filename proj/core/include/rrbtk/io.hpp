#pragma once

#include <string>

#include "json.hpp"
#include "rrbtk/brace.hpp"
#include "rrbtk/extension.hpp"
#include "rrbtk/rrb.hpp"
#include "rrbtk/rrb_module.hpp"

namespace rrbtk {

/// All documents use insertion-ordered JSON so that serialization is
/// deterministic: identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

/// Parses a UTF-8 JSON file. Top-level documents must carry
/// "format": 1; anything else throws BadDocument.
Json load_document(const std::string& path);

/// Deterministic serialization (two-space indent, trailing newline).
std::string dump_document(const Json& doc);

// Group documents: {"label": string, "order": n, "table": [[...]]}.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// RRB documents: {"H": group, "G": group, "phi": [[perm per G-element]],
// "R": [G-index per H-element]}.
Json rrb_to_json(const RRBGroup& r);
RRBGroup rrb_from_json(const Json& j);

// Brace documents: {"order": n, "dot": table, "circ": table}.
Json brace_to_json(const SkewLeftBrace& b);
SkewLeftBrace brace_from_json(const Json& j);

// Module documents: {"base": rrb, "coeff": rrb, "nu": perms,
// "mu": perms, "sigma": perms, "f": table}.
Json module_to_json(const RRBModule& m);
RRBModule module_from_json(const Json& j);

// Extension documents: {"kernel": rrb, "total": rrb, "quot": rrb,
// "incl": {"psi": [...], "eta": [...]}, "proj": likewise}.
Json extension_to_json(const RRBExtension& e);
RRBExtension extension_from_json(const Json& j);

/// Adds the "format": 1 envelope and a "kind" tag in front of a payload.
Json make_document(const std::string& kind, Json payload);

/// The payload of a loaded document, checked against the expected kind.
Json document_payload(const Json& doc, const std::string& kind);

}  // namespace rrbtk
