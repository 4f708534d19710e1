#include "rrbtk/io.hpp"

#include <fstream>

#include "rrbtk/errors.hpp"

namespace rrbtk {

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw BadDocument(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw BadDocument(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_array(const Json& v, const char* what) {
    if (!v.is_array()) throw BadDocument(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw BadDocument(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

/// A rectangular array of integer rows; entries must lie in [0, bound).
std::vector<std::vector<int>> int_table(const Json& v, const char* what, int bound) {
    if (!v.is_array()) throw BadDocument(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> out;
    out.reserve(v.size());
    size_t width = 0;
    for (const auto& row : v) {
        out.push_back(int_array(row, what));
        if (out.size() == 1) width = out.back().size();
        if (out.back().size() != width) throw BadDocument(std::string(what) + " is ragged");
        for (int x : out.back())
            if (x < 0 || x >= bound)
                throw BadDocument(std::string(what) + " has an out-of-range index");
    }
    return out;
}

Json table_to_json(const std::vector<std::vector<int>>& t) {
    Json rows = Json::array();
    for (const auto& r : t) rows.push_back(r);
    return rows;
}

}  // namespace

Json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadDocument("cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw BadDocument(path + ": " + e.what());
    }
    if (!doc.is_object()) throw BadDocument(path + ": top level must be an object");
    if (int_field(doc, "format") != 1) throw BadDocument(path + ": unsupported format version");
    return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json make_document(const std::string& kind, Json payload) {
    Json doc;
    doc["format"] = 1;
    doc["kind"] = kind;
    for (auto& [k, v] : payload.items()) doc[k] = std::move(v);
    return doc;
}

Json document_payload(const Json& doc, const std::string& kind) {
    if (!doc.is_object()) throw BadDocument("document must be an object");
    auto it = doc.find("kind");
    if (it != doc.end() && it->get<std::string>() != kind)
        throw BadDocument("expected a \"" + kind + "\" document, found \"" +
                          it->get<std::string>() + "\"");
    return doc;
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["label"] = g.label();
    j["order"] = g.order();
    j["table"] = table_to_json(g.table_rows());
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw BadDocument("group must be an object");
    int n = int_field(j, "order");
    if (n <= 0) throw BadDocument("group order must be positive");
    auto table = int_table(field(j, "table"), "group table", n);
    if (static_cast<int>(table.size()) != n ||
        (n > 0 && static_cast<int>(table[0].size()) != n))
        throw BadDocument("group table must be order x order");
    std::string label;
    if (auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) throw BadDocument("group label must be a string");
        label = it->get<std::string>();
    }
    return FiniteGroup::from_table(std::move(table), std::move(label));
}

Json rrb_to_json(const RRBGroup& r) {
    Json j;
    j["H"] = group_to_json(r.H);
    j["G"] = group_to_json(r.G);
    j["phi"] = table_to_json(r.phi.perms);
    j["R"] = r.R;
    return j;
}

RRBGroup rrb_from_json(const Json& j) {
    if (!j.is_object()) throw BadDocument("rrb document must be an object");
    FiniteGroup h = group_from_json(field(j, "H"));
    FiniteGroup g = group_from_json(field(j, "G"));
    auto perms = int_table(field(j, "phi"), "phi", h.order());
    if (static_cast<int>(perms.size()) != g.order() ||
        (g.order() > 0 && static_cast<int>(perms[0].size()) != h.order()))
        throw BadDocument("phi must give one H-permutation per G-element");
    auto r = int_array(field(j, "R"), "R");
    if (static_cast<int>(r.size()) != h.order())
        throw BadDocument("R must give one G-index per H-element");
    for (int x : r)
        if (x < 0 || x >= g.order()) throw BadDocument("R has an out-of-range index");
    GroupAction phi = GroupAction::make(g, h, std::move(perms), Variance::Hom);
    return RRBGroup::make(std::move(h), std::move(g), std::move(phi), std::move(r));
}

Json brace_to_json(const SkewLeftBrace& b) {
    Json j;
    j["order"] = b.order();
    j["dot"] = table_to_json(b.dot.table_rows());
    j["circ"] = table_to_json(b.circ.table_rows());
    return j;
}

SkewLeftBrace brace_from_json(const Json& j) {
    if (!j.is_object()) throw BadDocument("brace must be an object");
    int n = int_field(j, "order");
    if (n <= 0) throw BadDocument("brace order must be positive");
    auto dot = int_table(field(j, "dot"), "dot table", n);
    auto circ = int_table(field(j, "circ"), "circ table", n);
    if (static_cast<int>(dot.size()) != n || static_cast<int>(circ.size()) != n)
        throw BadDocument("brace tables must be order x order");
    return brace_new(std::move(dot), std::move(circ));
}

Json module_to_json(const RRBModule& m) {
    Json j;
    j["base"] = rrb_to_json(m.base);
    j["coeff"] = rrb_to_json(m.coeff);
    j["nu"] = table_to_json(m.nu.perms);
    j["mu"] = table_to_json(m.mu.perms);
    j["sigma"] = table_to_json(m.sigma.perms);
    j["f"] = table_to_json(m.f);
    return j;
}

RRBModule module_from_json(const Json& j) {
    if (!j.is_object()) throw BadDocument("module document must be an object");
    RRBGroup base = rrb_from_json(field(j, "base"));
    RRBGroup coeff = rrb_from_json(field(j, "coeff"));
    const int na = base.H.order(), nb = base.G.order();
    const int nk = coeff.H.order(), nl = coeff.G.order();
    auto nu = int_table(field(j, "nu"), "nu", nk);
    auto mu = int_table(field(j, "mu"), "mu", nk);
    auto sigma = int_table(field(j, "sigma"), "sigma", nl);
    auto f = int_table(field(j, "f"), "f", nk);
    if (static_cast<int>(nu.size()) != nb) throw BadDocument("nu must have one row per B-element");
    if (static_cast<int>(mu.size()) != na) throw BadDocument("mu must have one row per A-element");
    if (static_cast<int>(sigma.size()) != nb)
        throw BadDocument("sigma must have one row per B-element");
    if (static_cast<int>(f.size()) != nl || (nl > 0 && static_cast<int>(f[0].size()) != na))
        throw BadDocument("f must be an L x A table of K-indices");
    GroupAction anu = GroupAction::make(base.G, coeff.H, std::move(nu), Variance::Hom);
    GroupAction amu = GroupAction::make(base.H, coeff.H, std::move(mu), Variance::AntiHom);
    GroupAction asigma = GroupAction::make(base.G, coeff.G, std::move(sigma), Variance::AntiHom);
    return RRBModule::make(std::move(base), std::move(coeff), std::move(anu), std::move(amu),
                           std::move(asigma), std::move(f));
}

Json extension_to_json(const RRBExtension& e) {
    Json j;
    j["kernel"] = rrb_to_json(e.kernel);
    j["total"] = rrb_to_json(e.total);
    j["quot"] = rrb_to_json(e.quot);
    Json incl, proj;
    incl["psi"] = e.incl.psi.image;
    incl["eta"] = e.incl.eta.image;
    proj["psi"] = e.proj.psi.image;
    proj["eta"] = e.proj.eta.image;
    j["incl"] = std::move(incl);
    j["proj"] = std::move(proj);
    return j;
}

RRBExtension extension_from_json(const Json& j) {
    if (!j.is_object()) throw BadDocument("extension document must be an object");
    RRBGroup kernel = rrb_from_json(field(j, "kernel"));
    RRBGroup total = rrb_from_json(field(j, "total"));
    RRBGroup quot = rrb_from_json(field(j, "quot"));
    const Json& ji = field(j, "incl");
    const Json& jp = field(j, "proj");
    auto map = [](const Json& v, const char* what, int dom, int cod) {
        std::vector<int> m = int_array(v, what);
        if (static_cast<int>(m.size()) != dom)
            throw BadDocument(std::string(what) + " has the wrong length");
        for (int x : m)
            if (x < 0 || x >= cod) throw BadDocument(std::string(what) + " has an out-of-range index");
        return m;
    };
    RRBHom incl = RRBHom::make(
        kernel, total,
        GroupHom::make(kernel.H, total.H,
                       map(field(ji, "psi"), "incl psi", kernel.H.order(), total.H.order())),
        GroupHom::make(kernel.G, total.G,
                       map(field(ji, "eta"), "incl eta", kernel.G.order(), total.G.order())));
    RRBHom proj = RRBHom::make(
        total, quot,
        GroupHom::make(total.H, quot.H,
                       map(field(jp, "psi"), "proj psi", total.H.order(), quot.H.order())),
        GroupHom::make(total.G, quot.G,
                       map(field(jp, "eta"), "proj eta", total.G.order(), quot.G.order())));
    return RRBExtension::verify(std::move(kernel), std::move(total), std::move(quot),
                                std::move(incl), std::move(proj));
}

}  // namespace rrbtk
