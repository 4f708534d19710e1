#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "rrbtk/bridge.hpp"
#include "rrbtk/errors.hpp"
#include "rrbtk/examples.hpp"
#include "rrbtk/extension.hpp"
#include "rrbtk/io.hpp"
#include "zoo.hpp"

using namespace rrbtk;

TEST_CASE("group documents round trip") {
    FiniteGroup g = FiniteGroup::symmetric(3);
    Json j = group_to_json(g);
    FiniteGroup back = group_from_json(j);
    CHECK(back.same_table(g));
    CHECK(back.label() == g.label());
}

TEST_CASE("rrb documents round trip") {
    RRBGroup r = from_opposite(FiniteGroup::symmetric(3));
    RRBGroup back = rrb_from_json(rrb_to_json(r));
    CHECK(back.H.same_table(r.H));
    CHECK(back.G.same_table(r.G));
    CHECK(back.R == r.R);
    CHECK(back.phi.perms == r.phi.perms);
}

TEST_CASE("brace documents round trip") {
    SkewLeftBrace b = zp2_brace_extension(2).total;
    SkewLeftBrace back = brace_from_json(brace_to_json(b));
    CHECK(back.dot.same_table(b.dot));
    CHECK(back.circ.same_table(b.circ));
}

TEST_CASE("module documents round trip") {
    RRBModule m = zoo::mod_nu_twisted();
    RRBModule back = module_from_json(module_to_json(m));
    CHECK(back.nu.perms == m.nu.perms);
    CHECK(back.mu.perms == m.mu.perms);
    CHECK(back.sigma.perms == m.sigma.perms);
    CHECK(back.f == m.f);
}

TEST_CASE("extension documents round trip and reverify") {
    RRBExtension e = semidirect(zoo::mod_f_twisted());
    RRBExtension back = extension_from_json(extension_to_json(e));
    CHECK(back.total.H.same_table(e.total.H));
    CHECK(back.abelian == e.abelian);
    CHECK(back.central == e.central);
    CHECK(back.incl.psi.image == e.incl.psi.image);
    CHECK(back.proj.eta.image == e.proj.eta.image);
}

TEST_CASE("malformed documents are rejected") {
    Json no_table;
    no_table["order"] = 2;
    CHECK_THROWS_AS(group_from_json(no_table), BadDocument);

    Json ragged = no_table;
    ragged["table"] = Json::parse("[[0, 1], [1]]");
    CHECK_THROWS_AS(group_from_json(ragged), BadDocument);

    Json out_of_range = no_table;
    out_of_range["table"] = Json::parse("[[0, 7], [1, 0]]");
    CHECK_THROWS_AS(group_from_json(out_of_range), BadDocument);
    Json rrb = rrb_to_json(from_opposite(FiniteGroup::cyclic(2)));
    rrb.erase("R");
    CHECK_THROWS_AS(rrb_from_json(rrb), BadDocument);
}

TEST_CASE("document envelope and file round trip") {
    Json doc = make_document("brace", brace_to_json(zp2_brace_extension(2).total));
    CHECK(doc["format"] == 1);
    CHECK(doc["kind"] == "brace");
    std::string path = "io_test_doc.json";
    {
        std::ofstream out(path);
        out << dump_document(doc);
    }
    Json back = load_document(path);
    CHECK(back == doc);
    CHECK(dump_document(back) == dump_document(doc));
    // Wrong format version is refused.
    doc["format"] = 2;
    {
        std::ofstream out(path);
        out << dump_document(doc);
    }
    CHECK_THROWS_AS(load_document(path), BadDocument);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_document(path), BadDocument);
}

TEST_CASE("bundled examples all pass their own verification") {
    auto docs = bundled_examples();
    CHECK(docs.size() >= 4);
    int rrbs = 0, modules = 0, braces = 0;
    for (const auto& d : docs) {
        CAPTURE(d.name);
        std::string kind = d.doc.at("kind").get<std::string>();
        if (kind == "rrb") {
            RRBGroup r = rrb_from_json(d.doc);
            // Independent rescan of the defining identity.
            for (int h1 = 0; h1 < r.H.order(); ++h1)
                for (int h2 = 0; h2 < r.H.order(); ++h2)
                    CHECK(r.G.mul(r.R[h1], r.R[h2]) == r.R[r.circ(h1, h2)]);
            ++rrbs;
        } else if (kind == "module") {
            CHECK_NOTHROW(module_from_json(d.doc));
            ++modules;
        } else if (kind == "brace") {
            SkewLeftBrace b = brace_from_json(d.doc);
            CHECK_NOTHROW(ybe_solution(b));
            ++braces;
        }
    }
    CHECK(rrbs >= 3);
    CHECK(modules >= 1);
    CHECK(braces >= 1);
}
