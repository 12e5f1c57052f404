#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

#include "actdim/cli.hpp"
#include "actdim/complex.hpp"
#include "actdim/coxeter.hpp"
#include "actdim/nerve.hpp"
#include "fixtures.hpp"

using namespace actdim;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("actdim_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify") {
    const auto a3 = write("a3.coxmat", format_coxeter_matrix(type_a(3)));
    const auto r = run({"classify", a3});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "{1,2,3}: A3"));
    CHECK(contains(r.out, "order: 24"));

    const auto j = nlohmann::json::parse(run({"classify", a3, "--json"}).out);
    CHECK(j["order"] == "24");
    CHECK(j["components"][0]["type"] == "A3");

    const auto aff = write("aff.coxmat", "rank 3\n1 2 3\n2 3 3\n1 3 3\n");
    CHECK(contains(run({"classify", aff}).out, "Infinite"));
}

TEST_CASE("bounds") {
    const auto tree = write("tree.coxmat", "rank 3\n1 2 3\n2 3 inf\n");
    const auto r = run({"bounds", tree});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "exact: 3"));

    const auto j = nlohmann::json::parse(run({"--json", "bounds", tree}).out);
    CHECK(j["exact"] == 3);
    CHECK(j["upper"]["rule"] == "upper-2n+1");

    const auto aff = write("aff.coxmat", "rank 3\n1 2 3\n2 3 3\n1 3 3\n");
    CHECK(nlohmann::json::parse(run({"bounds", aff, "--json"}).out)["upper"]["value"].is_null());
    CHECK(nlohmann::json::parse(run({"bounds", aff, "--json", "--assert-kpi1"}).out)["upper"]["value"] == 4);
}

TEST_CASE("nerve output reads back as a complex") {
    const auto tree = write("tree.coxmat", "rank 3\n1 2 3\n2 3 inf\n");
    const auto r = run({"nerve", tree});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "# [1,2] A2 irreducible"));
    const auto k = parse_complex(r.out);
    CHECK(is_isomorphic(k, build_nerve(read_coxeter_file(tree)).complex));
}

TEST_CASE("homology and pi1") {
    const auto rp = write("rp2.complex", format_complex(fixtures::rp2()));
    const auto h = run({"homology", rp});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "H_1 = Z/2"));
    CHECK(contains(h.out, "H^2 = Z/2"));
    CHECK(contains(run({"homology", rp, "--mod", "2"}).out, "dim H_2(F_2) = 1"));
    CHECK(run({"homology", rp, "--mod", "6"}).code == 1);

    const auto p = run({"pi1", rp});
    CHECK(contains(p.out, "abelianization: Z/2"));
    CHECK(contains(p.out, "triviality: Refuted"));
}

TEST_CASE("complex constructions") {
    const auto tri = write("tri.complex", "1 2 3\n");
    const auto o = run({"octa", tri});
    CHECK(o.code == 0);
    CHECK(parse_complex(o.out).facets().size() == 8);
    CHECK(parse_complex(run({"subdivide", tri}).out).facets().size() == 6);
    const auto d = run({"dualcone", tri, "1"});
    CHECK(d.code == 0);
    CHECK(parse_complex(d.out).num_vertices() == 4);
    CHECK(run({"dualcone", tri, "1,9"}).code != 0);
}

TEST_CASE("basic construction and caps") {
    const auto b3 = write("b3.coxmat", format_coxeter_matrix(type_b(3)));
    const auto table = (scratch() / "table.json").string();
    const auto r = run({"basic", b3, "--action-table", table});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "# f-vector: 147"));
    CHECK_FALSE(contains(r.out, "FAIL"));
    const auto t = nlohmann::json::parse(std::ifstream(table));
    CHECK(t["vertices"].size() == 147);
    CHECK(t["action"].size() == 3);

    CHECK(run({"basic", b3, "--cap", "10"}).code == 1);
    ::setenv("ARTIN_ACTDIM_CAP", "10", 1);
    CHECK(run({"basic", b3}).code == 1);
    CHECK(run({"basic", b3, "--cap", "100"}).code == 0);
    ::setenv("ARTIN_ACTDIM_CAP", "ten", 1);
    CHECK(run({"basic", b3}).code == 2);
    ::unsetenv("ARTIN_ACTDIM_CAP");

    const auto inf = write("inf.coxmat", "rank 2\n1 2 inf\n");
    const auto bad = run({"basic", inf});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "NotFinite"));
}

TEST_CASE("embed and gluing") {
    const auto ann = write("annulus.complex", format_complex(fixtures::annulus()));
    const auto e = run({"embed", ann});
    CHECK(e.code == 0);
    CHECK(contains(e.out, "# status: Embeddable"));
    const auto c = parse_complex(e.out);
    CHECK(c.euler_characteristic() == 1);
    CHECK(is_subcomplex(c, fixtures::annulus()));

    const auto circle = write("circle.complex", format_complex(fixtures::cycle(4)));
    CHECK(contains(run({"embed", circle}).out, "status: NotEmbeddable"));
    const auto forest = write("forest.complex", "a b\nc d\ne\n");
    const auto f = nlohmann::json::parse(run({"embed", forest, "--json"}).out);
    CHECK(f["status"] == "Embeddable");
    CHECK(f["complex"]["facets"].size() == 4);

    const auto g = run({"gluing", write("tri.complex", "1 2 3\n")});
    CHECK(g.code == 0);
    CHECK(contains(g.out, "PASS (a)"));
    CHECK_FALSE(contains(g.out, "FAIL"));
}

TEST_CASE("errors and exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const auto missing = run({"homology", (scratch() / "nope.complex").string()});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot open"));
    const auto bad = write("bad.coxmat", "rank 2\n1 2 1\n");
    const auto r = run({"classify", bad});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 2"));
}

TEST_CASE("output is deterministic") {
    const auto ann = write("annulus.complex", format_complex(fixtures::annulus()));
    const auto b3 = write("b3.coxmat", format_coxeter_matrix(type_b(3)));
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"embed", ann, "--json"}, {"basic", b3}, {"pi1", ann}, {"gluing", ann, "--json"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
