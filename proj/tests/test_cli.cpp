#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "limbforge/json_io.hpp"
#include "limbforge/spectra.hpp"

using namespace limbforge;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("fixture piped into charpoly") {
        const auto fx = run({"fixture", "--name", "schwenk_tree"});
        REQUIRE(fx.code == 0);
        const auto cp = run({"charpoly", "-"}, fx.out);
        REQUIRE(cp.code == 0);
        const auto j = Json::parse(cp.out);
        CHECK(j["degree"] == 9);
        CHECK(j["coefficients"].back() == "1");
        CHECK(j["coefficients"][1] == "4");
    }

    TEST_CASE("series and enumerate") {
        const auto s = Json::parse(run({"series", "--which", "TW", "--terms", "5"}).out);
        CHECK(s["which"] == "TW");
        CHECK(s["N"] == 4);
        CHECK(s["coefficients"] == Json({"0", "1", "2", "5", "13"}));
        const auto e = Json::parse(run({"enumerate", "--kind", "rooted", "--size", "4"}).out);
        CHECK(e.size() == 4);
        const auto f = Json::parse(run({"enumerate", "--kind", "free", "--size", "6"}).out);
        CHECK(f.size() == 6);
        CHECK_FALSE(f[0].contains("root"));
        const auto star = Json::parse(run({"series", "--which", "Sstar", "--ell", "3", "--terms", "6"}).out);
        CHECK(star["coefficients"] == Json({"0", "1", "1", "1", "3", "7"}));
    }

    TEST_CASE("count-avoiding") {
        const std::string cherry = R"({"vertices":[{"id":0},{"id":1},{"id":2}],"edges":[[0,1],[0,2]],"root":0})";
        const auto r = run({"count-avoiding", "--n", "6", "--limb", "-", "--mode", "limb"}, cherry);
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out) == Json({{"n", 6}, {"count", "8"}}));
        const auto w = run({"count-avoiding", "--n", "3", "--limb", "-", "--weighted"}, cherry);
        CHECK(Json::parse(w.out)["count"] == "4");
    }

    TEST_CASE("graph commands") {
        const auto fx = run({"fixture", "--name", "schwenk_tree"}).out;
        const auto cls = Json::parse(run({"cospectral-vertices", "-"}, fx).out);
        bool pair = false;
        for (const auto& c : cls) pair = pair || c["vertices"] == Json({2, 5});
        CHECK(pair);
        const auto m = run({"mate", "-"}, fx);
        CHECK(m.code == 0);
        CHECK_FALSE(Json::parse(m.out).is_null());
        const auto none = run({"mate", "-"}, R"({"vertices":[{"id":0},{"id":1}],"edges":[[0,1]]})");
        CHECK(Json::parse(none.out).is_null());
        const auto cp = Json::parse(run({"coproduct", "-"}, R"({"vertices":[{"id":0},{"id":1}],"edges":[[0,1]],"root":0})").out);
        CHECK(cp.size() == 3);
    }

    TEST_CASE("construct from the emitted seed") {
        const auto seed = run({"fixture", "--name", "two_schwenk_seed", "--as-seed"});
        REQUIRE(seed.code == 0);
        const auto c = run({"construct", "--recipe", "k-cospectral", "--seed", "-"}, seed.out);
        REQUIRE(c.code == 0);
        const auto j = Json::parse(c.out);
        CHECK(j["designated"].size() == 6);
        CHECK(j["designated_orbits"] == 4);
        const auto g = graph_from_json(j);
        CHECK(g.order() == 58);
        CHECK(are_isomorphic(g, graph_from_text(run({"fixture", "--name", "figure_construction"}).out)));
    }

    TEST_CASE("census streams one row per n") {
        const auto r = run({"census", "--property", "has_cospectral_mate", "--kind", "free", "--n-min", "9",
                            "--n-max", "11"});
        REQUIRE(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        std::vector<Json> rows;
        while (std::getline(lines, line)) rows.push_back(Json::parse(line));
        REQUIRE(rows.size() == 3);
        CHECK(rows[1]["hits"] == "2");
        CHECK(rows[1]["total"] == "106");
        CHECK(rows[1]["fraction"] == "1/53");
    }

    TEST_CASE("output is deterministic and graphs round-trip") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"fixture", "--name", "figure_construction"},
                 {"enumerate", "--kind", "weighted-free", "--size", "4"},
                 {"series", "--which", "f", "--terms", "12"}}) {
            CHECK(run(args).out == run(args).out);
        }
        for (auto name : {"schwenk_tree", "cyclic_cospectral", "two_schwenk_seed", "figure_construction"}) {
            const auto text = run({"fixture", "--name", name}).out;
            const auto g = graph_from_text(text);
            CHECK(graph_from_text(graph_to_json(g).dump()).edges() == g.edges());
            CHECK(are_isomorphic(g, graph_from_text(graph_to_json(g).dump())));
        }
        const auto m = run({"mate", "-"}, run({"fixture", "--name", "schwenk_tree"}).out).out;
        CHECK_NOTHROW(graph_from_text(m));
    }

    TEST_CASE("exit codes") {
        CHECK(run({}).code == 2);
        CHECK(run({"nonsense"}).code == 2);
        CHECK(run({"series", "--which", "S"}).code == 2);
        CHECK(run({"series", "--which", "Q"}).code == 2);
        CHECK(run({"enumerate", "--size", "40"}).code == 2);
        CHECK(run({"charpoly", "-"}, "{not json").code == 2);
        CHECK(run({"charpoly", "/no/such/file.json"}).code == 2);
        CHECK(run({"charpoly", "-"}, R"({"vertices":[{"id":0}],"edges":[[0,0]]})").code == 2);
        CHECK(run({"coproduct", "-"}, R"({"vertices":[{"id":0}]})").code == 2);
        const auto bad = run({"census", "--n-max", "30"});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("TooLarge") != std::string::npos);
        const auto missing = run({"count-avoiding", "--n", "3"});
        CHECK(missing.code == 2);
        CHECK(missing.err.find("--limb") != std::string::npos);
        CHECK(run({"--help"}).code == 0);
    }
}
