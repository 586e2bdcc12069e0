#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "limbforge/census.hpp"
#include "limbforge/constructions.hpp"
#include "limbforge/error.hpp"
#include "limbforge/hopf.hpp"
#include "limbforge/json_io.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/series.hpp"
#include "limbforge/spectra.hpp"
#include "limbforge/trees.hpp"
#include "limbforge/verify/acceptance.hpp"

namespace limbforge::cli {

namespace {

constexpr int kMaxTerms = 301;

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
}

WeightedGraph load_graph(const std::string& path, std::istream& in) { return graph_from_text(read_source(path, in)); }

Json ids_json(const std::vector<VertexId>& ids) { return Json(ids); }

// {"graph": {...}, "sets": [[...], ...], "weighted": false}
CospectralSeed load_seed(const std::string& path, std::istream& in) {
    const auto j = parse_json(read_source(path, in));
    if (!j.is_object() || !j.contains("graph") || !j.contains("sets") || !j["sets"].is_array()) {
        throw Error(ErrorCode::InvalidArgument, "seed JSON needs \"graph\" and a \"sets\" array");
    }
    std::vector<std::vector<VertexId>> sets;
    for (const auto& s : j["sets"]) {
        if (!s.is_array()) throw Error(ErrorCode::InvalidArgument, "each seed set must be an array of ids");
        std::vector<VertexId> ids;
        for (const auto& x : s) {
            if (!x.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "seed set ids must be integers");
            ids.push_back(x.get<VertexId>());
        }
        sets.push_back(std::move(ids));
    }
    const bool weighted = j.value("weighted", false);
    return CospectralSeed(graph_from_json(j["graph"]), std::move(sets), weighted);
}

Json seed_to_json(const CospectralSeed& seed) {
    Json sets = Json::array();
    for (const auto& s : seed.sets()) sets.push_back(ids_json(s));
    return {{"graph", graph_to_json(seed.base())}, {"sets", std::move(sets)}, {"weighted", seed.weighted()}};
}

bool weighted_family(TreeFamily f) { return f == TreeFamily::weighted_rooted || f == TreeFamily::weighted_free; }
bool free_family(TreeFamily f) { return f == TreeFamily::free || f == TreeFamily::weighted_free; }

RationalSeries pick_series(const std::string& which, int order, std::optional<int> ell) {
    auto need_ell = [&]() {
        if (!ell) throw Error(ErrorCode::InvalidArgument, "--ell is required for --which " + which);
        return *ell;
    };
    if (which == "T") return series_rooted(order);
    if (which == "TW") return series_weighted_rooted(order);
    if (which == "W") return series_weighted_free(order);
    if (which == "f") return series_dominating_bound(order);
    if (which == "S") return series_avoid_limb_rooted(need_ell(), order);
    if (which == "SW") return series_avoid_limb_weighted(need_ell(), order);
    if (which == "Sstar") return series_avoid_maximal_limb(need_ell(), order);
    if (which == "SU") return series_avoid_limb_weighted_free(need_ell(), order);
    throw Error(ErrorCode::InvalidArgument, "unknown series '" + which + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tree enumeration, limb avoidance series and cospectral constructions", "limbforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "limbforge 1.0");

    std::function<void()> action;
    auto emit = [&](const Json& j) { out << j.dump() << '\n'; };

    // enumerate
    std::string kind_name = "rooted";
    int size = 0;
    auto* enumerate = app.add_subcommand("enumerate", "List every tree of a family, one JSON graph each");
    enumerate->add_option("--kind", kind_name, "rooted, free, weighted-rooted or weighted-free")->capture_default_str();
    enumerate->add_option("--size", size, "Vertices (total weight for weighted families)")->required();
    enumerate->callback([&] {
        action = [&] {
            const auto kind = parse_tree_family(kind_name);
            const int limit = weighted_family(kind) ? kCensusMaxWeighted : kCensusMaxUnweighted;
            if (size < 1) throw Error(ErrorCode::InvalidArgument, "--size must be positive");
            if (size > limit) throw Error(ErrorCode::TooLarge, "--size is limited to " + std::to_string(limit));
            std::vector<CanonicalTree> trees;
            switch (kind) {
                case TreeFamily::rooted: trees = enumerate_rooted(size); break;
                case TreeFamily::free: trees = enumerate_free(size); break;
                case TreeFamily::weighted_rooted: trees = enumerate_weighted_rooted(size); break;
                case TreeFamily::weighted_free: trees = enumerate_weighted_free(size); break;
            }
            Json list = Json::array();
            for (const auto& t : trees) {
                auto g = to_graph(t, 0);
                if (free_family(kind)) g = g.with_root(std::nullopt);
                list.push_back(graph_to_json(g));
            }
            emit(list);
        };
    });

    // series
    std::string which;
    int terms = kDefaultSeriesOrder + 1;
    std::optional<int> ell;
    auto* series = app.add_subcommand("series", "Coefficients of a counting series");
    series->add_option("--which", which, "T, TW, S, SW, Sstar, W, SU or f")->required();
    series->add_option("--terms", terms, "Number of coefficients, starting at x^0")->capture_default_str();
    series->add_option("--ell", ell, "Pattern size or weight for the avoidance series");
    series->callback([&] {
        action = [&] {
            if (terms < 2 || terms > kMaxTerms) {
                throw Error(ErrorCode::InvalidArgument, "--terms must be between 2 and " + std::to_string(kMaxTerms));
            }
            const auto s = pick_series(which, terms - 1, ell);
            Json j{{"which", which}, {"N", s.order()}, {"coefficients", series_coefficients_json(s)}};
            if (ell && which != "T" && which != "TW" && which != "W" && which != "f") j["ell"] = *ell;
            emit(j);
        };
    });

    // count-avoiding
    int n = 0;
    std::string limb_file, mode_name = "limb";
    bool weighted = false, free_host = false;
    auto* avoid = app.add_subcommand("count-avoiding", "Count trees that carry a rooted pattern nowhere");
    avoid->add_option("--n", n, "Vertices (total weight with --weighted)")->required();
    avoid->add_option("--limb", limb_file, "Rooted pattern as graph JSON, or -")->required();
    avoid->add_option("--mode", mode_name, "limb or maximal")->capture_default_str();
    avoid->add_flag("--weighted", weighted, "Weighted trees");
    avoid->add_flag("--free", free_host, "Free host trees (limb mode only)");
    avoid->callback([&] {
        action = [&] {
            LimbMode mode;
            if (mode_name == "limb") {
                mode = LimbMode::limb;
            } else if (mode_name == "maximal") {
                mode = LimbMode::maximal;
            } else {
                throw Error(ErrorCode::InvalidArgument, "--mode must be limb or maximal");
            }
            const int limit = weighted ? kCensusMaxWeighted : kCensusMaxUnweighted;
            if (n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be positive");
            if (n > limit) throw Error(ErrorCode::TooLarge, "--n is limited to " + std::to_string(limit));
            const LimbSpec spec(canonicalize_rooted(load_graph(limb_file, in)), mode);
            const auto family = weighted ? (free_host ? TreeFamily::weighted_free : TreeFamily::weighted_rooted)
                                         : (free_host ? TreeFamily::free : TreeFamily::rooted);
            emit({{"n", n}, {"count", big_to_json(count_avoiding(n, spec, family))}});
        };
    });

    // graph-input commands
    std::string graph_file;
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial, coefficients low to high");
    charpoly->add_option("file", graph_file, "Graph JSON, or - for standard input")->required();
    charpoly->add_flag("--weighted", weighted, "Use x^w on the diagonal");
    charpoly->callback([&] { action = [&] { emit(poly_to_json(char_poly(load_graph(graph_file, in), weighted))); }; });

    auto* cospectral = app.add_subcommand("cospectral-vertices", "Vertices grouped by the polynomial of G - v");
    cospectral->add_option("file", graph_file, "Graph JSON, or -")->required();
    cospectral->add_flag("--weighted", weighted, "Weighted polynomials");
    cospectral->callback([&] {
        action = [&] {
            Json list = Json::array();
            for (const auto& c : cospectral_vertices(load_graph(graph_file, in), weighted)) {
                list.push_back({{"vertices", ids_json(c.vertices)}, {"polynomial", poly_to_json(c.deleted_poly)}});
            }
            emit(list);
        };
    });

    auto* mate = app.add_subcommand("mate", "Swap the 9-vertex limb between its two rootings; null if absent");
    mate->add_option("file", graph_file, "Tree JSON, or -")->required();
    mate->add_flag("--weighted", weighted, "Check cospectrality with weighted polynomials");
    mate->callback([&] {
        action = [&] {
            const auto m = schwenk_mate(load_graph(graph_file, in), weighted, true);
            emit(m ? graph_to_json(*m) : Json(nullptr));
        };
    });

    std::string recipe = "k-cospectral", seed_file;
    auto* construct = app.add_subcommand("construct", "Build a graph with many cospectral vertices");
    construct->add_option("--recipe", recipe, "k-cospectral")->capture_default_str();
    construct->add_option("--seed", seed_file, "Seed JSON {graph, sets, weighted}, or -")->required();
    construct->callback([&] {
        action = [&] {
            if (recipe != "k-cospectral") throw Error(ErrorCode::InvalidArgument, "unknown recipe '" + recipe + "'");
            const auto res = k_cospectral_construction(load_seed(seed_file, in));
            auto j = graph_to_json(res.graph);
            j["apex"] = res.apex;
            j["set_apexes"] = ids_json(res.set_apexes);
            j["designated"] = ids_json(res.designated);
            j["cospectral_in_graph"] = res.cospectral_in_graph;
            j["cospectral_without_apex"] = res.cospectral_without_apex;
            if (res.designated_orbits) j["designated_orbits"] = *res.designated_orbits;
            emit(j);
        };
    });

    std::string fixture_name;
    bool as_seed = false;
    auto* fix = app.add_subcommand("fixture", "Named example graphs");
    fix->add_option("--name", fixture_name, "schwenk_tree, cyclic_cospectral, two_schwenk_seed, figure_construction")
        ->required();
    fix->add_flag("--as-seed", as_seed, "Emit two_schwenk_seed as a construct seed");
    fix->callback([&] {
        action = [&] {
            const auto f = parse_fixture(fixture_name);
            if (as_seed) {
                if (f != NamedFixture::two_schwenk_seed) {
                    throw Error(ErrorCode::InvalidArgument, "--as-seed only applies to two_schwenk_seed");
                }
                emit(seed_to_json(two_schwenk_seed()));
                return;
            }
            auto j = graph_to_json(fixture(f));
            j["labels"] = fixture_labels(f);
            emit(j);
        };
    });

    auto* coprod = app.add_subcommand("coproduct", "Admissible-cut coproduct of a rooted tree");
    coprod->add_option("file", graph_file, "Rooted tree JSON, or -")->required();
    coprod->callback([&] {
        action = [&] { emit(coproduct_to_json(coproduct(canonicalize_rooted(load_graph(graph_file, in))))); };
    });

    std::string property_name = "has_cospectral_mate", census_kind = "free";
    int n_min = 1, n_max = 0, k = 2;
    std::string census_limb;
    auto* cen = app.add_subcommand("census", "Exhaustive property fractions, one JSON row per n");
    cen->add_option("--property", property_name, "has_limb, has_cospectral_mate or has_k_cospectral_vertices")
        ->capture_default_str();
    cen->add_option("--kind", census_kind, "Tree family")->capture_default_str();
    cen->add_option("--n-min", n_min, "Smallest size")->capture_default_str();
    cen->add_option("--n-max", n_max, "Largest size")->required();
    cen->add_option("--k", k, "Class size for has_k_cospectral_vertices")->capture_default_str();
    cen->add_option("--limb", census_limb, "Pattern for has_limb (rooted graph JSON)");
    cen->callback([&] {
        action = [&] {
            CensusParams params;
            params.k = k;
            if (!census_limb.empty()) params.limb = canonicalize_rooted(load_graph(census_limb, in));
            census(parse_census_property(property_name), parse_tree_family(census_kind), n_min, n_max, params,
                   [&](const CensusRow& row) { out << census_row_to_json(row).dump() << std::endl; });
        };
    });

    int only = 0;
    bool no_reports = false;
    auto* ver = app.add_subcommand("verify", "Run the acceptance suite and print a pass/fail table");
    ver->add_option("--only", only, "Run a single criterion");
    ver->add_flag("--no-reports", no_reports, "Skip the informational lines");
    int verify_status = 0;
    ver->callback([&] {
        action = [&] {
            for (auto& [id, check] : verify::acceptance_checks()) {
                if (only && id != only) continue;
                const auto r = check();
                if (!r.pass) verify_status = 1;
                out << verify::format_result(r) << std::endl;
            }
            if (!no_reports && !only) {
                for (const auto& rep : verify::run_reports()) out << "INFO  " << rep.name << ": " << rep.detail << '\n';
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (action) action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Internal ? 1 : 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return verify_status;
}

}  // namespace limbforge::cli
