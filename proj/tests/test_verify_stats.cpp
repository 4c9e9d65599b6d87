#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gcol/engine.hpp"
#include "gcol/generate.hpp"
#include "gcol/stats.hpp"
#include "gcol/verify.hpp"

using namespace gcol;

namespace {

BipartiteGraph g1() { return BipartiteGraph::from_nets(4, {{0, 1, 2}, {2, 3}}); }

UnipartiteGraph path4() {
    const std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}, {2, 3}};
    return UnipartiteGraph::from_edges(4, e);
}

bool in(std::span<const VertexId> xs, VertexId x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

TEST_CASE("bipartite verifier") {
    const BipartiteGraph g = g1();
    const std::vector<Color> good{2, 1, 0, 1};
    CHECK_FALSE(verify_bgpc(g, good));

    const std::vector<Color> bad{0, 1, 2, 2};
    const auto v = verify_bgpc(g, bad);
    REQUIRE(v);
    CHECK(*v == Violation{ViolationKind::bgpc_conflict, 2, 3, 1});
    std::ostringstream os;
    os << *v;
    CHECK(os.str() == "bgpc-conflict: vertices 2 and 3 share net 1");

    CHECK_FALSE(verify_bgpc(BipartiteGraph::from_nets(0, {}), std::vector<Color>{}));

    const std::vector<Color> hole{0, -1, 2, 0};
    CHECK(verify_bgpc(g, hole)->kind == ViolationKind::uncolored);
    CHECK(verify_bgpc(g, hole)->first == 1);
    CHECK_FALSE(verify_bgpc(g, hole, true));

    const std::vector<Color> short_colors{0, 1};
    CHECK_THROWS_AS(verify_bgpc(g, short_colors), std::invalid_argument);
}

TEST_CASE("distance-2 verifier") {
    const UnipartiteGraph g = path4();
    CHECK_FALSE(verify_d2gc(g, std::vector<Color>{1, 0, 2, 1}));
    const auto v = verify_d2gc(g, std::vector<Color>{0, 1, 0, 1});
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::d2_conflict);
    CHECK(std::set<VertexId>{v->first, v->second} == std::set<VertexId>{0, 2});
    CHECK(v->via == 1);

    const auto adjacent = verify_d2gc(g, std::vector<Color>{0, 0, 1, 2});
    REQUIRE(adjacent);
    CHECK(adjacent->via == -1);

    CHECK_FALSE(verify_d2gc(UnipartiteGraph::from_edges(1, {}), std::vector<Color>{9}));
}

TEST_CASE("distance-2 neighborhoods") {
    CHECK(d2_neighborhood(g1(), 0) == std::vector<VertexId>{1, 2});
    CHECK(d2_neighborhood(g1(), 2) == std::vector<VertexId>{0, 1, 3});
    CHECK(d2_neighborhood(path4(), 1) == std::vector<VertexId>{0, 2, 3});
    CHECK(d2_neighborhood(UnipartiteGraph::from_edges(2, {}), 0).empty());
    CHECK(d2_neighborhood(BipartiteGraph::from_nets(2, {{1}}), 0).empty());
}

TEST_CASE("single mutations of valid colorings are caught with a true witness") {
    std::mt19937_64 rng(1000);
    const BipartiteGraph g = generate_random_bipartite(400, 250, 5, 1);
    const UnipartiteGraph u = to_unipartite(symmetrize(generate_random_bipartite(400, 400, 3, 2)));
    const std::vector<Color> base_b = run(g, natural_order(400), preset("V-V"), 1).coloring.values();
    const std::vector<Color> base_d = run(u, natural_order(400), preset("V-V"), 1).coloring.values();
    REQUIRE_FALSE(verify_bgpc(g, base_b));
    REQUIRE_FALSE(verify_d2gc(u, base_d));

    int checked = 0;
    while (checked < 1000) {
        const VertexId w = static_cast<VertexId>(rng() % 400);
        if (checked % 2 == 0) {
            const std::vector<VertexId> reach = d2_neighborhood(g, w);
            if (reach.empty()) continue;
            std::vector<Color> c = base_b;
            c[w] = c[reach[rng() % reach.size()]];
            const auto v = verify_bgpc(g, c);
            REQUIRE(v);
            REQUIRE(v->kind == ViolationKind::bgpc_conflict);
            CHECK(v->first != v->second);
            CHECK(c[v->first] == c[v->second]);
            CHECK(in(g.vtxs(static_cast<NetId>(v->via)), v->first));
            CHECK(in(g.vtxs(static_cast<NetId>(v->via)), v->second));
            CHECK((v->first == w || v->second == w));
        } else {
            const std::vector<VertexId> reach = d2_neighborhood(u, w);
            if (reach.empty()) continue;
            std::vector<Color> c = base_d;
            c[w] = c[reach[rng() % reach.size()]];
            const auto v = verify_d2gc(u, c);
            REQUIRE(v);
            REQUIRE(v->kind == ViolationKind::d2_conflict);
            CHECK(v->first != v->second);
            CHECK(c[v->first] == c[v->second]);
            if (v->via < 0) {
                CHECK(in(u.nbor(v->first), v->second));
            } else {
                const auto mid = static_cast<VertexId>(v->via);
                CHECK(in(u.nbor(mid), v->first));
                CHECK(in(u.nbor(mid), v->second));
            }
            CHECK((v->first == w || v->second == w));
        }
        ++checked;
    }
}

TEST_CASE("color statistics") {
    const ColoringStats a = color_stats(Coloring(std::vector<Color>{0, 0, 1, 1}));
    CHECK(a.num_colors == 2);
    CHECK(a.mean_cardinality == doctest::Approx(2.0));
    CHECK(a.stddev_cardinality == doctest::Approx(0.0));

    const ColoringStats b = color_stats(Coloring(std::vector<Color>{0, 0, 0, 1}));
    CHECK(b.mean_cardinality == doctest::Approx(2.0));
    CHECK(b.stddev_cardinality == doctest::Approx(1.0));

    const ColoringStats c = color_stats(Coloring(std::vector<Color>{5}));
    CHECK(c.num_colors == 1);
    CHECK(c.class_cardinalities == std::map<Color, std::int64_t>{{5, 1}});

    CHECK_THROWS_AS(color_stats(Coloring(std::vector<Color>{0, -1})), std::invalid_argument);
}

TEST_CASE("engine statistics reconcile with the coloring") {
    const BipartiteGraph g = generate_random_bipartite(5000, 3000, 6, 77);
    for (const std::string& name : preset_names()) {
        const RunResult r = run(g, natural_order(5000), attach_balancer(preset(name), BalanceMode::b2), 2);
        const ColoringStats& s = r.stats;
        CHECK(s.num_colors == count_distinct_colors(r.coloring.view()));
        std::int64_t total = 0;
        for (const auto& [color, count] : s.class_cardinalities) {
            CHECK(count > 0);
            total += count;
        }
        CHECK(total == 5000);
        CHECK(s.num_vertices == 5000);
        CHECK(static_cast<std::int64_t>(s.class_cardinalities.size()) == s.num_colors);
        CHECK(s.class_cardinalities.rbegin()->first + 1 >= s.num_colors);
        CHECK(s.mean_cardinality == doctest::Approx(5000.0 / s.num_colors));
        CHECK(s.balance == "b2");
        CHECK(s.workers == 2);
        double iter_ms = 0.0;
        for (const IterationRecord& it : s.iterations) iter_ms += it.total_ms;
        CHECK(iter_ms <= s.total_ms + 1e-6);
    }
}

TEST_CASE("statistics serialize with stable keys") {
    const RunResult r = run(g1(), natural_order(4), preset("V-V"), 1);
    const nlohmann::json j = r.stats;
    CHECK(j.at("num_colors") == 3);
    CHECK(j.at("class_cardinalities").at("0") == 2);
    CHECK(j.at("algorithm") == "V-V");
    CHECK(j.at("iterations").size() == 1);
    CHECK(j.at("iterations")[0].at("queue_before") == 4);
    CHECK(j.at("iterations")[0].at("coloring") == "vertex");
    CHECK(j.contains("stddev_cardinality"));
    CHECK(j.contains("fallback_used"));
}

TEST_CASE("distinct color count") {
    CHECK(count_distinct_colors(std::vector<Color>{3, 3, 1, 0}) == 3);
    CHECK(count_distinct_colors(std::vector<Color>{}) == 0);
}
