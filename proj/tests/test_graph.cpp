#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "izeta/cli.hpp"
#include "izeta/graph.hpp"
#include "izeta/monodromy.hpp"
#include "izeta/resolution.hpp"

using namespace izeta;

namespace {

Component exc(const std::string& id, long long N, long long nu, long long self) {
    Component c;
    c.id = id;
    c.kind = ComponentKind::Exceptional;
    c.N = N;
    c.nu = nu;
    c.self_intersection = self;
    return c;
}

DualGraph fig3() {
    DualGraph g;
    g.components = {exc("E1", 2, 2, -3), exc("E2", 3, 3, -2), exc("E3", 6, 5, -2),
                    exc("E4", 7, 6, -2), exc("E5", 8, 7, -2), exc("E6", 9, 8, -1)};
    g.edges = {{"E1", "E3", ""}, {"E2", "E3", ""}, {"E3", "E4", ""},
               {"E4", "E5", ""}, {"E5", "E6", ""}};
    return g;
}

}  // namespace

TEST_CASE("chi of open strata") {
    DualGraph g = fig3();
    CHECK(chi_open(g, "E3") == -1);  // meets E1, E2, E4
    CHECK(chi_open(g, "E1") == 1);   // meets only E3
    DualGraph lone;
    lone.components = {exc("E1", 1, 2, -1)};
    CHECK(chi_open(lone, "E1") == 2);  // an isolated rational curve
    Component w;
    w.id = "W1";
    w.kind = ComponentKind::Weak;
    lone.components.push_back(w);
    CHECK_THROWS_AS(chi_open(lone, "W1"), InputError);
}

TEST_CASE("derived generic counts") {
    auto counts = derive_generic_counts(fig3());
    CHECK(counts.at("E6") == 1);
    for (const auto& id : {"E1", "E2", "E3", "E4", "E5"}) CHECK(counts.at(id) == 0);

    DualGraph single;
    single.components = {exc("E1", 1, 2, -1)};
    CHECK(derive_generic_counts(single).at("E1") == 1);

    DualGraph bad;
    bad.components = {exc("E1", 1, 2, -1), exc("E2", 5, 2, -1)};
    bad.edges = {{"E1", "E2", ""}};
    CHECK_THROWS_AS(derive_generic_counts(bad), InputError);  // negative count
}

TEST_CASE("contracted set and clusters on hand-built graphs") {
    DualGraph g = fig3();
    CHECK(contracted_set(g) == std::set<std::string>{"E1", "E2", "E3", "E4", "E5"});
    auto cs = clusters_of(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].members == std::vector<std::string>{"E1", "E2", "E3", "E4", "E5"});
    CHECK(cs[0].attached == std::vector<std::string>{"E6"});

    DualGraph none;
    none.components = {exc("E1", 1, 2, -1)};
    CHECK(clusters_of(none).empty());
}

TEST_CASE("validation catches constructed failures") {
    SUBCASE("altered nu breaks the alpha range") {
        DualGraph g = fig3();
        g.components[1].nu = 9;
        g.components[1].n_generic = 0;  // silence the count consistency check
        auto rep = validate(g);
        bool alpha_failed = false;
        for (const auto& c : rep.checks)
            if (c.name == "alpha-range" && !c.pass) alpha_failed = true;
        CHECK(alpha_failed);
    }
    SUBCASE("figure passes") {
        auto rep = validate(fig3());
        INFO(rep.to_string());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("parametrization of the single blow-up") {
    auto res = principalize(Ideal::from_text("x, y"));
    auto p = restrict_projective_map(res, "E1");
    CHECK(!p.is_constant());
    CHECK(p.degree() == 1);
    REQUIRE(p.coords.size() == 2);
}

TEST_CASE("IZETA_SEED overrides the default") {
    CHECK(default_seed() == 17);
    ::setenv("IZETA_SEED", "123", 1);
    CHECK(default_seed() == 123);
    ::setenv("IZETA_SEED", "junk", 1);
    CHECK_THROWS_AS(default_seed(), InputError);
    ::unsetenv("IZETA_SEED");
    CHECK(default_seed() == 17);
}
