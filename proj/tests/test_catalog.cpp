#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "walks/catalog.hpp"

using namespace walks;

TEST_CASE("builtin catalog has the 74 nonsingular classes") {
    auto cat = builtin_catalog();
    CHECK(cat.size() == 74);
    for (auto& e : cat) CHECK(is_nonsingular(e.steps));
    // pairwise distinct up to the diagonal reflection
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j) {
            CHECK_FALSE(cat[i].steps == cat[j].steps);
            CHECK_FALSE(cat[i].steps == cat[j].steps.reflected_diag());
        }
    // the established model numbering
    CHECK(cat[0].steps == parse_stepset("N,S,E,W"));
    CHECK(cat[0].expected_nature == "DF");
    CHECK(cat[3].steps == parse_stepset("NE,W,S"));
    CHECK(cat[3].expected_nature == "alg");
    CHECK(cat[6].steps == parse_stepset("N,NE,E,S,W"));
    CHECK(cat[6].expected_nature == "D-alg");
    CHECK(cat[9].expected_nature == "D-trans");
}

TEST_CASE("catalog save and load round-trip") {
    auto cat = builtin_catalog();
    std::string path = "catalog_test_tmp.txt";
    save_catalog(path, cat);
    auto loaded = load_catalog(path);
    REQUIRE(loaded.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(loaded[i].model_id == cat[i].model_id);
        CHECK(loaded[i].steps == cat[i].steps);
        CHECK(loaded[i].expected_nature == cat[i].expected_nature);
    }
    std::remove(path.c_str());
}

TEST_CASE("catalog rejects bad rows") {
    std::string path = "catalog_bad_tmp.txt";
    {
        std::ofstream out(path);
        out << "1, NE;E;SE, DF, singular-but-flagged\n";
    }
    CHECK_THROWS_AS(load_catalog(path), CatalogError);
    {
        std::ofstream out(path);
        out << "notanumber, N;S;E;W, DF, x\n";
    }
    CHECK_THROWS_AS(load_catalog(path), CatalogError);
    {
        std::ofstream out(path);
        out << "1, N;S;E;W, DF, a\n1, NE;W;S, alg, b\n";
    }
    CHECK_THROWS_AS(load_catalog(path), CatalogError);
    std::remove(path.c_str());
}

TEST_CASE("empty catalog file loads as empty list") {
    std::string path = "catalog_empty_tmp.txt";
    {
        std::ofstream out(path);
        out << "# nothing here\n";
    }
    CHECK(load_catalog(path).empty());
    std::remove(path.c_str());
}
