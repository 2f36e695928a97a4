#include <doctest.h>

#include "grec/json_io.hpp"

using namespace grec;

namespace {

Permutation perm_of(std::initializer_list<int> entries) {
    return Permutation(std::vector<int>(entries));
}

}  // namespace

TEST_CASE("genrect json round trip") {
    for_each_permutation(4, [&](const std::vector<int>& word) {
        const GenRect g = gamma(Permutation(word));
        CHECK(genrect_from_json(to_json(g)) == g);
    });
    const GenRect big = gamma(Permutation::parse("8,13,7,5,11,2,14,6,15,9,10,3,1,4,12"));
    CHECK(genrect_from_json(to_json(big)) == big);
}

TEST_CASE("schema of a small document") {
    const nlohmann::json doc = to_json(gamma(perm_of({2, 4, 1, 3})));
    CHECK(doc["n"] == 4);
    REQUIRE(doc["rects"].is_array());
    CHECK(doc["rects"].size() == 4);
    CHECK(doc["rects"][0].contains("id"));
    CHECK(doc["rects"][0].contains("x0"));
    CHECK(doc["rects"][0].contains("y1"));
    REQUIRE(doc["walls"].is_array());
    CHECK(doc["walls"].size() == 3);
    for (const auto& wall : doc["walls"]) {
        CHECK((wall["orientation"] == "v" || wall["orientation"] == "h"));
        CHECK(wall.contains("coord"));
        CHECK(wall.contains("lo"));
        CHECK(wall.contains("hi"));
        CHECK(wall["shuffle"].is_array());
    }

    const nlohmann::json diag_doc = to_json(rho(perm_of({2, 4, 1, 3})));
    CHECK(!diag_doc["walls"][0].contains("shuffle"));
}

TEST_CASE("validation failures name the violated invariant") {
    const GenRect g = gamma(perm_of({2, 4, 1, 3}));
    const nlohmann::json good = to_json(g);

    {
        nlohmann::json doc = good;
        doc["rects"][0]["id"] = 2;
        CHECK_THROWS_WITH_AS(genrect_from_json(doc), doctest::Contains("ids"),
                             std::invalid_argument);
    }
    {
        nlohmann::json doc = good;
        doc["rects"][0]["x1"] = doc["rects"][0]["x1"].get<int>() + 1;
        CHECK_THROWS_AS(genrect_from_json(doc), std::invalid_argument);
    }
    {
        // window pane: a cross at the center
        nlohmann::json doc = {
            {"n", 4},
            {"rects",
             {{{"id", 1}, {"x0", 0}, {"y0", 2}, {"x1", 2}, {"y1", 4}},
              {{"id", 2}, {"x0", 2}, {"y0", 2}, {"x1", 4}, {"y1", 4}},
              {{"id", 3}, {"x0", 0}, {"y0", 0}, {"x1", 2}, {"y1", 2}},
              {{"id", 4}, {"x0", 2}, {"y0", 0}, {"x1", 4}, {"y1", 2}}}},
            {"walls", nlohmann::json::array()}};
        CHECK_THROWS_WITH_AS(genrect_from_json(doc), doctest::Contains("cross"),
                             std::invalid_argument);
    }
    {
        // scaled coordinates are a valid tiling but not the canonical form
        nlohmann::json doc = good;
        for (auto& rect : doc["rects"])
            for (const char* key : {"x0", "y0", "x1", "y1"})
                rect[key] = rect[key].get<int>() * 1;
        doc["rects"][0]["y0"] = 2;  // distort: rect 1 no longer spans its cell
        CHECK_THROWS_AS(genrect_from_json(doc), std::invalid_argument);
    }
    {
        // breaking the relative order within one alphabet side is illegal
        nlohmann::json doc =
            to_json(gamma(Permutation::parse("8,13,7,5,11,2,14,6,15,9,10,3,1,4,12")));
        for (auto& wall : doc["walls"])
            if (wall["shuffle"] == nlohmann::json::array({13, 7, 11, 6}))
                wall["shuffle"] = {6, 7, 11, 13};
        CHECK_THROWS_WITH_AS(genrect_from_json(doc), doctest::Contains("shuffle"),
                             std::invalid_argument);
    }
    {
        // swapping alphabet-side singletons is a legal slide, not an error
        nlohmann::json doc = good;
        for (auto& wall : doc["walls"])
            if (wall["shuffle"].size() == 2) std::swap(wall["shuffle"][0], wall["shuffle"][1]);
        const GenRect slid = genrect_from_json(doc);
        CHECK(is_mosaic_equivalent(slid, g));
        CHECK(!(slid == g));
    }
    {
        nlohmann::json doc = good;
        doc["walls"][0]["coord"] = doc["walls"][0]["coord"].get<int>() + 1;
        CHECK_THROWS_WITH_AS(genrect_from_json(doc), doctest::Contains("wall"),
                             std::invalid_argument);
    }
    {
        nlohmann::json doc = good;
        doc.erase("n");
        CHECK_THROWS_AS(genrect_from_json(doc), std::invalid_argument);
    }
    {
        // an id outside the wall's alphabet can never appear in its shuffle
        nlohmann::json doc = good;
        for (auto& wall : doc["walls"])
            if (!wall["shuffle"].empty()) wall["shuffle"][0] = 2;
        CHECK_THROWS_WITH_AS(genrect_from_json(doc), doctest::Contains("shuffle"),
                             std::invalid_argument);
    }
}

TEST_CASE("counts serialization") {
    std::vector<BigCount> counts = {BigCount(1), BigCount(2), BigCount(6)};
    CHECK(counts_csv(counts) == "n,count\n1,1\n2,2\n3,6\n");
    const nlohmann::json doc = counts_json(counts);
    REQUIRE(doc.size() == 3);
    CHECK(doc[2]["n"] == 3);
    CHECK(doc[2]["count"] == "6");

    // very large values stay exact decimal strings
    BigCount huge(1);
    huge <<= 100;
    std::vector<BigCount> big = {huge};
    CHECK(counts_csv(big, 27) == "n,count\n27,1267650600228229401496703205376\n");
}
