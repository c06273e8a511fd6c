#include "doctest.h"

#include "estrada/enumeration.hpp"
#include "estrada/error.hpp"
#include "estrada/report.hpp"
#include "estrada/spectral.hpp"

#include "oracles.hpp"

#include <set>

using namespace estrada;

TEST_CASE("level sequences")
{
    const Graph t = tree_from_level_sequence({0, 1, 2, 1});
    CHECK(t.order() == 4);
    CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(to_string(LevelSequence{0, 1, 2, 1}) == "0 1 2 1");
    CHECK_THROWS_AS(tree_from_level_sequence({1, 2}), invalid_input);
    CHECK_THROWS_AS(tree_from_level_sequence({0, 2}), invalid_input);
    CHECK_THROWS_AS(tree_from_level_sequence({0, 0}), invalid_input);
}

TEST_CASE("known counts")
{
    const std::uint64_t expected[] = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
    for (int n = 1; n <= 16; ++n)
        CHECK(count_trees(n) == expected[n]);
    CHECK_THROWS_AS(count_trees(0), invalid_parameter);
}

TEST_CASE("counts agree with the Pruefer oracle")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(count_trees(n) == oracle::count_trees_pruefer(n));
}

TEST_CASE("generator yields each free tree exactly once")
{
    const auto by_extension = oracle::trees_by_leaf_extension(12);
    for (int n = 1; n <= 12; ++n) {
        std::set<std::string> expected;
        for (const Graph& t : by_extension[static_cast<std::size_t>(n)])
            expected.insert(oracle::tree_code(t));

        std::set<std::string> seen;
        std::set<std::string> canonical;
        FreeTreeGenerator gen(n);
        const LevelSequence* seq = nullptr;
        LevelSequence previous;
        while ((seq = gen.next()) != nullptr) {
            const Graph t = tree_from_level_sequence(*seq);
            REQUIRE(t.order() == n);
            REQUIRE(is_tree(t));
            if (!previous.empty())
                REQUIRE(*seq < previous);
            previous = *seq;
            REQUIRE(seen.insert(oracle::tree_code(t)).second);
            REQUIRE(canonical.insert(tree_canonical_form(t)).second);
        }
        CHECK(seen == expected);
    }
}

TEST_CASE("generator starts at the path")
{
    FreeTreeGenerator gen(7);
    const auto* first = gen.next();
    REQUIRE(first != nullptr);
    CHECK(is_isomorphic_tree(tree_from_level_sequence(*first), build_path(7)));
}

TEST_CASE("family names")
{
    CHECK(identify_tree_family(build_path(6)) == "path");
    CHECK(identify_tree_family(build_star(6)) == "star");
    CHECK(identify_tree_family(build_double_star(7, 3)) == "double_star(3,4)");
    CHECK(identify_tree_family(build_broom(7)) == "broom");
    CHECK(identify_tree_family(tree_from_level_sequence({0, 1, 2, 3, 1, 2, 1})) == "");
}

TEST_CASE("small rankings")
{
    const auto r5 = rank_trees(5, {});
    CHECK(r5.count == 3);
    REQUIRE(r5.top.size() == 3);
    CHECK(r5.top[0].family == "star");
    CHECK(r5.top[1].family == "double_star(2,3)");
    CHECK(r5.top[2].family == "path");
    REQUIRE(r5.bottom.size() == 1);
    CHECK(r5.bottom[0].family == "path");

    const auto r6 = rank_trees(6, {});
    REQUIRE(r6.top.size() == 4);
    CHECK(r6.top[0].family == "star");
    CHECK(r6.top[1].family == "double_star(2,4)");
    CHECK(r6.top[2].family == "double_star(3,3)");
    CHECK(r6.top[3].family == "broom");
    CHECK(r6.bottom[0].family == "path");
    for (std::size_t i = 0; i + 1 < r6.top.size(); ++i)
        CHECK(r6.top[i].lee > r6.top[i + 1].lee);
    CHECK(r6.top[0].lee == doctest::Approx(laplacian_estrada_index(build_star(6))).epsilon(1e-12));

    CHECK_THROWS_AS(rank_trees(3, {}), invalid_parameter);
}

TEST_CASE("ranking is independent of threads and chunk size")
{
    for (int n : {9, 11}) {
        const std::string ref = to_json(rank_trees(n, {4, 2, 1, 4096})).dump();
        CHECK(to_json(rank_trees(n, {4, 2, 3, 4096})).dump() == ref);
        CHECK(to_json(rank_trees(n, {4, 2, 4, 7})).dump() == ref);
        CHECK(to_json(rank_trees(n, {4, 2, 2, 1})).dump() == ref);
    }
}

TEST_CASE("every tree lies strictly between the path and the star")
{
    for (int n = 4; n <= 12; ++n) {
        const double low = laplacian_estrada_index(build_path(n));
        const double high = laplacian_estrada_index(build_star(n));
        FreeTreeGenerator gen(n);
        while (const auto* seq = gen.next()) {
            const Graph t = tree_from_level_sequence(*seq);
            if (is_star(t)) {
                continue;
            }
            if (is_isomorphic_tree(t, build_path(n)))
                continue;
            REQUIRE(compare_lee(t, build_path(n)).sign == 1);
            REQUIRE(compare_lee(build_star(n), t).sign == 1);
            const double lee = laplacian_estrada_index(t);
            REQUIRE(low < lee);
            REQUIRE(lee < high);
        }
    }
}

TEST_CASE("extremal verification")
{
    const auto report = verify_extremal(11, 2);
    CHECK(report.ok);
    REQUIRE(report.per_n.size() == 7);
    for (const auto& c : report.per_n) {
        CHECK(c.ok);
        CHECK(c.failures.empty());
        CHECK_FALSE(c.ranking.boundary_unresolved);
    }
}
