#include <doctest.h>

#include "helpers.hpp"
#include "torgit/desing.hpp"
#include "torgit/errors.hpp"
#include "torgit/stabilizer.hpp"

#include <algorithm>

using namespace torgit;
using testing_util::iv;
using testing_util::sup;

namespace {

oracle::Mat raw_weights(const TorusAction& a) {
    oracle::Mat raw(a.rank(), oracle::Vec(a.dim()));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) raw[i][j] = a.weights()(i, j).get_si();
    return raw;
}

std::size_t oracle_stab_dim(const TorusAction& a, Support s) {
    return a.rank() - oracle::rank(oracle::columns(raw_weights(a), a.rank(), s), a.rank());
}

bool contains(const std::vector<Support>& v, Support s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("max stabilizer centers") {
    TorusAction a(IntMatrix{{1, -1}});
    std::vector<Support> all{0, sup({1}), sup({2}), sup({1, 2})};
    auto centers = max_stabilizer_centers(a, all);
    REQUIRE(centers.size() == 1);
    CHECK(centers[0].coords == std::vector<std::size_t>{0, 1});
    CHECK(centers[0].weights == iv({1, 1}));
    CHECK(max_stabilizer_centers(a, {sup({1, 2})}).empty());
    CHECK_THROWS_AS(max_stabilizer_centers(a, {}), InputError);

    TorusAction cubes(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    auto eff = effectivize(cubes).action;
    std::vector<Support> every;
    for (Support s = 0; s < 8; ++s) every.push_back(s);
    auto cc = max_stabilizer_centers(eff, every);
    REQUIRE(cc.size() == 1);
    CHECK(cc[0].coords == std::vector<std::size_t>{0, 1, 2});
    CHECK(stabilizer_dimension(eff, 0) == 2);

    // two incomparable maximal supports at dimension 1, sorted on Z
    TorusAction b(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto bc = max_stabilizer_centers(b, {sup({1}), sup({3}), sup({1, 2, 3})});
    REQUIRE(bc.size() == 2);
    CHECK(bc[0].coords == std::vector<std::size_t>{0, 1});
    CHECK(bc[1].coords == std::vector<std::size_t>{1, 2});

    TorusAction ineffective(IntMatrix{{1, 1}, {2, 2}});
    CHECK_THROWS_AS(max_stabilizer_centers(ineffective, {sup({1, 2})}), InputError);
}

TEST_CASE("desing of [A2/G_m] with weights (1,-1)") {
    TorusAction a(IntMatrix{{1, -1}});
    auto t = desingularize(a, Character{0});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].max_stabilizer_dim == 1);
    CHECK(t.steps[0].combination.m0 == 1);
    CHECK(t.final_action.rank() == 2);
    CHECK(t.final_action.dim() == 3);
    CHECK(t.final_action.weights() == IntMatrix{{1, -1, 0}, {1, 1, -1}});
    CHECK(t.final_character == Character{0, -1});
    CHECK(t.final_dm_supports == std::vector<Support>{sup({1, 2}), sup({1, 2, 3})});
    CHECK(t.composite_section(sup({1, 2})) == sup({1, 2, 3}));
    auto report = verify_tower(t);
    CHECK(report.passed());
    CHECK(report.checks.size() == 8);
}

TEST_CASE("desing of the cubics slice") {
    TorusAction cubes(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    auto eff = effectivize(cubes).action;
    auto t = desingularize(eff, Character{0, 0});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].max_stabilizer_dim == 2);
    CHECK(t.final_action.rank() == 3);
    CHECK(t.final_action.dim() == 4);
    CHECK(t.final_dm_supports == std::vector<Support>{sup({1, 2, 3}), sup({1, 2, 3, 4})});
    auto g = stabilizer(t.final_action, sup({1, 2, 3}));
    CHECK(g.dimension == 0);
    CHECK(g.invariant_factors == iv({3, 3}));
    CHECK(verify_tower(t).passed());
    CHECK_THROWS_AS(desingularize(cubes, Character{0, 0, 0}), InputError);
}

TEST_CASE("already DM input gives a zero-step tower") {
    TorusAction a(IntMatrix{{1, 1}});
    auto t = desingularize(a, Character{-1});
    CHECK(t.steps.empty());
    CHECK(t.final_character == Character{-1});
    CHECK(t.final_action == a);
    CHECK(t.final_dm_supports == std::vector<Support>{sup({1}), sup({2}), sup({1, 2})});
    auto report = verify_tower(t);
    CHECK(report.passed());
    CHECK(report.checks.size() == 2);
    CHECK_THROWS_AS(desingularize(a, Character{1}), InputError);
}

TEST_CASE("negative control: wrong theta sign") {
    TorusAction a(IntMatrix{{1, -1}});
    auto t = desingularize(a, Character{0});
    t.steps[0].eb.theta = -t.steps[0].eb.theta;
    auto report = verify_tower(t);
    REQUIRE_FALSE(report.passed());
    CHECK(report.first_failure()->name == "good_moduli_space");
    CHECK(report.first_failure()->step == std::optional<std::size_t>{0});
}

TEST_CASE("no stable point: the tower ends empty") {
    // every weight in an open half-plane: the quotient is a point and all orbits meet the origin
    TorusAction a(IntMatrix{{0, 2, 1, 0}, {1, 1, 1, 2}});
    auto t = desingularize(a, Character{0, 0});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.final_dm_supports.empty());
    CHECK(verify_tower(t).passed());
}

TEST_CASE("step guard") {
    TorusAction a(IntMatrix{{1, -1}});
    DesingOptions opts;
    opts.max_steps = 0;
    CHECK_THROWS_AS(desingularize(a, Character{0}, opts), ComputationDeclined);
}

TEST_CASE("desing properties on random actions") {
    std::mt19937 rng(515);
    int towers = 0, nontrivial = 0, emptied = 0;
    while (towers < 50) {
        auto ra = testing_util::random_action(rng, 3, 5, 2, true);
        Character start = (towers % 2 == 0) ? Character(IntVector(ra.r, Integer(0)))
                                            : testing_util::to_character(oracle::random_vector(rng, ra.r, -2, 2));
        if (semistable_supports(ra.action, start).empty()) continue;
        ++towers;
        auto t = desingularize(ra.action, start);
        if (!t.steps.empty()) ++nontrivial;
        if (t.final_dm_supports.empty()) ++emptied;
        CHECK(t.steps.size() <= ra.n * ra.r);

        for (Support s : t.final_dm_supports) CHECK(oracle_stab_dim(t.final_action, s) == 0);
        auto raw = raw_weights(t.final_action);
        auto chi = testing_util::from_vector(t.final_character.entries);
        for (Support s = 0; s < (Support{1} << t.final_action.dim()); ++s)
            CHECK(contains(t.final_dm_supports, s) == oracle::semistable(raw, t.final_action.rank(), chi, s));

        // base supports that are stable with finite stabilizer survive into the DM locus
        for (Support s = 0; s < (Support{1} << ra.n); ++s) {
            if (!oracle::stable(ra.raw, ra.r, testing_util::from_vector(start.entries), s)) continue;
            CHECK(contains(t.final_dm_supports, t.composite_section(s)));
        }

        for (std::size_t k = 1; k < t.steps.size(); ++k) {
            const auto& prev = t.steps[k - 1];
            const auto& cur = t.steps[k];
            bool decreases = cur.max_stabilizer_dim < prev.max_stabilizer_dim ||
                             (cur.max_stabilizer_dim == prev.max_stabilizer_dim && cur.center_count < prev.center_count);
            CHECK(decreases);
        }
        auto report = verify_tower(t);
        CHECK(report.passed());
        if (!report.passed()) MESSAGE("failed check: " << report.first_failure()->name);
    }
    MESSAGE(nontrivial << " of 50 towers had at least one step, " << emptied << " ended empty");
    CHECK(nontrivial > 0);
}
