#include <doctest.h>

#include "helpers.hpp"
#include "torgit/errors.hpp"
#include "torgit/luna.hpp"

#include <algorithm>

using namespace torgit;
using testing_util::iv;
using testing_util::sup;

TEST_CASE("cubic forms chart") {
    auto chart = cubic_forms_chart();
    CHECK(chart.rank() == 3);
    CHECK(chart.dim() == 9);
    CHECK(cubic_forms_chart_exponents().front() == iv({3, 0, 0}));
    CHECK(chart.weights().column(0) == iv({2, -1, -1}));
    CHECK(cubic_forms_orbit_weights().size() == 6);
    for (const auto& w : cubic_forms_orbit_weights()) CHECK(dot(w.entries, iv({1, 1, 1})) == 0);
}

TEST_CASE("slice of the cubic forms at x0 x1 x2") {
    auto slice = slice_at_fixed_point(cubic_forms_chart(), 0, cubic_forms_orbit_weights());
    CHECK(slice.kept_coordinates == std::vector<std::size_t>{0, 5, 8});
    CHECK(slice.orbit_coordinates.size() == 6);
    CHECK(slice.action.weights() == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK_THROWS_AS(slice_at_fixed_point(cubic_forms_chart(), 0, {Character{5, 0, -5}}), InternalError);
    auto twice = cubic_forms_orbit_weights();
    twice.push_back(twice.front());
    CHECK_THROWS_AS(slice_at_fixed_point(cubic_forms_chart(), 0, twice), InternalError);
}

TEST_CASE("slice edge cases") {
    TorusAction a(IntMatrix{{1, 0, 2}, {0, 1, 1}}, IntMatrix{{2, 1}, {1, 2}});
    auto whole = slice_at_fixed_point(a, 0);
    CHECK(whole.action == a);
    CHECK(whole.orbit_coordinates.empty());

    auto dense = slice_at_fixed_point(a, sup({1, 2}));
    CHECK(dense.action.rank() == 0);
    CHECK(dense.kept_coordinates == std::vector<std::size_t>{2});

    // stabilizer of x1 != 0 is the second factor; x3 has weight 1 there
    auto line = slice_at_fixed_point(a, sup({1}));
    CHECK(line.action.rank() == 1);
    CHECK(line.kept_coordinates == std::vector<std::size_t>{1, 2});
    CHECK(line.action.weights() == IntMatrix{{1, 1}});
    CHECK(line.action.norm_form() == IntMatrix{{2}});
}

TEST_CASE("slice weight count and stabilizer lattice on random actions") {
    std::mt19937 rng(8080);
    for (int trial = 0; trial < 200; ++trial) {
        auto ra = testing_util::random_action(rng, 3, 6, 3);
        Support s = std::uniform_int_distribution<Support>(0, supports::full(ra.n))(rng);
        auto slice = slice_at_fixed_point(ra.action, s);
        const std::size_t rk = oracle::rank(oracle::columns(ra.raw, ra.r, s), ra.r);
        CHECK(slice.kept_coordinates.size() + slice.orbit_coordinates.size() == ra.n);
        CHECK(slice.orbit_coordinates.size() == rk);
        CHECK(slice.action.rank() == ra.r - rk);

        // basis columns kill W_s, are independent, and span a saturated lattice
        const IntMatrix& b = slice.stabilizer_cocharacters;
        std::vector<oracle::Vec> bcols;
        for (std::size_t j = 0; j < b.cols(); ++j) bcols.push_back(testing_util::from_vector(b.column(j)));
        for (const auto& c : oracle::columns(ra.raw, ra.r, s))
            for (const auto& v : bcols) CHECK(oracle::dot(c, v) == 0);
        CHECK(oracle::rank(bcols, ra.r) == bcols.size());
        if (!bcols.empty()) {
            long g = 0;
            for (const auto& rows : oracle::subsets(ra.r, bcols.size())) {
                oracle::Mat minor;
                for (auto i : rows) {
                    oracle::Vec row;
                    for (const auto& v : bcols) row.push_back(v[i]);
                    minor.push_back(row);
                }
                g = std::gcd(g, std::labs(oracle::det(minor)));
            }
            CHECK(g == 1);
        }
        for (std::size_t k = 0; k < slice.kept_coordinates.size(); ++k) {
            IntVector expect = b.transpose() * ra.action.weights().column(slice.kept_coordinates[k]);
            CHECK(slice.action.weights().column(k) == expect);
        }
    }
}

TEST_CASE("cubics certificate") {
    auto cert = cubics_example();
    CHECK(cert.slice.action.rank() == 3);
    CHECK(cert.slice.action.finite_part().size() == 2);
    CHECK(finite_group_closure(cert.slice.action).size() == 6);
    CHECK(cert.effective.action.rank() == 2);
    const IntMatrix& q = cert.effective.action.norm_form();
    for (const auto& g : cert.effective.action.finite_part()) CHECK(g.aut * q * g.aut.transpose() == q);
    CHECK(cert.eb.ambient.rank() == 3);
    CHECK(cert.eb.ambient.dim() == 4);
    CHECK(cert.dm_support == sup({1, 2, 3}));
    CHECK(cert.stabilizer.dimension == 0);
    CHECK(cert.stabilizer.invariant_factors == iv({3, 3}));
    CHECK(cert.stabilizer.torus_part_order() == 9);
    CHECK(cert.stabilizer.finite_part_order == 6);
    CHECK(cert.invariants == std::vector<IntVector>{iv({1, 1, 1})});
    CHECK(cert.dm_support_saturated);
    CHECK(std::find(cert.tower.final_dm_supports.begin(), cert.tower.final_dm_supports.end(), cert.dm_support) !=
          cert.tower.final_dm_supports.end());
    CHECK(verify_tower(cert.tower).passed());

    // oracle: SNF of the pairing matrix by determinantal divisors
    oracle::Mat w(3, oracle::Vec(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) w[i][j] = cert.eb.ambient.weights()(i, j).get_si();
    CHECK(oracle::smith_diagonal(w, 3, 3) == std::vector<long>{1, 3, 3});

    auto again = cubics_example();
    CHECK(again.eb.ambient == cert.eb.ambient);
    CHECK(again.tower.final_character == cert.tower.final_character);
}
