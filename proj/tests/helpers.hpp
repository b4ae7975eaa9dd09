#pragma once

#include "convert.hpp"
#include "oracles.hpp"
#include "torgit/torus_action.hpp"

#include <random>

namespace testing_util {

inline torgit::IntVector iv(std::initializer_list<long> xs) { return torgit::IntVector(xs.begin(), xs.end()); }

/// Support from 1-based indices.
inline torgit::Support sup(std::initializer_list<std::size_t> one_based) {
    torgit::Support s = 0;
    for (auto j : one_based) s = torgit::supports::with(s, j - 1);
    return s;
}

struct RandomAction {
    oracle::Mat raw;
    std::size_t r, n;
    torgit::TorusAction action;
};

inline RandomAction random_action(std::mt19937& rng, std::size_t max_r, std::size_t max_n, long range,
                                  bool full_rank = false) {
    std::uniform_int_distribution<int> rd(1, static_cast<int>(max_r)), nd(1, static_cast<int>(max_n));
    for (;;) {
        std::size_t r = rd(rng), n = nd(rng);
        auto raw = oracle::random_matrix(rng, r, n, -range, range);
        if (full_rank && oracle::rank(oracle::columns(raw, r, (std::uint64_t{1} << n) - 1), r) != r) continue;
        return {raw, r, n, torgit::TorusAction(to_matrix(raw, r, n))};
    }
}

}  // namespace testing_util
