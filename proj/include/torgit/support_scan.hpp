#pragma once

#include "torgit/errors.hpp"
#include "torgit/torus_action.hpp"

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace torgit {

enum class ExecutionPolicy { Serial, Parallel };

struct ScanOptions {
    ExecutionPolicy policy = ExecutionPolicy::Parallel;
    std::uint64_t max_supports = std::uint64_t{1} << 20;
};

/// Throws ComputationDeclined if 2^n exceeds the guard.
void check_scan_size(std::size_t n, const ScanOptions& opts);

/// result[s] = f(s) for every s in [0, 2^n). f must be safe to call concurrently.
template <class T, class F>
std::vector<T> map_supports(std::size_t n, F&& f, const ScanOptions& opts = {}) {
    check_scan_size(n, opts);
    const std::int64_t count = std::int64_t{1} << n;
    std::vector<T> out(static_cast<std::size_t>(count));
    if (opts.policy == ExecutionPolicy::Serial) {
        for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<Support>(i));
        return out;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<Support>(i));
        } catch (...) {
#pragma omp critical(torgit_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Supports satisfying pred, in increasing bitmask order.
template <class Pred>
std::vector<Support> filter_supports(std::size_t n, Pred&& pred, const ScanOptions& opts = {}) {
    auto flags = map_supports<unsigned char>(
        n, [&](Support s) -> unsigned char { return pred(s) ? 1 : 0; }, opts);
    std::vector<Support> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(static_cast<Support>(i));
    return out;
}

/// All supports of {0..n-1} ordered by decreasing cardinality, then by the
/// lexicographic order of their sorted index lists.
std::vector<Support> supports_by_decreasing_size(std::size_t n);

}  // namespace torgit
