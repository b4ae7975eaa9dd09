#include "torgit/support_scan.hpp"

#include <algorithm>

namespace torgit {

void check_scan_size(std::size_t n, const ScanOptions& opts) {
    if (n >= 63 || (std::uint64_t{1} << n) > opts.max_supports)
        throw ComputationDeclined("support enumeration over 2^" + std::to_string(n) +
                                  " supports exceeds the limit of " + std::to_string(opts.max_supports));
}

std::vector<Support> supports_by_decreasing_size(std::size_t n) {
    const Support count = Support{1} << n;
    std::vector<Support> all(count);
    for (Support s = 0; s < count; ++s) all[s] = s;
    std::sort(all.begin(), all.end(), [](Support a, Support b) {
        auto sa = supports::size(a), sb = supports::size(b);
        if (sa != sb) return sa > sb;
        return supports::indices(a) < supports::indices(b);
    });
    return all;
}

}  // namespace torgit
