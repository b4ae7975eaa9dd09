#include "torgit/hilbert.hpp"

#include "torgit/errors.hpp"

namespace torgit {

namespace {

// Visits every a in N^n with |a| == degree, first coordinate largest first.
template <class Visit>
void for_each_composition(std::size_t n, std::size_t degree, Visit&& visit) {
    if (n == 0) {
        if (degree == 0) visit(std::vector<std::size_t>{});
        return;
    }
    std::vector<std::size_t> a(n, 0);
    auto rec = [&](auto& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == n) {
            a[i] = left;
            visit(a);
            return;
        }
        for (std::size_t k = left + 1; k-- > 0;) {
            a[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, degree);
}

bool dominates(const IntVector& big, const IntVector& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (big[i] < small[i]) return false;
    return true;
}

}  // namespace

std::vector<IntVector> invariant_monomials(const IntMatrix& weights, std::size_t degree_bound) {
    const std::size_t n = weights.cols();
    std::vector<IntVector> out;
    for (std::size_t deg = 1; deg <= degree_bound; ++deg) {
        for_each_composition(n, deg, [&](const std::vector<std::size_t>& a) {
            for (std::size_t r = 0; r < weights.rows(); ++r) {
                Integer s = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (a[j]) s += weights(r, j) * static_cast<unsigned long>(a[j]);
                if (s != 0) return;
            }
            IntVector v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<unsigned long>(a[j]);
            out.push_back(std::move(v));
        });
    }
    return out;
}

std::vector<IntVector> hilbert_basis_bounded(const IntMatrix& weights, std::size_t degree_bound) {
    if (degree_bound < 1) throw InputError("degree bound must be at least 1");
    std::vector<IntVector> basis;
    for (auto& a : invariant_monomials(weights, degree_bound)) {
        bool reducible = false;
        for (const auto& b : basis)
            if (dominates(a, b)) {
                reducible = true;
                break;
            }
        if (!reducible) basis.push_back(std::move(a));
    }
    return basis;
}

}  // namespace torgit
