#include "torgit/walls.hpp"

#include "torgit/errors.hpp"
#include "torgit/hilbert_mumford.hpp"

#include <algorithm>
#include <set>

namespace torgit {

namespace {

IntVector sign_normalized(IntVector v) {
    v = primitive(v);
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// Key of an integer under 0 < 1 < -1 < 2 < -2 < ...
long order_key(long x) { return x > 0 ? 2 * x - 1 : -2 * x; }

}  // namespace

WallArrangement compute_walls(const TorusAction& a, const IntMatrix& psi) {
    const std::size_t r = a.rank();
    if (psi.rows() != r) throw InputError("psi must have r rows");
    if (rank(psi) != r) throw InputError("psi must have rank r (finite kernel)");
    WallArrangement w;
    w.ambient_rank = psi.cols();
    w.psi = psi;
    if (r == 0) return w;

    // hyperplane normals nu of X(T)_Q: kernels of independent (r-1)-subsets of columns
    std::set<IntVector> normals;
    std::vector<IntVector> chosen;
    const std::size_t n = a.dim();
    auto visit = [&](auto& self, std::size_t start) -> void {
        if (chosen.size() + 1 == r) {
            auto k = rational_kernel(IntMatrix::from_rows(chosen, r));
            if (k.size() == 1) normals.insert(sign_normalized(k.front()));
            return;
        }
        for (std::size_t j = start; j < n; ++j) {
            chosen.push_back(a.weights().column(j));
            if (rank(IntMatrix::from_rows(chosen, r)) == chosen.size()) self(self, j + 1);
            chosen.pop_back();
        }
    };
    visit(visit, 0);

    std::set<IntVector> pulled;
    IntMatrix psi_t = psi.transpose();
    for (const auto& nu : normals) pulled.insert(sign_normalized(psi_t * nu));
    w.walls.assign(pulled.begin(), pulled.end());
    return w;
}

bool is_generic(const WallArrangement& w, const Character& mu) {
    if (mu.size() != w.ambient_rank) throw InputError("character length differs from the reference torus rank");
    for (const auto& h : w.walls)
        if (dot(h, mu.entries) == 0) return false;
    return true;
}

Character pull_back(const WallArrangement& w, const Character& mu) {
    if (mu.size() != w.ambient_rank) throw InputError("character length differs from the reference torus rank");
    return Character(w.psi * mu.entries);
}

Character find_generic_character(const WallArrangement& w, std::size_t height_bound) {
    const std::size_t n = w.ambient_rank;
    const long bound = static_cast<long>(height_bound);
    for (long h = 0; h <= bound; ++h) {
        std::vector<std::vector<long>> layer;
        std::vector<long> x(n, -h);
        if (n == 0) {
            layer.push_back(x);
        } else {
            for (;;) {
                bool on_shell = std::any_of(x.begin(), x.end(), [&](long v) { return v == h || v == -h; });
                if (on_shell) layer.push_back(x);
                std::size_t i = 0;
                while (i < n && x[i] == h) x[i++] = -h;
                if (i == n) break;
                ++x[i];
            }
        }
        std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return order_key(a[i]) < order_key(b[i]);
            return false;
        });
        for (const auto& v : layer) {
            Character mu(IntVector(v.begin(), v.end()));
            if (is_generic(w, mu)) return mu;
        }
    }
    throw ComputationDeclined("no generic character of height <= " + std::to_string(height_bound) + " off " +
                              std::to_string(w.walls.size()) + " walls");
}

ChamberCheck verify_ss_equals_s(const TorusAction& a, const Character& mu_pulled, const ScanOptions& opts) {
    a.check_invariant_character(mu_pulled);
    auto bad = map_supports<unsigned char>(
        a.dim(),
        [&](Support s) -> unsigned char {
            return is_semistable(a, mu_pulled, s) && !is_stable(a, mu_pulled, s) ? 1 : 0;
        },
        opts);
    ChamberCheck out;
    if (std::none_of(bad.begin(), bad.end(), [](unsigned char b) { return b != 0; })) return out;
    out.ss_equals_s = false;
    for (Support s : supports_by_decreasing_size(a.dim()))
        if (bad[s]) {
            out.counterexample = s;
            break;
        }
    return out;
}

bool on_weight_line(const TorusAction& a, const Character& chi) {
    if (chi.size() != a.rank()) throw InputError("character length differs from torus rank");
    if (chi.is_zero()) return true;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        IntMatrix pair = IntMatrix::from_columns({a.weights().column(j), chi.entries}, a.rank());
        if (!is_zero(a.weights().column(j)) && rank(pair) == 1) return true;
    }
    return false;
}

}  // namespace torgit
