#include "torgit/quasimap.hpp"

#include "torgit/errors.hpp"
#include "torgit/hilbert_mumford.hpp"
#include "torgit/stabilizer.hpp"

#include <algorithm>
#include <numeric>

namespace torgit {

TwistedCurveGraph::TwistedCurveGraph(std::vector<CurveVertex> vertices, std::vector<CurveEdge> edges,
                                     std::vector<CurveLeg> legs, std::vector<std::string> bundles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)), bundles_(std::move(bundles)) {
    if (vertices_.empty()) throw InputError("a curve needs at least one vertex");
    if (!tracks(kGoodModuliBundle)) throw InputError("bundle \"L_X\" must be tracked");
    for (std::size_t i = 0; i < bundles_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (bundles_[i] == bundles_[j]) throw InputError("duplicate bundle " + bundles_[i]);
    const std::size_t nv = vertices_.size();
    for (const auto& e : edges_) {
        if (e.v >= nv || e.w >= nv) throw InputError("edge endpoint out of range");
        if (e.index < 1) throw InputError("node index must be >= 1");
    }
    for (const auto& l : legs_) {
        if (l.vertex >= nv) throw InputError("leg vertex out of range");
        if (l.index < 1) throw InputError("marking index must be >= 1");
    }

    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_) parent[find(e.v)] = find(e.w);
    for (std::size_t v = 0; v < nv; ++v)
        if (find(v) != find(0)) throw InputError("dual graph is not connected");

    for (std::size_t v = 0; v < nv; ++v) {
        auto& vert = vertices_[v];
        for (auto& [name, deg] : vert.degrees) {
            if (!tracks(name)) throw InputError("degree given for untracked bundle " + name);
            deg.canonicalize();
            if (local_index_lcm(v) % deg.get_den() != 0)
                throw InputError("degree " + to_string(deg) + " at vertex " + std::to_string(v + 1) +
                                 " has a denominator not dividing the local index lcm");
        }
        if (degree(v, kGoodModuliBundle) < 0) throw InputError("L_X degrees must be nonnegative");
    }
}

bool TwistedCurveGraph::tracks(const std::string& bundle) const {
    return std::find(bundles_.begin(), bundles_.end(), bundle) != bundles_.end();
}

Rational TwistedCurveGraph::degree(std::size_t v, const std::string& bundle) const {
    auto it = vertices_.at(v).degrees.find(bundle);
    return it == vertices_[v].degrees.end() ? Rational(0) : it->second;
}

std::size_t TwistedCurveGraph::edge_ends(std::size_t v) const {
    std::size_t c = 0;
    for (const auto& e : edges_) c += (e.v == v) + (e.w == v);
    return c;
}

std::size_t TwistedCurveGraph::legs_at(std::size_t v) const {
    return std::count_if(legs_.begin(), legs_.end(), [&](const CurveLeg& l) { return l.vertex == v; });
}

Integer TwistedCurveGraph::local_index_lcm(std::size_t v) const {
    Integer out = 1;
    for (const auto& e : edges_)
        if (e.v == v || e.w == v) out = lcm(out, Integer(static_cast<unsigned long>(e.index)));
    for (const auto& l : legs_)
        if (l.vertex == v) out = lcm(out, Integer(static_cast<unsigned long>(l.index)));
    return out;
}

std::size_t TwistedCurveGraph::total_genus() const {
    std::size_t g = edges_.size() + 1 - vertices_.size();
    for (const auto& v : vertices_) g += v.genus;
    return g;
}

Integer omega_log_degree(const TwistedCurveGraph& g, std::size_t v) {
    return Integer(static_cast<long>(2 * g.vertices().at(v).genus)) - 2 +
           static_cast<unsigned long>(g.edge_ends(v) + g.legs_at(v));
}

namespace {

Rational nef_degree(const TwistedCurveGraph& g, std::size_t v) {
    return Rational(omega_log_degree(g, v)) + 3 * g.degree(v, kGoodModuliBundle);
}

}  // namespace

StabilityVerdict is_stable_quasimap(const TwistedCurveGraph& g) {
    StabilityVerdict out;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const auto& vert = g.vertices()[v];
        Rational q = nef_degree(g, v);
        bool ok = q > 0;
        if (q == 0) {
            ok = vert.genus == 0;
            if (ok && vert.in_dm) {
                if (!g.tracks(kDmBundle))
                    throw InputError("bundle \"L\" is needed to decide vertex " + std::to_string(v + 1));
                ok = g.degree(v, kDmBundle) > 0;
            }
        }
        if (!ok) {
            out.stable = false;
            out.violations.push_back(v);
        }
    }
    return out;
}

bool epsilon_ample_equivalent(const TwistedCurveGraph& g) {
    if (!g.tracks(kDmBundle)) throw InputError("bundle \"L\" must be tracked");
    if (g.total_genus() == 1) throw InputError("the ampleness criterion excludes genus 1");
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        Rational q = nef_degree(g, v);
        if (q < 0 || (q == 0 && g.degree(v, kDmBundle) <= 0)) return false;
    }
    return true;
}

bool satisfies_ampleness_hypotheses(const TwistedCurveGraph& g) {
    if (!g.tracks(kDmBundle) || g.total_genus() == 1) return false;
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        if (!g.vertices()[v].in_dm && g.degree(v, kDmBundle) <= 0) return false;
    return true;
}

ClassBeta sum_degrees(const std::vector<CurveVertex>& vertices, const std::vector<std::string>& bundles) {
    ClassBeta out;
    for (const auto& b : bundles) {
        Rational total = 0;
        for (const auto& v : vertices) {
            auto it = v.degrees.find(b);
            if (it != v.degrees.end()) total += it->second;
        }
        total.canonicalize();
        out[b] = total;
    }
    return out;
}

ClassBeta class_beta(const TwistedCurveGraph& g) { return sum_degrees(g.vertices(), g.bundles()); }

namespace {

void check_divisor(const std::vector<std::size_t>& multiplicities, std::size_t n) {
    if (n < 1) throw InputError("n must be >= 1");
    std::size_t total = 0;
    for (auto m : multiplicities) {
        if (m < 1) throw InputError("multiplicities must be positive");
        total += m;
    }
    if (total != 2 * n) throw InputError("multiplicities must sum to 2n");
}

}  // namespace

bool check_binary_forms(const std::vector<std::size_t>& multiplicities, std::size_t n, BinaryFormMode mode) {
    check_divisor(multiplicities, n);
    const std::size_t top = *std::max_element(multiplicities.begin(), multiplicities.end());
    return mode == BinaryFormMode::Semistable ? top <= n : top + 1 <= n;
}

bool binary_forms_hm(const std::vector<std::size_t>& multiplicities, std::size_t n, BinaryFormMode mode) {
    check_divisor(multiplicities, n);
    // maximal torus of SL_2 on the coefficient of x^k y^(2n-k): weight k - n
    const std::size_t dim = 2 * n + 1;
    IntMatrix w(1, dim);
    for (std::size_t k = 0; k < dim; ++k) w(0, k) = static_cast<long>(k) - static_cast<long>(n);
    ConeAction cone = cone_over_projective(TorusAction(w), Character{0}, 1);

    std::vector<std::size_t> at_zero{0}, at_inf{0};
    for (auto m : multiplicities) {
        at_zero.push_back(m);
        at_inf.push_back(m);
    }
    for (std::size_t i = 0; i < at_zero.size(); ++i)
        for (std::size_t j = 0; j < at_inf.size(); ++j) {
            if (i == j && i != 0) continue;
            // x^m1 y^m2 times a form without roots at 0, infinity
            Support s = 0;
            for (std::size_t k = at_zero[i]; k + at_inf[j] <= 2 * n; ++k) s = supports::with(s, k);
            bool ok = mode == BinaryFormMode::Semistable ? is_semistable(cone.action, cone.character, s)
                                                         : is_stable(cone.action, cone.character, s);
            if (!ok) return false;
        }
    return true;
}

ConicVerdict check_twisted_conic(const DivisorConfig& cfg) {
    const std::size_t want = cfg.ambient == ConicAmbient::SmoothP1 ? 1 : 2;
    if (cfg.components.size() != want)
        throw InputError(cfg.ambient == ConicAmbient::SmoothP1 ? "a smooth P^1 has one component"
                                                               : "a twisted conic has two components");
    std::vector<std::size_t> all;
    for (const auto& c : cfg.components) all.insert(all.end(), c.begin(), c.end());
    check_divisor(all, cfg.n);
    ConicVerdict out;
    out.valid_in_cy = true;
    for (const auto& c : cfg.components) {
        std::size_t total = 0;
        for (auto m : c) {
            total += m;
            if (m > cfg.n) out.valid_in_cy = false;
        }
        if (total < cfg.n) out.valid_in_cy = false;
    }
    out.in_dm = out.valid_in_cy && std::all_of(all.begin(), all.end(), [&](std::size_t m) { return m + 1 <= cfg.n; });
    return out;
}

bool DvrLift::meets_some_axis() const {
    return std::any_of(on_axis_proper_transform.begin(), on_axis_proper_transform.end(), [](bool b) { return b; });
}

DvrLift dvr_lift(const std::vector<std::size_t>& orders) {
    if (orders.empty()) throw InputError("at least one coordinate is needed");
    if (std::any_of(orders.begin(), orders.end(), [](std::size_t o) { return o == 0; }))
        throw InputError("every order of vanishing must be >= 1");
    DvrLift out;
    out.m = *std::min_element(orders.begin(), orders.end());
    for (auto o : orders) {
        out.lifted_orders.push_back(o - out.m);
        out.on_axis_proper_transform.push_back(o > out.m);
    }
    return out;
}

bool PencilReport::passed() const {
    return std::all_of(vertex_passes.begin(), vertex_passes.end(), [](bool b) { return b; });
}

PencilReport check_pencil_degrees(const TwistedCurveGraph& g) {
    if (!g.tracks(kDmBundle)) throw InputError("bundle \"L\" must be tracked");
    if (g.legs().size() != 12) throw InputError("a pencil of plane cubics has 12 base points");
    PencilReport out;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        Rational rhs = Rational(static_cast<unsigned long>(g.legs_at(v))) + 3 * g.degree(v, kDmBundle);
        out.vertex_passes.push_back(g.degree(v, kGoodModuliBundle) == rhs);
    }
    return out;
}

}  // namespace torgit
