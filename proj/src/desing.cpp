#include "torgit/desing.hpp"

#include "torgit/errors.hpp"
#include "torgit/hilbert.hpp"

#include <algorithm>
#include <set>

namespace torgit {

std::size_t stabilizer_dimension(const TorusAction& a, Support s) {
    a.check_support(s);
    return a.rank() - rank(a.restricted_weights(s));
}

std::vector<MonomialWeightedCenter> max_stabilizer_centers(const TorusAction& a,
                                                           const std::vector<Support>& live_supports) {
    if (live_supports.empty()) throw InputError("no live supports");
    std::size_t d_max = 0;
    for (Support s : live_supports) d_max = std::max(d_max, stabilizer_dimension(a, s));
    if (d_max == 0) return {};
    std::vector<Support> top;
    for (Support s : live_supports)
        if (stabilizer_dimension(a, s) == d_max) top.push_back(s);
    std::vector<std::vector<std::size_t>> zs;
    for (Support s : top) {
        bool maximal = std::none_of(top.begin(), top.end(), [&](Support t) { return t != s && supports::is_subset(s, t); });
        if (!maximal) continue;
        Support z = supports::full(a.dim()) & ~s;
        if (z == 0)
            throw InputError("generic stabilizer is positive-dimensional on the live locus; effectivize first");
        zs.push_back(supports::indices(z));
    }
    std::sort(zs.begin(), zs.end());
    std::vector<MonomialWeightedCenter> out;
    for (auto& z : zs) out.push_back(reduced_center(supports::from_indices(z)));
    return out;
}

Support DesingTower::composite_section(Support base_support) const {
    Support s = base_support;
    for (const auto& step : steps) s = step.eb.section(s);
    return s;
}

DesingTower desingularize(const TorusAction& a, const Character& start_character, const DesingOptions& opts) {
    a.check_invariant_character(start_character);
    DesingTower t;
    t.base = a;
    t.start_character = start_character;
    TorusAction current = a;
    Character chi = start_character;
    for (;;) {
        auto live = semistable_supports(current, chi, opts.scan);
        if (live.empty() && t.steps.empty()) throw InputError("the semistable locus of the character is empty");
        auto centers = live.empty() ? std::vector<MonomialWeightedCenter>{} : max_stabilizer_centers(current, live);
        if (centers.empty()) {
            t.final_character = chi;
            t.final_action = current;
            t.final_dm_supports = std::move(live);
            return t;
        }
        const std::size_t d_max =
            stabilizer_dimension(current, supports::full(current.dim()) & ~centers.front().support());
        if (t.steps.size() >= opts.max_steps)
            throw ComputationDeclined("desingularization did not terminate within " + std::to_string(opts.max_steps) +
                                      " steps: " + std::to_string(centers.size()) +
                                      " centers remain at stabilizer dimension " + std::to_string(d_max));
        DesingStep step;
        step.max_stabilizer_dim = d_max;
        step.center_count = centers.size();
        step.source_character = chi;
        step.eb = extended_weighted_blowup(current, centers.front());
        step.combination = combine_linearizations(step.eb.ambient, step.eb.extend(chi), step.eb.theta, opts.scan);
        current = step.eb.ambient;
        chi = step.combination.combined;
        t.steps.push_back(std::move(step));
    }
}

bool TowerReport::passed() const { return first_failure() == nullptr; }

const TowerCheck* TowerReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

namespace {

std::set<IntVector> source_invariants(const TorusAction& a, std::size_t bound) {
    auto mons = invariant_monomials(a.weights(), bound);
    return {mons.begin(), mons.end()};
}

// Ambient invariants whose source part has degree <= bound, with the T exponent dropped.
std::set<IntVector> pushed_invariants(const EBPresentation& eb, std::size_t bound) {
    Integer amax = 0;
    for (const auto& w : eb.center.weights) amax = std::max(amax, w);
    std::size_t ambient_bound = bound + bound * amax.get_ui();
    std::set<IntVector> out;
    for (auto m : invariant_monomials(eb.ambient.weights(), ambient_bound)) {
        m.pop_back();
        Integer deg = 0;
        for (const auto& e : m) deg += e;
        if (deg >= 1 && deg <= Integer(bound)) out.insert(std::move(m));
    }
    return out;
}

}  // namespace

TowerReport verify_tower(const DesingTower& t, const ScanOptions& opts) {
    constexpr std::size_t kInvariantBound = 6;
    TowerReport report;
    auto add = [&](std::string name, std::optional<std::size_t> step, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), step, ok, std::move(detail)});
    };
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const auto& st = t.steps[k];
        const auto& eb = st.eb;
        const std::size_t n = eb.source.dim(), r = eb.source.rank();

        bool roundtrip = true;
        std::string where;
        for (Support s = 0; s < (Support{1} << n) && roundtrip; ++s)
            if (eb.project(eb.section(s)) != s || !supports::contains(eb.section(s), eb.exceptional_index)) {
                roundtrip = false;
                where = supports::to_string(s);
            }
        add("section_projection_roundtrip", k, roundtrip, where);

        bool equivariant = true;
        for (std::size_t j = 0; j < n; ++j) {
            IntVector col = eb.ambient.weights().column(j);
            Integer rees = col.back();
            col.pop_back();
            if (col != eb.source.weights().column(j) || rees != eb.t_exponent(j)) equivariant = false;
        }
        IntVector t_col(r + 1, Integer(0));
        t_col[r] = -1;
        if (eb.ambient.weights().column(n) != t_col) equivariant = false;
        add("equivariance", k, equivariant);

        auto compat = map_supports<unsigned char>(
            n,
            [&](Support s) -> unsigned char {
                return is_semistable(eb.ambient, eb.extend(st.source_character), eb.section(s)) ==
                               is_semistable(eb.source, st.source_character, s)
                           ? 1
                           : 0;
            },
            opts);
        add("section_compatibility", k, std::all_of(compat.begin(), compat.end(), [](unsigned char c) { return c; }));

        add("degree0_invariants", k,
            source_invariants(eb.source, kInvariantBound) == pushed_invariants(eb, kInvariantBound));

        auto meets_center = [&](Support s) { return (s & eb.center_support()) != 0; };
        auto relative = filter_supports(
            eb.ambient.dim(), [&](Support s) { return is_relatively_semistable(eb, eb.theta, s); }, opts);
        bool gms = relative.size() == filter_supports(eb.ambient.dim(), meets_center, opts).size() &&
                   std::all_of(relative.begin(), relative.end(), meets_center);
        add("good_moduli_space", k, gms);

        const Character chi_l = eb.extend(st.source_character);
        bool lin = st.combination.combined == st.combination.m0 * chi_l + eb.theta && st.combination.m0 >= 1;
        if (lin) {
            auto agree = map_supports<unsigned char>(
                eb.ambient.dim(),
                [&](Support s) -> unsigned char {
                    return is_semistable(eb.ambient, st.combination.combined, s) ==
                                   in_two_step_locus(eb.ambient, chi_l, eb.theta, s)
                               ? 1
                               : 0;
                },
                opts);
            lin = std::all_of(agree.begin(), agree.end(), [](unsigned char c) { return c; });
        }
        add("linearization", k, lin);

        if (k + 1 < t.steps.size()) {
            const auto& next = t.steps[k + 1];
            add("tower_chaining", k, next.eb.source == eb.ambient && next.source_character == st.combination.combined);
        }
    }

    bool finite = true;
    std::string where;
    for (Support s : t.final_dm_supports)
        if (stabilizer_dimension(t.final_action, s) != 0) {
            finite = false;
            where = supports::to_string(s);
            break;
        }
    add("final_finite_stabilizers", std::nullopt, finite, where);

    bool final_ok = t.final_dm_supports == semistable_supports(t.final_action, t.final_character, opts);
    const TorusAction& expected = t.steps.empty() ? t.base : t.steps.back().eb.ambient;
    const Character& expected_chi = t.steps.empty() ? t.start_character : t.steps.back().combination.combined;
    final_ok = final_ok && t.final_action == expected && t.final_character == expected_chi;
    add("global_quotient", std::nullopt, final_ok);
    return report;
}

}  // namespace torgit
