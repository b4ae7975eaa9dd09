#include "helpers.hpp"
#include "random_graphs.hpp"
#include "torgit/desing.hpp"
#include "torgit/hilbert.hpp"
#include "torgit/luna.hpp"
#include "torgit/quasimap.hpp"
#include "torgit/rees.hpp"
#include "torgit/stabilizer.hpp"
#include "torgit/walls.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace torgit;
using testing_util::iv;
using testing_util::sup;
using testing_util::to_character;

namespace {

struct Outcome {
    bool passed = true;
    std::string failure;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && passed) {
            passed = false;
            failure = what;
        }
    }
};

oracle::Mat raw_weights(const TorusAction& a) {
    oracle::Mat raw(a.rank(), oracle::Vec(a.dim()));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) raw[i][j] = a.weights()(i, j).get_si();
    return raw;
}

std::size_t oracle_stab_dim(const TorusAction& a, Support s) {
    return a.rank() - oracle::rank(oracle::columns(raw_weights(a), a.rank(), s), a.rank());
}

void criterion_1(Outcome& o) {
    auto eb = extended_weighted_blowup(TorusAction(IntMatrix(0, 2)), reduced_center(sup({1, 2})));
    o.require(eb.ambient.dim() == 3, "ambient is A^3");
    o.require(eb.ambient.weights() == IntMatrix{{1, 1, -1}}, "weights (1,1,-1)");
    o.require(eb.theta == Character{-1}, "theta = -1");
    o.require(eb.exceptional_index == 2, "T is the third coordinate");
    o.require(eb.substitute(iv({1, 0})) == iv({1, 0, 1}) && eb.substitute(iv({0, 1})) == iv({0, 1, 1}),
              "x_k -> X_k T");
    o.require(eb.section(sup({1, 2})) == sup({1, 2, 3}) && eb.section(0) == sup({3}), "section at T = 1");
    auto div = exceptional_divisor(eb);
    std::vector<Support> omit_t;
    for (Support s = 0; s < 8; ++s)
        if (!supports::contains(s, 2)) omit_t.push_back(s);
    o.require(div.on_divisor == omit_t, "exceptional divisor V(T)");
    o.detail << "ambient weights (1,1,-1), theta (-1), T at index 3";
}

void criterion_2(Outcome& o) {
    auto cert = cubics_example();
    const IntMatrix& w = cert.slice.action.weights();
    // oracle: invariant exponents of degree <= 6, minus sums of two nonzero ones
    std::vector<oracle::Vec> inv;
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; a + b <= 6; ++b)
            for (long c = 0; a + b + c <= 6; ++c) {
                if (a + b + c == 0) continue;
                bool zero = true;
                for (std::size_t i = 0; i < 3; ++i)
                    zero = zero && w(i, 0).get_si() * a + w(i, 1).get_si() * b + w(i, 2).get_si() * c == 0;
                if (zero) inv.push_back({a, b, c});
            }
    std::vector<IntVector> basis;
    for (const auto& v : inv) {
        bool decomposable = false;
        for (const auto& u : inv) {
            oracle::Vec rest{v[0] - u[0], v[1] - u[1], v[2] - u[2]};
            if (u != v && rest[0] >= 0 && rest[1] >= 0 && rest[2] >= 0) decomposable = true;
        }
        if (!decomposable) basis.push_back(testing_util::to_vector(v));
    }
    o.require(basis == std::vector<IntVector>{iv({1, 1, 1})}, "oracle basis is {x1 x2 x3}");
    o.require(cert.invariants == basis, "library basis equals the oracle basis");
    o.require(hilbert_basis_bounded(w, 6) == basis, "hilbert_basis_bounded on the slice");
    o.detail << "Hilbert basis up to degree 6 = {x1 x2 x3} (" << inv.size() << " invariant monomials)";
}

void criterion_3(Outcome& o) {
    auto cert = cubics_example();
    o.require(cert.stabilizer.dimension == 0, "dimension 0");
    o.require(cert.stabilizer.invariant_factors == iv({3, 3}), "invariant factors (3,3)");
    o.require(cert.stabilizer.torus_part_order() == 9, "order 9");
    o.require(cert.stabilizer.finite_part_order == 6, "finite part of order 6");
    oracle::Mat w(3, oracle::Vec(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) w[i][j] = cert.eb.ambient.weights()(i, j).get_si();
    o.require(oracle::smith_diagonal(w, 3, 3) == std::vector<long>{1, 3, 3}, "oracle SNF (1,3,3)");
    o.detail << "dimension 0, factors (3,3), finite part order 6";
}

std::vector<std::vector<std::size_t>> partitions(std::size_t total, std::size_t max_part) {
    if (total == 0) return {{}};
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t p = std::min(total, max_part); p >= 1; --p)
        for (auto rest : partitions(total - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(rest);
        }
    return out;
}

void criterion_4(Outcome& o) {
    int patterns = 0, disagreements = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& p : partitions(2 * n, 2 * n)) {
            ++patterns;
            const std::size_t top = p.front();
            for (auto mode : {BinaryFormMode::Semistable, BinaryFormMode::StableDm}) {
                const bool expected = mode == BinaryFormMode::Semistable ? top <= n : top + 1 <= n;
                if (check_binary_forms(p, n, mode) != expected || binary_forms_hm(p, n, mode) != expected)
                    ++disagreements;
            }
        }
    o.require(patterns == 5 + 11 + 22, "all partitions enumerated");
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    o.detail << patterns << " patterns, " << disagreements << " disagreements";
}

void criterion_5(Outcome& o) {
    std::mt19937 rng(505);
    int mismatches = 0, actions = 0;
    for (; actions < 100; ++actions) {
        auto ra = testing_util::random_action(rng, 3, 5, 3);
        auto chi_l = oracle::random_vector(rng, ra.r, -3, 3);
        auto chi_m = oracle::random_vector(rng, ra.r, -3, 3);
        auto c = combine_linearizations(ra.action, to_character(chi_l), to_character(chi_m));
        for (const Integer& m : {c.m0, Integer(c.m0 + 1)}) {
            Character mixed = m * to_character(chi_l) + to_character(chi_m);
            auto ss = semistable_supports(ra.action, mixed);
            std::vector<Support> expect;
            for (Support s = 0; s < (Support{1} << ra.n); ++s)
                if (oracle::two_step(ra.raw, ra.r, chi_l, chi_m, s)) expect.push_back(s);
            if (ss != expect) ++mismatches;
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatching support sets");
    o.detail << actions << " actions, m0 and m0+1, " << mismatches << " mismatches";
}

void criterion_6(Outcome& o) {
    std::mt19937 rng(4242);
    int generic = 0, failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto ra = testing_util::random_action(rng, 3, 6, 3, true);
        auto w = compute_walls(ra.action, IntMatrix::identity(ra.r));
        std::vector<oracle::Vec> candidates{testing_util::from_vector(find_generic_character(w, 6).entries)};
        for (int k = 0; k < 4; ++k) candidates.push_back(oracle::random_vector(rng, ra.r, -4, 4));
        for (const auto& mu : candidates) {
            if (!is_generic(w, to_character(mu))) continue;
            ++generic;
            bool ok = verify_ss_equals_s(ra.action, to_character(mu)).ss_equals_s;
            for (Support s = 0; s < (Support{1} << ra.n); ++s)
                if (oracle::semistable(ra.raw, ra.r, mu, s) && !oracle::stable(ra.raw, ra.r, mu, s)) ok = false;
            if (!ok) ++failures;
        }
    }
    o.require(generic >= 100, "at least 100 generic characters");
    o.require(failures == 0, std::to_string(failures) + " failures");
    o.detail << "100 full-rank actions, " << generic << " generic characters, " << failures << " failures";
}

void criterion_7(Outcome& o) {
    TorusAction opposite(IntMatrix{{1, -1}});
    auto cubes = cubics_example();
    struct Case {
        const char* name;
        DesingTower tower;
    };
    for (const Case& c : {Case{"(1,-1)", desingularize(opposite, Character{0})}, Case{"cubics", cubes.tower}}) {
        const std::string name = c.name;
        o.require(c.tower.steps.size() == 1, name + ": one step");
        o.require(!c.tower.final_dm_supports.empty(), name + ": nonempty DM locus");
        for (auto s : c.tower.final_dm_supports)
            o.require(oracle_stab_dim(c.tower.final_action, s) == 0, name + ": finite stabilizer on " + supports::to_string(s));
        auto report = verify_tower(c.tower);
        bool has_degree0 = false;
        for (const auto& check : report.checks) has_degree0 = has_degree0 || check.name == "degree0_invariants";
        o.require(has_degree0, name + ": degree-0 check ran");
        const TowerCheck* bad = report.first_failure();
        o.require(bad == nullptr, name + ": " + (bad ? bad->name + " " + bad->detail : ""));
        o.detail << name << " " << c.tower.steps.size() << " step, " << report.checks.size() << " checks; ";
    }
}

void criterion_8(Outcome& o) {
    std::mt19937 rng(31337);
    int qualifying = 0, disagreements = 0, stable = 0, subcurves = 0, closure_failures = 0, graphs = 0;
    for (; qualifying < 500 && graphs < 5000; ++graphs) {
        auto rg = testing_util::random_graph(rng);
        TwistedCurveGraph g(rg.vertices, rg.edges, rg.legs, {"L_X", "L"});
        if (!satisfies_ampleness_hypotheses(g)) continue;
        ++qualifying;
        const bool st = is_stable_quasimap(g).stable;
        if (st != epsilon_ample_equivalent(g)) ++disagreements;
        if (!st) continue;
        ++stable;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rg.vertices.size()); ++mask) {
            std::vector<std::size_t> keep;
            for (std::size_t v = 0; v < rg.vertices.size(); ++v)
                if ((mask >> v) & 1u) keep.push_back(v);
            auto sub = testing_util::marked_subcurve(g, keep);
            if (!sub) continue;
            ++subcurves;
            if (!is_stable_quasimap(*sub).stable) ++closure_failures;
        }
    }
    o.require(qualifying >= 500, "500 graphs satisfying the hypotheses");
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    o.require(closure_failures == 0, std::to_string(closure_failures) + " unstable subcurves");
    o.detail << qualifying << " graphs, " << disagreements << " disagreements, " << stable << " stable, " << subcurves
             << " subcurves, " << closure_failures << " closure failures";
}

void criterion_9(Outcome& o) {
    const std::vector<std::string> both{"L_X", "L"};
    std::vector<CurveLeg> twelve(12, CurveLeg{0, 1});
    TwistedCurveGraph single({{0, true, {{"L_X", Rational(12)}, {"L", Rational(0)}}}}, {}, twelve, both);
    o.require(check_pencil_degrees(single).passed(), "single vertex passes");

    // degenerate: a contracted rational tail carrying some base points, deg L_X = #legs + 3 deg L
    int degenerate = 0;
    for (long on_tail = 0; on_tail <= 12; ++on_tail)
        for (long tail_l = 0; tail_l <= 2; ++tail_l) {
            std::vector<CurveLeg> legs;
            for (long i = 0; i < 12; ++i) legs.push_back({static_cast<std::size_t>(i < on_tail), 1});
            TwistedCurveGraph split({{0, true, {{"L_X", Rational(12 - on_tail)}}},
                                     {0, false, {{"L_X", Rational(on_tail + 3 * tail_l)}, {"L", Rational(tail_l)}}}},
                                    {{0, 1, 1}}, legs, both);
            ++degenerate;
            o.require(check_pencil_degrees(split).passed(), "degenerate configuration " + std::to_string(degenerate));
            TwistedCurveGraph mutated({{0, true, {{"L_X", Rational(12 - on_tail)}}},
                                       {0, false, {{"L_X", Rational(on_tail + 3 * tail_l + 1)}, {"L", Rational(tail_l)}}}},
                                      {{0, 1, 1}}, legs, both);
            o.require(!check_pencil_degrees(mutated).passed(), "mutated control fails");
        }
    o.detail << "single vertex passes, " << degenerate << " degenerate configurations pass, mutated controls fail";
}

void criterion_10(Outcome& o) {
    auto eq = dvr_lift({2, 2, 2});
    o.require(!eq.meets_some_axis(), "(2,2,2) is off every axis");
    auto mixed = dvr_lift({1, 2, 3});
    o.require(mixed.on_axis_proper_transform == std::vector<bool>{false, true, true}, "(1,2,3) on axes 2, 3");
    o.detail << "(2,2,2) off all axes; (1,2,3) on axes 2 and 3";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"EB of the origin in A^2", criterion_1},
        {"cubics slice invariants", criterion_2},
        {"cubics EB stabilizer", criterion_3},
        {"binary forms rule vs HM", criterion_4},
        {"m0 two-step property", criterion_5},
        {"chamber genericity", criterion_6},
        {"desingularization towers", criterion_7},
        {"quasimap predicates", criterion_8},
        {"pencil bookkeeping", criterion_9},
        {"DVR lifting", criterion_10},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.failure = std::string("exception: ") + e.what();
        }
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
                  << o.detail.str() << ")\n";
        failed += !o.passed;
    }
    return failed == 0 ? 0 : 1;
}
