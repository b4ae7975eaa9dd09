#pragma once

#include "torgit/errors.hpp"
#include "torgit/quasimap.hpp"

#include <optional>
#include <random>

namespace testing_util {

using namespace torgit;

struct RandomGraph {
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;
    std::vector<CurveLeg> legs;
};

inline Integer local_lcm(const RandomGraph& g, std::size_t v) {
    Integer out = 1;
    for (const auto& e : g.edges)
        if (e.v == v || e.w == v) out = lcm(out, Integer(static_cast<unsigned long>(e.index)));
    for (const auto& l : g.legs)
        if (l.vertex == v) out = lcm(out, Integer(static_cast<unsigned long>(l.index)));
    return out;
}

// Connected graph with L_X >= 0 and, outside the DM locus, deg L > 0.
inline RandomGraph random_graph(std::mt19937& rng) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    RandomGraph g;
    const std::size_t nv = uni(1, 6);
    for (std::size_t v = 0; v < nv; ++v) g.vertices.push_back({static_cast<std::size_t>(uni(0, 5) == 0 ? uni(1, 2) : 0), uni(0, 2) != 0, {}});
    for (std::size_t v = 1; v < nv; ++v) g.edges.push_back({static_cast<std::size_t>(uni(0, static_cast<int>(v) - 1)), v, static_cast<std::size_t>(uni(1, 3))});
    for (int k = uni(0, 2); k > 0; --k)
        g.edges.push_back({static_cast<std::size_t>(uni(0, nv - 1)), static_cast<std::size_t>(uni(0, nv - 1)), static_cast<std::size_t>(uni(1, 3))});
    for (int k = uni(0, 4); k > 0; --k) g.legs.push_back({static_cast<std::size_t>(uni(0, nv - 1)), static_cast<std::size_t>(uni(1, 3))});
    for (std::size_t v = 0; v < nv; ++v) {
        long den = local_lcm(g, v).get_si();
        long lx = uni(0, 2) == 0 ? 0 : uni(0, static_cast<int>(2 * den));
        g.vertices[v].degrees["L_X"] = Rational(lx, den);
        long l = g.vertices[v].in_dm ? uni(-1, 2) : uni(1, 3);
        g.vertices[v].degrees["L"] = Rational(l, den);
        g.vertices[v].degrees["L_X"].canonicalize();
        g.vertices[v].degrees["L"].canonicalize();
    }
    return g;
}

// Induced subgraph on keep; edges leaving it become legs at the kept end.
inline std::optional<TwistedCurveGraph> marked_subcurve(const TwistedCurveGraph& g, const std::vector<std::size_t>& keep) {
    std::vector<long> pos(g.vertices().size(), -1);
    std::vector<CurveVertex> vs;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        pos[keep[i]] = static_cast<long>(i);
        vs.push_back(g.vertices()[keep[i]]);
    }
    std::vector<CurveEdge> es;
    std::vector<CurveLeg> ls;
    for (const auto& e : g.edges()) {
        long a = pos[e.v], b = pos[e.w];
        if (a >= 0 && b >= 0)
            es.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), e.index});
        else if (a >= 0)
            ls.push_back({static_cast<std::size_t>(a), e.index});
        else if (b >= 0)
            ls.push_back({static_cast<std::size_t>(b), e.index});
    }
    for (const auto& l : g.legs())
        if (pos[l.vertex] >= 0) ls.push_back({static_cast<std::size_t>(pos[l.vertex]), l.index});
    try {
        return TwistedCurveGraph(vs, es, ls, g.bundles());
    } catch (const InputError&) {
        return std::nullopt;  // disconnected
    }
}

}  // namespace testing_util
