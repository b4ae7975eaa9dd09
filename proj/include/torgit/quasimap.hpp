#pragma once

#include "torgit/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace torgit {

inline constexpr const char* kGoodModuliBundle = "L_X";
inline constexpr const char* kDmBundle = "L";

struct CurveVertex {
    std::size_t genus = 0;
    bool in_dm = true;
    std::map<std::string, Rational> degrees;  // missing entries are 0
};

struct CurveEdge {
    std::size_t v = 0, w = 0;  // 0-based; v == w is a self-node
    std::size_t index = 1;     // order of the nodal gerbe
};

struct CurveLeg {
    std::size_t vertex = 0;
    std::size_t index = 1;  // order of the marked gerbe
};

/// Dual graph of a twisted nodal marked curve with vertexwise degree data.
class TwistedCurveGraph {
public:
    TwistedCurveGraph() = default;
    /// Throws InputError unless connected, "L_X" is tracked with nonnegative degrees,
    /// every degree names a tracked bundle, and denominators divide the local index lcm.
    TwistedCurveGraph(std::vector<CurveVertex> vertices, std::vector<CurveEdge> edges, std::vector<CurveLeg> legs,
                      std::vector<std::string> bundles);

    const std::vector<CurveVertex>& vertices() const { return vertices_; }
    const std::vector<CurveEdge>& edges() const { return edges_; }
    const std::vector<CurveLeg>& legs() const { return legs_; }
    const std::vector<std::string>& bundles() const { return bundles_; }

    bool tracks(const std::string& bundle) const;
    Rational degree(std::size_t v, const std::string& bundle) const;
    std::size_t edge_ends(std::size_t v) const;
    std::size_t legs_at(std::size_t v) const;
    Integer local_index_lcm(std::size_t v) const;
    /// sum of g_v plus the first Betti number of the graph
    std::size_t total_genus() const;

private:
    std::vector<CurveVertex> vertices_;
    std::vector<CurveEdge> edges_;
    std::vector<CurveLeg> legs_;
    std::vector<std::string> bundles_;
};

/// (2g_v - 2) + #edge ends + #legs.
Integer omega_log_degree(const TwistedCurveGraph& g, std::size_t v);

struct StabilityVerdict {
    bool stable = true;
    std::vector<std::size_t> violations;  // 0-based vertices
};

/// Nef: omega_log + 3 deg L_X >= 0 everywhere; where it vanishes the vertex is rational
/// and either leaves the DM locus or has deg L > 0. "L" is required only when such a
/// vertex lies in the DM locus.
StabilityVerdict is_stable_quasimap(const TwistedCurveGraph& g);

/// omega_log + 3 deg L_X + eps deg L ample for small eps. Requires "L" and total genus != 1.
bool epsilon_ample_equivalent(const TwistedCurveGraph& g);

/// Hypotheses under which the two predicates agree: "L" tracked, total genus != 1,
/// and every vertex outside the DM locus has deg L > 0.
bool satisfies_ampleness_hypotheses(const TwistedCurveGraph& g);

using ClassBeta = std::map<std::string, Rational>;

ClassBeta sum_degrees(const std::vector<CurveVertex>& vertices, const std::vector<std::string>& bundles);
ClassBeta class_beta(const TwistedCurveGraph& g);

enum class BinaryFormMode { Semistable, StableDm };

/// Rule on point multiplicities of a degree-2n divisor on P^1.
bool check_binary_forms(const std::vector<std::size_t>& multiplicities, std::size_t n, BinaryFormMode mode);

/// Same question through the maximal torus: every frame putting a point (or none) at 0
/// and another at infinity is tested on the affine cone of P^{2n}.
bool binary_forms_hm(const std::vector<std::size_t>& multiplicities, std::size_t n, BinaryFormMode mode);

enum class ConicAmbient { SmoothP1, TwistedConic };

struct DivisorConfig {
    ConicAmbient ambient = ConicAmbient::SmoothP1;
    std::vector<std::vector<std::size_t>> components;  // point multiplicities per component
    std::size_t n = 1;
};

struct ConicVerdict {
    bool valid_in_cy = false;
    bool in_dm = false;
};

ConicVerdict check_twisted_conic(const DivisorConfig& cfg);

struct DvrLift {
    std::size_t m = 0;
    std::vector<std::size_t> lifted_orders;
    std::vector<bool> on_axis_proper_transform;
    bool meets_some_axis() const;
};

DvrLift dvr_lift(const std::vector<std::size_t>& orders);

struct PencilReport {
    std::vector<bool> vertex_passes;
    bool passed() const;
};

/// deg L_X(v) == #legs(v) + 3 deg L(v) at every vertex; needs 12 legs and "L".
PencilReport check_pencil_degrees(const TwistedCurveGraph& g);

}  // namespace torgit
