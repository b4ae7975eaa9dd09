#include "torgit/cone.hpp"

#include "torgit/errors.hpp"

#include <map>

namespace torgit {

RationalCone::RationalCone(std::size_t dim, std::vector<IntVector> ineqs) : ambient_dim(dim) {
    for (auto& n : ineqs) add(std::move(n));
}

void RationalCone::add(IntVector normal) {
    if (normal.size() != ambient_dim) throw InputError("cone inequality has wrong dimension");
    inequalities.push_back(std::move(normal));
}

bool RationalCone::contains(const IntVector& x) const {
    for (const auto& n : inequalities)
        if (dot(n, x) < 0) return false;
    return true;
}

namespace {

using System = std::map<IntVector, Rational>;  // primitive coeffs -> tightest rhs

// Returns false if the inequality is contradictory on its own.
bool insert(System& sys, const RatVector& coeffs, const Rational& rhs) {
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, c.get_den());
    IntVector scaled(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) scaled[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    Integer g = gcd_of(scaled);
    if (g == 0) return rhs <= 0;
    for (auto& x : scaled) x /= g;
    Rational r = rhs * Rational(den) / Rational(g);
    auto [it, fresh] = sys.emplace(std::move(scaled), r);
    if (!fresh && it->second < r) it->second = r;
    return true;
}

Rational ceil_of(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
}

Rational floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

}  // namespace

std::optional<RatVector> solve_affine_system(std::vector<AffineInequality> system, std::size_t dim) {
    // stages[k] only involves variables 0..k-1.
    std::vector<System> stages(dim + 1);
    for (const auto& ineq : system) {
        if (ineq.coeffs.size() != dim) throw InputError("inequality has wrong dimension");
        if (!insert(stages[dim], ineq.coeffs, ineq.rhs)) return std::nullopt;
    }
    for (std::size_t k = dim; k-- > 0;) {
        std::vector<std::pair<RatVector, Rational>> pos, neg;
        System& next = stages[k];
        for (const auto& [coeffs, rhs] : stages[k + 1]) {
            int s = sgn(coeffs[k]);
            RatVector rc = to_rational(coeffs);
            if (s == 0) {
                if (!insert(next, rc, rhs)) return std::nullopt;
            } else if (s > 0) {
                pos.emplace_back(std::move(rc), rhs);
            } else {
                neg.emplace_back(std::move(rc), rhs);
            }
        }
        for (const auto& [pc, pr] : pos)
            for (const auto& [nc, nr] : neg) {
                Rational fp = -nc[k], fn = pc[k];
                RatVector combined(dim);
                for (std::size_t i = 0; i < dim; ++i) combined[i] = fp * pc[i] + fn * nc[i];
                combined[k] = 0;
                if (!insert(next, combined, fp * pr + fn * nr)) return std::nullopt;
            }
    }
    // stages[0] holds only constant constraints, already checked by insert().

    RatVector x(dim, Rational(0));
    for (std::size_t k = 0; k < dim; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto& [coeffs, rhs] : stages[k + 1]) {
            if (coeffs[k] == 0) continue;
            Rational rest = rhs;
            for (std::size_t i = 0; i < k; ++i) rest -= Rational(coeffs[i]) * x[i];
            Rational bound = rest / Rational(coeffs[k]);
            if (coeffs[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi && *lo > *hi) throw InternalError("Fourier-Motzkin back-substitution found empty interval");
        if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) {
            x[k] = 0;
        } else if (lo && *lo > 0) {
            Rational c = ceil_of(*lo);
            x[k] = (!hi || c <= *hi) ? c : *lo;
        } else {
            Rational f = floor_of(*hi);
            x[k] = (!lo || f >= *lo) ? f : *hi;
        }
    }
    return x;
}

namespace {

std::optional<RatVector> solve_homogeneous(const RationalCone& cone, const ConeQuery& q,
                                           const std::vector<AffineInequality>& extra) {
    const std::size_t dim = cone.ambient_dim;
    std::vector<AffineInequality> sys;
    for (const auto& n : cone.inequalities) sys.push_back({to_rational(n), 0});
    for (const auto& n : q.nonnegative) sys.push_back({to_rational(n), 0});
    for (const auto& n : q.positive) sys.push_back({to_rational(n), 1});
    for (const auto& n : q.zero) {
        RatVector r = to_rational(n);
        sys.push_back({r, 0});
        for (auto& c : r) c = -c;
        sys.push_back({std::move(r), 0});
    }
    for (const auto& e : extra) sys.push_back(e);
    return solve_affine_system(std::move(sys), dim);
}

void check_dims(const RationalCone& cone, const std::vector<IntVector>& vs) {
    for (const auto& v : vs)
        if (v.size() != cone.ambient_dim) throw InputError("cone query vector has wrong dimension");
}

}  // namespace

std::optional<IntVector> find_cone_point(const RationalCone& cone, const ConeQuery& query) {
    check_dims(cone, query.positive);
    check_dims(cone, query.nonnegative);
    check_dims(cone, query.zero);
    const std::size_t dim = cone.ambient_dim;
    if (!query.exclude_zero || !query.positive.empty()) {
        auto x = solve_homogeneous(cone, query, {});
        if (!x) return std::nullopt;
        return primitive(*x);
    }
    // x != 0: some coordinate is >= 1 or <= -1 after scaling.
    for (std::size_t i = 0; i < dim; ++i)
        for (int s : {1, -1}) {
            RatVector e(dim, Rational(0));
            e[i] = s;
            auto x = solve_homogeneous(cone, query, {AffineInequality{e, 1}});
            if (x) return primitive(*x);
        }
    return std::nullopt;
}

bool cone_has_point_with(const RationalCone& cone, const IntVector& objective, Strictness strictness,
                         bool exclude_zero) {
    if (objective.size() != cone.ambient_dim) throw InputError("objective has wrong dimension");
    ConeQuery q;
    q.exclude_zero = exclude_zero;
    if (strictness == Strictness::Positive)
        q.positive.push_back(objective);
    else
        q.nonnegative.push_back(objective);
    return find_cone_point(cone, q).has_value();
}

bool cone_is_trivial(const RationalCone& cone) {
    ConeQuery q;
    q.exclude_zero = true;
    return !find_cone_point(cone, q).has_value();
}

}  // namespace torgit
