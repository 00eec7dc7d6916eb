#pragma once

#include <vector>

#include "arcval/blowup.hpp"
#include "arcval/cone.hpp"
#include "arcval/errors.hpp"

namespace arcval::catalog {

/// The first quadrant of rank n (affine n-space).
inline Cone quadrant_cone(std::size_t n) {
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> e(n, 0);
        e[i] = 1;
        rays.emplace_back(std::move(e));
    }
    return Cone(n, std::move(rays));
}

/// cone((0,1),(k,-1)) in rank 2; its dual semigroup is generated by
/// (1,0),(1,1),...,(1,k), the cyclic quotient singularity of order k.
inline Cone cyclic_quotient_cone(const Integer& k) {
    return Cone(2, {LatticeVector{std::vector<Integer>{0, 1}},
                    LatticeVector{std::vector<Integer>{k, -1}}});
}

inline TowerStep origin_step(std::size_t rank, int chart) {
    TowerStep s;
    s.center.assign(rank, Rational(0));
    s.chart = chart;
    return s;
}

/// Tower of origin-centered plane blow-ups whose exceptional valuation is the
/// monomial valuation with coprime weights (a, b), by the Euclidean scheme:
/// weights (a, b) reduce to (a, b-a) in the first chart and (a-b, b) in the
/// second.
inline BlowupTower plane_monomial_tower(Integer a, Integer b) {
    if (a < 1 || b < 1) throw InputError("plane_monomial_tower: weights must be positive");
    if (gcd(a, b) != 1) throw InputError("plane_monomial_tower: weights must be coprime");
    std::vector<TowerStep> steps;
    while (!(a == 1 && b == 1)) {
        if (a <= b) {
            steps.push_back(origin_step(2, 1));
            b -= a;
        } else {
            steps.push_back(origin_step(2, 2));
            a -= b;
        }
    }
    steps.push_back(origin_step(2, 1));
    return BlowupTower(2, std::move(steps));
}

/// Four plane blow-ups: three origin steps realizing weights (2,3), then the
/// free point (0, lambda) on the third exceptional divisor. Its valuation
/// separates y^2 - lambda*x^3 (value 7) from the monomial data.
inline BlowupTower plane_tower_E4(const Rational& lambda) {
    std::vector<TowerStep> steps = {origin_step(2, 1), origin_step(2, 2), origin_step(2, 1)};
    TowerStep s4;
    s4.center = {Rational(0), lambda};
    s4.chart = 1;
    steps.push_back(s4);
    return BlowupTower(2, std::move(steps));
}

/// E4 followed by the satellite point (the intersection with the previous
/// exceptional divisor): value 8 on y^2 - lambda*x^3.
inline BlowupTower plane_tower_E5(const Rational& lambda) {
    auto steps = plane_tower_E4(lambda).steps();
    steps.push_back(origin_step(2, 1));
    return BlowupTower(2, std::move(steps));
}

/// E4 followed by a free point (0, mu) of the fourth exceptional divisor:
/// the depth-5 valuation with v(y^3 - lambda*x^3*y - mu*x^5) = 11.
inline BlowupTower plane_tower_E5_generic(const Rational& lambda, const Rational& mu) {
    auto steps = plane_tower_E4(lambda).steps();
    TowerStep s5;
    s5.center = {Rational(0), mu};
    s5.chart = 1;
    steps.push_back(s5);
    return BlowupTower(2, std::move(steps));
}

/// Tower over affine 3-space following the cubic x^2*z + x*y^2 + y^3 = 0 on
/// the first exceptional plane: blow up the origin, then n-1 points tracing
/// the strict transform of the curve. The centers come from the chart-by-chart
/// parametrization z = -y^2 - y^3 of the curve on the first chart.
inline BlowupTower cubic_curve_tower(std::size_t n) {
    if (n < 6) throw InputError("cubic_curve_tower: needs at least 6 steps");
    std::vector<TowerStep> steps;
    steps.push_back(origin_step(3, 1));
    steps.push_back(origin_step(3, 2));
    steps.push_back(origin_step(3, 2));
    for (int k = 0; k < 2; ++k) {
        TowerStep s;
        s.center = {Rational(0), Rational(0), Rational(-1)};
        s.chart = 2;
        steps.push_back(s);
    }
    for (std::size_t k = 5; k < n; ++k) steps.push_back(origin_step(3, 2));
    return BlowupTower(3, std::move(steps), {"x", "y", "z"});
}

// Frequently probed plane curves.
inline LaurentPolynomial cusp_poly(const Rational& lambda) {
    // y^2 - lambda * x^3
    LaurentPolynomial f(2);
    f.add_term({Integer(0), Integer(2)}, Rational(1));
    f.add_term({Integer(3), Integer(0)}, -lambda);
    return f;
}

inline LaurentPolynomial quintic_poly(const Rational& lambda, const Rational& mu) {
    // y^3 - lambda * x^3 * y - mu * x^5
    LaurentPolynomial f(2);
    f.add_term({Integer(0), Integer(3)}, Rational(1));
    f.add_term({Integer(3), Integer(1)}, -lambda);
    f.add_term({Integer(5), Integer(0)}, -mu);
    return f;
}

inline LaurentPolynomial cubic_surface_poly() {
    // x^2*z + x*y^2 + y^3
    LaurentPolynomial f(3);
    f.add_term({Integer(2), Integer(0), Integer(1)}, Rational(1));
    f.add_term({Integer(1), Integer(2), Integer(0)}, Rational(1));
    f.add_term({Integer(0), Integer(3), Integer(0)}, Rational(1));
    return f;
}

} // namespace arcval::catalog
