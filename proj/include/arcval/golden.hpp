#pragma once

#include <string>
#include <vector>

#include "arcval/arc.hpp"
#include "arcval/blowup.hpp"
#include "arcval/catalog.hpp"
#include "arcval/mather.hpp"
#include "arcval/valuation.hpp"

namespace arcval {

/// One row of the reproduction suite: an id, the frozen expected value, what
/// the library computed, and whether they agree exactly.
struct GoldenRow {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
};

namespace detail {

inline void golden_int(std::vector<GoldenRow>& rows, const std::string& id,
                       const Integer& expected, const Integer& actual) {
    rows.push_back({id, expected.str(), actual.str(), expected == actual});
}

inline Integer must(const std::optional<Integer>& v) {
    if (!v) throw InternalError("golden: infinite value where a finite one was expected");
    return *v;
}

} // namespace detail

/// Exact reproduction of the worked plane and space examples plus the lattice
/// cross-checks. Every expected value is a frozen integer; pass means exact
/// equality.
inline std::vector<GoldenRow> run_golden_suite() {
    using detail::golden_int;
    using detail::must;
    std::vector<GoldenRow> rows;

    LaurentPolynomial x = LaurentPolynomial::variable(2, 0);
    LaurentPolynomial y = LaurentPolynomial::variable(2, 1);

    DivisorialValuation v1(catalog::plane_monomial_tower(1, 1));
    golden_int(rows, "E1: v(x)", 1, must(val_E(v1, x)));
    golden_int(rows, "E1: v(y)", 1, must(val_E(v1, y)));

    DivisorialValuation v2(catalog::plane_monomial_tower(1, 2));
    golden_int(rows, "E2: v(x)", 1, must(val_E(v2, x)));
    golden_int(rows, "E2: v(y)", 2, must(val_E(v2, y)));

    DivisorialValuation v3(catalog::plane_monomial_tower(2, 3));
    golden_int(rows, "E3: v(x)", 2, must(val_E(v3, x)));
    golden_int(rows, "E3: v(y)", 3, must(val_E(v3, y)));

    const std::vector<std::pair<Rational, Rational>> params = {{Rational(1), Rational(1)},
                                                               {Rational(2), Rational(-3)}};
    for (const auto& [lambda, mu] : params) {
        std::string tag = " (l=" + rational_to_string(lambda) +
                          ",m=" + rational_to_string(mu) + ")";
        LaurentPolynomial cusp = catalog::cusp_poly(lambda);
        LaurentPolynomial quintic = catalog::quintic_poly(lambda, mu);

        DivisorialValuation v4(catalog::plane_tower_E4(lambda));
        golden_int(rows, "E4: v(x)" + tag, 2, must(val_E(v4, x)));
        golden_int(rows, "E4: v(y)" + tag, 3, must(val_E(v4, y)));
        golden_int(rows, "E4: v(y^2-l*x^3)" + tag, 7, must(val_E(v4, cusp)));

        DivisorialValuation v5(catalog::plane_tower_E5(lambda));
        golden_int(rows, "E5: v(y^2-l*x^3)" + tag, 8, must(val_E(v5, cusp)));

        DivisorialValuation v5g(catalog::plane_tower_E5_generic(lambda, mu));
        golden_int(rows, "E5': v(y^2-l*x^3)" + tag, 7, must(val_E(v5g, cusp)));
        golden_int(rows, "E5': v(y^3-l*x^3*y-m*x^5)" + tag, 11, must(val_E(v5g, quintic)));
    }

    // space curve tower at depth 10
    DivisorialValuation w(catalog::cubic_curve_tower(10));
    golden_int(rows, "C3 tower: v(x)", 9, must(val_E(w, LaurentPolynomial::variable(3, 0))));
    golden_int(rows, "C3 tower: v(y)", 10, must(val_E(w, LaurentPolynomial::variable(3, 1))));
    golden_int(rows, "C3 tower: v(z)", 11, must(val_E(w, LaurentPolynomial::variable(3, 2))));
    golden_int(rows, "C3 tower: v(x^2z+xy^2+y^3)", 36, must(val_E(w, catalog::cubic_surface_poly())));

    // lattice checks on the quadrant and the cyclic quotient cone
    Cone a1 = catalog::cyclic_quotient_cone(2);
    {
        SemigroupBasis hb = hilbert_basis(a1);
        std::string got;
        for (const auto& u : hb.elements) got += u.str();
        rows.push_back({"A1 cone: Hilbert basis", "(1,0)(1,1)(1,2)", got,
                        got == "(1,0)(1,1)(1,2)"});
        MatherReport m = mather_discrepancy(a1, LatticeVector{{Integer(1), Integer(0)}});
        golden_int(rows, "A1 cone, a=(1,0): q", 1, m.q);
        golden_int(rows, "A1 cone, a=(1,0): k", 1, m.k_mather);
        golden_int(rows, "A1 cone, a=(1,0): codim", 2, m.codim);
    }
    {
        MatherReport m = mather_discrepancy(catalog::quadrant_cone(2),
                                            LatticeVector{{Integer(2), Integer(3)}});
        golden_int(rows, "quadrant, a=(2,3): codim", 5, m.codim);
        golden_int(rows, "quadrant, a=(2,3): k", 4, m.k_mather);
        Integer jet = jet_codim_monomial({Integer(2), Integer(3)}, 4);
        golden_int(rows, "jet codim (2,3) at m=4", 5, jet);
        DivisorialValuation v3b(catalog::plane_monomial_tower(2, 3));
        golden_int(rows, "E3 tower: canonical order", 4, relative_canonical_order(v3b.tower));
    }
    {
        CriterionReport ok = criterion_smooth({Integer(2), Integer(3)}, 5, {Integer(2), Integer(3)});
        rows.push_back({"criterion: weights (2,3), k+q=5", "concluded",
                        ok.concluded ? "concluded" : "not concluded", ok.concluded});
        CriterionReport no = criterion_smooth({Integer(2), Integer(3)}, 6, {Integer(2), Integer(3)});
        rows.push_back({"criterion: weights (2,3), k+q=6", "not concluded",
                        no.concluded ? "concluded" : "not concluded", !no.concluded});
    }
    return rows;
}

} // namespace arcval
