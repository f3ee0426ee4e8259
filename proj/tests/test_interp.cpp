#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "agc/interp.hpp"

using namespace agc;

namespace {

struct Fixture {
    CurveSpec spec;
    OrbitDecomposition dec;
    Fixture(CurveSpec s) : spec(std::move(s)), dec(decompose(spec, enumerate_points(spec))) {}
};

std::vector<FieldElement> marked_roots(const DiagramRow& row) {
    std::vector<FieldElement> out;
    for (long j = 0; j < row.box_count(); ++j)
        if (row.marked[(size_t)j]) out.push_back(row.boxes[(size_t)j]);
    return out;
}

} // namespace

TEST_CASE("orbit annihilators on hermitian q=2") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    FieldElement w = F.generator();

    UniPoly m1 = build_annihilator(fx.dec, 0);
    CHECK(m1 == UniPoly(F, Var::y, {-w, F.one()})); // y - w
    for (const auto& pt : fx.dec.orbits[1].points) CHECK(m1.eval(pt.y) == F.one()); // w^2 - w

    // the closed form y^rho1 - y0^rho1
    for (int i = 0; i < fx.dec.r; ++i) {
        UniPoly m = build_annihilator(fx.dec, i);
        CHECK(m.degree() == fx.dec.rho1);
        FieldElement y0 = fx.dec.point(i, 0).y;
        UniPoly closed = UniPoly::monomial(F, Var::y, fx.dec.rho1, F.one()) -
                         UniPoly::constant(F, Var::y, y0.pow(fx.dec.rho1));
        CHECK(m == closed);
    }
}

TEST_CASE("annihilator codewords vanish exactly on their orbit") {
    for (Fixture fx : {Fixture(preset_hermitian(3)), Fixture(preset_quotient_hermitian(5, 3))}) {
        for (int i = 0; i < fx.dec.r; ++i) {
            UniPoly m = build_annihilator(fx.dec, i);
            CHECK(m.degree() == fx.dec.rho1);
            for (int k = 0; k < fx.dec.nrows(); ++k) {
                FieldElement first = m.eval(fx.dec.point(k, 0).y);
                for (long j = 0; j < fx.dec.size(k); ++j) {
                    FieldElement v = m.eval(fx.dec.point(k, j).y);
                    if (k == i) CHECK(v.is_zero());
                    else {
                        CHECK_FALSE(v.is_zero());
                        CHECK(v == first); // constant on the other orbits
                    }
                }
            }
        }
    }
}

TEST_CASE("point selectors on hermitian q=2") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    FieldElement w = F.generator();

    ProductForm b10 = build_selector(fx.dec, 0, 0);
    CHECK(b10.degree_in(Var::y) == 0); // rho3 = 0
    CHECK(b10.degree_in(Var::x) == 2); // rho2 = 2
    // factors are (x - alpha x0)(x - alpha^2 x0) with x0 = 1
    FieldElement x0 = fx.dec.point(0, 0).x;
    CHECK(x0 == F.one());
    std::vector<uint32_t> roots;
    for (const auto& fac : b10.factors()) roots.push_back(fac.root.code());
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<uint32_t>{w.code(), (w * w).code()});

    for (long j = 0; j < 3; ++j) {
        const AffinePoint& pt = fx.dec.point(0, j);
        FieldElement v = b10.eval(pt.x, pt.y);
        if (j == 0) CHECK_FALSE(v.is_zero());
        else CHECK(v.is_zero());
    }
}

TEST_CASE("selector pole orders match rho2 a + rho3 b") {
    {
        Fixture fx(preset_hermitian(3)); // x_q2r(3,1): q q^r + (q-2)(q^r+1) = 13
        ProductForm b = build_selector(fx.dec, 1, 2);
        CHECK(b.degree_in(Var::x) == fx.dec.rho2);
        CHECK(b.degree_in(Var::y) == fx.dec.rho3);
        CHECK(b.pole_order(fx.spec.a, fx.spec.b) == 13);
        CHECK(b.pole_order(fx.spec.a, fx.spec.b) ==
              fx.dec.rho2 * fx.spec.a + fx.dec.rho3 * fx.spec.b);
    }
    {
        Fixture fx(preset_quotient_hermitian(5, 3)); // (q-2)m + (m-1)q = 19
        ProductForm b = build_selector(fx.dec, 0, 5);
        CHECK(b.pole_order(fx.spec.a, fx.spec.b) == 19);
    }
}

TEST_CASE("row functions reproduce the marked-root polynomial") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    auto interp = build_interpolants(fx.dec);
    RootDiagram d = diagram_oracle(fx.spec, fx.dec, 4);

    // row 2 (index 1) is partial with marks {alpha, alpha^2}
    auto marks = marked_roots(d.rows[1]);
    REQUIRE(marks.size() == 2);
    RowFunction rf = build_row_function(fx.dec, interp, 1, marks);

    // sweeping the own orbit gives the coefficients of p(t) = t^2 + t + 1
    UniPoly p = poly_from_roots(F, Var::t, marks);
    CHECK(p == UniPoly::from_codes(F, Var::t, {1, 1, 1}));
    for (long j = 0; j < fx.dec.size(1); ++j)
        CHECK(rf.eval(fx.dec.point(1, j)) == p.coeff(j));

    // earlier orbits are annihilated
    for (long j = 0; j < fx.dec.size(0); ++j)
        CHECK(evaluate_row_function(rf, fx.dec, fx.dec.point(0, j)).is_zero());

    // empty row: p(t) = 1, the module image starts with a constant 1
    RowFunction rf0 = build_row_function(fx.dec, interp, 0, {});
    CHECK(rf0.eval(fx.dec.point(0, 0)) == F.one());
    for (long j = 1; j < fx.dec.size(0); ++j) CHECK(rf0.eval(fx.dec.point(0, j)).is_zero());

    // a full row has no generator of this kind
    std::vector<FieldElement> all_roots(d.rows[2].boxes);
    CHECK_THROWS_AS(build_row_function(fx.dec, interp, 2, all_roots), std::invalid_argument);
    AffinePoint outside{F.zero(), F.generator()};
    CHECK_THROWS_AS(evaluate_row_function(rf, fx.dec, outside), std::invalid_argument);
}

TEST_CASE("interpolation basis for hermitian q=2, lambda=4") {
    Fixture fx(preset_hermitian(2));
    auto interp = build_interpolants(fx.dec);
    RootDiagram d = diagram_fast(fx.spec, fx.dec, 4);
    GroebnerBasis fast = interpolation_gb(fx.spec, fx.dec, d, interp);
    GroebnerBasis oracle = oracle_gb(fx.spec, fx.dec, 4);

    REQUIRE(fast.nrows() == 4);
    CHECK_FALSE(fast.reduced());
    CHECK(fast.provenance() ==
          std::vector<std::string>{"interpolation", "interpolation", "kernel", "kernel"});

    std::vector<long> degs;
    for (int i = 0; i < 4; ++i) degs.push_back(fast.leading_degree(i));
    CHECK(degs == std::vector<long>{0, 2, 1, 1});
    for (int i = 0; i < 4; ++i) CHECK(fast.leading_degree(i) == oracle.leading_degree(i));

    CHECK(same_submodule(fast, oracle));

    // interpolated rows are evaluation vectors of functions in L(lambda P):
    // row 1 is ev(x^2 + x + 1), row 2 is ev(y - w)
    const Field& F = fx.spec.field;
    Codeword c0 = module_to_codeword(fast.element(0), fx.dec);
    Codeword expect0 = evaluate_codeword(
        [&](const AffinePoint& pt) { return pt.x * pt.x + pt.x + F.one(); }, fx.dec);
    CHECK(c0 == expect0);
    Codeword c1 = module_to_codeword(fast.element(1), fx.dec);
    Codeword expect1 =
        evaluate_codeword([&](const AffinePoint& pt) { return pt.y - F.generator(); }, fx.dec);
    CHECK(c1 == expect1);
}

TEST_CASE("interpolation agrees with the oracle across lambda sweeps") {
    for (Fixture fx : {Fixture(preset_hermitian(2)), Fixture(preset_hermitian(3)),
                       Fixture(preset_quotient_hermitian(5, 3))}) {
        auto interp = build_interpolants(fx.dec);
        long lo = std::max(0L, 2 * fx.spec.genus - 1);
        long hi = std::min(fx.dec.n - 1, lo + 16);
        for (long lambda = lo; lambda <= hi; ++lambda) {
            RootDiagram d = diagram_fast(fx.spec, fx.dec, lambda);
            GroebnerBasis fast = interpolation_gb(fx.spec, fx.dec, d, interp);
            GroebnerBasis oracle = oracle_gb(fx.spec, fx.dec, lambda);
            for (int i = 0; i < fast.nrows(); ++i)
                CHECK(fast.leading_degree(i) == oracle.leading_degree(i));
            CHECK(same_submodule(fast, oracle));
        }
    }
}

TEST_CASE("non-full short rows fall back to the reference basis") {
    // hermitian q=2 at lambda = 7 = n-1: one short row goes non-full
    Fixture fx(preset_hermitian(2));
    auto interp = build_interpolants(fx.dec);
    RootDiagram d = diagram_fast(fx.spec, fx.dec, 7);
    bool some_short_nonfull = false;
    for (int i = fx.dec.r; i < fx.dec.nrows(); ++i)
        some_short_nonfull = some_short_nonfull || !d.rows[(size_t)i].full();
    REQUIRE(some_short_nonfull);

    GroebnerBasis fast = interpolation_gb(fx.spec, fx.dec, d, interp);
    bool oracle_row_used = false;
    for (int i = fx.dec.r; i < fx.dec.nrows(); ++i)
        oracle_row_used = oracle_row_used || fast.provenance()[(size_t)i] == "oracle";
    CHECK(oracle_row_used);
    CHECK(same_submodule(fast, oracle_gb(fx.spec, fx.dec, 7)));
}
