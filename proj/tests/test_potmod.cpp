#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "agc/potmod.hpp"

using namespace agc;

namespace {

struct Fixture {
    CurveSpec spec;
    OrbitDecomposition dec;
    Fixture(CurveSpec s) : spec(std::move(s)), dec(decompose(spec, enumerate_points(spec))) {}
};

ModuleElement random_element(const Field& F, const OrbitDecomposition& dec, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, F.order() - 1);
    ModuleElement el = ModuleElement::zero(F, dec.nrows());
    for (int i = 0; i < dec.nrows(); ++i) {
        std::vector<FieldElement> cs;
        for (long d = 0; d < dec.size(i); ++d) cs.push_back(F.element(dist(rng)));
        el.set_row(i, UniPoly(F, Var::t, std::move(cs)));
    }
    return el;
}

UniPoly kernel_poly(const Field& F, long len) {
    return UniPoly::monomial(F, Var::t, len, F.one()) - UniPoly::constant(F, Var::t, F.one());
}

} // namespace

TEST_CASE("POT order") {
    CHECK(pot_greater({0, 0}, {1, 5}));  // earlier row dominates
    CHECK(pot_greater({1, 4}, {1, 2}));  // then higher degree
    CHECK_FALSE(pot_greater({1, 2}, {1, 2}));
    CHECK_FALSE(pot_greater({2, 9}, {1, 0}));
}

TEST_CASE("codeword/module correspondence on hermitian q=2") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    FieldElement w = F.generator();

    ModuleElement ones = codeword_to_module(Codeword(8, F.one()), fx.dec);
    CHECK(ones.row(0) == UniPoly::from_codes(F, Var::t, {1, 1, 1}));
    CHECK(ones.row(1) == UniPoly::from_codes(F, Var::t, {1, 1, 1}));
    CHECK(ones.row(2) == UniPoly::from_codes(F, Var::t, {1}));
    CHECK(ones.row(3) == UniPoly::from_codes(F, Var::t, {1}));

    ModuleElement zero = codeword_to_module(Codeword(8, F.zero()), fx.dec);
    CHECK(zero.is_zero());
    CHECK(zero.leading_pos() == -1);

    // ev(x): the first block is x0 (1 + alpha t + alpha^2 t^2) with x0 = 1
    Codeword xv = evaluate_codeword(Monomial{1, 0}, fx.dec);
    ModuleElement xm = codeword_to_module(xv, fx.dec);
    UniPoly expect(F, Var::t, {F.one(), fx.spec.alpha, fx.spec.alpha.pow(2)});
    CHECK(xm.row(0) == expect * fx.dec.point(0, 0).x);
    CHECK(xm.leading_pos() == 0);

    CHECK(w * w - w == F.one());
    CHECK_THROWS_AS(codeword_to_module(Codeword(5, F.one()), fx.dec), std::invalid_argument);
}

TEST_CASE("module to codeword round trips") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    std::mt19937 rng(321);
    std::uniform_int_distribution<uint32_t> dist(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Codeword cw;
        for (int i = 0; i < 8; ++i) cw.push_back(F.element(dist(rng)));
        CHECK(module_to_codeword(codeword_to_module(cw, fx.dec), fx.dec) == cw);
    }

    // t^3 e_1 folds back to e_1 on a length-3 block
    ModuleElement high = ModuleElement::zero(F, 4);
    high.set_row(0, UniPoly::monomial(F, Var::t, 3, F.one()));
    ModuleElement low = ModuleElement::zero(F, 4);
    low.set_row(0, UniPoly::constant(F, Var::t, F.one()));
    CHECK(module_to_codeword(high, fx.dec) == module_to_codeword(low, fx.dec));
}

TEST_CASE("reference basis for hermitian q=2, lambda=4") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 4);

    REQUIRE(gb.nrows() == 4);
    CHECK(gb.reduced());
    CHECK(gb.leading_degree(0) == 0);
    CHECK(gb.leading_degree(1) == 2);
    CHECK(gb.leading_degree(2) == 1);
    CHECK(gb.leading_degree(3) == 1);

    // worked out by hand over GF(4): the unique reduced basis
    CHECK(gb.element(0).row(0) == UniPoly::from_codes(F, Var::t, {1}));
    CHECK(gb.element(0).row(1) == UniPoly::from_codes(F, Var::t, {1}));
    CHECK(gb.element(0).row(2) == UniPoly::from_codes(F, Var::t, {1}));
    CHECK(gb.element(0).row(3) == UniPoly::from_codes(F, Var::t, {1}));
    CHECK(gb.element(1).row(1) == UniPoly::from_codes(F, Var::t, {1, 1, 1}));
    CHECK(gb.element(1).row(2) == UniPoly::from_codes(F, Var::t, {2})); // w
    CHECK(gb.element(1).row(3) == UniPoly::from_codes(F, Var::t, {3})); // w^2
    CHECK(gb.element(2).row(2) == UniPoly::from_codes(F, Var::t, {1, 1}));
    CHECK(gb.element(2).row(3).is_zero());
    CHECK(gb.element(3).row(3) == UniPoly::from_codes(F, Var::t, {1, 1}));

    // dimension bookkeeping: sum of (|O_i| - d_i) = k
    long k = 0;
    for (int i = 0; i < 4; ++i) k += fx.dec.size(i) - gb.leading_degree(i);
    CHECK(k == 4);
}

TEST_CASE("leading polynomials divide t^|O_i| - 1") {
    for (Fixture fx : {Fixture(preset_hermitian(2)), Fixture(preset_hermitian(3)),
                       Fixture(preset_quotient_hermitian(5, 3))}) {
        const Field& F = fx.spec.field;
        for (long lambda : {0L, 2L, 5L, (long)fx.dec.n - 1}) {
            GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, lambda);
            for (int i = 0; i < gb.nrows(); ++i)
                CHECK(divides_exactly(gb.leading_poly(i), kernel_poly(F, fx.dec.size(i))));
        }
    }
}

TEST_CASE("division algorithm") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 4);

    // dividing a basis element by the basis
    DivisionResult res = divide(gb.element(0), gb);
    CHECK(res.remainder.is_zero());
    CHECK(res.quotients[0] == UniPoly::constant(F, Var::t, F.one()));
    for (int i = 1; i < 4; ++i) CHECK(res.quotients[(size_t)i].is_zero());

    // an element already below every leading degree is its own remainder
    ModuleElement reduced = ModuleElement::zero(F, 4);
    reduced.set_row(1, UniPoly::from_codes(F, Var::t, {0, 3}));
    DivisionResult res2 = divide(reduced, gb);
    CHECK(res2.remainder == reduced);
    for (const auto& q : res2.quotients) CHECK(q.is_zero());

    // exactness replay on random elements
    std::mt19937 rng(777);
    FieldElement neg1 = -F.one();
    for (int trial = 0; trial < 100; ++trial) {
        ModuleElement f = random_element(F, fx.dec, rng);
        DivisionResult r = divide(f, gb);
        ModuleElement recombined = r.remainder;
        for (int i = 0; i < 4; ++i)
            recombined.sub_scaled(gb.element(i), r.quotients[(size_t)i] * neg1);
        CHECK(recombined == f);
        // remainder degrees sit below the leading degrees
        for (int i = 0; i < 4; ++i)
            CHECK(r.remainder.row(i).degree() < gb.leading_degree(i));
    }
}

TEST_CASE("remainder is independent of the listed order") {
    Fixture fx(preset_hermitian(3));
    const Field& F = fx.spec.field;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 7);
    std::mt19937 rng(31);
    std::vector<ModuleElement> shuffled = gb.elements();
    for (int trial = 0; trial < 20; ++trial) {
        ModuleElement f = random_element(F, fx.dec, rng);
        ModuleElement r1 = divide(f, gb).remainder;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ModuleElement r2 = divide(f, shuffled).remainder;
        CHECK(r1 == r2);
        CHECK(divide(f, gb).remainder == r1); // repeatable
    }
}

TEST_CASE("membership soundness") {
    Fixture fx(preset_hermitian(3));
    const Field& F = fx.spec.field;
    long lambda = 7;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, lambda);
    GenMatrix mat = generator_matrix(fx.spec, fx.dec, lambda);

    for (const auto& row : mat.rows)
        CHECK(reduces_to_zero(codeword_to_module(row, fx.dec), gb));

    // kernel generators always belong to the module
    for (int i = 0; i < fx.dec.nrows(); ++i) {
        ModuleElement q = ModuleElement::zero(F, fx.dec.nrows());
        q.set_row(i, kernel_poly(F, fx.dec.size(i)));
        CHECK(reduces_to_zero(q, gb));
    }

    // a vector outside the row space must not reduce to zero
    std::mt19937 rng(555);
    std::uniform_int_distribution<uint32_t> dist(0, F.order() - 1);
    int found = 0;
    while (found < 10) {
        Codeword cw;
        for (long i = 0; i < fx.dec.n; ++i) cw.push_back(F.element(dist(rng)));
        if (in_row_space(mat.rows, cw)) continue;
        ++found;
        CHECK_FALSE(reduces_to_zero(codeword_to_module(cw, fx.dec), gb));
    }
}

TEST_CASE("nonstandard monomial count equals the rank for lambda sweeps") {
    for (Fixture fx : {Fixture(preset_hermitian(2)), Fixture(preset_hermitian(3))}) {
        for (long lambda = 0; lambda < fx.dec.n; ++lambda) {
            GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, lambda);
            long nonstd = 0;
            for (int i = 0; i < gb.nrows(); ++i) nonstd += fx.dec.size(i) - gb.leading_degree(i);
            CHECK(nonstd == code_dim(generator_matrix(fx.spec, fx.dec, lambda)));
        }
    }
}

TEST_CASE("lambda = 0 leaves a single nonstandard monomial") {
    Fixture fx(preset_hermitian(2));
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 0);
    long nonstd = 0;
    for (int i = 0; i < gb.nrows(); ++i) nonstd += fx.dec.size(i) - gb.leading_degree(i);
    CHECK(nonstd == 1);
    CHECK_THROWS_AS(oracle_gb(fx.spec, fx.dec, fx.dec.n), std::invalid_argument);
}
