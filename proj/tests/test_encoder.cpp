#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agc/encoder.hpp"
#include "agc/interp.hpp"

using namespace agc;

namespace {

struct Fixture {
    CurveSpec spec;
    OrbitDecomposition dec;
    Fixture(CurveSpec s) : spec(std::move(s)), dec(decompose(spec, enumerate_points(spec))) {}
};

std::vector<FieldElement> random_message(const Field& F, long k, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, F.order() - 1);
    std::vector<FieldElement> w;
    for (long i = 0; i < k; ++i) w.push_back(F.element(dist(rng)));
    return w;
}

} // namespace

TEST_CASE("information positions for hermitian q=2, lambda=4") {
    Fixture fx(preset_hermitian(2));
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 4);
    InfoPositions pos = info_positions(gb, fx.dec);

    REQUIRE(pos.size() == 4);
    CHECK(pos[0] == ModMonomial{0, 2}); // t^2 e_1
    CHECK(pos[1] == ModMonomial{0, 1}); // t e_1
    CHECK(pos[2] == ModMonomial{0, 0}); // e_1
    CHECK(pos[3] == ModMonomial{1, 2}); // t^2 e_2

    CHECK(position_index(pos[0], fx.dec) == 2);
    CHECK(position_index(pos[3], fx.dec) == 5);

    RootDiagram d = diagram_oracle(fx.spec, fx.dec, 4);
    CHECK((long)pos.size() == d.empty_boxes());
}

TEST_CASE("systematic encoding on hermitian q=2, lambda=4, exhaustively") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 4);
    InfoPositions pos = info_positions(gb, fx.dec);
    GenMatrix mat = generator_matrix(fx.spec, fx.dec, 4);
    GenMatrixEncoder baseline(mat, pos, fx.dec);

    CHECK(encode(std::vector<FieldElement>(4, F.zero()), gb, fx.dec) == Codeword(8, F.zero()));

    std::vector<Codeword> unit_words;
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b)
            for (uint32_t c = 0; c < 4; ++c)
                for (uint32_t e = 0; e < 4; ++e) {
                    std::vector<FieldElement> w{F.element(a), F.element(b), F.element(c),
                                                F.element(e)};
                    Codeword cw = encode(w, gb, fx.dec);
                    CHECK(extract_message(cw, pos, fx.dec) == w);
                    CHECK(baseline.encode(w) == cw);
                    CHECK(in_row_space(mat.rows, cw));
                    bool is_unit = (a == 1 && !b && !c && !e) || (!a && b == 1 && !c && !e) ||
                                   (!a && !b && c == 1 && !e) || (!a && !b && !c && e == 1);
                    if (is_unit) unit_words.push_back(cw);
                }
    CHECK(rank_of(unit_words) == 4);
}

TEST_CASE("encoding properties on larger presets") {
    for (Fixture fx : {Fixture(preset_hermitian(3)), Fixture(preset_quotient_hermitian(5, 3))}) {
        const Field& F = fx.spec.field;
        long lambda = 2 * fx.spec.genus + 3;
        GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, lambda);
        InfoPositions pos = info_positions(gb, fx.dec);
        GenMatrix mat = generator_matrix(fx.spec, fx.dec, lambda);
        GenMatrixEncoder baseline(mat, pos, fx.dec);
        long k = (long)pos.size();
        CHECK(k == code_dim(mat));

        std::mt19937 rng(808);
        for (int trial = 0; trial < 50; ++trial) {
            auto w1 = random_message(F, k, rng);
            auto w2 = random_message(F, k, rng);
            Codeword c1 = encode(w1, gb, fx.dec);
            CHECK(extract_message(c1, pos, fx.dec) == w1);
            CHECK(baseline.encode(w1) == c1);
            CHECK(in_row_space(mat.rows, c1));

            // linearity
            Codeword c2 = encode(w2, gb, fx.dec);
            std::vector<FieldElement> sum;
            for (long i = 0; i < k; ++i) sum.push_back(w1[(size_t)i] + w2[(size_t)i]);
            Codeword csum = encode(sum, gb, fx.dec);
            for (long i = 0; i < fx.dec.n; ++i)
                CHECK(csum[(size_t)i] == c1[(size_t)i] + c2[(size_t)i]);

            // the rotated codeword stays in the code
            CHECK(in_row_space(mat.rows, rotate_blocks(c1, fx.dec)));
        }
    }
}

TEST_CASE("encoding through either basis gives the same codeword") {
    Fixture fx(preset_hermitian(3));
    const Field& F = fx.spec.field;
    long lambda = 9;
    GroebnerBasis oracle = oracle_gb(fx.spec, fx.dec, lambda);
    auto interp = build_interpolants(fx.dec);
    GroebnerBasis fast =
        interpolation_gb(fx.spec, fx.dec, diagram_fast(fx.spec, fx.dec, lambda), interp);
    InfoPositions pos = info_positions(oracle, fx.dec);
    CHECK(pos == info_positions(fast, fx.dec));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto w = random_message(F, (long)pos.size(), rng);
        CHECK(encode(w, oracle, fx.dec) == encode(w, fast, fx.dec));
    }
}

TEST_CASE("extract_message is a plain projection") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, 4);
    InfoPositions pos = info_positions(gb, fx.dec);

    Codeword arbitrary;
    for (long i = 0; i < 8; ++i) arbitrary.push_back(F.element((uint32_t)(i % 4)));
    auto w = extract_message(arbitrary, pos, fx.dec);
    REQUIRE(w.size() == 4);
    for (size_t l = 0; l < pos.size(); ++l)
        CHECK(w[l] == arbitrary[(size_t)position_index(pos[l], fx.dec)]);

    CHECK_THROWS_AS(encode({F.one()}, gb, fx.dec), std::invalid_argument);
}

TEST_CASE("degenerate all-full basis encodes the zero code") {
    Fixture fx(preset_hermitian(2));
    const Field& F = fx.spec.field;
    std::vector<ModuleElement> kernels;
    for (int i = 0; i < fx.dec.nrows(); ++i) {
        ModuleElement q = ModuleElement::zero(F, fx.dec.nrows());
        q.set_row(i, UniPoly::monomial(F, Var::t, fx.dec.size(i), F.one()) -
                         UniPoly::constant(F, Var::t, F.one()));
        kernels.push_back(std::move(q));
    }
    GroebnerBasis allfull(std::move(kernels), true, {});
    InfoPositions pos = info_positions(allfull, fx.dec);
    CHECK(pos.empty());
    CHECK(encode({}, allfull, fx.dec) == Codeword(8, F.zero()));
}

TEST_CASE("storage comparison") {
    Fixture fx(preset_hermitian(3));
    long lambda = 10;
    GroebnerBasis gb = oracle_gb(fx.spec, fx.dec, lambda);
    GenMatrix mat = generator_matrix(fx.spec, fx.dec, lambda);
    StorageReport rep = storage_report(gb, mat);
    CHECK(rep.k == code_dim(mat));
    CHECK(rep.n == 27);
    CHECK(rep.genmat_coeffs == rep.k * rep.n);
    CHECK(rep.genmat_systematic_coeffs == rep.k * (rep.n - rep.k));
    CHECK(rep.gb_coeffs < rep.genmat_coeffs);
    CHECK(rep.basis_rows == 5);
    CHECK(rep.asymptotic_gb == 5 * (rep.n - rep.k));
    CHECK(rep.asymptotic_gb < rep.asymptotic_genmat); // rows < k in this regime

    // the ratio improves as the dimension grows with n fixed
    auto ratio_at = [&](long lam) {
        GroebnerBasis g = oracle_gb(fx.spec, fx.dec, lam);
        GenMatrix m = generator_matrix(fx.spec, fx.dec, lam);
        StorageReport r = storage_report(g, m);
        return (double)r.gb_coeffs / (double)r.genmat_coeffs;
    };
    CHECK(ratio_at(24) < ratio_at(5));
}
