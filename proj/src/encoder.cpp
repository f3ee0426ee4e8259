#include "agc/encoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace agc {

InfoPositions info_positions(const GroebnerBasis& gb, const OrbitDecomposition& decomp) {
    InfoPositions out;
    for (int j = 0; j < gb.nrows(); ++j)
        for (long l = gb.leading_degree(j); l < decomp.size(j); ++l) out.push_back({j, l});
    std::sort(out.begin(), out.end(), pot_greater);
    return out;
}

long position_index(const ModMonomial& mono, const OrbitDecomposition& decomp) {
    return decomp.offset(mono.row) + mono.deg;
}

Codeword encode(const std::vector<FieldElement>& message, const GroebnerBasis& gb,
                const OrbitDecomposition& decomp) {
    InfoPositions positions = info_positions(gb, decomp);
    if (message.size() != positions.size())
        throw std::invalid_argument("encode: message length must be " +
                                    std::to_string(positions.size()));
    const Field& F = decomp.orbits[0].points[0].x.field();

    ModuleElement f = ModuleElement::zero(F, decomp.nrows());
    for (size_t l = 0; l < message.size(); ++l) {
        const ModMonomial& m = positions[l];
        f.set_row(m.row, f.row(m.row) + UniPoly::monomial(F, Var::t, m.deg, message[l]));
    }

    ModuleElement h = f - divide(f, gb).remainder;
    // both f and the remainder are canonical, so h needs no reduction
    for (int i = 0; i < decomp.nrows(); ++i)
        if (h.row(i).degree() >= decomp.size(i))
            throw std::runtime_error("encode: non-canonical encoding element");
    return module_to_codeword(h, decomp);
}

std::vector<FieldElement> extract_message(const Codeword& cw, const InfoPositions& positions,
                                          const OrbitDecomposition& decomp) {
    if ((long)cw.size() != decomp.n) throw std::invalid_argument("extract_message: length mismatch");
    ModuleElement me = codeword_to_module(cw, decomp);
    std::vector<FieldElement> out;
    out.reserve(positions.size());
    for (const auto& m : positions) out.push_back(me.row(m.row).coeff(m.deg));
    return out;
}

GenMatrixEncoder::GenMatrixEncoder(const GenMatrix& mat, const InfoPositions& positions,
                                   const OrbitDecomposition& decomp) {
    if ((long)positions.size() != mat.k())
        throw std::invalid_argument("genmatrix encoder: position count must equal k");
    rows_ = mat.rows;
    for (const auto& m : positions) columns_.push_back(position_index(m, decomp));

    // reduced echelon over the information-position columns
    for (size_t l = 0; l < columns_.size(); ++l) {
        size_t col = (size_t)columns_[l];
        size_t pivot = l;
        while (pivot < rows_.size() && rows_[pivot][col].is_zero()) ++pivot;
        if (pivot == rows_.size())
            throw std::runtime_error("genmatrix encoder: information-position columns are singular");
        std::swap(rows_[l], rows_[pivot]);
        FieldElement inv = rows_[l][col].inv();
        for (auto& c : rows_[l]) c = c * inv;
        for (size_t rr = 0; rr < rows_.size(); ++rr) {
            if (rr == l || rows_[rr][col].is_zero()) continue;
            FieldElement factor = rows_[rr][col];
            for (size_t cc = 0; cc < rows_[rr].size(); ++cc)
                rows_[rr][cc] = rows_[rr][cc] - factor * rows_[l][cc];
        }
    }
}

Codeword GenMatrixEncoder::encode(const std::vector<FieldElement>& message) const {
    if (message.size() != rows_.size())
        throw std::invalid_argument("genmatrix encoder: message length mismatch");
    if (rows_.empty()) return {};
    Codeword out(rows_[0].size(), rows_[0][0].field().zero());
    for (size_t l = 0; l < message.size(); ++l) {
        if (message[l].is_zero()) continue;
        for (size_t c = 0; c < out.size(); ++c) out[c] = out[c] + message[l] * rows_[l][c];
    }
    return out;
}

StorageReport storage_report(const GroebnerBasis& gb, const GenMatrix& mat) {
    StorageReport rep;
    rep.k = mat.k();
    rep.n = mat.n();
    rep.basis_rows = gb.nrows();
    for (const auto& elem : gb.elements())
        for (int i = 0; i < elem.nrows(); ++i)
            if (!elem.row(i).is_zero()) rep.gb_coeffs += elem.row(i).degree() + 1;
    rep.genmat_coeffs = rep.k * rep.n;
    rep.genmat_systematic_coeffs = rep.k * (rep.n - rep.k);
    rep.asymptotic_gb = rep.basis_rows * (rep.n - rep.k);
    rep.asymptotic_genmat = rep.k * (rep.n - rep.k);
    return rep;
}

} // namespace agc
