#include "agc/rrspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace agc {

bool operator==(const Monomial& lhs, const Monomial& rhs) {
    return lhs.beta == rhs.beta && lhs.gamma == rhs.gamma;
}

std::vector<Monomial> monomial_basis(const CurveSpec& spec, long lambda) {
    if (lambda < 0) throw std::invalid_argument("monomial_basis: lambda must be >= 0");
    long a = spec.a, b = spec.b;
    std::vector<Monomial> basis;
    if (a <= b) {
        for (long gamma = 0; gamma < a && gamma * b <= lambda; ++gamma)
            for (long beta = 0; beta * a + gamma * b <= lambda; ++beta)
                basis.push_back({beta, gamma});
    } else {
        for (long beta = 0; beta < b && beta * a <= lambda; ++beta)
            for (long gamma = 0; beta * a + gamma * b <= lambda; ++gamma)
                basis.push_back({beta, gamma});
    }
    std::sort(basis.begin(), basis.end(), [&](const Monomial& u, const Monomial& v) {
        return u.pole_order(a, b) < v.pole_order(a, b);
    });
    for (size_t i = 1; i < basis.size(); ++i)
        if (basis[i].pole_order(a, b) == basis[i - 1].pole_order(a, b))
            throw std::runtime_error("monomial_basis: duplicate pole order");
    return basis;
}

FieldElement eval_monomial(const Monomial& mono, const AffinePoint& pt) {
    return pt.x.pow(mono.beta) * pt.y.pow(mono.gamma);
}

Codeword evaluate_codeword(const Monomial& mono, const OrbitDecomposition& decomp) {
    return evaluate_codeword([&](const AffinePoint& pt) { return eval_monomial(mono, pt); },
                             decomp);
}

Codeword evaluate_codeword(const ProductForm& form, const OrbitDecomposition& decomp) {
    return evaluate_codeword([&](const AffinePoint& pt) { return form.eval(pt.x, pt.y); }, decomp);
}

GenMatrix generator_matrix(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda) {
    if (lambda >= decomp.n)
        throw std::invalid_argument("generator_matrix: lambda must be < n");
    GenMatrix mat;
    mat.basis = monomial_basis(spec, lambda);
    for (const auto& mono : mat.basis) mat.rows.push_back(evaluate_codeword(mono, decomp));
    return mat;
}

long rank_of(std::vector<Codeword> rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        FieldElement inv = rows[rank][col].inv();
        for (size_t rr = rank + 1; rr < rows.size(); ++rr) {
            if (rows[rr][col].is_zero()) continue;
            FieldElement factor = rows[rr][col] * inv;
            for (size_t cc = col; cc < n; ++cc)
                rows[rr][cc] = rows[rr][cc] - factor * rows[rank][cc];
        }
        ++rank;
    }
    return (long)rank;
}

long code_dim(const GenMatrix& mat) { return rank_of(mat.rows); }

bool in_row_space(const std::vector<Codeword>& rows, const Codeword& v) {
    long base = rank_of(rows);
    std::vector<Codeword> extended(rows);
    extended.push_back(v);
    return rank_of(extended) == base;
}

Codeword rotate_blocks(const Codeword& cw, const OrbitDecomposition& decomp) {
    if ((long)cw.size() != decomp.n)
        throw std::invalid_argument("rotate_blocks: codeword length mismatch");
    Codeword out(cw.size());
    for (int i = 0; i < decomp.nrows(); ++i) {
        long off = decomp.offset(i), len = decomp.size(i);
        for (long j = 0; j < len; ++j) out[(size_t)(off + j)] = cw[(size_t)(off + (j + 1) % len)];
    }
    return out;
}

} // namespace agc
