#ifndef AGC_RRSPACE_HPP
#define AGC_RRSPACE_HPP

#include <concepts>
#include <vector>

#include "agc/orbits.hpp"

namespace agc {

/// x^beta y^gamma with pole order beta*a + gamma*b at the place at infinity.
struct Monomial {
    long beta = 0;
    long gamma = 0;
    long pole_order(long a, long b) const { return beta * a + gamma * b; }
};

bool operator==(const Monomial& lhs, const Monomial& rhs);

/// Monomial basis of L(lambda P): one monomial per semigroup element <= lambda,
/// exponents taken in the canonical residue window (gamma < a when a <= b,
/// beta < b otherwise), sorted by pole order ascending. The curve relation is
/// honored by never generating exponents outside the window.
std::vector<Monomial> monomial_basis(const CurveSpec& spec, long lambda);

using Codeword = std::vector<FieldElement>;

FieldElement eval_monomial(const Monomial& mono, const AffinePoint& pt);

/// Length-n evaluation vector in the canonical orbit-major order.
template <typename F>
    requires std::invocable<F&, const AffinePoint&>
Codeword evaluate_codeword(F&& func, const OrbitDecomposition& decomp) {
    Codeword cw;
    cw.reserve((size_t)decomp.n);
    for (const auto& orb : decomp.orbits)
        for (const auto& pt : orb.points) cw.push_back(func(pt));
    return cw;
}

Codeword evaluate_codeword(const Monomial& mono, const OrbitDecomposition& decomp);
Codeword evaluate_codeword(const ProductForm& form, const OrbitDecomposition& decomp);

/// k x n matrix whose row i evaluates the i-th basis monomial at the n points.
struct GenMatrix {
    std::vector<Monomial> basis;
    std::vector<Codeword> rows;
    long k() const { return (long)rows.size(); }
    long n() const { return rows.empty() ? 0 : (long)rows[0].size(); }
};

/// Requires lambda < n: evaluation on D is then injective on L(lambda P).
GenMatrix generator_matrix(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda);

/// Rank by row echelon over the field.
long rank_of(std::vector<Codeword> rows);
long code_dim(const GenMatrix& mat);

bool in_row_space(const std::vector<Codeword>& rows, const Codeword& v);

/// One sigma step on codeword coordinates: position (i,j) receives the value
/// from (i, j+1 mod |O_i|).
Codeword rotate_blocks(const Codeword& cw, const OrbitDecomposition& decomp);

} // namespace agc

#endif
