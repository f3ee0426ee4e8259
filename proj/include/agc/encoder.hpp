#ifndef AGC_ENCODER_HPP
#define AGC_ENCODER_HPP

#include <vector>

#include "agc/potmod.hpp"

namespace agc {

/// The k nonstandard monomials t^l e_j (leading_degree(j) <= l < |O_j|), in
/// decreasing POT order. Message symbol l lands verbatim at the codeword
/// coordinate of monomial l.
using InfoPositions = std::vector<ModMonomial>;

InfoPositions info_positions(const GroebnerBasis& gb, const OrbitDecomposition& decomp);

/// Codeword coordinate of a module monomial: block offset plus degree.
long position_index(const ModMonomial& mono, const OrbitDecomposition& decomp);

/// Systematic encoding through the basis: f = sum w_l m_l, subtract the
/// division remainder, and read the canonical representative off as a
/// codeword. The remainder holds only standard monomials, so the message
/// symbols survive at the information positions.
Codeword encode(const std::vector<FieldElement>& message, const GroebnerBasis& gb,
                const OrbitDecomposition& decomp);

/// Reads the coefficients at the information positions. A projection: inputs
/// are not checked for code membership.
std::vector<FieldElement> extract_message(const Codeword& cw, const InfoPositions& positions,
                                          const OrbitDecomposition& decomp);

/// Baseline encoder: the generator matrix brought to reduced echelon form over
/// the information-position columns. Same code, same positions, so it must
/// agree with the basis encoder symbol for symbol.
class GenMatrixEncoder {
  public:
    GenMatrixEncoder(const GenMatrix& mat, const InfoPositions& positions,
                     const OrbitDecomposition& decomp);

    Codeword encode(const std::vector<FieldElement>& message) const;
    const std::vector<Codeword>& systematic_rows() const { return rows_; }

  private:
    std::vector<Codeword> rows_; // row l has a 1 at position l, 0 at the others
    std::vector<long> columns_;
};

/// Stored-coefficient comparison between the basis and the generator matrix,
/// with the asymptotic tallies rows*(n-k) versus k*(n-k) alongside the raw
/// counts.
struct StorageReport {
    long gb_coeffs = 0;     ///< dense slots across the basis rows (degree+1 each)
    long genmat_coeffs = 0; ///< k*n
    long genmat_systematic_coeffs = 0; ///< k*(n-k)
    long asymptotic_gb = 0;            ///< basis_rows*(n-k)
    long asymptotic_genmat = 0;        ///< k*(n-k)
    long k = 0;
    long n = 0;
    long basis_rows = 0;
};

StorageReport storage_report(const GroebnerBasis& gb, const GenMatrix& mat);

} // namespace agc

#endif
