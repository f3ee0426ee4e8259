#ifndef AGC_DIAGRAM_HPP
#define AGC_DIAGRAM_HPP

#include <string>
#include <vector>

#include "agc/potmod.hpp"

namespace agc {

/// One diagram row: the boxes are the roots of t^|O_i| - 1 in ascending
/// generator-exponent order; marked boxes are the roots of the basis' leading
/// polynomial for that row.
struct DiagramRow {
    std::vector<FieldElement> boxes;
    std::vector<long> box_exponents; ///< generator exponent per box
    std::vector<char> marked;
    std::string provenance; ///< which route filled the row

    long box_count() const { return (long)boxes.size(); }
    long marked_count() const;
    long empty_count() const { return box_count() - marked_count(); }
    bool full() const { return marked_count() == box_count(); }
    bool empty_row() const { return marked_count() == 0; }
    std::string pattern() const; ///< e.g. ".XX"
};

struct RootDiagram {
    long lambda = 0;
    std::vector<DiagramRow> rows;
    long empty_boxes() const;
};

long empty_boxes(const RootDiagram& d);
bool same_marks(const RootDiagram& a, const RootDiagram& b);

/// Diagram read off a triangular basis: row i marks the roots of the leading
/// polynomial of element i.
RootDiagram diagram_from_gb(const GroebnerBasis& gb, const OrbitDecomposition& decomp,
                            long lambda, const std::string& provenance);

RootDiagram diagram_oracle(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda);

/// Closed-form construction for the long-orbit rows:
///   - lambda >= rho2*a + rho3*b + i*rho1*b  -> row i empty,
///   - lambda >= i*rho1*b                    -> row i partial, with unmarked
///     set { alpha^-(beta + t*gamma) : beta < b, gamma < rho1,
///           i*rho1*b + beta*a + gamma*b <= lambda }  (rows 0-based),
///   - otherwise the row, like every short-orbit row, is resolved by the
///     reference basis.
/// The closed-form rows are cross-checked against the reference rows and any
/// mismatch throws; so does a curve with ord(alpha) != rho1*b, where the
/// unmarked-set formula cannot tile the row.
RootDiagram diagram_fast(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda);

} // namespace agc

#endif
