#ifndef AGC_INTERP_HPP
#define AGC_INTERP_HPP

#include <vector>

#include "agc/diagram.hpp"

namespace agc {

/// Interpolating data for one long orbit: the annihilator M vanishes exactly
/// on the orbit and is a nonzero constant on every other orbit; selector j
/// vanishes on the orbit except at point j, where it is nonzero.
struct OrbitInterpolants {
    int orbit = 0;
    UniPoly annihilator;                    ///< monic in y, degree rho1
    std::vector<ProductForm> selectors;     ///< one per orbit point
    std::vector<FieldElement> selector_at_own; ///< selector j at point j
};

/// M_i = prod over the orbit's distinct y-values of (y - y'); verified to be
/// constant and nonzero on every other orbit. Throws when the curve is
/// outside the supported class.
UniPoly build_annihilator(const OrbitDecomposition& decomp, int i);

/// Selector for point j of long orbit i: the product of (y - y') over the
/// other distinct y-values and (x - x') over the other orbit points sharing
/// point j's y-value. rho3 factors in y, rho2 in x, hence pole order
/// rho2*a + rho3*b. Verified by evaluation over the whole orbit.
ProductForm build_selector(const OrbitDecomposition& decomp, int i, long j);

std::vector<OrbitInterpolants> build_interpolants(const OrbitDecomposition& decomp);

/// Generator for one non-full row: evaluates to the codeword whose module
/// image has leading position `row` and leading polynomial exactly
/// p(t) = prod (t - marked root).
struct RowFunction {
    int row = 0;
    std::vector<UniPoly> prefix; ///< annihilators of the preceding orbits
    FieldElement scale;          ///< 1 / (prefix value on the row's orbit)
    std::vector<std::pair<FieldElement, ProductForm>> terms; ///< (a_j / selector_at_own, selector)
    FieldElement eval(const AffinePoint& pt) const;
};

/// Assembles the row function from the marked roots of a non-full row; throws
/// if the row is full (the kernel element covers that case).
RowFunction build_row_function(const OrbitDecomposition& decomp,
                               const std::vector<OrbitInterpolants>& interp, int row,
                               const std::vector<FieldElement>& marked_roots);

/// Row-function evaluation with a membership check on the point.
FieldElement evaluate_row_function(const RowFunction& rf, const OrbitDecomposition& decomp,
                                   const AffinePoint& pt);

/// Evaluation-only construction of a (non-reduced) POT Groebner basis from the
/// root diagram: full rows emit the kernel element (t^|O_i| - 1) e_i, non-full
/// long rows emit the row function's evaluation vector, and non-full short
/// rows (outside the closed-form machinery) fall back to the reference basis
/// element. Per-row provenance records which route produced each element.
GroebnerBasis interpolation_gb(const CurveSpec& spec, const OrbitDecomposition& decomp,
                               const RootDiagram& diagram,
                               const std::vector<OrbitInterpolants>& interp);

} // namespace agc

#endif
