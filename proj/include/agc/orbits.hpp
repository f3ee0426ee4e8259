#ifndef AGC_ORBITS_HPP
#define AGC_ORBITS_HPP

#include <array>
#include <map>
#include <vector>

#include "agc/curve.hpp"

namespace agc {

enum class OrbitKind { Long, Short };

/// A sigma-orbit. points[j] = sigma^j(points[0]); the base point points[0] is
/// the orbit member with the smallest (x code, y code). Long orbits contain
/// only points with both coordinates nonzero and always have length ord(alpha);
/// an orbit touching x = 0 or y = 0 is short.
struct Orbit {
    int index = 0; // position within the decomposition
    OrbitKind kind = OrbitKind::Long;
    std::vector<AffinePoint> points;
    std::vector<FieldElement> y_values; ///< distinct y's, in first-appearance order
    std::vector<FieldElement> x_values; ///< distinct x's, in first-appearance order
    long size() const { return (long)points.size(); }
};

/// Canonical partition of the affine points into sigma-orbits: long orbits
/// first, each group sorted by base point. Fixes the codeword coordinate
/// order (orbit-major, sigma-power-minor) used by every downstream module.
struct OrbitDecomposition {
    std::vector<Orbit> orbits;
    int r = 0; ///< number of long orbits
    int s = 0; ///< number of short orbits
    long n = 0;
    long nu = 0; ///< ord(alpha) = ord(sigma)
    long rho1 = 0, rho2 = 0, rho3 = 0;
    std::vector<long> offsets; ///< codeword block start per orbit

    int nrows() const { return r + s; }
    long size(int i) const { return orbits[(size_t)i].size(); }
    long offset(int i) const { return offsets[(size_t)i]; }
    const AffinePoint& point(int i, long j) const { return orbits[(size_t)i].points[(size_t)j]; }

    /// (orbit, power) for a point, or (-1,-1) when absent.
    std::pair<int, long> locate(const AffinePoint& pt) const;

    std::map<std::pair<uint32_t, uint32_t>, std::pair<int, long>> locator;
};

/// Partitions the enumerated points under iterated sigma. Throws if an orbit
/// walks off the point set (sigma not an automorphism; unreachable after
/// validate) or a long orbit misbehaves.
OrbitDecomposition decompose(const CurveSpec& spec, const std::vector<AffinePoint>& points);

/// rho1 = number of distinct y-values in a long orbit (uniform across them),
/// rho2 = nu/rho1 - 1, rho3 = rho1 - 1. With the interpolant constructions
/// these give pole orders rho1*b for the orbit annihilators and
/// rho2*a + rho3*b for the point selectors. Cross-checked against the preset
/// hint when one is attached; the hint comparison treats (rho2, rho3) as an
/// unordered pair.
std::array<long, 3> derive_rho(const OrbitDecomposition& decomp, const CurveSpec& spec);

} // namespace agc

#endif
