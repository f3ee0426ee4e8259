#ifndef AGC_CURVE_HPP
#define AGC_CURVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "agc/poly.hpp"

namespace agc {

struct AffinePoint {
    FieldElement x;
    FieldElement y;
};

bool operator==(const AffinePoint& a, const AffinePoint& b);
bool point_code_less(const AffinePoint& a, const AffinePoint& b); ///< by (x code, y code)

/// Plane curve f(y) = g(x) carrying the distinguished place at infinity only
/// through its data: the pole orders a = deg f (of x) and b = deg g (of y),
/// the Weierstrass semigroup <a,b>, and the diagonal automorphism
/// sigma(x, y) = (alpha x, alpha^t_exp y).
struct CurveSpec {
    Field field;
    UniPoly f; ///< in y, degree a
    UniPoly g; ///< in x, degree b
    long a = 0;
    long b = 0;
    FieldElement alpha;
    long t_exp = 0;
    long genus = 0; ///< (a-1)(b-1)/2, the gap count of <a,b>
    std::optional<std::array<long, 3>> rho_hint; ///< published (rho1,rho2,rho3) for presets
    std::string name = "custom";
};

/// Assembles a CurveSpec; derives a, b and the genus. Throws on structurally
/// broken input (wrong variable tags, zero alpha, mixed fields).
CurveSpec make_curve(Field field, UniPoly f_in_y, UniPoly g_in_x, FieldElement alpha, long t_exp,
                     std::string name = "custom",
                     std::optional<std::array<long, 3>> rho_hint = std::nullopt);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool ok() const;
    std::string summary() const;
};

/// Verifies the curve-class invariants: gcd(a,b) = 1, sigma permutes the
/// affine point set (checked pointwise), sigma fixes the x = 0 and y = 0
/// point sets, and the genus matches the gap count of <a,b>. The Weierstrass
/// semigroup hypothesis H(P) = <a,b> is recorded as assumed, not proven.
/// A violated a < b is recorded as a note, not an error; only gcd(a,b) = 1
/// is load-bearing downstream.
ValidationReport validate(const CurveSpec& spec);

bool on_curve(const CurveSpec& spec, const AffinePoint& pt);
AffinePoint apply_sigma(const CurveSpec& spec, const AffinePoint& pt);

/// All affine rational points, ordered by (x code, y code).
std::vector<AffinePoint> enumerate_points(const CurveSpec& spec);

/// #{ n in <a,b> : n <= lambda }, counted through the unique representations
/// n = beta*a + gamma*b with 0 <= beta <= b-1. Requires gcd(a,b) = 1.
long semigroup_dim(long a, long b, long lambda);

/// Number of gaps of <a,b>; equals the genus (a-1)(b-1)/2.
long count_gaps(long a, long b);

/// The curve y^q + y = x^(q^r+1) over GF(q^(2r)); r = 1 is the Hermitian curve.
CurveSpec preset_x_q2r(long q, long r);
CurveSpec preset_hermitian(long q);

/// The curve y^q + y = x^m over GF(q^2) with m > 2 a divisor of q+1. The
/// automorphism is normalized to the diagonal form sigma(x) = alpha' x,
/// sigma(y) = alpha'^m y with alpha' of order m(q-1).
CurveSpec preset_quotient_hermitian(long q, long m);

} // namespace agc

#endif
