#include "agc/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agc {

bool operator==(const AffinePoint& a, const AffinePoint& b) {
    return a.x == b.x && a.y == b.y;
}

bool point_code_less(const AffinePoint& a, const AffinePoint& b) {
    if (a.x.code() != b.x.code()) return a.x.code() < b.x.code();
    return a.y.code() < b.y.code();
}

CurveSpec make_curve(Field field, UniPoly f_in_y, UniPoly g_in_x, FieldElement alpha, long t_exp,
                     std::string name, std::optional<std::array<long, 3>> rho_hint) {
    if (f_in_y.var() != Var::y) throw std::invalid_argument("curve: f must be a polynomial in y");
    if (g_in_x.var() != Var::x) throw std::invalid_argument("curve: g must be a polynomial in x");
    if (!f_in_y.field().same(field) || !g_in_x.field().same(field))
        throw std::invalid_argument("curve: f, g must live over the curve field");
    if (f_in_y.degree() < 1 || g_in_x.degree() < 1)
        throw std::invalid_argument("curve: f and g must have degree >= 1");
    if (alpha.is_zero()) throw std::invalid_argument("curve: alpha must be nonzero");
    if (!alpha.field().same(field)) throw std::invalid_argument("curve: alpha from wrong field");
    if (t_exp < 0) throw std::invalid_argument("curve: t_exp must be nonnegative");

    CurveSpec spec;
    spec.field = std::move(field);
    spec.f = std::move(f_in_y);
    spec.g = std::move(g_in_x);
    spec.a = spec.f.degree();
    spec.b = spec.g.degree();
    spec.alpha = std::move(alpha);
    spec.t_exp = t_exp;
    spec.genus = (spec.a - 1) * (spec.b - 1) / 2;
    spec.rho_hint = rho_hint;
    spec.name = std::move(name);
    return spec;
}

bool on_curve(const CurveSpec& spec, const AffinePoint& pt) {
    return spec.f.eval(pt.y) == spec.g.eval(pt.x);
}

AffinePoint apply_sigma(const CurveSpec& spec, const AffinePoint& pt) {
    return {spec.alpha * pt.x, spec.alpha.pow(spec.t_exp) * pt.y};
}

std::vector<AffinePoint> enumerate_points(const CurveSpec& spec) {
    const Field& F = spec.field;
    uint32_t q = F.order();
    std::vector<FieldElement> gx(q), fy(q);
    for (uint32_t c = 0; c < q; ++c) {
        gx[c] = spec.g.eval(F.element(c));
        fy[c] = spec.f.eval(F.element(c));
    }
    std::vector<AffinePoint> pts;
    for (uint32_t xc = 0; xc < q; ++xc)
        for (uint32_t yc = 0; yc < q; ++yc)
            if (fy[yc] == gx[xc]) pts.push_back({F.element(xc), F.element(yc)});
    return pts;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "check " << c.name << ": " << (c.ok ? "ok" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

namespace {

// sufficient symbolic condition for sigma to preserve the curve: a single
// constant c with f(alpha^t y) = c f(y) and g(alpha x) = c g(x)
bool sigma_symbolic_check(const CurveSpec& spec) {
    FieldElement at = spec.alpha.pow(spec.t_exp);
    std::optional<FieldElement> c;
    for (long i = 0; i <= spec.f.degree(); ++i) {
        if (spec.f.coeff(i).is_zero()) continue;
        FieldElement ratio = at.pow(i);
        if (!c) c = ratio;
        else if (*c != ratio) return false;
    }
    for (long i = 0; i <= spec.g.degree(); ++i) {
        if (spec.g.coeff(i).is_zero()) continue;
        FieldElement ratio = spec.alpha.pow(i);
        if (!c) c = ratio;
        else if (*c != ratio) return false;
    }
    return true;
}

} // namespace

ValidationReport validate(const CurveSpec& spec) {
    ValidationReport rep;
    auto add = [&rep](std::string name, bool ok, std::string detail = "") {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        std::ostringstream os;
        os << "a=" << spec.a << " b=" << spec.b;
        add("degrees", spec.a == spec.f.degree() && spec.b == spec.g.degree(), os.str());
    }
    {
        long g = std::gcd(spec.a, spec.b);
        add("gcd(a,b)=1", g == 1, g == 1 ? "" : "gcd is " + std::to_string(g));
    }
    if (spec.a >= spec.b)
        rep.notes.push_back("a >= b: pole order of x is not smaller than pole order of y; "
                            "only gcd(a,b) = 1 is required downstream");

    long nu = element_order(spec.alpha);
    add("alpha order divides q-1", (spec.field.order() - 1) % nu == 0,
        "ord(alpha)=" + std::to_string(nu));

    bool symbolic = sigma_symbolic_check(spec);
    if (!symbolic)
        rep.notes.push_back("symbolic automorphism pre-check inconclusive; relying on the "
                            "pointwise check");

    auto pts = enumerate_points(spec);
    std::set<std::pair<uint32_t, uint32_t>> pset;
    for (const auto& pt : pts) pset.insert({pt.x.code(), pt.y.code()});
    bool closed = true, x0_fixed = true, y0_fixed = true;
    std::set<std::pair<uint32_t, uint32_t>> images;
    for (const auto& pt : pts) {
        AffinePoint im = apply_sigma(spec, pt);
        if (!pset.count({im.x.code(), im.y.code()})) {
            closed = false;
            break;
        }
        images.insert({im.x.code(), im.y.code()});
        if (pt.x.is_zero() && !im.x.is_zero()) x0_fixed = false;
        if (pt.y.is_zero() && !im.y.is_zero()) y0_fixed = false;
    }
    bool bijective = closed && images.size() == pts.size();
    add("sigma permutes the affine points", bijective,
        "n=" + std::to_string(pts.size()));
    add("sigma fixes {x=0}", x0_fixed);
    add("sigma fixes {y=0}", y0_fixed);

    if (std::gcd(spec.a, spec.b) == 1)
        add("genus equals gap count", count_gaps(spec.a, spec.b) == spec.genus,
            "genus=" + std::to_string(spec.genus));

    rep.notes.push_back("H(P) = <" + std::to_string(spec.a) + "," + std::to_string(spec.b) +
                        "> is assumed, not proven here");
    return rep;
}

long semigroup_dim(long a, long b, long lambda) {
    if (std::gcd(a, b) != 1) throw std::invalid_argument("semigroup_dim: gcd(a,b) must be 1");
    if (lambda < 0) return 0;
    long count = 0;
    for (long beta = 0; beta < b && beta * a <= lambda; ++beta)
        count += (lambda - beta * a) / b + 1;
    return count;
}

long count_gaps(long a, long b) {
    if (std::gcd(a, b) != 1) throw std::invalid_argument("count_gaps: gcd(a,b) must be 1");
    long limit = a * b; // every integer >= (a-1)(b-1) is representable
    std::vector<char> reach(limit + 1, 0);
    reach[0] = 1;
    for (long n = 1; n <= limit; ++n)
        reach[n] = (n >= a && reach[n - a]) || (n >= b && reach[n - b]);
    long gaps = 0;
    for (long n = 1; n <= limit; ++n)
        if (!reach[n]) ++gaps;
    return gaps;
}

namespace {

// q = p^e for prime p, or throws
std::pair<uint32_t, uint32_t> prime_power_split(long q) {
    if (q < 2) throw std::invalid_argument("preset: q must be >= 2");
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    uint32_t e = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw std::invalid_argument("preset: q must be a prime power");
    return {(uint32_t)p, e};
}

UniPoly artin_schreier_lhs(const Field& F, long q) {
    // y^q + y
    std::vector<FieldElement> cs((size_t)q + 1, F.zero());
    cs[1] = F.one();
    cs[(size_t)q] = F.one();
    return UniPoly(F, Var::y, std::move(cs));
}

} // namespace

CurveSpec preset_x_q2r(long q, long r) {
    if (r < 1) throw std::invalid_argument("preset x_q2r: r must be >= 1");
    auto [p, e] = prime_power_split(q);
    uint64_t field_order = 1;
    for (long k = 0; k < 2 * r; ++k) {
        field_order *= (uint64_t)q;
        if (field_order > (1u << 16))
            throw std::invalid_argument("preset x_q2r: field order exceeds 2^16");
    }
    Field F = Field::make(p, e * 2 * (uint32_t)r);

    long qr = 1;
    for (long k = 0; k < r; ++k) qr *= q;
    long b = qr + 1;

    UniPoly f = artin_schreier_lhs(F, q);
    UniPoly g = UniPoly::monomial(F, Var::x, b, F.one());
    // alpha = gen^((q^r-1)/(q-1)) has order (q^r+1)(q-1)
    FieldElement alpha = F.generator().pow((qr - 1) / (q - 1));

    std::ostringstream name;
    name << "x_q2r(" << q << "," << r << ")";
    return make_curve(F, f, g, alpha, b, name.str(), std::array<long, 3>{q - 1, qr, q - 2});
}

CurveSpec preset_hermitian(long q) { return preset_x_q2r(q, 1); }

CurveSpec preset_quotient_hermitian(long q, long m) {
    if (m <= 2) throw std::invalid_argument("preset quotient_hermitian: m must be > 2");
    if ((q + 1) % m != 0)
        throw std::invalid_argument("preset quotient_hermitian: m must divide q+1");
    auto [p, e] = prime_power_split(q);
    uint64_t field_order = (uint64_t)q * (uint64_t)q;
    if (field_order > (1u << 16))
        throw std::invalid_argument("preset quotient_hermitian: field order exceeds 2^16");
    Field F = Field::make(p, 2 * e);

    UniPoly f = artin_schreier_lhs(F, q);
    UniPoly g = UniPoly::monomial(F, Var::x, m, F.one());
    // alpha' = gen^k with mk = q+1; then alpha'^m = gen^(q+1) and ord(alpha') = m(q-1)
    long k = (q + 1) / m;
    FieldElement alpha = F.generator().pow(k);

    std::ostringstream name;
    name << "quotient_hermitian(" << q << "," << m << ")";
    return make_curve(F, f, g, alpha, m, name.str(), std::array<long, 3>{q - 1, q - 2, m - 1});
}

} // namespace agc
