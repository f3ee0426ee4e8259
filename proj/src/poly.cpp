#include "agc/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agc {

const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::x: return "x";
        case Var::y: return "y";
    }
    return "?";
}

namespace {

void require_compatible(const UniPoly& a, const UniPoly& b) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string("poly: variable mismatch (") + var_name(a.var()) +
                                    " vs " + var_name(b.var()) + ")");
    if (!a.field().same(b.field()))
        throw std::invalid_argument("poly: operands over different fields");
}

} // namespace

UniPoly::UniPoly(Field field, Var var, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), var_(var), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_codes(const Field& field, Var var, const std::vector<uint32_t>& codes) {
    std::vector<FieldElement> cs;
    cs.reserve(codes.size());
    for (uint32_t c : codes) cs.push_back(field.element(c));
    return UniPoly(field, var, std::move(cs));
}

UniPoly UniPoly::constant(const Field& field, Var var, const FieldElement& c) {
    return UniPoly(field, var, {c});
}

UniPoly UniPoly::monomial(const Field& field, Var var, long deg, const FieldElement& c) {
    if (deg < 0) throw std::invalid_argument("poly: negative monomial degree");
    std::vector<FieldElement> cs((size_t)deg + 1, field.zero());
    cs[(size_t)deg] = c;
    return UniPoly(field, var, std::move(cs));
}

FieldElement UniPoly::coeff(long i) const {
    if (i < 0) throw std::invalid_argument("poly: negative coefficient index");
    if ((size_t)i >= c_.size()) return field_.zero();
    return c_[(size_t)i];
}

FieldElement UniPoly::lc() const {
    if (is_zero()) throw std::invalid_argument("poly: leading coefficient of zero polynomial");
    return c_.back();
}

std::vector<uint32_t> UniPoly::codes() const {
    std::vector<uint32_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.code());
    return out;
}

FieldElement UniPoly::eval(const FieldElement& v) const {
    FieldElement acc = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    require_compatible(*this, rhs);
    std::vector<FieldElement> cs(std::max(c_.size(), rhs.c_.size()), field_.zero());
    for (size_t i = 0; i < cs.size(); ++i) {
        FieldElement a = i < c_.size() ? c_[i] : field_.zero();
        FieldElement b = i < rhs.c_.size() ? rhs.c_[i] : field_.zero();
        cs[i] = a + b;
    }
    return UniPoly(field_, var_, std::move(cs));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
    require_compatible(*this, rhs);
    std::vector<FieldElement> cs(std::max(c_.size(), rhs.c_.size()), field_.zero());
    for (size_t i = 0; i < cs.size(); ++i) {
        FieldElement a = i < c_.size() ? c_[i] : field_.zero();
        FieldElement b = i < rhs.c_.size() ? rhs.c_[i] : field_.zero();
        cs[i] = a - b;
    }
    return UniPoly(field_, var_, std::move(cs));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    require_compatible(*this, rhs);
    if (is_zero() || rhs.is_zero()) return UniPoly(field_, var_);
    std::vector<FieldElement> cs(c_.size() + rhs.c_.size() - 1, field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) cs[i + j] = cs[i + j] + c_[i] * rhs.c_[j];
    }
    return UniPoly(field_, var_, std::move(cs));
}

UniPoly UniPoly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> cs(c_);
    for (auto& c : cs) c = c * s;
    return UniPoly(field_, var_, std::move(cs));
}

UniPoly UniPoly::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("poly: negative shift");
    if (is_zero()) return *this;
    std::vector<FieldElement> cs((size_t)k, field_.zero());
    cs.insert(cs.end(), c_.begin(), c_.end());
    return UniPoly(field_, var_, std::move(cs));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("poly: cannot normalize zero polynomial");
    return *this * lc().inv();
}

bool UniPoly::operator==(const UniPoly& rhs) const {
    if (var_ != rhs.var_ || c_.size() != rhs.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != rhs.c_[i]) return false;
    return true;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i].code() != 1) os << c_[i].code();
        if (i > 0) {
            if (c_[i].code() != 1) os << "*";
            os << var_name(var_);
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    require_compatible(num, den);
    if (den.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
    const Field& f = num.field();
    UniPoly q(f, num.var());
    UniPoly r = num;
    FieldElement dlc_inv = den.lc().inv();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        long shift = r.degree() - den.degree();
        FieldElement c = r.lc() * dlc_inv;
        UniPoly term = UniPoly::monomial(f, num.var(), shift, c);
        q = q + term;
        r = r - den.shifted(shift) * c;
    }
    return {q, r};
}

bool divides_exactly(const UniPoly& den, const UniPoly& num) {
    return divmod(num, den).second.is_zero();
}

UniPoly poly_from_roots(const Field& field, Var var, const std::vector<FieldElement>& roots) {
    std::set<uint32_t> seen;
    for (const auto& r : roots)
        if (!seen.insert(r.code()).second)
            throw std::invalid_argument("poly_from_roots: repeated root");
    UniPoly acc = UniPoly::constant(field, var, field.one());
    for (const auto& r : roots) {
        UniPoly lin(field, var, {-r, field.one()});
        acc = acc * lin;
    }
    return acc;
}

std::vector<FieldElement> roots_in_field(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots_in_field: zero polynomial");
    std::vector<FieldElement> out;
    const Field& f = p.field();
    for (uint32_t c = 0; c < f.order(); ++c) {
        FieldElement v = f.element(c);
        if (p.eval(v).is_zero()) out.push_back(v);
    }
    return out;
}

void ProductForm::add_factor(Var v, const FieldElement& root) {
    if (v == Var::t) throw std::invalid_argument("product form: factors must be in x or y");
    factors_.push_back({v, root});
}

FieldElement ProductForm::eval(const FieldElement& xv, const FieldElement& yv) const {
    FieldElement acc = scale_;
    for (const auto& fac : factors_) {
        const FieldElement& v = fac.var == Var::x ? xv : yv;
        acc = acc * (v - fac.root);
    }
    return acc;
}

long ProductForm::degree_in(Var v) const {
    long d = 0;
    for (const auto& fac : factors_)
        if (fac.var == v) ++d;
    return d;
}

long ProductForm::pole_order(long a, long b) const {
    return degree_in(Var::x) * a + degree_in(Var::y) * b;
}

} // namespace agc
