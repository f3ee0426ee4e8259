#include "agc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agc {

namespace detail {

struct FieldImpl : std::enable_shared_from_this<FieldImpl> {
    uint32_t p = 0;
    uint32_t m = 0;
    uint32_t q = 0;
    std::vector<uint32_t> modulus;  // little-endian, monic, length m+1
    uint32_t gen_code = 0;
    std::vector<uint32_t> log_tab;  // size q, log_tab[0] unused
    std::vector<uint32_t> exp_tab;  // size q-1

    std::vector<uint32_t> digits(uint32_t code) const {
        std::vector<uint32_t> d(m);
        for (uint32_t k = 0; k < m; ++k) {
            d[k] = code % p;
            code /= p;
        }
        return d;
    }

    uint32_t compose(const std::vector<uint32_t>& d) const {
        uint32_t code = 0;
        for (uint32_t k = m; k-- > 0;) code = code * p + d[k] % p;
        return code;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p == 2) return a ^ b;
        uint32_t res = 0, pw = 1;
        for (uint32_t k = 0; k < m; ++k) {
            res += ((a % p + b % p) % p) * pw;
            a /= p;
            b /= p;
            pw *= p;
        }
        return res;
    }

    uint32_t neg(uint32_t a) const {
        if (p == 2) return a;
        uint32_t res = 0, pw = 1;
        for (uint32_t k = 0; k < m; ++k) {
            res += ((p - a % p) % p) * pw;
            a /= p;
            pw *= p;
        }
        return res;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_tab[(log_tab[a] + log_tab[b]) % (q - 1)];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::invalid_argument("field: inversion of zero");
        return exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
    }

    uint32_t pow(uint32_t a, long long n) const {
        if (a == 0) {
            if (n == 0) return 1;
            if (n > 0) return 0;
            throw std::invalid_argument("field: zero raised to a negative power");
        }
        long long r = n % (long long)(q - 1);
        if (r < 0) r += q - 1;
        uint64_t e = (uint64_t)log_tab[a] * (uint64_t)r % (q - 1);
        return exp_tab[e];
    }

    // Polynomial-basis product mod the modulus; used only during construction
    // before the tables exist.
    uint32_t mul_slow(uint32_t a, uint32_t b) const {
        std::vector<uint32_t> da = digits(a), db = digits(b);
        std::vector<uint32_t> conv(2 * m - 1, 0);
        for (uint32_t i = 0; i < m; ++i) {
            if (da[i] == 0) continue;
            for (uint32_t j = 0; j < m; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p;
        }
        for (uint32_t i = 2 * m - 2; i + 1 > m; --i) {
            uint32_t c = conv[i];
            if (c == 0) continue;
            conv[i] = 0;
            for (uint32_t k = 0; k < m; ++k)
                conv[i - m + k] = (conv[i - m + k] + c * (p - modulus[k] % p)) % p;
        }
        std::vector<uint32_t> low(conv.begin(), conv.begin() + m);
        return compose(low);
    }

    uint32_t pow_slow(uint32_t a, uint64_t n) const {
        uint32_t r = 1, base = a;
        while (n) {
            if (n & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            n >>= 1;
        }
        return r;
    }
};

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Small GF(p)[z] helpers for the modulus search; polynomials are little-endian
// coefficient vectors with no trailing zeros.
std::vector<uint32_t> zp_trim(std::vector<uint32_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<uint32_t> zp_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    a = zp_trim(std::move(a));
    // b is monic here
    while (a.size() >= b.size() && !a.empty()) {
        uint32_t c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k)
            a[shift + k] = (a[shift + k] + c * (p - b[k] % p)) % p;
        a = zp_trim(std::move(a));
    }
    return a;
}

bool zp_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (size_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (size_t k = 0; k < d; ++k) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t c = code;
            for (size_t k = 0; k < d; ++k) {
                g[k] = (uint32_t)(c % p);
                c /= p;
            }
            g[d] = 1;
            if (zp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

} // namespace detail

using detail::FieldImpl;

Field Field::make(uint32_t p, uint32_t m) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field: characteristic must be prime");
    if (m < 1) throw std::invalid_argument("field: extension degree must be >= 1");
    // search the default modulus: ascending little-endian integer code
    uint64_t count = 1;
    for (uint32_t k = 0; k < m; ++k) {
        count *= p;
        if (count > (1u << 16)) throw std::invalid_argument("field: order exceeds 2^16");
    }
    for (uint64_t code = 0; code < count; ++code) {
        std::vector<uint32_t> f(m + 1, 0);
        uint64_t c = code;
        for (uint32_t k = 0; k < m; ++k) {
            f[k] = (uint32_t)(c % p);
            c /= p;
        }
        f[m] = 1;
        if (detail::zp_irreducible(f, p)) return make(p, m, f);
    }
    throw std::runtime_error("field: no irreducible modulus found"); // unreachable
}

Field Field::make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field: characteristic must be prime");
    if (m < 1) throw std::invalid_argument("field: extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t k = 0; k < m; ++k) {
        q *= p;
        if (q > (1u << 16)) throw std::invalid_argument("field: order exceeds 2^16");
    }
    if (modulus.size() != m + 1)
        throw std::invalid_argument("field: modulus must have degree m");
    std::vector<uint32_t> mod(modulus);
    for (auto& c : mod) c %= p;
    if (mod[m] != 1) throw std::invalid_argument("field: modulus must be monic");
    if (!detail::zp_irreducible(mod, p))
        throw std::invalid_argument("field: modulus is reducible");

    auto impl = std::make_shared<FieldImpl>();
    impl->p = p;
    impl->m = m;
    impl->q = (uint32_t)q;
    impl->modulus = mod;

    // generator: smallest code whose order is exactly q-1
    uint32_t gen = 0;
    if (q == 2) {
        gen = 1;
    } else {
        auto factors = detail::prime_factors(impl->q - 1);
        for (uint32_t c = 2; c < impl->q; ++c) {
            bool primitive = true;
            for (uint32_t f : factors) {
                if (impl->pow_slow(c, (impl->q - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = c;
                break;
            }
        }
        if (gen == 0) throw std::runtime_error("field: no primitive element found");
    }
    impl->gen_code = gen;

    impl->exp_tab.assign(impl->q - 1, 0);
    impl->log_tab.assign(impl->q, 0);
    uint32_t acc = 1;
    std::vector<bool> seen(impl->q, false);
    for (uint32_t e = 0; e < impl->q - 1; ++e) {
        impl->exp_tab[e] = acc;
        if (acc == 0 || seen[acc]) throw std::runtime_error("field: generator order check failed");
        seen[acc] = true;
        impl->log_tab[acc] = e;
        acc = impl->mul_slow(acc, gen);
    }
    if (acc != 1) throw std::runtime_error("field: generator order check failed");

    return Field(std::move(impl));
}

uint32_t Field::characteristic() const { return impl_->p; }
uint32_t Field::degree() const { return impl_->m; }
uint32_t Field::order() const { return impl_->q; }
const std::vector<uint32_t>& Field::modulus() const { return impl_->modulus; }

FieldElement Field::zero() const { return FieldElement(impl_.get(), 0); }
FieldElement Field::one() const { return FieldElement(impl_.get(), 1); }
FieldElement Field::generator() const { return FieldElement(impl_.get(), impl_->gen_code); }

FieldElement Field::element(uint32_t code) const {
    if (code >= impl_->q) throw std::invalid_argument("field: element code out of range");
    return FieldElement(impl_.get(), code);
}

bool Field::same(const Field& other) const {
    if (impl_ == other.impl_) return true;
    if (!impl_ || !other.impl_) return false;
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m &&
           impl_->modulus == other.impl_->modulus;
}

namespace {

const FieldImpl* require_same(const FieldImpl* ia, const FieldImpl* ib) {
    if (ia == nullptr || ib == nullptr)
        throw std::invalid_argument("field element: operation on detached element");
    if (ia != ib) {
        if (ia->p != ib->p || ia->m != ib->m || ia->modulus != ib->modulus)
            throw std::invalid_argument("field element: operands from different fields");
    }
    return ia;
}

} // namespace

bool FieldElement::is_zero() const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    return code_ == 0;
}

std::vector<uint32_t> FieldElement::coeffs() const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    return impl_->digits(code_);
}

Field FieldElement::field() const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    return Field(const_cast<FieldImpl*>(impl_)->shared_from_this());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const FieldImpl* f = require_same(impl_, rhs.impl_);
    return FieldElement(f, f->add(code_, rhs.code_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const FieldImpl* f = require_same(impl_, rhs.impl_);
    return FieldElement(f, f->sub(code_, rhs.code_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const FieldImpl* f = require_same(impl_, rhs.impl_);
    return FieldElement(f, f->mul(code_, rhs.code_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    const FieldImpl* f = require_same(impl_, rhs.impl_);
    return FieldElement(f, f->mul(code_, f->inv(rhs.code_)));
}

FieldElement FieldElement::operator-() const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    return FieldElement(impl_, impl_->neg(code_));
}

FieldElement FieldElement::inv() const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    return FieldElement(impl_, impl_->inv(code_));
}

FieldElement FieldElement::pow(long long n) const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    return FieldElement(impl_, impl_->pow(code_, n));
}

uint32_t FieldElement::log() const {
    if (!impl_) throw std::invalid_argument("field element: detached");
    if (code_ == 0) throw std::invalid_argument("field element: log of zero");
    return impl_->log_tab[code_];
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    const FieldImpl* f = require_same(impl_, rhs.impl_);
    (void)f;
    return code_ == rhs.code_;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << code_;
    return os.str();
}

long element_order(const FieldElement& e) {
    if (e.is_zero()) throw std::invalid_argument("element_order: zero element");
    uint32_t q1 = e.field().order() - 1;
    return (long)(q1 / std::gcd((uint32_t)e.log(), q1));
}

} // namespace agc
