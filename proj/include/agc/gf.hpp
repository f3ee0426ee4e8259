#ifndef AGC_GF_HPP
#define AGC_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace agc {

namespace detail {
struct FieldImpl;
}

class FieldElement;

/// Handle to an immutable description of GF(p^m), including the log/antilog
/// tables used for multiplication. Cheap to copy and safe to share across
/// threads once constructed.
class Field {
  public:
    Field() = default;

    /// Builds GF(p^m) with the default modulus: the first monic irreducible
    /// of degree m when the coefficient vector (c_0,...,c_{m-1}) is read as a
    /// little-endian base-p integer. Deterministic, no external tables.
    static Field make(uint32_t p, uint32_t m);

    /// Builds GF(p^m) with an explicit monic modulus of degree m, given as a
    /// little-endian coefficient list of length m+1 over GF(p). The modulus is
    /// verified irreducible; fields with more than 2^16 elements are rejected.
    static Field make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    uint32_t characteristic() const;
    uint32_t degree() const;
    uint32_t order() const; ///< q = p^m
    const std::vector<uint32_t>& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// The smallest integer-coded element of multiplicative order q-1.
    FieldElement generator() const;
    FieldElement element(uint32_t code) const; ///< code in [0, q)

    bool valid() const { return impl_ != nullptr; }
    bool same(const Field& other) const;

    const detail::FieldImpl* impl() const { return impl_.get(); }

  private:
    friend class FieldElement;
    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::FieldImpl> impl_;
};

/// Element of GF(p^m), stored as the integer code sum(c_k p^k) of its
/// polynomial-basis coefficient vector. Elements keep a non-owning reference
/// to their field and must not outlive every Field handle for it.
class FieldElement {
  public:
    FieldElement() = default; // detached; arithmetic on it throws

    uint32_t code() const { return code_; }
    bool is_zero() const;
    bool attached() const { return impl_ != nullptr; }
    std::vector<uint32_t> coeffs() const; ///< little-endian base-p digits, length m

    Field field() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;

    FieldElement inv() const;
    /// e^n with n possibly negative (requires nonzero base); 0^0 = 1.
    FieldElement pow(long long n) const;
    /// Discrete log with respect to the field generator; throws on zero.
    uint32_t log() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    std::string str() const;

  private:
    friend class Field;
    friend struct detail::FieldImpl;
    FieldElement(const detail::FieldImpl* impl, uint32_t code) : impl_(impl), code_(code) {}
    const detail::FieldImpl* impl_ = nullptr;
    uint32_t code_ = 0;
};

/// Smallest d >= 1 with e^d = 1; divides q-1. Throws on zero.
long element_order(const FieldElement& e);

} // namespace agc

#endif
