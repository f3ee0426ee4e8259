#ifndef AGC_POLY_HPP
#define AGC_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "agc/gf.hpp"

namespace agc {

enum class Var : uint8_t { t, x, y };

const char* var_name(Var v);

/// Univariate polynomial over a Field, tagged with its variable. Coefficients
/// are little-endian with no trailing zeros; the zero polynomial is the empty
/// sequence. Binary operations require matching variables and fields.
class UniPoly {
  public:
    UniPoly() = default; // invalid until assigned
    UniPoly(Field field, Var var) : field_(std::move(field)), var_(var) {}
    UniPoly(Field field, Var var, std::vector<FieldElement> coeffs);

    static UniPoly from_codes(const Field& field, Var var, const std::vector<uint32_t>& codes);
    static UniPoly constant(const Field& field, Var var, const FieldElement& c);
    static UniPoly monomial(const Field& field, Var var, long deg, const FieldElement& c);

    const Field& field() const { return field_; }
    Var var() const { return var_; }

    long degree() const { return (long)c_.size() - 1; } ///< -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(long i) const;
    FieldElement lc() const; ///< leading coefficient; throws on zero polynomial
    const std::vector<FieldElement>& coeffs() const { return c_; }
    std::vector<uint32_t> codes() const;

    FieldElement eval(const FieldElement& v) const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator*(const FieldElement& s) const;
    UniPoly shifted(long k) const; ///< multiply by var^k
    UniPoly monic() const;

    bool operator==(const UniPoly& rhs) const;
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    std::string str() const;

  private:
    Field field_;
    Var var_ = Var::t;
    std::vector<FieldElement> c_;
    void trim();
};

/// Euclidean division: returns (quotient, remainder) with
/// num = quotient*den + remainder and deg remainder < deg den.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

bool divides_exactly(const UniPoly& den, const UniPoly& num);

/// Monic polynomial with the given pairwise-distinct roots (1 for the empty set).
UniPoly poly_from_roots(const Field& field, Var var, const std::vector<FieldElement>& roots);

/// Exhaustive root scan over the whole field, ascending by element code.
std::vector<FieldElement> roots_in_field(const UniPoly& p);

struct LinearFactor {
    Var var; // x or y
    FieldElement root;
};

/// scale * prod (var - root): a bivariate function kept in factored form so it
/// can be evaluated exactly without expansion.
class ProductForm {
  public:
    explicit ProductForm(FieldElement scale) : scale_(std::move(scale)) {}

    void add_factor(Var v, const FieldElement& root);

    FieldElement eval(const FieldElement& xv, const FieldElement& yv) const;

    long degree_in(Var v) const;
    long pole_order(long a, long b) const; ///< deg_x * a + deg_y * b

    const std::vector<LinearFactor>& factors() const { return factors_; }
    const FieldElement& scale() const { return scale_; }

  private:
    FieldElement scale_;
    std::vector<LinearFactor> factors_;
};

} // namespace agc

#endif
