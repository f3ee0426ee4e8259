#ifndef AGC_POTMOD_HPP
#define AGC_POTMOD_HPP

#include <string>
#include <vector>

#include "agc/rrspace.hpp"

namespace agc {

/// Module monomial t^deg e_row (rows 0-based). Position-over-term order:
/// earlier rows dominate; within a row, higher degree dominates.
struct ModMonomial {
    int row = 0;
    long deg = 0;
};

bool operator==(const ModMonomial& a, const ModMonomial& b);
bool pot_greater(const ModMonomial& a, const ModMonomial& b);

/// Element of the free module F_q[t]^(r+s): one polynomial in t per orbit row.
class ModuleElement {
  public:
    ModuleElement() = default;
    explicit ModuleElement(std::vector<UniPoly> rows);
    static ModuleElement zero(const Field& field, int nrows);

    int nrows() const { return (int)rows_.size(); }
    const UniPoly& row(int i) const { return rows_[(size_t)i]; }
    void set_row(int i, UniPoly p);

    bool is_zero() const;
    int leading_pos() const; ///< smallest row index with a nonzero entry; -1 if zero

    ModuleElement operator+(const ModuleElement& rhs) const;
    ModuleElement operator-(const ModuleElement& rhs) const;
    /// this -= g * u, with u a polynomial in t
    void sub_scaled(const ModuleElement& g, const UniPoly& u);
    void scale(const FieldElement& c);

    bool operator==(const ModuleElement& rhs) const;
    bool operator!=(const ModuleElement& rhs) const { return !(*this == rhs); }

  private:
    std::vector<UniPoly> rows_;
};

/// Canonical representative of a codeword: row i collects the block-i symbols
/// as a polynomial of degree < |O_i|.
ModuleElement codeword_to_module(const Codeword& cw, const OrbitDecomposition& decomp);

/// Inverse direction; entries are first reduced mod t^|O_i| - 1.
Codeword module_to_codeword(const ModuleElement& elem, const OrbitDecomposition& decomp);

/// Rows reduced mod t^|O_i| - 1 (degree < |O_i| everywhere).
ModuleElement canonical(const ModuleElement& elem, const OrbitDecomposition& decomp);

/// Triangular basis of the code module: element i has leading position i. The
/// leading polynomial of row i divides t^|O_i| - 1, so it is squarefree and
/// split, which is what makes the root diagram well defined.
class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<ModuleElement> elems, bool reduced,
                  std::vector<std::string> row_provenance);

    int nrows() const { return (int)elems_.size(); }
    const std::vector<ModuleElement>& elements() const { return elems_; }
    const ModuleElement& element(int i) const { return elems_[(size_t)i]; }
    const UniPoly& leading_poly(int i) const { return elems_[(size_t)i].row(i); }
    long leading_degree(int i) const { return leading_poly(i).degree(); }
    bool reduced() const { return reduced_; }
    const std::vector<std::string>& provenance() const { return provenance_; }

  private:
    std::vector<ModuleElement> elems_;
    bool reduced_ = false;
    std::vector<std::string> provenance_;
};

struct DivisionResult {
    std::vector<UniPoly> quotients; ///< one per basis element, by leading position
    ModuleElement remainder;        ///< no monomial divisible by any leading monomial
};

/// POT division: f = sum quotients[i] * basis[i] + remainder, processed by
/// repeated leading-term cancellation. The basis may be listed in any order
/// but must hold at most one element per leading position.
DivisionResult divide(const ModuleElement& f, const std::vector<ModuleElement>& basis);
DivisionResult divide(const ModuleElement& f, const GroebnerBasis& gb);

bool reduces_to_zero(const ModuleElement& f, const GroebnerBasis& gb);

/// Reference construction of the reduced POT Groebner basis: generators are
/// the module images of the monomial basis together with the kernel elements
/// (t^|O_i| - 1) e_i, triangularized by leading-position gcd elimination and
/// then inter-reduced. Independent of the interpolation route.
GroebnerBasis oracle_gb(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda);

/// Both bases generate the same submodule (bidirectional zero remainders).
bool same_submodule(const GroebnerBasis& g1, const GroebnerBasis& g2);

} // namespace agc

#endif
