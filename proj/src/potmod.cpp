#include "agc/potmod.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace agc {

bool operator==(const ModMonomial& a, const ModMonomial& b) {
    return a.row == b.row && a.deg == b.deg;
}

bool pot_greater(const ModMonomial& a, const ModMonomial& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.deg > b.deg;
}

ModuleElement::ModuleElement(std::vector<UniPoly> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.var() != Var::t)
            throw std::invalid_argument("module element: rows must be polynomials in t");
}

ModuleElement ModuleElement::zero(const Field& field, int nrows) {
    std::vector<UniPoly> rows((size_t)nrows, UniPoly(field, Var::t));
    return ModuleElement(std::move(rows));
}

void ModuleElement::set_row(int i, UniPoly p) {
    if (p.var() != Var::t) throw std::invalid_argument("module element: rows must be in t");
    rows_[(size_t)i] = std::move(p);
}

bool ModuleElement::is_zero() const {
    for (const auto& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

int ModuleElement::leading_pos() const {
    for (size_t i = 0; i < rows_.size(); ++i)
        if (!rows_[i].is_zero()) return (int)i;
    return -1;
}

ModuleElement ModuleElement::operator+(const ModuleElement& rhs) const {
    if (nrows() != rhs.nrows()) throw std::invalid_argument("module element: row count mismatch");
    std::vector<UniPoly> rows;
    rows.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) rows.push_back(rows_[i] + rhs.rows_[i]);
    return ModuleElement(std::move(rows));
}

ModuleElement ModuleElement::operator-(const ModuleElement& rhs) const {
    if (nrows() != rhs.nrows()) throw std::invalid_argument("module element: row count mismatch");
    std::vector<UniPoly> rows;
    rows.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) rows.push_back(rows_[i] - rhs.rows_[i]);
    return ModuleElement(std::move(rows));
}

void ModuleElement::sub_scaled(const ModuleElement& g, const UniPoly& u) {
    if (nrows() != g.nrows()) throw std::invalid_argument("module element: row count mismatch");
    if (u.is_zero()) return;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (!g.rows_[i].is_zero()) rows_[i] = rows_[i] - g.rows_[i] * u;
}

void ModuleElement::scale(const FieldElement& c) {
    for (auto& r : rows_) r = r * c;
}

bool ModuleElement::operator==(const ModuleElement& rhs) const {
    if (nrows() != rhs.nrows()) return false;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] != rhs.rows_[i]) return false;
    return true;
}

ModuleElement codeword_to_module(const Codeword& cw, const OrbitDecomposition& decomp) {
    if ((long)cw.size() != decomp.n)
        throw std::invalid_argument("codeword_to_module: length mismatch");
    const Field& F = decomp.orbits[0].points[0].x.field();
    std::vector<UniPoly> rows;
    for (int i = 0; i < decomp.nrows(); ++i) {
        long off = decomp.offset(i), len = decomp.size(i);
        std::vector<FieldElement> cs(cw.begin() + off, cw.begin() + off + len);
        rows.emplace_back(F, Var::t, std::move(cs));
    }
    return ModuleElement(std::move(rows));
}

ModuleElement canonical(const ModuleElement& elem, const OrbitDecomposition& decomp) {
    std::vector<UniPoly> rows;
    for (int i = 0; i < decomp.nrows(); ++i) {
        const UniPoly& r = elem.row(i);
        long len = decomp.size(i);
        const Field& F = r.field();
        std::vector<FieldElement> cs((size_t)len, F.zero());
        for (long d = 0; d <= r.degree(); ++d) cs[(size_t)(d % len)] = cs[(size_t)(d % len)] + r.coeff(d);
        rows.emplace_back(F, Var::t, std::move(cs));
    }
    return ModuleElement(std::move(rows));
}

Codeword module_to_codeword(const ModuleElement& elem, const OrbitDecomposition& decomp) {
    if (elem.nrows() != decomp.nrows())
        throw std::invalid_argument("module_to_codeword: row count mismatch");
    ModuleElement cano = canonical(elem, decomp);
    Codeword cw;
    cw.reserve((size_t)decomp.n);
    for (int i = 0; i < decomp.nrows(); ++i)
        for (long j = 0; j < decomp.size(i); ++j) cw.push_back(cano.row(i).coeff(j));
    return cw;
}

GroebnerBasis::GroebnerBasis(std::vector<ModuleElement> elems, bool reduced,
                             std::vector<std::string> row_provenance)
    : elems_(std::move(elems)), reduced_(reduced), provenance_(std::move(row_provenance)) {
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i].leading_pos() != (int)i)
            throw std::invalid_argument("groebner basis: element " + std::to_string(i) +
                                        " does not lead at its row");
        if ((int)elems_[i].nrows() != (int)elems_.size())
            throw std::invalid_argument("groebner basis: row count mismatch");
    }
    if (provenance_.empty()) provenance_.assign(elems_.size(), "");
}

DivisionResult divide(const ModuleElement& f, const std::vector<ModuleElement>& basis) {
    int nrows = f.nrows();
    std::vector<const ModuleElement*> by_pos((size_t)nrows, nullptr);
    for (const auto& g : basis) {
        int lp = g.leading_pos();
        if (lp < 0) throw std::invalid_argument("divide: zero element in basis");
        if (lp >= nrows) throw std::invalid_argument("divide: basis row out of range");
        if (by_pos[(size_t)lp]) throw std::invalid_argument("divide: duplicate leading position");
        by_pos[(size_t)lp] = &g;
    }

    const Field& F = f.row(0).field();
    DivisionResult res;
    res.quotients.assign((size_t)nrows, UniPoly(F, Var::t));
    res.remainder = ModuleElement::zero(F, nrows);
    ModuleElement work = f;

    int pos = work.leading_pos();
    while (pos >= 0) {
        const UniPoly& entry = work.row(pos);
        const ModuleElement* g = by_pos[(size_t)pos];
        if (g != nullptr && g->row(pos).degree() <= entry.degree()) {
            const UniPoly& lead = g->row(pos);
            if (lead.lc().is_zero())
                throw std::invalid_argument("divide: zero leading coefficient in basis");
            UniPoly u = UniPoly::monomial(F, Var::t, entry.degree() - lead.degree(),
                                          entry.lc() / lead.lc());
            work.sub_scaled(*g, u);
            res.quotients[(size_t)pos] = res.quotients[(size_t)pos] + u;
        } else {
            // entry degree is below this row's leading degree (or the row has
            // no pivot at all): nothing left here is divisible
            res.remainder.set_row(pos, res.remainder.row(pos) + entry);
            work.set_row(pos, UniPoly(F, Var::t));
        }
        pos = work.leading_pos();
    }
    return res;
}

DivisionResult divide(const ModuleElement& f, const GroebnerBasis& gb) {
    return divide(f, gb.elements());
}

bool reduces_to_zero(const ModuleElement& f, const GroebnerBasis& gb) {
    return divide(f, gb).remainder.is_zero();
}

namespace {

// deterministic pivot preference: smaller leading degree first, then the
// lexicographically smaller coefficient serialization
bool pivot_less(const ModuleElement& a, const ModuleElement& b, int row) {
    long da = a.row(row).degree(), db = b.row(row).degree();
    if (da != db) return da < db;
    for (int i = row; i < a.nrows(); ++i) {
        long da2 = a.row(i).degree(), db2 = b.row(i).degree();
        if (da2 != db2) return da2 < db2;
        for (long d = 0; d <= da2; ++d) {
            uint32_t ca = a.row(i).coeff(d).code(), cb = b.row(i).coeff(d).code();
            if (ca != cb) return ca < cb;
        }
    }
    return false;
}

} // namespace

GroebnerBasis oracle_gb(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda) {
    if (lambda >= decomp.n) throw std::invalid_argument("oracle_gb: lambda must be < n");
    const Field& F = spec.field;
    int nrows = decomp.nrows();

    std::list<ModuleElement> pool;
    for (const auto& mono : monomial_basis(spec, lambda)) {
        ModuleElement el = codeword_to_module(evaluate_codeword(mono, decomp), decomp);
        if (!el.is_zero()) pool.push_back(std::move(el));
    }
    for (int i = 0; i < nrows; ++i) {
        ModuleElement q = ModuleElement::zero(F, nrows);
        UniPoly kern = UniPoly::monomial(F, Var::t, decomp.size(i), F.one()) -
                       UniPoly::constant(F, Var::t, F.one());
        q.set_row(i, kern);
        pool.push_back(std::move(q));
    }

    // Hermite-style triangularization: for each row in increasing leading
    // position, Euclid the candidates down to a single pivot. Trailing rows
    // are kept reduced mod t^|O_j| - 1 to stop degree growth; this subtracts
    // kernel generators, which stay in the module throughout, so the
    // generated submodule is unchanged. Leading rows are left alone (the
    // kernel generator itself must keep its t^|O_i| - 1 entry).
    std::vector<UniPoly> kernels;
    for (int i = 0; i < nrows; ++i)
        kernels.push_back(UniPoly::monomial(F, Var::t, decomp.size(i), F.one()) -
                          UniPoly::constant(F, Var::t, F.one()));
    auto reduce_tail = [&](ModuleElement& e) {
        int lp = e.leading_pos();
        if (lp < 0) return;
        for (int j = lp + 1; j < nrows; ++j)
            if (e.row(j).degree() >= decomp.size(j))
                e.set_row(j, divmod(e.row(j), kernels[(size_t)j]).second);
    };

    std::vector<ModuleElement> pivots;
    for (int row = 0; row < nrows; ++row) {
        std::vector<ModuleElement> live;
        for (auto it = pool.begin(); it != pool.end();) {
            if (it->leading_pos() == row) {
                live.push_back(std::move(*it));
                it = pool.erase(it);
            } else {
                ++it;
            }
        }
        while (live.size() > 1) {
            std::sort(live.begin(), live.end(),
                      [row](const ModuleElement& a, const ModuleElement& b) {
                          return pivot_less(a, b, row);
                      });
            ModuleElement& pivot = live[0];
            ModuleElement f = std::move(live[1]);
            live.erase(live.begin() + 1);
            auto [q, rem] = divmod(f.row(row), pivot.row(row));
            f.sub_scaled(pivot, q);
            if (f.is_zero()) continue;
            reduce_tail(f);
            if (f.leading_pos() == row) live.push_back(std::move(f));
            else pool.push_back(std::move(f));
        }
        if (live.empty())
            throw std::runtime_error("oracle_gb: no pivot for row " + std::to_string(row));
        ModuleElement piv = std::move(live[0]);
        piv.scale(piv.row(row).lc().inv());
        pivots.push_back(std::move(piv));
    }

    // inter-reduce: trailing entries brought below the later pivots' leading
    // degrees, yielding the unique reduced basis
    for (int i = nrows - 2; i >= 0; --i) {
        for (int j = i + 1; j < nrows; ++j) {
            auto [u, rem] = divmod(pivots[(size_t)i].row(j), pivots[(size_t)j].row(j));
            if (!u.is_zero()) pivots[(size_t)i].sub_scaled(pivots[(size_t)j], u);
        }
    }

    return GroebnerBasis(std::move(pivots), true,
                         std::vector<std::string>((size_t)nrows, "oracle"));
}

bool same_submodule(const GroebnerBasis& g1, const GroebnerBasis& g2) {
    for (const auto& e : g1.elements())
        if (!reduces_to_zero(e, g2)) return false;
    for (const auto& e : g2.elements())
        if (!reduces_to_zero(e, g1)) return false;
    return true;
}

} // namespace agc
