#include "agc/interp.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace agc {

UniPoly build_annihilator(const OrbitDecomposition& decomp, int i) {
    if (i < 0 || i >= decomp.r) throw std::invalid_argument("build_annihilator: not a long orbit");
    const Orbit& orb = decomp.orbits[(size_t)i];
    const Field& F = orb.points[0].x.field();
    UniPoly m = poly_from_roots(F, Var::y, orb.y_values);

    for (const auto& other : decomp.orbits) {
        if (other.index == i) continue;
        std::optional<FieldElement> value;
        for (const auto& pt : other.points) {
            FieldElement v = m.eval(pt.y);
            if (v.is_zero())
                throw std::runtime_error("build_annihilator: vanishes on another orbit "
                                         "(curve outside the supported class)");
            if (!value) value = v;
            else if (*value != v)
                throw std::runtime_error("build_annihilator: not constant on another orbit "
                                         "(curve outside the supported class)");
        }
    }
    return m;
}

ProductForm build_selector(const OrbitDecomposition& decomp, int i, long j) {
    if (i < 0 || i >= decomp.r) throw std::invalid_argument("build_selector: not a long orbit");
    const Orbit& orb = decomp.orbits[(size_t)i];
    if (j < 0 || j >= orb.size()) throw std::invalid_argument("build_selector: point index out of range");
    const Field& F = orb.points[0].x.field();
    const AffinePoint& own = orb.points[(size_t)j];

    ProductForm form(F.one());
    for (const auto& yv : orb.y_values)
        if (yv != own.y) form.add_factor(Var::y, yv);
    for (const auto& pt : orb.points)
        if (pt.y == own.y && !(pt == own)) form.add_factor(Var::x, pt.x);

    for (long jj = 0; jj < orb.size(); ++jj) {
        const AffinePoint& pt = orb.points[(size_t)jj];
        FieldElement v = form.eval(pt.x, pt.y);
        if (jj == j && v.is_zero())
            throw std::runtime_error("build_selector: vanishes at its own point");
        if (jj != j && !v.is_zero())
            throw std::runtime_error("build_selector: nonzero away from its point");
    }
    return form;
}

std::vector<OrbitInterpolants> build_interpolants(const OrbitDecomposition& decomp) {
    std::vector<OrbitInterpolants> out;
    for (int i = 0; i < decomp.r; ++i) {
        OrbitInterpolants oi;
        oi.orbit = i;
        oi.annihilator = build_annihilator(decomp, i);
        for (long j = 0; j < decomp.size(i); ++j) {
            ProductForm sel = build_selector(decomp, i, j);
            const AffinePoint& own = decomp.point(i, j);
            oi.selector_at_own.push_back(sel.eval(own.x, own.y));
            oi.selectors.push_back(std::move(sel));
        }
        out.push_back(std::move(oi));
    }
    return out;
}

FieldElement RowFunction::eval(const AffinePoint& pt) const {
    FieldElement acc = scale;
    for (const auto& m : prefix) acc = acc * m.eval(pt.y);
    FieldElement sum = pt.x.field().zero();
    for (const auto& [coeff, sel] : terms) sum = sum + coeff * sel.eval(pt.x, pt.y);
    return acc * sum;
}

RowFunction build_row_function(const OrbitDecomposition& decomp,
                               const std::vector<OrbitInterpolants>& interp, int row,
                               const std::vector<FieldElement>& marked_roots) {
    if (row < 0 || row >= decomp.r)
        throw std::invalid_argument("build_row_function: not a long orbit row");
    if ((long)marked_roots.size() >= decomp.size(row))
        throw std::invalid_argument("build_row_function: row is full, no generator needed");
    const OrbitInterpolants& oi = interp[(size_t)row];
    const Field& F = oi.annihilator.field();

    RowFunction rf;
    rf.row = row;
    for (int k = 0; k < row; ++k) rf.prefix.push_back(interp[(size_t)k].annihilator);

    // constant value of the prefix product on this orbit
    const AffinePoint& base = decomp.point(row, 0);
    FieldElement c = F.one();
    for (const auto& m : rf.prefix) c = c * m.eval(base.y);
    if (c.is_zero()) throw std::runtime_error("build_row_function: prefix vanishes on its own orbit");
    rf.scale = c.inv();

    UniPoly p = poly_from_roots(F, Var::t, marked_roots);
    for (long j = 0; j < decomp.size(row); ++j) {
        FieldElement aj = p.coeff(j);
        if (aj.is_zero()) continue;
        const FieldElement& own = oi.selector_at_own[(size_t)j];
        if (own.is_zero()) throw std::runtime_error("build_row_function: degenerate selector");
        rf.terms.emplace_back(aj / own, oi.selectors[(size_t)j]);
    }
    return rf;
}

FieldElement evaluate_row_function(const RowFunction& rf, const OrbitDecomposition& decomp,
                                   const AffinePoint& pt) {
    auto [orbit, power] = decomp.locate(pt);
    if (orbit < 0) throw std::invalid_argument("evaluate_row_function: point not in the support");
    return rf.eval(pt);
}

GroebnerBasis interpolation_gb(const CurveSpec& spec, const OrbitDecomposition& decomp,
                               const RootDiagram& diagram,
                               const std::vector<OrbitInterpolants>& interp) {
    const Field& F = spec.field;
    int nrows = decomp.nrows();
    if ((int)diagram.rows.size() != nrows)
        throw std::invalid_argument("interpolation_gb: diagram row count mismatch");

    std::vector<ModuleElement> elems;
    std::vector<std::string> prov;
    std::optional<GroebnerBasis> fallback; // built on demand for non-full short rows

    for (int i = 0; i < nrows; ++i) {
        const DiagramRow& drow = diagram.rows[(size_t)i];
        if (drow.full()) {
            ModuleElement q = ModuleElement::zero(F, nrows);
            q.set_row(i, UniPoly::monomial(F, Var::t, decomp.size(i), F.one()) -
                             UniPoly::constant(F, Var::t, F.one()));
            elems.push_back(std::move(q));
            prov.push_back("kernel");
            continue;
        }
        if (i >= decomp.r) {
            // short rows have no closed-form generator; take the reference one
            if (!fallback) fallback = oracle_gb(spec, decomp, diagram.lambda);
            elems.push_back(fallback->element(i));
            prov.push_back("oracle");
            continue;
        }

        std::vector<FieldElement> marks;
        for (long j = 0; j < drow.box_count(); ++j)
            if (drow.marked[(size_t)j]) marks.push_back(drow.boxes[(size_t)j]);
        RowFunction rf = build_row_function(decomp, interp, i, marks);

        ModuleElement g = ModuleElement::zero(F, nrows);
        for (int k = i; k < nrows; ++k) {
            std::vector<FieldElement> cs;
            cs.reserve((size_t)decomp.size(k));
            for (long j = 0; j < decomp.size(k); ++j) cs.push_back(rf.eval(decomp.point(k, j)));
            g.set_row(k, UniPoly(F, Var::t, std::move(cs)));
        }

        // the leading entry must be exactly prod (t - marked root)
        UniPoly expect = poly_from_roots(F, Var::t, marks);
        if (g.row(i) != expect) {
            std::ostringstream os;
            os << "interpolation_gb: row " << i + 1 << " generator has leading entry "
               << g.row(i).str() << " instead of " << expect.str();
            throw std::runtime_error(os.str());
        }
        elems.push_back(std::move(g));
        prov.push_back("interpolation");
    }
    return GroebnerBasis(std::move(elems), false, std::move(prov));
}

} // namespace agc
