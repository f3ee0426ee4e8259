#include "agc/diagram.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace agc {

long DiagramRow::marked_count() const {
    long c = 0;
    for (char m : marked) c += m ? 1 : 0;
    return c;
}

std::string DiagramRow::pattern() const {
    std::string s;
    for (char m : marked) s.push_back(m ? 'X' : '.');
    return s;
}

long RootDiagram::empty_boxes() const {
    long total = 0;
    for (const auto& row : rows) total += row.empty_count();
    return total;
}

long empty_boxes(const RootDiagram& d) { return d.empty_boxes(); }

bool same_marks(const RootDiagram& a, const RootDiagram& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].marked != b.rows[i].marked || a.rows[i].box_exponents != b.rows[i].box_exponents)
            return false;
    return true;
}

namespace {

DiagramRow make_boxes(const Field& F, long len) {
    // roots of t^len - 1: the len-th roots of unity, ascending by generator
    // exponent; len divides q-1 because orbit lengths divide ord(alpha)
    long q1 = (long)F.order() - 1;
    if (q1 % len != 0) throw std::runtime_error("diagram: orbit length does not divide q-1");
    long step = q1 / len;
    DiagramRow row;
    for (long j = 0; j < len; ++j) {
        row.box_exponents.push_back(j * step);
        row.boxes.push_back(F.generator().pow(j * step));
    }
    row.marked.assign((size_t)len, 0);
    return row;
}

void mark_roots(DiagramRow& row, const UniPoly& lead, const Field& F) {
    long q1 = (long)F.order() - 1;
    long len = row.box_count();
    long step = q1 / len;
    for (const auto& root : roots_in_field(lead)) {
        if (root.is_zero()) throw std::runtime_error("diagram: zero root in leading polynomial");
        long e = (long)root.log();
        if (e % step != 0)
            throw std::runtime_error("diagram: leading polynomial root outside the row boxes");
        row.marked[(size_t)(e / step)] = 1;
    }
    if (row.marked_count() != lead.degree())
        throw std::runtime_error("diagram: leading polynomial is not squarefree split");
}

} // namespace

RootDiagram diagram_from_gb(const GroebnerBasis& gb, const OrbitDecomposition& decomp,
                            long lambda, const std::string& provenance) {
    const Field& F = decomp.orbits[0].points[0].x.field();
    RootDiagram d;
    d.lambda = lambda;
    for (int i = 0; i < decomp.nrows(); ++i) {
        DiagramRow row = make_boxes(F, decomp.size(i));
        mark_roots(row, gb.leading_poly(i), F);
        row.provenance = provenance;
        d.rows.push_back(std::move(row));
    }
    return d;
}

RootDiagram diagram_oracle(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda) {
    return diagram_from_gb(oracle_gb(spec, decomp, lambda), decomp, lambda, "oracle");
}

RootDiagram diagram_fast(const CurveSpec& spec, const OrbitDecomposition& decomp, long lambda) {
    if (lambda >= decomp.n) throw std::invalid_argument("diagram_fast: lambda must be < n");
    const Field& F = spec.field;
    long a = spec.a, b = spec.b;
    long rho1 = decomp.rho1, rho2 = decomp.rho2, rho3 = decomp.rho3;

    if (decomp.r >= 1 && decomp.nu != rho1 * b) {
        std::ostringstream os;
        os << "diagram_fast: ord(alpha) = " << decomp.nu << " differs from rho1*b = "
           << rho1 * b << "; the closed-form unmarked set cannot tile the row "
           << "(curve outside the supported class, use the oracle route)";
        throw std::runtime_error(os.str());
    }

    RootDiagram oracle = diagram_oracle(spec, decomp, lambda);

    RootDiagram d;
    d.lambda = lambda;
    for (int i = 0; i < decomp.nrows(); ++i) {
        bool is_long = i < decomp.r;
        long base = (long)i * rho1 * b; // (i-1) rho1 b with 1-based rows
        if (!is_long || lambda < base) {
            // short rows and sub-threshold long rows come from the reference
            DiagramRow row = oracle.rows[(size_t)i];
            row.provenance = "oracle";
            d.rows.push_back(std::move(row));
            continue;
        }

        DiagramRow row = make_boxes(F, decomp.size(i));
        if (lambda >= rho2 * a + rho3 * b + base) {
            row.provenance = "closed-form-empty"; // nothing marked
        } else {
            // partial row: unmark alpha^-(beta + t gamma) over the index box
            std::set<long> empty_exps;
            for (long beta = 0; beta < b; ++beta) {
                for (long gamma = 0; gamma < rho1; ++gamma) {
                    if (base + beta * a + gamma * b > lambda) continue;
                    FieldElement root = spec.alpha.pow(-(beta + spec.t_exp * gamma));
                    empty_exps.insert((long)root.log());
                }
            }
            long q1 = (long)F.order() - 1;
            long step = q1 / row.box_count();
            for (long j = 0; j < row.box_count(); ++j)
                row.marked[(size_t)j] = empty_exps.count(j * step) ? 0 : 1;
            for (long e : empty_exps)
                if (e % step != 0)
                    throw std::runtime_error("diagram_fast: unmarked element is not a row box");
            row.provenance = "closed-form-partial";
        }

        if (row.marked != oracle.rows[(size_t)i].marked) {
            std::ostringstream os;
            os << "diagram_fast: closed-form row " << i + 1 << " (" << row.pattern()
               << ") disagrees with the oracle row (" << oracle.rows[(size_t)i].pattern()
               << ") at lambda=" << lambda
               << "; check the unmarked-set exponent convention -(beta + t*gamma) "
                  "versus -(beta + b*gamma)";
            throw std::runtime_error(os.str());
        }
        d.rows.push_back(std::move(row));
    }
    return d;
}

} // namespace agc
