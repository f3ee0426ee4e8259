#include "agc/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace agc {

json field_to_json(const Field& field) {
    return json{{"p", field.characteristic()},
                {"m", field.degree()},
                {"modulus", field.modulus()},
                {"generator", field.generator().code()}};
}

json curve_to_json(const CurveSpec& spec) {
    json j = field_to_json(spec.field);
    j["f"] = spec.f.codes();
    j["g"] = spec.g.codes();
    j["alpha"] = spec.alpha.code();
    j["t_exp"] = spec.t_exp;
    j["name"] = spec.name;
    j["a"] = spec.a;
    j["b"] = spec.b;
    j["genus"] = spec.genus;
    return j;
}

namespace {

CurveSpec curve_from_preset_json(const json& j) {
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "hermitian") return preset_hermitian(j.at("q").get<long>());
    if (preset == "x_q2r") return preset_x_q2r(j.at("q").get<long>(), j.at("r").get<long>());
    if (preset == "quotient_hermitian")
        return preset_quotient_hermitian(j.at("q").get<long>(), j.at("m").get<long>());
    throw std::invalid_argument("unknown preset '" + preset + "'");
}

} // namespace

CurveSpec curve_from_json(const json& j) {
    if (j.contains("preset")) return curve_from_preset_json(j);

    uint32_t p = j.at("p").get<uint32_t>();
    uint32_t m = j.at("m").get<uint32_t>();
    Field F = j.contains("modulus")
                  ? Field::make(p, m, j.at("modulus").get<std::vector<uint32_t>>())
                  : Field::make(p, m);

    UniPoly f = UniPoly::from_codes(F, Var::y, j.at("f").get<std::vector<uint32_t>>());
    UniPoly g = UniPoly::from_codes(F, Var::x, j.at("g").get<std::vector<uint32_t>>());

    FieldElement alpha;
    const json& ja = j.at("alpha");
    if (ja.is_string()) {
        std::string s = ja.get<std::string>();
        if (s.rfind("gen^", 0) != 0)
            throw std::invalid_argument("alpha string must have the form gen^<e>");
        alpha = F.generator().pow(std::stol(s.substr(4)));
    } else {
        alpha = F.element(ja.get<uint32_t>());
    }

    long t_exp = j.at("t_exp").get<long>();
    std::string name = j.value("name", std::string("custom"));
    return make_curve(F, f, g, alpha, t_exp, name);
}

CurveSpec preset_from_string(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("unknown preset '" + text + "' (expected name(args))");
    std::string name = text.substr(0, open);
    std::vector<long> args;
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        args.push_back(std::stol(tok));
    }
    if (name == "hermitian" && args.size() == 1) return preset_hermitian(args[0]);
    if (name == "x_q2r" && args.size() == 2) return preset_x_q2r(args[0], args[1]);
    if (name == "quotient_hermitian" && args.size() == 2)
        return preset_quotient_hermitian(args[0], args[1]);
    throw std::invalid_argument("unknown preset '" + text + "'");
}

CurveSpec curve_from_source(const std::string& path_or_preset) {
    if (std::filesystem::exists(path_or_preset)) {
        std::ifstream in(path_or_preset);
        if (!in) throw std::invalid_argument("cannot open curve file " + path_or_preset);
        json j;
        in >> j;
        return curve_from_json(j);
    }
    return preset_from_string(path_or_preset);
}

json validation_to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return json{{"checks", checks}, {"notes", rep.notes}, {"ok", rep.ok()}};
}

json orbits_to_json(const OrbitDecomposition& decomp) {
    json orbits = json::array();
    for (const auto& orb : decomp.orbits) {
        json points = json::array();
        for (const auto& pt : orb.points) points.push_back({pt.x.code(), pt.y.code()});
        orbits.push_back({{"index", orb.index + 1},
                          {"kind", orb.kind == OrbitKind::Long ? "long" : "short"},
                          {"length", orb.size()},
                          {"base", {orb.points[0].x.code(), orb.points[0].y.code()}},
                          {"distinct_y", orb.y_values.size()},
                          {"points", points}});
    }
    return json{{"n", decomp.n},
                {"r", decomp.r},
                {"s", decomp.s},
                {"nu", decomp.nu},
                {"rho", {decomp.rho1, decomp.rho2, decomp.rho3}},
                {"orbits", orbits}};
}

json diagram_to_json(const RootDiagram& d) {
    json rows = json::array();
    for (size_t i = 0; i < d.rows.size(); ++i) {
        const DiagramRow& row = d.rows[i];
        json marked = json::array();
        for (long j = 0; j < row.box_count(); ++j)
            if (row.marked[(size_t)j]) marked.push_back(row.box_exponents[(size_t)j]);
        rows.push_back({{"row", i + 1},
                        {"boxes", row.box_count()},
                        {"box_exponents", row.box_exponents},
                        {"marked_exponents", marked},
                        {"empty", row.empty_count()},
                        {"provenance", row.provenance}});
    }
    return json{{"lambda", d.lambda}, {"rows", rows}, {"empty_boxes", d.empty_boxes()}};
}

json genmat_to_json(const GenMatrix& mat) {
    json rows = json::array();
    for (const auto& row : mat.rows) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.code());
        rows.push_back(r);
    }
    json basis = json::array();
    for (const auto& mono : mat.basis) basis.push_back({mono.beta, mono.gamma});
    return json{{"k", mat.k()}, {"n", mat.n()}, {"basis", basis}, {"rows", rows}};
}

json gb_to_json(const GroebnerBasis& gb) {
    json elements = json::array();
    for (const auto& elem : gb.elements()) {
        json rows = json::array();
        for (int i = 0; i < elem.nrows(); ++i) rows.push_back(elem.row(i).codes());
        elements.push_back(rows);
    }
    return json{{"reduced", gb.reduced()},
                {"provenance", gb.provenance()},
                {"elements", elements}};
}

GroebnerBasis gb_from_json(const json& j, const Field& field) {
    std::vector<ModuleElement> elems;
    for (const auto& je : j.at("elements")) {
        std::vector<UniPoly> rows;
        for (const auto& jr : je)
            rows.push_back(UniPoly::from_codes(field, Var::t, jr.get<std::vector<uint32_t>>()));
        elems.emplace_back(std::move(rows));
    }
    std::vector<std::string> prov;
    if (j.contains("provenance")) prov = j.at("provenance").get<std::vector<std::string>>();
    return GroebnerBasis(std::move(elems), j.at("reduced").get<bool>(), std::move(prov));
}

json info_positions_to_json(const InfoPositions& positions) {
    json out = json::array();
    for (const auto& m : positions) out.push_back({m.row + 1, m.deg});
    return out;
}

json codeword_to_json(const Codeword& cw) {
    json out = json::array();
    for (const auto& c : cw) out.push_back(c.code());
    return out;
}

} // namespace agc
