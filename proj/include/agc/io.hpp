#ifndef AGC_IO_HPP
#define AGC_IO_HPP

#include <string>

#include <json.hpp>

#include "agc/diagram.hpp"
#include "agc/encoder.hpp"
#include "agc/interp.hpp"

namespace agc {

using json = nlohmann::json;

json field_to_json(const Field& field);

/// Curve config object:
///   {"p":2,"m":2,"modulus":[1,1,1],"f":[0,1,...],"g":[...],
///    "alpha":2 or "gen^1","t_exp":3}
/// or a preset shorthand:
///   {"preset":"x_q2r","q":2,"r":1} / {"preset":"hermitian","q":2}
///   / {"preset":"quotient_hermitian","q":5,"m":3}
json curve_to_json(const CurveSpec& spec);
CurveSpec curve_from_json(const json& j);

/// "x_q2r(2,1)", "hermitian(3)", "quotient_hermitian(5,3)"
CurveSpec preset_from_string(const std::string& text);

/// Loads from a file path when one exists, otherwise parses a preset string.
CurveSpec curve_from_source(const std::string& path_or_preset);

json validation_to_json(const ValidationReport& rep);
json orbits_to_json(const OrbitDecomposition& decomp);
json diagram_to_json(const RootDiagram& d);
json genmat_to_json(const GenMatrix& mat);

/// {"reduced":bool,"provenance":[...],"elements":[[[codes...],...],...]} with
/// rows little-endian in t.
json gb_to_json(const GroebnerBasis& gb);
GroebnerBasis gb_from_json(const json& j, const Field& field);

json info_positions_to_json(const InfoPositions& positions);
json codeword_to_json(const Codeword& cw);

} // namespace agc

#endif
