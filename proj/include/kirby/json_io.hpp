#pragma once

#include <kirby/alexander.hpp>
#include <kirby/forms.hpp>
#include <kirby/handles.hpp>
#include <kirby/legendrian.hpp>
#include <kirby/linkdiag.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace kirby {

using Json = nlohmann::ordered_json;

// Input parsers. `where` is a JSON-pointer-style location prefix used in
// error messages.
FramedLink framed_link_from_json(const Json& j, const std::string& where = "");
SymmetricForm form_from_json(const Json& j, const std::string& where = "");
HandleComplex complex_from_json(const Json& j, const std::string& where = "");
OrientedFront front_from_json(const Json& j, const std::string& where = "");
std::vector<Move> moves_from_json(const Json& j, const std::string& where = "");
IntVec intvec_from_json(const Json& j, const std::string& where = "");

Json json_matrix(const IntMat& m);
Json json_vector(const IntVec& v);

// Report builders: every CLI output is produced by one of these, so the
// same documents are reachable as library calls.
Json link_invariants_report(const FramedLink& fl);
Json form_report(const SymmetricForm& q);
Json homology_report(const HandleComplex& hc);
Json alexander_report(const OrientedLinkDiagram& d);
Json slice_obstruction_report(const OrientedLinkDiagram& d);
Json legendrian_report(const OrientedFront& f);
Json stein_trace_report(const SteinTrace& t);
Json genus_bound_report(const GenusBound& b);
Json moves_report(const SymmetricForm& start, const MovesResult& r);

// Plain text is rendered from the JSON document, never computed separately.
std::string render_text(const Json& j);

}  // namespace kirby
