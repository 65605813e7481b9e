#pragma once

// Algebra document format (JSON, schema_version 1) and report helpers.
//
//   {"schema_version": 1, "p": 2, "basis": ["x", "y"],
//    "bracket": [{"left": "x", "right": "y", "value": {"y": 1}}],
//    "pmap": {"x": {"x": 1}}}
//
// Omitted bracket pairs and p-map entries mean zero; integers are reduced
// mod p on load.

#include <string>

#include <nlohmann/json.hpp>

#include "rlie/errors.hpp"
#include "rlie/gfp.hpp"
#include "rlie/rla.hpp"

namespace rlie::io {

using json = nlohmann::ordered_json;

/// Parse and validate; throws ParseError / ValidationError / CapExceeded.
rla::LieAlgebra parse(const json& doc, const Caps& caps = Caps{});
rla::LieAlgebra parse_text(const std::string& text, const Caps& caps = Caps{});
rla::LieAlgebra parse_file(const std::string& path, const Caps& caps = Caps{});

json emit(const rla::LieAlgebra& L);

json subspace_json(const gfp::Subspace& s);
json vec_json(const gfp::Vec& v);

}  // namespace rlie::io
