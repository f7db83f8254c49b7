// JSON input/output: the seifert/plumbing input schema, and renderers plus
// parsers for the public value types (matrices, Delta tables, labelled roots,
// dg-modules).  Output field order is fixed for reproducible golden files.
#pragma once

#include <optional>
#include <string>

#include "latroot/coeffring.hpp"
#include "latroot/compseq.hpp"
#include "latroot/gradedroot.hpp"
#include "latroot/plumbing.hpp"

// vendored single-header json
#include "json.hpp"

namespace latroot {

using Json = nlohmann::ordered_json;

struct LoadedInput {
    std::optional<SeifertData> seifert;
    PlumbingGraph graph;
};

// Accepts {"seifert": {"e0": int, "arms": [[p,q],...]}} or
// {"plumbing": {"weights": [...], "edges": [[i,j],...], "central": int}}.
LoadedInput parse_input(const Json& j);
Json render_seifert(const SeifertData& s);

Json render_int_matrix(const IntMatrix& m);
Json render_delta(const DeltaSequence& d);
DeltaSequence parse_delta(const Json& j);

Json render_root(const LabelledGradedRoot& r);
LabelledGradedRoot parse_root(const Json& j);

Json render_chain(const DgModule& m);
DgModule parse_chain(const Json& j);

// Canonical chi profile of an input: closed form for Seifert data, Laufer
// iteration for bare plumbing graphs (requires integral canonical class).
std::vector<Int> canonical_profile(const LoadedInput& in, long horizon_override = -1);

}  // namespace latroot
