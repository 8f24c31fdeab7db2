#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "kundupack/degseq.hpp"
#include "kundupack/graph.hpp"

namespace kundu::io {

using Json = nlohmann::ordered_json;

/// One line of whitespace-separated nonnegative integers.
DegreeSequence parse_degree_sequence(std::string_view text);

/// "n m" header followed by m lines "u v" with u < v.
LabeledGraph parse_graph(std::string_view text);

/// {"graph":[[u,v],...],"factor":[[u,v],...]}; an optional "n" field is
/// honored, otherwise n = 2 * |factor|.
KunduRealization parse_kundu_realization(std::string_view text);

/// A factor given as graph text, a JSON edge list, or an object with a
/// "factor" field.
OneFactor parse_factor(std::string_view text);

SwapTrace parse_trace(std::string_view text);

using Instance = std::variant<DegreeSequence, LabeledGraph, KunduRealization>;

/// '{' selects the JSON realization format; a single non-empty line is a
/// degree sequence; anything longer is graph text.
Instance parse_instance(std::string_view text);

std::string format_degree_sequence(const DegreeSequence& seq);
std::string format_graph(const LabeledGraph& g);

Json edges_to_json(const std::vector<Edge>& edges);
Json to_json(const Fingerprint& fp);
Json to_json(const KunduRealization& kr);
Json to_json(const Swap& s);
Json to_json(const SwapTrace& trace);

KunduRealization kundu_from_json(const Json& j);
SwapTrace trace_from_json(const Json& j);

}  // namespace kundu::io
