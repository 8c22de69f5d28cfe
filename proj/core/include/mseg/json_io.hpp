#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "mseg/characters.hpp"
#include "mseg/core_types.hpp"
#include "mseg/partitions.hpp"

namespace mseg {

/// JSON encodings shared by the CLI and the tests. Emitters use
/// ordered_json so that output is byte-stable; readers throw InvalidInput on
/// anything malformed.
using Json = nlohmann::ordered_json;

/// {"segments": [[i, j], …]}, emitted in right order.
Json to_json(const Multisegment& d);
Multisegment multisegment_from_json(const nlohmann::json& j);
/// The segment list in input order (for character computations).
std::vector<Segment> segments_from_json(const nlohmann::json& j);

/// {"lambda": [i_1, …]}, emitted descending.
Json to_json(const Weight& lambda);
/// Accepts either the object form or a bare array.
Weight weight_from_json(const nlohmann::json& j);

/// {"parts": [..], "color": i}
Json to_json(const ColoredPartition& cp);
ColoredPartition colored_partition_from_json(const nlohmann::json& j);

/// {"components": [{"color": i, "parts": [..]}, …]}. An optional "lambda"
/// on input must agree with the component colors.
Json to_json(const Multipartition& mp);
Multipartition multipartition_from_json(const nlohmann::json& j);

/// {"length": n, "terms": [{"word": [..], "mult": m}, …]}, words ascending.
Json to_json(const Character& c);

Json null_json();
bool is_null_json(const nlohmann::json& j);

template <typename T>
Json to_json(const std::optional<T>& x) {
  return x ? to_json(*x) : null_json();
}

/// nlohmann::json::parse, rethrown as InvalidInput.
nlohmann::json parse_json(std::string_view text);

}  // namespace mseg
