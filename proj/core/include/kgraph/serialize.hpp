// JSON encodings. Integers are written as JSON numbers when they fit in 64
// bits and as decimal strings otherwise; rationals are always "p/q" (or "p")
// strings. Graph input accepts integers of any size as numbers or strings.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgraph/decider.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/ktheory.hpp"
#include "kgraph/oracle.hpp"

namespace kgraph {

using Json = nlohmann::ordered_json;

/// Parses JSON text keeping every integer literal exact. Non-integer
/// number literals are kept as their source text (a string).
/// Throws Error(Parse).
Json parse_json_exact(std::string_view text);

/// Throws Error(Parse) for anything but an integer number or a decimal
/// integer string.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// {"k": int, "vertices": [...], "matrices": [[[...]]]}. Throws Error(Parse).
RawGraph graph_from_json(const Json& j);
RawGraph parse_graph(std::string_view text);
/// Throws Error(Io) when the file cannot be read.
std::string read_text_file(const std::string& path);

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);

Json graph_to_json(const KGraph& g);
/// Single line, no trailing newline.
std::string graph_to_jsonl(const KGraph& g);

Json violations_to_json(const std::vector<Violation>& violations);
Json cycle_to_json(const KGraph& g, const CycleReport& report);
Json t2_to_json(const KGraph& g, const T2Data& t2);
Json certificate_to_json(const Certificate& c);
/// Inverse of certificate_to_json. Throws Error(Parse).
Certificate certificate_from_json(const Json& j);
Json verdict_to_json(const KGraph& g, const Verdict& v);
Json coker_to_json(const CokerPresentation& p);
Json witness_to_json(const PositiveWitness& w);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace kgraph
