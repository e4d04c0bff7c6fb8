#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "adecox/cox.hpp"
#include "adecox/curves.hpp"
#include "adecox/flag.hpp"

namespace adecox {

using Json = nlohmann::ordered_json;

enum class Format { json, csv };

Format parse_format(const std::string& text);

/// Bad user input; the CLI maps it to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  SurfaceFamily family;
  std::optional<SurfaceConfigD> points;  // D-family only
  int max_degree = 4;
  Format format = Format::json;
};

/// Parses "0,1,1/2,-3". Throws InputError on malformed entries.
SurfaceConfigD parse_points(const std::string& text);

/// A command's output: the JSON document, the flat table used for CSV, and the exit code.
struct Document {
  Json json;
  std::vector<std::vector<std::string>> table;  // first row is the header; empty if not tabular
  int exit_code = 0;
};

/// Serialized document, newline-terminated. CSV of a non-tabular document throws InputError.
std::string render(const Document& doc, Format format);

Json to_json(const DivisorClass& d);
Json to_json(const Polynomial& p, const std::vector<std::string>& names);

Document cmd_enumerate(const RunConfig& cfg, CurveKind what);
/// which: sym2, weights, hilbert, census or git.
Document cmd_verify(const RunConfig& cfg, const std::string& which);
Document cmd_quadrics(const RunConfig& cfg);

}  // namespace adecox
