#pragma once

#include <memory>
#include <string>

#include "resmax/functions.hpp"
#include "resmax/oracle.hpp"

namespace resmax {

/// Builds an oracle from a JSON instance description. Supported types:
///
///   {"type":"modular","weights":[...]}
///   {"type":"tabular","m":3,"values":{"{}":0.0,"{0}":2.0,...}}
///   {"type":"coverage","universe_weights":[...],"covers":[[...],...]}
///   {"type":"logdet","d":2,"matrices":[[[...],[...]],...]}
///   {"type":"logdet_random","m":10,"d":20,"seed":42}
///
/// Structural problems (bad JSON, unknown type, missing or ill-typed
/// fields) raise ParseError; semantically invalid data (negative weights,
/// non-monotone tables, asymmetric matrices) raises InvalidInputError
/// from the function constructors.
std::shared_ptr<ObjectiveOracle> parse_instance(const std::string& json_text);

/// parse_instance() applied to the contents of a file.
std::shared_ptr<ObjectiveOracle> load_instance(const std::string& path);

/// Serializes a log-det oracle to the "logdet" JSON form with all matrix
/// entries written in shortest round-trip notation, so a parse of the
/// output evaluates bit-identically.
std::string serialize_logdet_instance(const LogDetFunction& f);

/// Whole-file helpers used by the command-line tool.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace resmax
