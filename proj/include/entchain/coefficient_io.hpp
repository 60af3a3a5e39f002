#pragma once

#include <string>

#include "entchain/chain.hpp"

namespace entchain {

/// Coefficient files are JSON objects of the form
///   {"n": int, "p": int,
///    "coefficients": [{"sites": [int, ...], "re": float, "im": float}, ...]}
/// with the same validation rules as BlockState::build (strict mode).

/// Parses a coefficient file from JSON text.  Throws ValidationError with
/// positional context on malformed JSON, plus the usual BlockState errors.
BlockState blockStateFromJsonText(const std::string& text);

/// Reads and parses the file at `path`.
BlockState blockStateFromJsonFile(const std::string& path);

/// Serializes a block state back to the file schema.
std::string blockStateToJsonText(const BlockState& state);

}  // namespace entchain
