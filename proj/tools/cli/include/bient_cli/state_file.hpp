#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "bient/entanglement.hpp"
#include "bient/error.hpp"

// State file schema (UTF-8 JSON object, no other keys allowed):
//
//   {
//     "dims": [2, 3],
//     "amplitudes": [[re, im], [re, im], ...]
//   }
//
// `dims` is [d_A, d_B] with d_A = 2 and d_B in {2, 3}; `amplitudes` holds
// d_A*d_B [re, im] pairs ordered by composite index d_B*i + j.

namespace bient::cli {

/// Malformed state file. `where` is "line L, column C" for syntax errors or
/// a field path such as "amplitudes[3][1]" for schema errors.
class ParseError : public Error {
  public:
    ParseError(std::string where, const std::string& what)
        : Error("state file: " + where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

  private:
    std::string where_;
};

class UnsupportedDimensionError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

struct ParseOptions {
    bool renormalize = false;
};

PureState parse_state_file(std::string_view text, const ParseOptions& options = {});

PureState load_state_file(const std::string& path, const ParseOptions& options = {});

/// Full-precision (17 significant digit) rendering that parses back exactly.
std::string render_state_file(const PureState& psi);

} // namespace bient::cli
