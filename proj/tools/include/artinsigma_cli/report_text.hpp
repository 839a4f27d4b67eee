#pragma once

#include <string>
#include <string_view>

#include <artinsigma/io.hpp>

namespace artinsigma::cli {

/// Indented text form of a JSON object. Scalars, empty containers and arrays
/// of scalars are written inline as compact JSON; other values open a nested
/// block two spaces deeper. Array elements are introduced by "- ".
std::string render_text(const Json& doc);

/// Inverse of render_text. Throws InputError on malformed text.
Json parse_text(std::string_view text);

}  // namespace artinsigma::cli
