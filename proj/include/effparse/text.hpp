#pragma once

#include <string>
#include <string_view>

namespace effparse {

// Input text is a sequence of Unicode scalar values.
using Text = std::u32string;
using TextView = std::u32string_view;

/// Decodes UTF-8. Throws std::invalid_argument on malformed input.
Text from_utf8(std::string_view bytes);

std::string to_utf8(TextView text);
std::string to_utf8(char32_t c);

}  // namespace effparse
