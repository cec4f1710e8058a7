#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sfc/bigint.hpp"

namespace sfc::cli {

using Json = nlohmann::ordered_json;

/// Shortest round-trip representation.
std::string real(double x);
std::string integer(std::int64_t x);
std::string integer(const BigInt& x);

std::string dump(const Json& j);

/// Value of "seed=" on a leading '#' comment line, if any.
std::optional<std::uint64_t> embedded_seed(std::string_view text);

}  // namespace sfc::cli
