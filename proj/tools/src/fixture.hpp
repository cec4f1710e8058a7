#pragma once

#include <string>
#include <vector>

namespace sfc::cli {

/// Pinned-output store: the first run of a command line records its output
/// under `dir`; later runs must reproduce it byte for byte or fail with
/// FixtureMismatch.
void check_fixture(const std::string& dir, const std::vector<std::string>& args, const std::string& output);

std::string fixture_key(const std::vector<std::string>& args);

}  // namespace sfc::cli
