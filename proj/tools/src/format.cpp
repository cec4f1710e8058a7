#include "format.hpp"

#include <charconv>
#include <sstream>

namespace sfc::cli {

std::string real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string integer(std::int64_t x) { return std::to_string(x); }

std::string integer(const BigInt& x) { return to_decimal(x); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<std::uint64_t> embedded_seed(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    auto pos = line.find("seed=");
    if (pos == std::string::npos) continue;
    std::uint64_t seed = 0;
    const char* first = line.data() + pos + 5;
    auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), seed);
    if (ec == std::errc{} && ptr != first) return seed;
  }
  return std::nullopt;
}

}  // namespace sfc::cli
