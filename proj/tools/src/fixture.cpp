#include "fixture.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sfc/edge_list.hpp"
#include "sfc/error.hpp"

namespace sfc::cli {

namespace fs = std::filesystem;

std::string fixture_key(const std::vector<std::string>& args) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (const std::string& a : args) {
    for (unsigned char c : a) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  std::ostringstream key;
  key << std::hex << std::setw(16) << std::setfill('0') << h;
  return key.str();
}

void check_fixture(const std::string& dir, const std::vector<std::string>& args, const std::string& output) {
  const fs::path base = fs::path(dir) / fixture_key(args);
  const fs::path out_path = base.string() + ".out";
  if (fs::exists(out_path)) {
    if (read_file(out_path.string()) != output) {
      throw Error(ErrorKind::FixtureMismatch, "output differs from pinned fixture " + out_path.string());
    }
    return;
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream cmd(base.string() + ".cmd", std::ios::binary);
  for (std::size_t i = 0; i < args.size(); ++i) cmd << (i ? " " : "") << args[i];
  cmd << '\n';
  std::ofstream out(out_path, std::ios::binary);
  out << output;
  if (!cmd || !out) throw Error(ErrorKind::IoError, "cannot write fixture under " + dir);
}

}  // namespace sfc::cli
