#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace luagfx::zip {

struct Entry {
  std::string path;
  std::string data;

  bool operator==(const Entry&) const = default;
};

class ZipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes a zip archive with stored (uncompressed) entries in the given order. Every
/// entry carries the same fixed timestamp, so equal input gives equal bytes.
std::vector<std::uint8_t> write_archive(const std::vector<Entry>& entries);

/// Reads back an archive of stored entries, checking each CRC-32.
std::vector<Entry> read_archive(const std::vector<std::uint8_t>& bytes);

}  // namespace luagfx::zip
