#include "luagfx/zip.hpp"

#include <zlib.h>

#include <limits>

namespace luagfx::zip {
namespace {

constexpr std::uint32_t kLocalSignature = 0x04034b50;
constexpr std::uint32_t kCentralSignature = 0x02014b50;
constexpr std::uint32_t kEndSignature = 0x06054b50;
constexpr std::uint16_t kVersion = 20;
constexpr std::uint16_t kMadeByUnix = (3 << 8) | kVersion;
constexpr std::uint16_t kDosTime = 0;                         // 00:00:00
constexpr std::uint16_t kDosDate = (0 << 9) | (1 << 5) | 1;   // 1980-01-01
constexpr std::uint32_t kRegularFileMode = 0100644u << 16;

class ByteWriter {
 public:
  void u16(std::uint16_t v) {
    bytes.push_back(static_cast<std::uint8_t>(v));
    bytes.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    u16(static_cast<std::uint16_t>(v));
    u16(static_cast<std::uint16_t>(v >> 16));
  }
  void text(const std::string& s) { bytes.insert(bytes.end(), s.begin(), s.end()); }

  std::vector<std::uint8_t> bytes;
};

class ByteReader {
 public:
  ByteReader(const std::vector<std::uint8_t>& bytes, std::size_t at) : bytes_(bytes), at_(at) {}

  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(bytes_[at_] | (bytes_[at_ + 1] << 8));
    at_ += 2;
    return v;
  }
  std::uint32_t u32() {
    std::uint32_t low = u16();
    return low | (static_cast<std::uint32_t>(u16()) << 16);
  }
  std::string text(std::size_t n) {
    need(n);
    std::string s(bytes_.begin() + static_cast<std::ptrdiff_t>(at_), bytes_.begin() + static_cast<std::ptrdiff_t>(at_ + n));
    at_ += n;
    return s;
  }
  void skip(std::size_t n) {
    need(n);
    at_ += n;
  }

 private:
  void need(std::size_t n) const {
    if (at_ + n > bytes_.size()) throw ZipError("truncated archive");
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t at_;
};

std::uint32_t checksum(const std::string& data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  return static_cast<std::uint32_t>(
      crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

}  // namespace

std::vector<std::uint8_t> write_archive(const std::vector<Entry>& entries) {
  if (entries.size() > std::numeric_limits<std::uint16_t>::max()) throw ZipError("too many entries");
  ByteWriter out;
  ByteWriter central;
  for (const Entry& entry : entries) {
    if (entry.path.empty() || entry.path.size() > 0xffff) throw ZipError("invalid entry path");
    if (entry.data.size() > 0xffffffffull || out.bytes.size() > 0xffffffffull) throw ZipError("archive too large");
    const auto offset = static_cast<std::uint32_t>(out.bytes.size());
    const auto size = static_cast<std::uint32_t>(entry.data.size());
    const std::uint32_t crc = checksum(entry.data);
    const auto name_length = static_cast<std::uint16_t>(entry.path.size());

    out.u32(kLocalSignature);
    out.u16(kVersion);
    out.u16(0);  // flags
    out.u16(0);  // stored
    out.u16(kDosTime);
    out.u16(kDosDate);
    out.u32(crc);
    out.u32(size);
    out.u32(size);
    out.u16(name_length);
    out.u16(0);  // extra field length
    out.text(entry.path);
    out.text(entry.data);

    central.u32(kCentralSignature);
    central.u16(kMadeByUnix);
    central.u16(kVersion);
    central.u16(0);
    central.u16(0);
    central.u16(kDosTime);
    central.u16(kDosDate);
    central.u32(crc);
    central.u32(size);
    central.u32(size);
    central.u16(name_length);
    central.u16(0);  // extra
    central.u16(0);  // comment
    central.u16(0);  // disk
    central.u16(0);  // internal attributes
    central.u32(kRegularFileMode);
    central.u32(offset);
    central.text(entry.path);
  }
  const auto central_offset = static_cast<std::uint32_t>(out.bytes.size());
  const auto central_size = static_cast<std::uint32_t>(central.bytes.size());
  out.bytes.insert(out.bytes.end(), central.bytes.begin(), central.bytes.end());
  out.u32(kEndSignature);
  out.u16(0);
  out.u16(0);
  out.u16(static_cast<std::uint16_t>(entries.size()));
  out.u16(static_cast<std::uint16_t>(entries.size()));
  out.u32(central_size);
  out.u32(central_offset);
  out.u16(0);  // comment length
  return std::move(out.bytes);
}

std::vector<Entry> read_archive(const std::vector<std::uint8_t>& bytes) {
  constexpr std::size_t kEndRecordSize = 22;
  if (bytes.size() < kEndRecordSize) throw ZipError("archive too small");
  ByteReader end(bytes, bytes.size() - kEndRecordSize);
  if (end.u32() != kEndSignature) throw ZipError("missing end of central directory");
  end.skip(4);
  std::uint16_t count = end.u16();
  end.skip(2);
  end.skip(4);
  std::uint32_t central_offset = end.u32();

  std::vector<Entry> entries;
  ByteReader central(bytes, central_offset);
  for (std::uint16_t i = 0; i < count; ++i) {
    if (central.u32() != kCentralSignature) throw ZipError("bad central directory entry");
    central.skip(6);
    if (central.u16() != 0) throw ZipError("only stored entries are supported");
    central.skip(4);
    std::uint32_t crc = central.u32();
    std::uint32_t compressed = central.u32();
    central.skip(4);
    std::uint16_t name_length = central.u16();
    std::uint16_t extra_length = central.u16();
    std::uint16_t comment_length = central.u16();
    central.skip(8);
    std::uint32_t local_offset = central.u32();
    std::string name = central.text(name_length);
    central.skip(std::size_t{extra_length} + comment_length);

    ByteReader local(bytes, local_offset);
    if (local.u32() != kLocalSignature) throw ZipError("bad local header for " + name);
    local.skip(22);
    std::uint16_t local_name = local.u16();
    std::uint16_t local_extra = local.u16();
    local.skip(std::size_t{local_name} + local_extra);
    Entry entry{std::move(name), local.text(compressed)};
    if (checksum(entry.data) != crc) throw ZipError("CRC mismatch for " + entry.path);
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace luagfx::zip
