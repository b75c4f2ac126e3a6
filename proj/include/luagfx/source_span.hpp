#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace luagfx {

/// Location of a region of source text. Line and column are 1-based, column counts bytes.
struct SourceSpan {
  int line = 1;
  int column = 1;
  std::size_t byte_offset = 0;
  std::size_t length = 0;

  std::size_t end() const { return byte_offset + length; }

  bool contains(const SourceSpan& inner) const {
    return inner.byte_offset >= byte_offset && inner.end() <= end();
  }

  bool operator==(const SourceSpan&) const = default;
};

/// Smallest span covering both `first` and `last`; `first` must start no later than `last`.
inline SourceSpan join(const SourceSpan& first, const SourceSpan& last) {
  SourceSpan out = first;
  std::size_t end = last.end() > first.end() ? last.end() : first.end();
  out.length = end - first.byte_offset;
  return out;
}

/// Base for errors that point at a line of the script.
class SourceError : public std::runtime_error {
 public:
  SourceError(std::string message, SourceSpan span)
      : std::runtime_error("line " + std::to_string(span.line) + ": " + message),
        message_(std::move(message)),
        span_(span) {}

  const std::string& message() const { return message_; }
  const SourceSpan& span() const { return span_; }
  int line() const { return span_.line; }

 private:
  std::string message_;
  SourceSpan span_;
};

}  // namespace luagfx
