#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qmain/graph.hpp"

namespace qmain {

/// Malformed graph6 text. offset() is the 0-based byte position of the
/// first offending byte (the header byte for length errors).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and ignores a trailing newline.
Graph graph6_decode(std::string_view text);

}  // namespace qmain
