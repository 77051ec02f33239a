#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "sgspec/error.hpp"
#include "sgspec/signed_graph.hpp"

namespace sgspec {

// Text format, one graph per file:
//
//   sg <n> <m>
//   <u> <v> <+1|-1>      (m lines)
//
// '#' starts a comment that runs to end of line; blank lines are ignored.

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

SignedGraph parse_sg(std::istream& in);
SignedGraph parse_sg(std::string_view text);
SignedGraph read_sg_file(const std::filesystem::path& path);

/// Writes edges sorted by (u, v). parse_sg(write_sg(g)) == g and the bytes are
/// stable.
std::string write_sg(const SignedGraph& g);
void write_sg_file(const std::filesystem::path& path, const SignedGraph& g);

}  // namespace sgspec
