#pragma once

#include <stdexcept>
#include <string>

namespace uccasnacs {

/// Malformed input data (bad columns, bad XML/JSON, broken trees).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string source = "", int line = 0)
      : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                           : source.empty() ? message
                                            : source + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

/// Gold/predicted (or sentence/passage) inputs that do not line up.
class AlignmentError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace uccasnacs
