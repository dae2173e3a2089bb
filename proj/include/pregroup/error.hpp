#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pregroup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(std::string atom)
      : Error("unknown atom '" + atom + "'"), atom_(std::move(atom)) {}
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// Malformed type string. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Aggregates every problem found while validating an input file.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what_file, std::vector<std::string> problems)
      : Error(format(what_file, problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string format(const std::string& what_file,
                            const std::vector<std::string>& problems) {
    std::string out = what_file + ": " + std::to_string(problems.size()) + " problem(s)";
    for (const auto& p : problems) out += "\n  - " + p;
    return out;
  }
  std::vector<std::string> problems_;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace pregroup
