#pragma once

// Input documents (`ring QQ[x,y]; ideal (...);`) and the JSON result format.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "closure/normalize.hpp"

namespace closure {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& expected, const std::string& found)
      : Error("SyntaxError", "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                 ": expected " + expected + ", found " + found),
        line_(line),
        column_(column),
        expected_(expected) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

struct InputDocument {
  RingPtr ring;
  std::vector<Polynomial> generators;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Throws SyntaxError, UnknownVariable (with position) or NonPrimeModulus.
InputDocument parse_input(std::string_view text, const MonomialOrder& order = MonomialOrder::degrevlex());

/// A single polynomial in the input syntax over an existing ring.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Canonical text; parse_input(print_input(doc)) reproduces doc.
std::string print_input(const InputDocument& doc);

struct RunOptions {
  std::string order = "degrevlex";
  std::string radical = "auto";
  int max_iterations = 32;
  bool trace = false;
};

/// Relation text as written in results: integer coefficients, no content.
std::string relation_text(const Polynomial& p);

/// Compact JSON with a fixed key order, schema "closure-kit/1".
std::string emit_json(const NormalizationResult& result, const RingPtr& input_ring, const RunOptions& options);

/// Human-readable listing of the components (and trace, if requested).
std::string format_text(const NormalizationResult& result, const RunOptions& options);

}  // namespace closure
