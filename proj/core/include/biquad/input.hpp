#pragma once

#include "biquad/fano.hpp"
#include "biquad/pencil.hpp"
#include "biquad/reduction.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biquad {

/// Malformed input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses an integral quadratic form in u, v, w, x, y, z, e.g.
/// "uv + uw - 4vw + 2*v*z + x^2". `*` is optional between factors and like
/// terms are combined. `line` and `column` locate text[0] for error reporting.
QuadraticForm parse_form(std::string_view text, std::size_t line = 1, std::size_t column = 1);

struct FanoWitnessInput {
  std::uint64_t prime = 0;
  GrassmannChart chart = GrassmannChart::standard();
  std::array<std::uint64_t, kChartParameters> coords{};
};

struct SingularWitnessInput {
  std::uint64_t prime = 0;
  ProjectivePoint coords{};
};

/// Parsed input file:
///   Q1: <form>
///   Q2: <form>
///   WITNESS: fano p=<prime> chart=<i>,<j> coords=<a1,...,a8>
///   WITNESS: singular p=<prime> coords=<c1,...,c6>
/// Blank lines and lines starting with '#' are ignored. Witness coordinates
/// are reduced mod p; chart pivots are 0-based.
struct PencilInput {
  QuadraticForm q1;
  QuadraticForm q2;
  std::vector<FanoWitnessInput> fano_witnesses;
  std::vector<SingularWitnessInput> singular_witnesses;

  PencilOfQuadrics pencil() const { return {q1, q2}; }
};

PencilInput parse_input(std::string_view text);
/// Throws std::runtime_error if the file cannot be read.
PencilInput read_input_file(const std::string& path);

/// Canonical text of an input; parse_input(format_input(x)) reproduces x.
std::string format_input(const PencilInput& in);

}  // namespace biquad
