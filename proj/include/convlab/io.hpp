#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "convlab/realize.hpp"

namespace convlab {

/// Parse failure with the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

  std::size_t line;
};

/// `<c0>` for prime fields, `<c0>:<c1>:...:<c{m-1}>` for extension fields.
std::string format_element(const Field& f, fe a);
fe parse_element(const Field& f, const std::string& tok);

/// `field <p> <m> <c0> ... <cm>` with modulus coefficients low-degree first.
std::string format_field(const Field& f);

/// `mat <rows> <cols>` followed by one line of serialized elements per row.
void write_mat(std::ostream& os, const Mat& m);

/// Every file begins with the `convlab v1` magic line and a field header.
void write_code(std::ostream& os, const ConvCode& c);
void write_realization(std::ostream& os, const Realization& r);
void write_markov(std::ostream& os, const MarkovSeq& seq);

using AnyObject = std::variant<ConvCode, Realization, MarkovSeq>;

/// Parses a code, realization, or Markov-sequence file; throws ParseError on
/// malformed input. Markov files carry no degree, so the degree is derived
/// from the minimal-partial-realization rank formula and checked against the
/// sequence length.
AnyObject read_any(std::istream& is);

AnyObject read_file(const std::string& path);
void write_file(const std::string& path, const AnyObject& obj);

}  // namespace convlab
