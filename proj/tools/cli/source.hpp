#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlct/vbf.hpp"

namespace dlct::cli {

// Bad flags, unknown names, unreadable input: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exactly one of lut_file, poly, catalog selects the function.
struct FunctionSpec {
  std::optional<std::string> lut_file;
  std::optional<std::string> poly;
  std::optional<std::string> catalog;
  std::optional<unsigned> n;
  std::optional<std::uint64_t> modulus;
  std::optional<unsigned> i;
  std::optional<unsigned> k;
  std::optional<unsigned> index;
  std::uint64_t seed = 1;

  bool has_source() const { return lut_file || poly || catalog; }
};

// Decimal or 0x-hex.
std::uint64_t parse_integer(std::string_view text);

// Whitespace/comma separated entries with an optional leading `n=<n> m=<m>` header.
Vbf parse_lut_text(std::string_view text);

// `c*x^e` terms joined by `+`; `x^e`, `x` and a bare constant are accepted as shorthands.
std::vector<Term> parse_poly(std::string_view text);

inline constexpr const char* kCatalogNames = "inverse, gold, quadratic, bracken-leander, kasami, table1";

Vbf load_function(const FunctionSpec& spec);

// Short human-readable name for reports, e.g. "poly 1*x^3 over GF(2^6)".
std::string describe(const FunctionSpec& spec);

}  // namespace dlct::cli
