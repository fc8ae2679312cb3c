#include "source.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dlct/catalog.hpp"

namespace dlct::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    if (pos > start) out.push_back(text.substr(start, pos - start));
  }
  return out;
}

unsigned require_n(const FunctionSpec& spec, const char* what) {
  if (!spec.n) throw UsageError(std::string(what) + " needs --n");
  return *spec.n;
}

FieldCtx field_for(const FunctionSpec& spec, unsigned n) { return FieldCtx(n, spec.modulus); }

}  // namespace

std::uint64_t parse_integer(std::string_view text) {
  text = trim(text);
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

Vbf parse_lut_text(std::string_view text) {
  auto tokens = split_tokens(text);
  std::optional<unsigned> n;
  std::optional<unsigned> m;
  std::size_t first = 0;
  while (first < tokens.size() && tokens[first].find('=') != std::string_view::npos) {
    const auto tok = tokens[first];
    const auto eq = tok.find('=');
    const auto key = tok.substr(0, eq);
    const auto value = static_cast<unsigned>(parse_integer(tok.substr(eq + 1)));
    if (key == "n") {
      n = value;
    } else if (key == "m") {
      m = value;
    } else {
      throw UsageError("unknown header field '" + std::string(key) + "'");
    }
    ++first;
  }
  std::vector<Word> lut;
  lut.reserve(tokens.size() - first);
  for (std::size_t t = first; t < tokens.size(); ++t) {
    const std::uint64_t v = parse_integer(tokens[t]);
    if (v > UINT32_MAX) throw UsageError("entry too large: " + std::string(tokens[t]));
    lut.push_back(static_cast<Word>(v));
  }
  if (lut.empty()) throw UsageError("lookup table is empty");
  if (!n) {
    if (!std::has_single_bit(lut.size())) throw UsageError("table length must be a power of two without a header");
    n = static_cast<unsigned>(std::countr_zero(lut.size()));
  }
  if (!m) m = *n;
  return Vbf::from_lut(*n, *m, std::move(lut));
}

std::vector<Term> parse_poly(std::string_view text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t plus = text.find('+', pos);
    const std::string_view raw = trim(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
    if (raw.empty()) throw UsageError("empty term in polynomial '" + std::string(text) + "'");
    std::string_view coeff = "1";
    std::string_view mono = raw;
    if (const auto star = raw.find('*'); star != std::string_view::npos) {
      coeff = trim(raw.substr(0, star));
      mono = trim(raw.substr(star + 1));
    } else if (raw.front() != 'x') {
      coeff = raw;
      mono = {};
    }
    std::uint64_t exponent = 0;
    if (!mono.empty()) {
      if (mono.front() != 'x') throw UsageError("expected x in term '" + std::string(raw) + "'");
      mono.remove_prefix(1);
      mono = trim(mono);
      if (mono.empty()) {
        exponent = 1;
      } else {
        if (mono.front() != '^') throw UsageError("expected ^ in term '" + std::string(raw) + "'");
        exponent = parse_integer(mono.substr(1));
      }
    }
    const std::uint64_t c = parse_integer(coeff);
    if (c > UINT32_MAX) throw UsageError("coefficient too large in term '" + std::string(raw) + "'");
    terms.push_back({static_cast<Word>(c), exponent});
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return terms;
}

Vbf load_function(const FunctionSpec& spec) {
  const int sources = int{spec.lut_file.has_value()} + int{spec.poly.has_value()} + int{spec.catalog.has_value()};
  if (sources != 1) throw UsageError("give exactly one of --lut-file, --poly, --catalog");

  if (spec.lut_file) {
    std::ifstream in(*spec.lut_file);
    if (!in) throw UsageError("cannot read " + *spec.lut_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_lut_text(buffer.str());
  }
  if (spec.poly) {
    const FieldCtx ctx = field_for(spec, require_n(spec, "--poly"));
    const auto terms = parse_poly(*spec.poly);
    return Vbf::from_univariate(ctx, terms);
  }

  const std::string& name = *spec.catalog;
  if (name == "inverse") return make_inverse(field_for(spec, require_n(spec, "inverse")));
  if (name == "gold") {
    if (!spec.i) throw UsageError("gold needs --i");
    return make_gold(field_for(spec, require_n(spec, "gold")), *spec.i);
  }
  if (name == "quadratic") {
    const FieldCtx ctx = field_for(spec, require_n(spec, "quadratic"));
    const unsigned pairs = ctx.n() * (ctx.n() - 1) / 2;
    if (pairs == 0) throw UsageError("quadratic needs n >= 2");
    const auto terms = random_quadratic_terms(ctx, std::min(3u, pairs), spec.seed);
    return make_quadratic(ctx, terms);
  }
  if (name == "bracken-leander") {
    if (!spec.k) throw UsageError("bracken-leander needs --k");
    return make_bracken_leander(*spec.k);
  }
  if (name == "kasami") {
    if (!spec.k) throw UsageError("kasami needs --k");
    return make_kasami(require_n(spec, "kasami"), *spec.k);
  }
  if (name == "table1") {
    if (!spec.index) throw UsageError("table1 needs --index");
    return optimal_sbox(*spec.index);
  }
  throw UsageError("unknown catalog function '" + name + "' (known: " + kCatalogNames + ")");
}

std::string describe(const FunctionSpec& spec) {
  std::ostringstream out;
  auto field_suffix = [&] {
    if (spec.n) out << " over GF(2^" << *spec.n << ")";
  };
  if (spec.lut_file) {
    out << "lut " << *spec.lut_file;
  } else if (spec.poly) {
    out << "poly " << *spec.poly;
    field_suffix();
  } else if (spec.catalog) {
    out << *spec.catalog;
    if (spec.i) out << " i=" << *spec.i;
    if (spec.k) out << " k=" << *spec.k;
    if (spec.index) out << " index=" << *spec.index;
    if (*spec.catalog == "quadratic") out << " seed=" << spec.seed;
    field_suffix();
  }
  return out.str();
}

}  // namespace dlct::cli
