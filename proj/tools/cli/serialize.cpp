#include <utility>
#include "serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "source.hpp"

namespace dlct::cli {
namespace {

TableKind kind_from_string(const std::string& s) {
  for (TableKind k : {TableKind::Ddt, TableKind::Walsh, TableKind::Dlct, TableKind::Autocorrelation}) {
    if (to_string(k) == s) return k;
  }
  throw UsageError("unknown table kind '" + s + "'");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "pretty") return Format::Pretty;
  throw UsageError("unknown format '" + name + "' (json, csv, pretty)");
}

std::string set_string(const std::vector<Value>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << '}';
  return out.str();
}

Json to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s.entries()) arr.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return arr;
}

Json to_json(const CheckResult& c) {
  return {{"check", c.check}, {"instance", c.instance}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["dlu"] = r.dlu;
  j["diff_uniformity"] = r.diff_uniformity;
  j["nonlinearity"] = r.nonlinearity;
  j["absolute_indicator"] = r.absolute_indicator;
  j["sum_of_squares"] = r.sum_of_squares;
  j["flags"] = {{"is_permutation", r.flags.is_permutation},
                {"is_apn", r.flags.is_apn},
                {"is_bent", r.flags.is_bent},
                {"is_plateaued", r.flags.is_plateaued},
                {"is_ab", r.flags.is_ab}};
  j["amplitude_exponents"] = r.amplitude_exponents;
  j["dlct_spectrum"] = to_json(r.dlct_spectrum);
  return j;
}

Json table_to_json(const SpectralTable& t, std::optional<std::uint64_t> modulus) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = std::string(to_string(t.kind()));
  j["n"] = t.n();
  j["m"] = t.m();
  j["modulus"] = modulus ? Json(*modulus) : Json(nullptr);
  Json rows = Json::array();
  for (std::size_t u = 0; u < t.rows(); ++u) {
    const auto r = t.row(u);
    rows.push_back(std::vector<Value>(r.begin(), r.end()));
  }
  j["rows"] = std::move(rows);
  return j;
}

SpectralTable table_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw UsageError("unsupported schema version");
    const auto kind = kind_from_string(j.at("kind").get<std::string>());
    const auto n = j.at("n").get<unsigned>();
    const auto m = j.at("m").get<unsigned>();
    if (n > kMaxTableDimension || m > kMaxTableDimension) throw UsageError("table dimensions too large");
    const auto& rows = j.at("rows");
    const std::size_t row_count = std::size_t{1} << n;
    const std::size_t col_count = std::size_t{1} << m;
    if (rows.size() != row_count) throw UsageError("row count does not match n");
    std::vector<Value> data;
    data.reserve(row_count * col_count);
    for (const auto& row : rows) {
      if (row.size() != col_count) throw UsageError("column count does not match m");
      for (const auto& x : row) data.push_back(x.get<Value>());
    }
    return SpectralTable(kind, n, m, std::move(data));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed table JSON: ") + e.what());
  }
}

void write_table(std::ostream& out, const SpectralTable& t, std::optional<std::uint64_t> modulus, Format f) {
  switch (f) {
    case Format::Json:
      out << table_to_json(t, modulus).dump() << '\n';
      return;
    case Format::Csv:
      out << "u,v,value\n";
      for (std::size_t u = 0; u < t.rows(); ++u) {
        for (std::size_t v = 0; v < t.cols(); ++v) out << u << ',' << v << ',' << t.at(u, v) << '\n';
      }
      return;
    case Format::Pretty: {
      Value widest = 1;
      for (Value x : t.data()) widest = std::max<Value>(widest, static_cast<Value>(std::to_string(x).size()));
      const int w = static_cast<int>(widest) + 1;
      out << to_string(t.kind()) << " table, n=" << t.n() << " m=" << t.m() << '\n';
      for (std::size_t u = 0; u < t.rows(); ++u) {
        for (std::size_t v = 0; v < t.cols(); ++v) out << std::setw(w) << t.at(u, v);
        out << '\n';
      }
      return;
    }
  }
}

void write_report(std::ostream& out, const AnalysisReport& r, const std::string& source, Format f) {
  switch (f) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["source"] = source;
      j.update(to_json(r));
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "value,multiplicity\n";
      for (const auto& e : r.dlct_spectrum.entries()) out << e.value << ',' << e.multiplicity << '\n';
      return;
    case Format::Pretty:
      out << source << "\n"
          << "  n, m                 " << r.n << ", " << r.m << "\n"
          << "  DLU                  " << r.dlu << "\n"
          << "  differential unif.   " << r.diff_uniformity << "\n"
          << "  nonlinearity         " << r.nonlinearity << "\n"
          << "  absolute indicator   " << r.absolute_indicator << "\n"
          << "  sum of squares       " << r.sum_of_squares << "\n"
          << "  flags               ";
      const std::pair<bool, const char*> flags[] = {{r.flags.is_permutation, "permutation"},
                                                    {r.flags.is_apn, "apn"},
                                                    {r.flags.is_bent, "bent"},
                                                    {r.flags.is_plateaued, "plateaued"},
                                                    {r.flags.is_ab, "ab"}};
      for (const auto& [set, name] : flags)
          if (set) out << ' ' << name;
      out << "\n"
          << "  DLCT spectrum        ";
      for (const auto& e : r.dlct_spectrum.entries()) out << e.value << "^" << e.multiplicity << ' ';
      out << '\n';
      return;
  }
}

void write_checks(std::ostream& out, const std::string& check, const std::vector<CheckResult>& results, Format f) {
  switch (f) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["check"] = check;
      j["pass"] = all_pass(results);
      Json arr = Json::array();
      for (const auto& c : results) arr.push_back(to_json(c));
      j["results"] = std::move(arr);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "check,instance,pass,lhs,rhs\n";
      for (const auto& c : results) {
        out << c.check << ",\"" << c.instance << "\"," << (c.pass ? "true" : "false") << ',' << c.lhs << ','
            << c.rhs << '\n';
      }
      return;
    case Format::Pretty:
      for (const auto& c : results) {
        out << (c.pass ? "PASS " : "FAIL ") << c.check << " [" << c.instance << "] lhs=" << c.lhs << " rhs=" << c.rhs
            << '\n';
      }
      out << (all_pass(results) ? "all passed" : "FAILURES") << " (" << results.size() << " checks)\n";
      return;
  }
}

}  // namespace dlct::cli
