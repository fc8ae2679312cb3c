#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlct/analysis.hpp"
#include "dlct/check.hpp"
#include "dlct/spectra.hpp"

namespace dlct::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Pretty };

Format parse_format(const std::string& name);

Json to_json(const Spectrum& s);
Json to_json(const CheckResult& c);
Json to_json(const AnalysisReport& r);

// {schema, kind, n, m, modulus, rows}; modulus is null for plain lookup tables.
Json table_to_json(const SpectralTable& t, std::optional<std::uint64_t> modulus);
// Inverse of table_to_json. Throws UsageError on malformed input.
SpectralTable table_from_json(const Json& j);

void write_table(std::ostream& out, const SpectralTable& t, std::optional<std::uint64_t> modulus, Format f);
void write_report(std::ostream& out, const AnalysisReport& r, const std::string& source, Format f);
void write_checks(std::ostream& out, const std::string& check, const std::vector<CheckResult>& results, Format f);

// Spectrum as "{-4, 0, 4}".
std::string set_string(const std::vector<Value>& values);

}  // namespace dlct::cli
