#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "dlct/analysis.hpp"
#include "dlct/catalog.hpp"
#include "dlct/equivalence.hpp"
#include "dlct/error.hpp"
#include "dlct/random.hpp"

namespace dlct::cli {
namespace {

ComputeOptions compute_options(const RunConfig& cfg) { return {std::max(1u, cfg.threads)}; }

std::optional<std::uint64_t> modulus_of(const Vbf& f) {
  if (f.field()) return f.field()->modulus();
  return std::nullopt;
}

SpectralTable build_table(const Vbf& f, const std::string& kind, const ComputeOptions& opts) {
  if (kind == "ddt") return ddt(f, opts);
  if (kind == "walsh") return walsh_table(f, opts);
  if (kind == "dlct") return dlct(f, opts);
  if (kind == "ac") return autocorrelation_table(f, opts);
  throw UsageError("unknown table kind '" + kind + "' (ddt, walsh, dlct, ac)");
}

Value max_abs_nonzero(const std::vector<Value>& row) {
  Value best = 0;
  for (std::size_t v = 1; v < row.size(); ++v) best = std::max(best, row[v] < 0 ? -row[v] : row[v]);
  return best;
}

CheckResult flag_result(const std::string& check, const std::string& instance, bool pass) {
  return {check, instance, pass, pass ? 1 : 0, 1};
}

// ---- verify ----

std::vector<CheckResult> kloosterman_mod8(const RunConfig& cfg) {
  if (!cfg.function.n) throw UsageError("kloosterman-mod8 needs --n");
  const FieldCtx ctx(*cfg.function.n, cfg.function.modulus);
  if (ctx.n() < 3) throw UsageError("the mod-8 congruence needs n >= 3");
  const auto sums = kloosterman_all(ctx);
  std::vector<CheckResult> out;
  out.reserve(sums.size());
  for (Word a = 0; a < ctx.order(); ++a) {
    const Value residue = ((sums[a] % 8) + 8) % 8;
    const Value expected = ctx.trace(a) ? 3 : 7;
    out.push_back({"kloosterman-mod8", "GF(2^" + std::to_string(ctx.n()) + ") a=" + std::to_string(a),
                   residue == expected, residue, expected});
  }
  return out;
}

std::vector<CheckResult> cross_path(const Vbf& f, const std::string& instance, const ComputeOptions& opts) {
  const SpectralTable direct = dlct_direct(f, opts);
  const SpectralTable via_ddt = dlct_from_ddt(f, opts);
  const SpectralTable via_walsh = dlct_from_walsh(f, opts);
  const SpectralTable ac = autocorrelation_table(f, opts);
  auto mismatches = [&](const SpectralTable& t, Value scale) {
    Value count = 0;
    for (std::size_t i = 0; i < t.data().size(); ++i) count += t.data()[i] != scale * direct.data()[i];
    return count;
  };
  std::vector<CheckResult> out;
  for (auto [name, table, scale] : {std::tuple{"cross-path ddt", &via_ddt, Value{1}},
                                    std::tuple{"cross-path walsh", &via_walsh, Value{1}},
                                    std::tuple{"cross-path autocorrelation", &ac, Value{2}}}) {
    const Value bad = mismatches(*table, scale);
    out.push_back({name, instance, bad == 0, bad, 0});
  }
  return out;
}

// ---- reproduce ----

struct Item {
  std::string name;
  Json expected;
  Json computed;
  bool match = false;
};

Json values_json(const std::vector<Value>& values, std::optional<Value> dlu) {
  Json j;
  j["values"] = values;
  j["dlu"] = dlu ? Json(*dlu) : Json(nullptr);
  return j;
}

Item spectrum_item(const std::string& name, const Vbf& f, const PredictedSpectrum& p, const ComputeOptions& opts) {
  const Spectrum s = spectrum_of(dlct(f, opts));
  Item it{name, values_json(p.values, p.dlu), values_json(s.distinct_values(), s.max_abs()), p.satisfied_by(s)};
  if (p.exactness == Exactness::ContainmentOnly) it.expected["containment"] = true;
  return it;
}

std::vector<Item> reproduce_table2(const ComputeOptions& opts) {
  std::vector<Item> items;
  for (unsigned i = 0; i < kOptimalSboxCount; ++i) {
    const Vbf s = optimal_sbox(i);
    const PredictedSpectrum p = predict_optimal_sbox(i);
    Item it = spectrum_item("F" + std::to_string(i), s, p, opts);
    std::vector<Value> doubled;
    for (Value x : p.values) doubled.push_back(2 * x);
    const auto ac = spectrum_of(autocorrelation_table(s, opts)).distinct_values();
    it.expected["dl_walsh"] = doubled;
    it.computed["dl_walsh"] = ac;
    it.match = it.match && ac == doubled;
    items.push_back(std::move(it));
  }
  return items;
}

std::vector<Item> reproduce_ccz(const ComputeOptions& opts) {
  const FieldCtx ctx(6);
  const Vbf f = Vbf::monomial(ctx, 13);
  const Vbf g = compositional_inverse(f);
  std::vector<Item> items;
  items.push_back(spectrum_item("x^13/GF(2^6)", f, {"x^13", {-16, -8, 0, 8, 16}, 16}, opts));
  items.push_back(spectrum_item("(x^13)^-1/GF(2^6)", g, {"x^34", {-32, 0, 32}, 32}, opts));
  items.push_back({"(x^13)^-1 = x^34", true, g == Vbf::monomial(ctx, 34), g == Vbf::monomial(ctx, 34)});
  return items;
}

std::vector<Item> reproduce_ea(const ComputeOptions& opts) {
  const FieldCtx ctx(7);
  const Vbf f = make_inverse(ctx);
  const Vbf g = ea_transform(f, AffineMap::identity(7), AffineMap::identity(7), AffineMap::identity(7));
  std::vector<Item> items;
  items.push_back(spectrum_item("1/x over GF(2^7)", f, {"1/x", {-12, -8, -4, 0, 4, 8}, 12}, opts));
  items.push_back(spectrum_item("1/x + x over GF(2^7)", g, {"1/x + x", {-12, -8, -4, 0, 4, 8, 12}, 12}, opts));
  return items;
}

std::vector<unsigned> dims_or(const RunConfig& cfg, unsigned lo, unsigned hi) {
  if (cfg.function.n) return {*cfg.function.n};
  std::vector<unsigned> out(hi - lo + 1);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

std::vector<Item> reproduce_inverse(const RunConfig& cfg) {
  std::vector<Item> items;
  for (unsigned n : dims_or(cfg, 3, 12)) {
    const FieldCtx ctx(n, cfg.function.modulus);
    const PredictedSpectrum p = predict_inverse(ctx);
    const auto predicted = inverse_row_prediction(ctx);
    const auto row = dlct_row(make_inverse(ctx), 1);
    Value mismatches = 0;
    bool divisible = true;
    std::set<Value> seen;
    for (Word v = 1; v < ctx.order(); ++v) {
      const Value x = row[ctx.trace_mask(v)];
      mismatches += x != predicted[v];
      divisible = divisible && x % 4 == 0;
      seen.insert(x);
    }
    const std::vector<Value> values(seen.begin(), seen.end());
    const Value dlu = max_abs_nonzero(row);
    Item it{"inverse/GF(2^" + std::to_string(n) + ")", values_json(p.values, p.dlu), values_json(values, dlu), false};
    it.expected["pointwise_mismatches"] = 0;
    it.expected["all_divisible_by_4"] = true;
    it.computed["pointwise_mismatches"] = mismatches;
    it.computed["all_divisible_by_4"] = divisible;
    it.match = mismatches == 0 && divisible && values == p.values && (!p.dlu || dlu == *p.dlu);
    items.push_back(std::move(it));
  }
  return items;
}

std::vector<Item> reproduce_gold(const RunConfig& cfg, const ComputeOptions& opts) {
  std::vector<Item> items;
  for (unsigned n : dims_or(cfg, 2, 10)) {
    const FieldCtx ctx(n, cfg.function.modulus);
    for (unsigned i = 1; i < n; ++i) {
      if (cfg.function.i && *cfg.function.i != i) continue;
      const PredictedSpectrum p = predict_gold(ctx, i);
      items.push_back(spectrum_item(p.family, make_gold(ctx, i), p, opts));
    }
  }
  return items;
}

std::vector<Item> reproduce_quadratic(const RunConfig& cfg, const ComputeOptions& opts) {
  std::vector<Item> items;
  for (unsigned n : dims_or(cfg, 4, 9)) {
    const FieldCtx ctx(n, cfg.function.modulus);
    const PredictedSpectrum p = predict_quadratic(ctx);
    const unsigned pairs = n * (n - 1) / 2;
    Value failures = 0;
    Value worst = 0;
    std::set<Value> seen;
    for (unsigned t = 0; t < cfg.trials; ++t) {
      const unsigned count = 1 + t % std::min(pairs, 4u);
      const auto terms = random_quadratic_terms(ctx, count, cfg.function.seed * 1000003 + n * 1000 + t);
      const Spectrum s = spectrum_of(dlct(make_quadratic(ctx, terms), opts));
      failures += !p.satisfied_by(s);
      worst = std::max(worst, s.max_abs());
      for (Value x : s.distinct_values()) seen.insert(x);
    }
    Item it{p.family, values_json(p.values, p.dlu), values_json({seen.begin(), seen.end()}, worst), failures == 0};
    it.expected["containment"] = true;
    it.expected["failures"] = 0;
    it.computed["failures"] = failures;
    it.computed["trials"] = cfg.trials;
    items.push_back(std::move(it));
  }
  return items;
}

std::vector<Item> reproduce_bracken_leander(const RunConfig& cfg, const ComputeOptions& opts) {
  std::vector<unsigned> ks = cfg.function.k ? std::vector<unsigned>{*cfg.function.k} : std::vector<unsigned>{1, 2};
  std::vector<Item> items;
  for (unsigned k : ks) {
    const Vbf f = make_bracken_leander(k);
    const PredictedSpectrum p = predict_bracken_leander(k);
    Item it = spectrum_item(p.family, f, p, opts);
    const Value q3 = Value{1} << (3 * k);
    const Value delta_max = uniformity(autocorrelation_table(f, opts));
    it.expected["autocorrelation_max"] = q3;
    it.computed["autocorrelation_max"] = delta_max;
    it.match = it.match && delta_max == q3;
    items.push_back(std::move(it));
  }
  return items;
}

std::vector<Item> reproduce_kasami(const RunConfig& cfg) {
  std::vector<std::pair<unsigned, unsigned>> params;
  if (cfg.function.n) {
    const unsigned n = *cfg.function.n;
    std::optional<unsigned> k = cfg.function.k;
    for (unsigned c = 1; !k && c < n; ++c) {
      if ((3 * c) % n == 1 % n) k = c;
    }
    if (!k) throw UsageError("no k with 3k = 1 mod " + std::to_string(n));
    params.emplace_back(n, *k);
  } else {
    params = {{5, 2}, {7, 5}};
  }
  std::vector<Item> items;
  for (auto [n, k] : params) {
    const PredictedSpectrum p = predict_kasami(n, k);
    const KasamiResult r = kasami_optimality_check(n, k);
    items.push_back({p.family, values_json(p.values, p.dlu), values_json(r.spectrum.distinct_values(), r.dlu),
                     r.optimal && p.satisfied_by(r.spectrum)});
  }
  return items;
}

void write_items(std::ostream& out, const std::string& target, const std::vector<Item>& items, Format f) {
  const bool pass = std::all_of(items.begin(), items.end(), [](const Item& it) { return it.match; });
  switch (f) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["target"] = target;
      j["pass"] = pass;
      Json arr = Json::array();
      for (const auto& it : items) {
        arr.push_back({{"name", it.name}, {"match", it.match}, {"expected", it.expected}, {"computed", it.computed}});
      }
      j["items"] = std::move(arr);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "name,match,expected,computed\n";
      for (const auto& it : items) {
        auto quote = [](std::string s) {
          std::string q = "\"";
          for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
          return q + "\"";
        };
        out << quote(it.name) << ',' << (it.match ? "true" : "false") << ',' << quote(it.expected.dump()) << ','
            << quote(it.computed.dump()) << '\n';
      }
      return;
    case Format::Pretty: {
      std::size_t matched = 0;
      for (const auto& it : items) {
        matched += it.match;
        out << (it.match ? "MATCH    " : "MISMATCH ") << it.name << "\n  expected " << it.expected.dump()
            << "\n  computed " << it.computed.dump() << '\n';
      }
      out << target << ": " << matched << '/' << items.size() << " match\n";
      return;
    }
  }
}

// ---- search ----

struct Hit {
  Json description;
  Value dlu;
  Spectrum spectrum;
};

void write_search(std::ostream& out, const RunConfig& cfg, unsigned n, const std::vector<Hit>& hits,
                  std::uint64_t examined, std::uint64_t space, Format f) {
  const bool complete = examined == space;
  switch (f) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["mode"] = cfg.mode;
      j["n"] = n;
      j["max_dlu"] = *cfg.max_dlu;
      j["seed"] = cfg.function.seed;
      j["examined"] = examined;
      j["space"] = space;
      j["coverage"] = space ? static_cast<double>(examined) / static_cast<double>(space) : 1.0;
      j["complete"] = complete;
      Json arr = Json::array();
      for (const auto& h : hits) {
        Json e = h.description;
        e["dlu"] = h.dlu;
        e["spectrum"] = to_json(h.spectrum);
        arr.push_back(std::move(e));
      }
      j["hits"] = std::move(arr);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "candidate,dlu,values\n";
      for (const auto& h : hits) {
        out << '"' << h.description.dump() << "\"," << h.dlu << ",\"" << set_string(h.spectrum.distinct_values())
            << "\"\n";
      }
      return;
    case Format::Pretty:
      for (const auto& h : hits) {
        out << h.description.dump() << "  DLU " << h.dlu << "  " << set_string(h.spectrum.distinct_values()) << '\n';
      }
      out << hits.size() << " hits; examined " << examined << " of " << space << (complete ? "" : " (budget reached)")
          << '\n';
      return;
  }
}

}  // namespace

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const Vbf f = load_function(cfg.function);
  const SpectralTable t = build_table(f, cfg.kind, compute_options(cfg));
  write_table(out, t, modulus_of(f), cfg.format);
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Vbf f = load_function(cfg.function);
  write_report(out, analyze(f, compute_options(cfg)), describe(cfg.function), cfg.format);
  return kExitOk;
}

std::vector<CheckResult> run_check(const RunConfig& cfg) {
  const ComputeOptions opts = compute_options(cfg);
  if (cfg.check == "kloosterman-mod8") return kloosterman_mod8(cfg);

  using Runner = std::function<std::vector<CheckResult>(const Vbf&, const std::string&)>;
  const std::map<std::string, Runner> registry = {
      {"identities", [&](const Vbf& f, const std::string& s) { return verify_identities(f, s, opts); }},
      {"bounds", [&](const Vbf& f, const std::string& s) { return verify_bounds(f, s, opts); }},
      {"ea-invariance",
       [&](const Vbf& f, const std::string& s) { return verify_ea_invariance(f, s, cfg.trials, cfg.function.seed); }},
      {"affine-invariance",
       [&](const Vbf& f, const std::string& s) {
         return verify_affine_invariance(f, s, cfg.trials, cfg.function.seed);
       }},
      {"apn-dual",
       [&](const Vbf& f, const std::string& s) {
         return std::vector<CheckResult>{flag_result("apn-dual", s, apn_dual_check(f, opts))};
       }},
      {"plateaued-dual",
       [&](const Vbf& f, const std::string& s) {
         return std::vector<CheckResult>{flag_result("plateaued-dual", s, plateaued_dual_check(f, opts))};
       }},
      {"cross-path", [&](const Vbf& f, const std::string& s) { return cross_path(f, s, opts); }},
  };
  const auto it = registry.find(cfg.check);
  if (it == registry.end()) throw UsageError("unknown check '" + cfg.check + "' (known: " + kCheckNames + ")");
  return it->second(load_function(cfg.function), describe(cfg.function));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_check(cfg);
  write_checks(out, cfg.check, results, cfg.format);
  return all_pass(results) ? kExitOk : kExitFailed;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  const ComputeOptions opts = compute_options(cfg);
  std::vector<Item> items;
  const std::string& t = cfg.target;
  if (t == "table2") {
    items = reproduce_table2(opts);
  } else if (t == "example-ccz") {
    items = reproduce_ccz(opts);
  } else if (t == "example-ea") {
    items = reproduce_ea(opts);
  } else if (t == "inverse-theorem") {
    items = reproduce_inverse(cfg);
  } else if (t == "gold") {
    items = reproduce_gold(cfg, opts);
  } else if (t == "quadratic") {
    items = reproduce_quadratic(cfg, opts);
  } else if (t == "bracken-leander") {
    items = reproduce_bracken_leander(cfg, opts);
  } else if (t == "kasami") {
    items = reproduce_kasami(cfg);
  } else {
    throw UsageError("unknown target '" + t + "' (known: " + kTargetNames + ")");
  }
  write_items(out, t, items, cfg.format);
  const bool pass = std::all_of(items.begin(), items.end(), [](const Item& it) { return it.match; });
  return pass ? kExitOk : kExitFailed;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.function.n) throw UsageError("search needs --n");
  if (!cfg.max_dlu) throw UsageError("search needs --max-dlu");
  const unsigned n = *cfg.function.n;
  std::vector<Hit> hits;
  std::uint64_t examined = 0;
  std::uint64_t space = 0;

  if (cfg.mode == "monomial") {
    const FieldCtx ctx(n, cfg.function.modulus);
    space = ctx.order() - 2;
    const std::uint64_t limit = std::min(space, cfg.budget.value_or(space));
    for (std::uint64_t d = 1; d <= limit; ++d, ++examined) {
      const Vbf f = Vbf::monomial(ctx, d);
      const Value dlu = max_abs_nonzero(dlct_row(f, 1));
      if (dlu > *cfg.max_dlu) continue;
      hits.push_back({Json{{"exponent", d}}, dlu, monomial_spectrum(f)});
    }
  } else if (cfg.mode == "random") {
    if (n > kMaxTableDimension) throw UsageError("random search needs n <= 13");
    space = cfg.budget.value_or(1000);
    Rng rng(cfg.function.seed);
    std::vector<Word> lut(std::size_t{1} << n);
    for (; examined < space; ++examined) {
      std::iota(lut.begin(), lut.end(), Word{0});
      for (std::size_t i = lut.size() - 1; i > 0; --i) std::swap(lut[i], lut[rng.below(i + 1)]);
      const Vbf f = Vbf::from_lut(n, n, lut);
      const SpectralTable t = dlct(f, compute_options(cfg));
      const Value dlu = uniformity(t);
      if (dlu > *cfg.max_dlu) continue;
      hits.push_back({Json{{"lut", lut}}, dlu, spectrum_of(t)});
    }
  } else {
    throw UsageError("unknown search mode '" + cfg.mode + "' (monomial, random)");
  }
  write_search(out, cfg, n, hits, examined, space, cfg.format);
  return kExitOk;
}

}  // namespace dlct::cli
