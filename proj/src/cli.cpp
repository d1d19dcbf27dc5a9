#include "smallcover/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "smallcover/errors.hpp"
#include "smallcover/io.hpp"
#include "smallcover/repro.hpp"

namespace smallcover {

namespace {

struct Common {
  std::string input = "-";
  std::string format = "text";
  bool timing = false;
  std::string external_path;
};

struct SearchFlags {
  std::optional<std::string> strategy;
  std::optional<std::size_t> exponent_cap;
  std::optional<std::uint64_t> budget;
  bool assert_rz = false;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

ExternalValues external_values(const std::string& path) {
  return path.empty() ? ExternalValues::load_default() : ExternalValues::load(path);
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << render_text(j);
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

BoundsOptions bounds_options(const InputOptions& doc, const SearchFlags& flags) {
  BoundsOptions o;
  if (doc.strategy) o.strategy = *doc.strategy;
  if (doc.exponent_cap) o.caps.exponent_cap = *doc.exponent_cap;
  if (doc.budget) o.caps.budget = *doc.budget;
  o.assert_rz_simply_connected = doc.assert_rz_simply_connected;
  // Flags override the document.
  if (flags.strategy) o.strategy = parse_strategy(*flags.strategy);
  if (flags.exponent_cap) o.caps.exponent_cap = *flags.exponent_cap;
  if (flags.budget) o.caps.budget = *flags.budget;
  if (flags.assert_rz) o.assert_rz_simply_connected = true;
  return o;
}

int cmd_validate(const Common& c, std::istream& in, std::ostream& out) {
  const InputDocument doc = parse_input(read_all(c.input, in));
  const ResolvedInput r = resolve(doc);
  const Validation v = validate_characteristic(r.polytope, r.lambda);
  Json j;
  j["valid"] = v.valid;
  j["n"] = r.polytope.dim();
  j["facets"] = r.polytope.facet_count();
  if (!v.valid) {
    std::vector<std::string> labels;
    for (std::size_t f : v.witness.to_vector()) labels.push_back(r.polytope.facet_label(f));
    j["witness_simplex"] = v.witness.to_vector();
    j["witness_facets"] = labels;
    j["reason"] = "the vectors on these facets are linearly dependent";
  }
  emit(j, c.format, out);
  return v.valid ? kExitOk : kExitInvalid;
}

int cmd_cohomology(const Common& c, bool print_basis, std::optional<std::size_t> max_degree,
                   std::optional<std::uint64_t> budget, std::istream& in, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputDocument doc = parse_input(read_all(c.input, in));
  const ResolvedInput r = resolve(doc);
  AlgebraLimits limits;
  if (budget) limits.max_monomials_per_degree = *budget;
  else if (doc.options.budget) limits.max_monomials_per_degree = *doc.options.budget;

  Json j;
  j["input"] = input_to_json(doc);
  try {
    const SmallCoverCohomology coh = compute_cohomology(r.polytope, r.lambda, limits);
    j["cohomology"] = cohomology_json(coh, r.polytope, {print_basis, max_degree});
    j["budget_exhausted"] = false;
  } catch (const BudgetExceeded& e) {
    j["cohomology"] = nullptr;
    j["budget_exhausted"] = true;
    j["error"] = e.what();
    if (c.timing) j["timing_ms"] = ms_since(t0);
    emit(j, c.format, out);
    return kExitBudget;
  }
  if (c.timing) j["timing_ms"] = ms_since(t0);
  emit(j, c.format, out);
  return kExitOk;
}

int cmd_bounds(const Common& c, const SearchFlags& flags, std::istream& in, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputDocument doc = parse_input(read_all(c.input, in));
  const ResolvedInput r = resolve(doc);
  const ExternalValues ext = external_values(c.external_path);
  const BoundsOptions opts = bounds_options(doc.options, flags);
  const SmallCoverCohomology coh = compute_cohomology(r.polytope, r.lambda);
  const BoundsReport rep = bounds_report(r.polytope, r.lambda, coh.algebra, opts, ext);

  Json j;
  j["input"] = input_to_json(doc);
  std::vector<std::size_t> dims = coh.algebra.dims();
  j["cohomology_dimensions"] = dims;
  j["bounds"] = bounds_json(rep);
  if (c.timing) j["timing_ms"] = ms_since(t0);
  emit(j, c.format, out);
  return rep.budget_exhausted ? kExitBudget : kExitOk;
}

struct ClassifyRow {
  std::string bits;
  std::vector<std::size_t> dims;
  std::size_t zcl = 0;
  std::string certificate;
  Interval tc;
  Interval tcs;
  bool exhausted = false;
  std::string error;
};

int cmd_classify(const Common& c, const std::vector<std::size_t>& factor_dims, const SearchFlags& flags,
                 std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const BottEnumerator e(factor_dims, flags.budget.value_or(BottEnumerator::kDefaultBudget));
  const ExternalValues ext = external_values(c.external_path);
  const BoundsOptions opts = bounds_options({}, flags);
  const SimplePolytope p = product_of_simplices(factor_dims);

  std::vector<ClassifyRow> rows(e.count());
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (std::uint64_t i = next++; i < e.count(); i = next++) {
      ClassifyRow& row = rows[i];
      try {
        const BottMatrix b = e.at(i);
        row.bits = b.lower_bits();
        const CharacteristicFunction lambda = bott_to_characteristic(b);
        const SmallCoverCohomology coh = compute_cohomology(p, lambda);
        const BoundsReport rep = bounds_report(p, lambda, coh.algebra, opts, ext);
        row.dims = coh.algebra.dims();
        row.zcl = rep.zcl.value;
        row.certificate = rep.zcl.certificate.render();
        row.tc = rep.tc;
        row.tcs = rep.tcs;
        row.exhausted = rep.budget_exhausted;
      } catch (const std::exception& ex) {
        row.error = ex.what();
      }
    }
  };
  const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::uint64_t>(hw, e.count());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool exhausted = false;
  for (const auto& row : rows) {
    if (!row.error.empty()) throw InvariantViolation("classify " + row.bits + ": " + row.error);
    exhausted = exhausted || row.exhausted;
  }

  if (c.format == "json") {
    Json j;
    j["dims"] = factor_dims;
    j["count"] = e.count();
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["lower_bits"] = row.bits;
      r["cohomology_dimensions"] = row.dims;
      r["zcl_lower"] = row.zcl;
      r["certificate"] = row.certificate;
      r["tc"] = {row.tc.lo, row.tc.hi};
      r["tcs"] = {row.tcs.lo, row.tcs.hi};
      r["budget_exhausted"] = row.exhausted;
      arr.push_back(r);
    }
    j["rows"] = arr;
    if (c.timing) j["timing_ms"] = ms_since(t0);
    out << j.dump(2) << "\n";
  } else {
    std::size_t bits_width = std::string("bits").size();
    for (const auto& row : rows) bits_width = std::max(bits_width, row.bits.size());
    out << std::left << std::setw(static_cast<int>(bits_width)) << "bits" << "  " << std::setw(18) << "dims"
        << "  zcl  tc       tcs      certificate\n";
    for (const auto& row : rows) {
      std::string dims;
      for (std::size_t i = 0; i < row.dims.size(); ++i) dims += (i ? "," : "") + std::to_string(row.dims[i]);
      auto iv = [](const Interval& x) { return "[" + std::to_string(x.lo) + "," + std::to_string(x.hi) + "]"; };
      out << std::left << std::setw(static_cast<int>(bits_width)) << (row.bits.empty() ? "-" : row.bits) << "  "
          << std::setw(18) << dims << "  " << std::setw(3) << row.zcl << "  " << std::setw(7) << iv(row.tc) << "  "
          << std::setw(7) << iv(row.tcs) << "  " << row.certificate << (row.exhausted ? "  (budget exhausted)" : "")
          << "\n";
    }
    out << e.count() << " matrices\n";
    if (c.timing) out << "timing_ms: " << ms_since(t0) << "\n";
  }
  return exhausted ? kExitBudget : kExitOk;
}

int cmd_repro(const Common& c, const std::string& filter, const std::string& expectations, std::istream& in,
              std::ostream& out) {
  std::vector<ReproRow> rows = repro_rows();
  if (!expectations.empty()) {
    const std::string text = read_all(expectations, in);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("malformed expectations file: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("expectations file must map row ids to strings");
    std::map<std::string, std::string> table;
    for (const auto& [id, value] : j.items()) {
      if (!value.is_string()) throw InvalidInput("expectation for " + id + " must be a string");
      table[id] = value.get<std::string>();
    }
    override_expectations(rows, table);
  }
  const ExternalValues ext = external_values(c.external_path);
  const bool text = c.format != "json";
  const auto results = run_repro(rows, filter, ext, text ? &out : nullptr);
  if (results.empty()) throw InvalidInput("no repro rows match \"" + filter + "\"");
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  if (text) {
    out << passed << "/" << results.size() << " rows passed\n";
    if (c.timing) {
      double total = 0;
      for (const auto& r : results) total += r.seconds;
      out << "timing_s: " << total << "\n";
    }
  } else {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json row;
      row["id"] = r.id;
      row["criterion"] = r.criterion;
      row["passed"] = r.passed;
      row["expected"] = r.expected;
      row["computed"] = r.actual;
      if (c.timing) row["seconds"] = r.seconds;
      arr.push_back(row);
    }
    Json j;
    j["rows"] = arr;
    j["passed"] = passed;
    j["total"] = results.size();
    out << j.dump(2) << "\n";
  }
  return passed == results.size() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z_2-cohomology and topological complexity bounds for small covers and real Bott manifolds",
               "smallcover"};
  app.require_subcommand(1);

  Common common;
  SearchFlags search;
  bool print_basis = false;
  std::optional<std::size_t> max_degree;
  std::vector<std::size_t> dims;
  std::string filter;
  std::string expectations;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", common.input, "input document (path, or - for stdin)");
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", common.timing, "include wall-clock timing (makes output run-dependent)");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--strategy", search.strategy, "zcl search: generators|linear|full")
        ->check(CLI::IsMember({"generators", "linear", "full"}));
    sub->add_option("--exponent-cap", search.exponent_cap, "per-factor exponent cap (default 2n)");
    sub->add_option("--budget", search.budget, "search node budget");
    sub->add_option("--external-values", common.external_path, "external values table (JSON)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the characteristic condition");
  add_common(validate, true);

  CLI::App* cohomology = app.add_subcommand("cohomology", "graded basis, relations and dimensions");
  add_common(cohomology, true);
  cohomology->add_flag("--print-basis", print_basis, "list the basis monomials of every degree");
  cohomology->add_option("--max-degree", max_degree, "only report degrees up to D");
  cohomology->add_option("--budget", search.budget, "cap on monomials per degree");

  CLI::App* bounds = app.add_subcommand("bounds", "certified bounds on cat, TC, TC^S, TC^D, cat_1");
  add_common(bounds, true);
  add_search(bounds);
  bounds->add_flag("--assert-rz-simply-connected", search.assert_rz,
                   "assume the real moment-angle complex is simply connected");

  CLI::App* classify = app.add_subcommand("classify", "sweep all normal-form Bott matrices for given dims");
  add_common(classify, false);
  add_search(classify);
  classify->add_option("--dims", dims, "factor dimensions, e.g. 1,1,1")->required()->delimiter(',');

  CLI::App* repro = app.add_subcommand("repro", "run the reproduction table");
  add_common(repro, false);
  repro->add_option("--filter", filter, "only rows whose id contains PATTERN");
  repro->add_option("--expectations", expectations, "JSON object overriding expected values by row id");
  repro->add_option("--external-values", common.external_path, "external values table (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help lands here as well.
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (validate->parsed()) return cmd_validate(common, in, out);
    if (cohomology->parsed()) return cmd_cohomology(common, print_basis, max_degree, search.budget, in, out);
    if (bounds->parsed()) return cmd_bounds(common, search, in, out);
    if (classify->parsed()) return cmd_classify(common, dims, search, out);
    if (repro->parsed()) return cmd_repro(common, filter, expectations, in, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace smallcover
