#include "smallcover/external_values.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smallcover/errors.hpp"

#ifndef SMALLCOVER_DATA_DIR
#define SMALLCOVER_DATA_DIR "data"
#endif

namespace smallcover {
namespace {

// Same content as data/external_values.json; used when the file is missing
// (e.g. an installed binary run from elsewhere).
constexpr const char* kBuiltin = R"json({
  "tc_real_projective": [
    {"n": 1, "value": 2, "source": "FTY03", "note": "n in {1,3,7}: TC = n+1"},
    {"n": 3, "value": 4, "source": "FTY03", "note": "n in {1,3,7}: TC = n+1"},
    {"n": 7, "value": 8, "source": "FTY03", "note": "n in {1,3,7}: TC = n+1"},
    {"n": 2, "value": 4, "source": "FTY03", "note": "n a power of 2: TC = 2n"},
    {"n": 4, "value": 8, "source": "FTY03", "note": "n a power of 2: TC = 2n"},
    {"n": 8, "value": 16, "source": "FTY03", "note": "n a power of 2: TC = 2n"},
    {"n": 16, "value": 32, "source": "FTY03", "note": "n a power of 2: TC = 2n"},
    {"n": 32, "value": 64, "source": "FTY03", "note": "n a power of 2: TC = 2n"}
  ],
  "tc_bott": [
    {"id": "klein3", "dims": [1, 1, 1], "lower_blocks": "110", "value": 6, "source": "DS23",
     "note": "3-dimensional real Bott manifold M^3(1,1,0)"}
  ]
})json";

}  // namespace

ExternalValues ExternalValues::builtin() { return parse(kBuiltin); }

ExternalValues ExternalValues::parse(const std::string& json_text) {
  ExternalValues out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (!doc.is_object()) throw InvalidInput("external values table: expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key != "description" && key != "tc_real_projective" && key != "tc_bott") {
        throw InvalidInput("external values table: unknown field \"" + key + "\"");
      }
    }
    for (const auto& e : doc.value("tc_real_projective", nlohmann::json::array())) {
      RpEntry entry;
      entry.n = e.at("n").get<std::size_t>();
      entry.value.id = "tc_rp" + std::to_string(entry.n);
      entry.value.value = e.at("value").get<std::size_t>();
      entry.value.source = e.at("source").get<std::string>();
      entry.value.note = e.value("note", "");
      out.rp_.push_back(std::move(entry));
    }
    for (const auto& e : doc.value("tc_bott", nlohmann::json::array())) {
      BottEntry entry;
      entry.dims = e.at("dims").get<std::vector<std::size_t>>();
      entry.lower_bits = e.at("lower_blocks").get<std::string>();
      entry.value.id = e.value("id", "tc_bott_" + entry.lower_bits);
      entry.value.value = e.at("value").get<std::size_t>();
      entry.value.source = e.at("source").get<std::string>();
      entry.value.note = e.value("note", "");
      out.bott_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("external values table: ") + ex.what());
  }
  return out;
}

ExternalValues ExternalValues::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read external values table " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string ExternalValues::default_path() { return std::string(SMALLCOVER_DATA_DIR) + "/external_values.json"; }

ExternalValues ExternalValues::load_default() {
  const std::string path = default_path();
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) return load(path);
  return builtin();
}

std::optional<ExternalValue> ExternalValues::tc_real_projective(std::size_t n) const {
  for (const auto& e : rp_) {
    if (e.n == n) return e.value;
  }
  return std::nullopt;
}

std::optional<ExternalValue> ExternalValues::tc_bott(const std::vector<std::size_t>& dims,
                                                     const std::string& lower_bits) const {
  for (const auto& e : bott_) {
    if (e.dims == dims && e.lower_bits == lower_bits) return e.value;
  }
  return std::nullopt;
}

}  // namespace smallcover
