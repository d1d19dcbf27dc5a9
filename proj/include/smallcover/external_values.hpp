#pragma once

// Exact values imported from the literature. Kept in one table, separate from
// anything computed, and loaded from data/external_values.json so it can be
// edited without recompiling.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace smallcover {

struct ExternalValue {
  std::string id;
  std::size_t value = 0;
  std::string source;  // citation key
  std::string note;
};

class ExternalValues {
 public:
  /// Built-in copy of the shipped table.
  static ExternalValues builtin();
  /// Parse a JSON table; throws InvalidInput on malformed content.
  static ExternalValues parse(const std::string& json_text);
  /// Load from a file; throws InvalidInput if unreadable or malformed.
  static ExternalValues load(const std::string& path);
  /// The shipped data file if present, otherwise builtin().
  static ExternalValues load_default();
  static std::string default_path();

  /// Exact TC(RP^n), non-normalized.
  std::optional<ExternalValue> tc_real_projective(std::size_t n) const;
  /// Exact TC of the Bott manifold with the given dims and lower-block bits.
  std::optional<ExternalValue> tc_bott(const std::vector<std::size_t>& dims, const std::string& lower_bits) const;

  std::size_t size() const { return rp_.size() + bott_.size(); }

 private:
  struct RpEntry {
    std::size_t n;
    ExternalValue value;
  };
  struct BottEntry {
    std::vector<std::size_t> dims;
    std::string lower_bits;
    ExternalValue value;
  };
  std::vector<RpEntry> rp_;
  std::vector<BottEntry> bott_;
};

}  // namespace smallcover
