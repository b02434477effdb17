#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qbilliard/billiard.hpp"
#include "qbilliard/nodal.hpp"

namespace qbilliard {

struct CatalogEntry {
  std::string billiard;
  std::string family;
  int m = 0;
  int n = 0;
  int modulus = 0;
  int class_index = 0;
  double energy = 0.0;
  std::optional<int> nodal_count;
  std::optional<int> resolution;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

class CatalogFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CatalogEntry make_entry(const EigenfunctionSpec& spec,
                        const std::optional<NodalReport>& nodal = std::nullopt);

// Array of objects with keys billiard, family, m, n, modulus, class_index,
// energy, nodal_count, resolution. Absent optionals are written as null.
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_catalog(const std::string& text);

/// Missing file reads as an empty catalog; anything unparsable throws
/// CatalogFormatError.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
void save_catalog(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries);

/// Replaces the entry with the same (billiard, family, m, n) in place, or
/// appends. Order is otherwise preserved, so re-running a command is a no-op.
void upsert(std::vector<CatalogEntry>& entries, const CatalogEntry& entry);

}  // namespace qbilliard
