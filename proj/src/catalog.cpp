#include "qbilliard/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbilliard/spectral_class.hpp"

namespace qbilliard {
namespace {

using nlohmann::json;

template <class T>
T required(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw CatalogFormatError(std::string("catalog entry is missing '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw CatalogFormatError(std::string("catalog field '") + key + "' has the wrong type");
  }
}

std::optional<int> optional_int(const json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  if (!obj.at(key).is_number_integer()) {
    throw CatalogFormatError(std::string("catalog field '") + key + "' must be an integer or null");
  }
  return obj.at(key).get<int>();
}

}  // namespace

CatalogEntry make_entry(const EigenfunctionSpec& spec, const std::optional<NodalReport>& nodal) {
  const EquivalenceClass klass = class_index(spec);
  CatalogEntry entry{std::string(to_string(spec.kind)),
                     std::string(to_string(spec.family)),
                     spec.qn.m,
                     spec.qn.n,
                     klass.modulus(),
                     klass.c,
                     spec.energy,
                     std::nullopt,
                     std::nullopt};
  if (nodal) {
    entry.nodal_count = nodal->domain_count;
    entry.resolution = nodal->resolution;
  }
  return entry;
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  json doc = json::array();
  for (const CatalogEntry& e : entries) {
    json obj = json::object();
    obj["billiard"] = e.billiard;
    obj["family"] = e.family;
    obj["m"] = e.m;
    obj["n"] = e.n;
    obj["modulus"] = e.modulus;
    obj["class_index"] = e.class_index;
    obj["energy"] = e.energy;
    obj["nodal_count"] = e.nodal_count ? json(*e.nodal_count) : json(nullptr);
    obj["resolution"] = e.resolution ? json(*e.resolution) : json(nullptr);
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogFormatError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw CatalogFormatError("catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const json& obj : doc) {
    if (!obj.is_object()) throw CatalogFormatError("catalog entries must be objects");
    CatalogEntry e;
    e.billiard = required<std::string>(obj, "billiard");
    e.family = required<std::string>(obj, "family");
    e.m = required<int>(obj, "m");
    e.n = required<int>(obj, "n");
    e.modulus = required<int>(obj, "modulus");
    e.class_index = required<int>(obj, "class_index");
    e.energy = required<double>(obj, "energy");
    e.nodal_count = optional_int(obj, "nodal_count");
    e.resolution = optional_int(obj, "resolution");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

void save_catalog(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write catalog " + tmp.string());
    out << serialize_catalog(entries);
    if (!out) throw std::runtime_error("failed writing catalog " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void upsert(std::vector<CatalogEntry>& entries, const CatalogEntry& entry) {
  for (CatalogEntry& e : entries) {
    if (e.billiard == entry.billiard && e.family == entry.family && e.m == entry.m &&
        e.n == entry.n) {
      e = entry;
      return;
    }
  }
  entries.push_back(entry);
}

}  // namespace qbilliard
