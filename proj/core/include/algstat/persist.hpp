#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "algstat/error.hpp"
#include "algstat/gaussian.hpp"
#include "algstat/graph.hpp"
#include "algstat/groebner.hpp"
#include "algstat/implicit.hpp"
#include "algstat/phylo.hpp"

namespace algstat::persist {

using json = nlohmann::json;  // std::map-backed, so keys serialize sorted

inline constexpr std::string_view kNamespace = "algstat";
inline constexpr std::string_view kVersion = "0.1.0";

using Object = std::variant<Graph, PhyloNetwork, GaussianModel, PhyloModel, Ideal, RingMap, GradedKernelResult>;

/// `_type` name of the held alternative.
std::string type_name(const Object& obj);

/// {"_ns": {"algstat": ["algstat", version]}, "_type": ..., "data": ...}
json to_envelope(const Object& obj);
/// Throws UnknownType, SchemaMismatch or ParseError.
Object from_envelope(const json& doc);

/// Pretty-printed envelope with sorted keys and a trailing newline.
std::string serialize(const Object& obj);
Object deserialize(std::string_view text);

void save(const std::filesystem::path& path, const Object& obj);
Object load(const std::filesystem::path& path);

template <class T>
T load_as(const std::filesystem::path& path) {
  Object obj = load(path);
  if (auto* p = std::get_if<T>(&obj)) return std::move(*p);
  throw Error(ErrorCode::SchemaMismatch, path.string() + " holds a " + type_name(obj));
}

/// Directory of `<id>.json` envelopes plus `manifest.json` listing the ids.
/// Writers serialize through an advisory lock on `.lock`.
class Collection {
 public:
  /// Creates the directory (and an empty manifest) when missing.
  explicit Collection(std::filesystem::path dir);

  const std::filesystem::path& path() const noexcept { return dir_; }
  /// Sorted ids from the manifest.
  std::vector<std::string> ids() const;
  /// Adds or replaces a document.
  void add(const std::string& id, const Object& obj);
  Object get(const std::string& id) const;

  struct Match {
    std::string id;
    Object object;
  };
  /// Documents whose value at every dotted path (e.g. "data.model_type")
  /// equals the given JSON value, ordered by id. Unreadable documents are
  /// skipped and described in `warnings`.
  std::vector<Match> find(const std::map<std::string, json>& query, std::vector<std::string>* warnings = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace algstat::persist
