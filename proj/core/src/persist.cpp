#include "algstat/persist.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "algstat/error.hpp"

namespace algstat::persist {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaMismatch, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema(std::string("missing field '") + key + "'");
  return obj.at(key);
}

template <class T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::exception& e) {
    schema(std::string("field '") + key + "': " + e.what());
  }
}

// ---- building blocks --------------------------------------------------------

json ring_json(const Ring& r) { return r->names(); }
Ring ring_from(const json& j) {
  try {
    return ring_new(j.get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    schema(std::string("ring: ") + e.what());
  }
}

json polys_json(const std::vector<MultiPoly>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}
std::vector<MultiPoly> polys_from(const Ring& r, const json& j) {
  std::vector<MultiPoly> out;
  for (const auto& s : j) out.push_back(parse_poly(r, s.get<std::string>()));
  return out;
}

json bigints_json(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}
std::vector<BigInt> bigints_from(const json& j) {
  std::vector<BigInt> out;
  for (const auto& s : j) {
    BigInt x;
    if (!s.is_string() || x.set_str(s.get<std::string>(), 10) != 0) schema("expected an integer string");
    out.push_back(std::move(x));
  }
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.source, e.target});
  return {{"kind", g.directed() ? "directed" : "undirected"}, {"n_vertices", g.n_vertices()}, {"edges", edges}};
}
Graph graph_from(const json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind != "directed" && kind != "undirected") schema("graph kind '" + kind + "'");
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) schema("edge must be a pair");
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return Graph(kind == "directed" ? GraphKind::Directed : GraphKind::Undirected, get<std::size_t>(j, "n_vertices"),
               std::move(edges));
}

json labeling_json(const Labeling& l) {
  json vertices = json::object();
  for (const auto& [v, s] : l.vertex_labels) vertices[std::to_string(v)] = s;
  json edges = json::array();
  for (const auto& [e, s] : l.edge_labels) edges.push_back({e.source, e.target, s});
  return {{"name", l.name}, {"vertex_labels", vertices}, {"edge_labels", edges}};
}
Labeling labeling_from(const json& j) {
  Labeling l;
  l.name = get<std::string>(j, "name");
  for (const auto& [k, v] : field(j, "vertex_labels").items()) l.vertex_labels[std::stoi(k)] = v.get<std::string>();
  for (const auto& e : field(j, "edge_labels")) {
    if (!e.is_array() || e.size() != 3) schema("edge label must be [source, target, label]");
    l.edge_labels[Edge{e[0].get<Vertex>(), e[1].get<Vertex>()}] = e[2].get<std::string>();
  }
  return l;
}

// ---- per-type encoders ------------------------------------------------------

json encode(const Graph& g) { return graph_json(g); }
json encode(const PhyloNetwork& n) { return {{"graph", graph_json(n.graph)}}; }

json encode(const GaussianModel& m) {
  return {{"graph", graph_json(m.graph())},
          {"kind", m.kind() == GaussianKind::Dag ? "dag" : "undirected"},
          {"labeling", m.labeling() ? labeling_json(*m.labeling()) : json(nullptr)}};
}

json encode(const PhyloModel& m) {
  json root = nullptr;
  if (!m.symbolic_root()) {
    root = json::array();
    for (const auto& q : m.root_distribution()) root.push_back(rat_to_string(q));
  }
  return {{"model_type", to_string(m.kind())},
          {"graph", graph_json(m.network().graph)},
          {"n_leaves", m.network().leaves.size()},
          {"template", m.transition_template()},
          {"root_distribution", root},
          {"group_based", m.group_based()}};
}

json encode(const Ideal& i) { return {{"ring", ring_json(i.ring())}, {"generators", polys_json(i.gens())}}; }

json encode(const RingMap& m) {
  return {{"source", ring_json(m.source())},
          {"target", ring_json(m.target())},
          {"images", polys_json(m.images())},
          {"denominator", m.denominator() ? json(m.denominator()->to_string()) : json(nullptr)}};
}

json encode(const GradedKernelResult& r) {
  const auto& g = r.grading.group;
  json relations = json::array();
  for (std::size_t i = 0; i < g.relations().rows(); ++i) relations.push_back(bigints_json(g.relations().row(i)));
  json degrees = json::array();
  for (const auto& d : r.grading.degrees) degrees.push_back(bigints_json(d));
  json components = json::array();
  for (const auto& [deg, polys] : r.components)
    components.push_back({{"degree", bigints_json(deg)}, {"generators", polys_json(polys)}});
  return {{"ambient_rank", g.ambient_rank()},
          {"relations", relations},
          {"degrees", degrees},
          {"zero_images", r.grading.zero_images},
          {"max_total_degree", r.max_total_degree},
          {"components", components},
          {"generator_count", r.generator_count()}};
}

// ---- per-type decoders ------------------------------------------------------

PhyloModel decode_phylo(const json& d) {
  PhyloNetwork net = phylo_validate(graph_from(field(d, "graph")));
  const PhyloKind kind = phylo_kind_from_string(get<std::string>(d, "model_type"));
  if (kind != PhyloKind::Custom) return PhyloModel(std::move(net), kind);
  auto tmpl = get<std::vector<std::vector<std::string>>>(d, "template");
  std::optional<std::vector<BigRat>> root;
  if (!field(d, "root_distribution").is_null()) {
    root.emplace();
    for (const auto& s : field(d, "root_distribution")) root->push_back(rat_from_string(s.get<std::string>()));
  }
  return PhyloModel(std::move(net), std::move(tmpl), std::move(root));
}

GradedKernelResult decode_kernel(const json& d, const Ring& ring) {
  const auto m = get<std::size_t>(d, "ambient_rank");
  const auto& rel = field(d, "relations");
  IntMatrix relations(rel.size(), m);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    auto row = bigints_from(rel[i]);
    if (row.size() != m) schema("relation row has the wrong length");
    for (std::size_t c = 0; c < m; ++c) relations(i, c) = row[c];
  }
  GradedKernelResult r;
  r.grading.group = GradingGroup(m, std::move(relations));
  for (const auto& deg : field(d, "degrees")) r.grading.degrees.push_back(bigints_from(deg));
  r.grading.zero_images = get<std::vector<std::size_t>>(d, "zero_images");
  r.max_total_degree = get<unsigned>(d, "max_total_degree");
  for (const auto& c : field(d, "components")) {
    r.components[bigints_from(field(c, "degree"))] = polys_from(ring, field(c, "generators"));
  }
  return r;
}

}  // namespace

std::string type_name(const Object& obj) {
  static const char* const names[] = {"Graph",      "PhyloNetwork", "GaussianModel",     "PhyloModel",
                                      "Ideal",      "RingMap",      "GradedKernelResult"};
  return names[obj.index()];
}

json to_envelope(const Object& obj) {
  json data = std::visit([](const auto& x) { return encode(x); }, obj);
  if (const auto* r = std::get_if<GradedKernelResult>(&obj)) {
    // The source ring is needed to parse the generators back.
    for (const auto& [deg, polys] : r->components)
      if (!polys.empty()) {
        data["source"] = ring_json(polys.front().ring());
        break;
      }
    if (!data.contains("source")) data["source"] = json::array();
  }
  return {{"_ns", {{std::string(kNamespace), {std::string(kNamespace), std::string(kVersion)}}}},
          {"_type", type_name(obj)},
          {"data", std::move(data)}};
}

Object from_envelope(const json& doc) {
  if (!doc.is_object()) schema("document is not a JSON object");
  const auto& ns = field(doc, "_ns");
  if (!ns.is_object() || !ns.contains(std::string(kNamespace))) schema("unknown namespace");
  const auto type = get<std::string>(doc, "_type");
  const json& d = field(doc, "data");
  try {
    if (type == "Graph") return graph_from(d);
    if (type == "PhyloNetwork") return phylo_validate(graph_from(field(d, "graph")));
    if (type == "GaussianModel") {
      std::optional<Labeling> l;
      if (!field(d, "labeling").is_null()) l = labeling_from(field(d, "labeling"));
      GaussianModel m(graph_from(field(d, "graph")), std::move(l));
      const auto kind = get<std::string>(d, "kind");
      if (kind != (m.kind() == GaussianKind::Dag ? "dag" : "undirected")) schema("model kind does not match graph");
      return m;
    }
    if (type == "PhyloModel") return decode_phylo(d);
    if (type == "Ideal") {
      Ring r = ring_from(field(d, "ring"));
      return Ideal(r, polys_from(r, field(d, "generators")));
    }
    if (type == "RingMap") {
      Ring src = ring_from(field(d, "source"));
      Ring tgt = ring_from(field(d, "target"));
      std::optional<MultiPoly> den;
      if (!field(d, "denominator").is_null()) den = parse_poly(tgt, get<std::string>(d, "denominator"));
      return RingMap(src, tgt, polys_from(tgt, field(d, "images")), std::move(den));
    }
    if (type == "GradedKernelResult") {
      return decode_kernel(d, ring_from(field(d, "source")));
    }
  } catch (const json::exception& e) {
    schema(type + ": " + e.what());
  }
  throw Error(ErrorCode::UnknownType, "unknown _type '" + type + "'");
}

std::string serialize(const Object& obj) { return to_envelope(obj).dump(2) + "\n"; }

Object deserialize(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "document is not valid JSON");
  return from_envelope(doc);
}

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write to a sibling temp file, then rename over the target.
void write_file(const fs::path& p, const std::string& text) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename into " + p.string() + ": " + ec.message());
}

class FileLock {
 public:
  explicit FileLock(const fs::path& p) : fd_(::open(p.c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) throw Error(ErrorCode::IoError, "cannot lock " + p.string());
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

bool valid_id(const std::string& id) {
  return !id.empty() && id != "manifest" && std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }) && id.find("..") == std::string::npos;
}

}  // namespace

void save(const fs::path& path, const Object& obj) { write_file(path, serialize(obj)); }

Object load(const fs::path& path) { return deserialize(read_file(path)); }

Collection::Collection(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir_.string() + ": " + ec.message());
  if (!fs::exists(dir_ / "manifest.json")) {
    FileLock lock(dir_ / ".lock");
    if (!fs::exists(dir_ / "manifest.json"))
      write_file(dir_ / "manifest.json", json{{"documents", json::array()}}.dump(2) + "\n");
  }
}

std::vector<std::string> Collection::ids() const {
  json m = json::parse(read_file(dir_ / "manifest.json"), nullptr, false);
  if (m.is_discarded() || !m.contains("documents")) throw Error(ErrorCode::ParseError, "corrupt manifest in " + dir_.string());
  auto ids = m.at("documents").get<std::vector<std::string>>();
  std::sort(ids.begin(), ids.end());
  return ids;
}

void Collection::add(const std::string& id, const Object& obj) {
  if (!valid_id(id)) throw Error(ErrorCode::ParseError, "invalid document id '" + id + "'");
  FileLock lock(dir_ / ".lock");
  write_file(dir_ / (id + ".json"), serialize(obj));
  auto all = ids();
  if (!std::binary_search(all.begin(), all.end(), id)) {
    all.push_back(id);
    std::sort(all.begin(), all.end());
  }
  write_file(dir_ / "manifest.json", json{{"documents", all}}.dump(2) + "\n");
}

Object Collection::get(const std::string& id) const {
  if (!valid_id(id)) throw Error(ErrorCode::ParseError, "invalid document id '" + id + "'");
  return load(dir_ / (id + ".json"));
}

std::vector<Collection::Match> Collection::find(const std::map<std::string, json>& query,
                                                std::vector<std::string>* warnings) const {
  std::vector<Match> out;
  for (const auto& id : ids()) {
    json doc;
    try {
      doc = json::parse(read_file(dir_ / (id + ".json")));
    } catch (const std::exception& e) {
      if (warnings) warnings->push_back(id + ": " + e.what());
      continue;
    }
    bool ok = true;
    for (const auto& [path, value] : query) {
      const json* cur = &doc;
      std::size_t start = 0;
      while (ok) {
        std::size_t dot = path.find('.', start);
        std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (!cur->is_object() || !cur->contains(key)) ok = false;
        else cur = &cur->at(key);
        if (dot == std::string::npos) break;
        start = dot + 1;
      }
      if (ok && *cur != value) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;
    try {
      out.push_back({id, from_envelope(doc)});
    } catch (const Error& e) {
      if (warnings) warnings->push_back(id + ": " + e.what());
    }
  }
  return out;
}

}  // namespace algstat::persist
