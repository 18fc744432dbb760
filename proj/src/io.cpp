#include "latvar/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latvar {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

FinitePoset poset_from_json(const json& j) {
  std::vector<std::string> ids = j.at("elements");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    covers.emplace_back(c.at(0).get<std::string>(),
                        c.at(1).get<std::string>());
  }
  return FinitePoset::from_covers(std::move(ids), covers);
}

json poset_to_json(const FinitePoset& p) {
  json j;
  j["elements"] = p.ids();
  auto covers = json::array();
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.covers(a, b)) covers.push_back({p.id(a), p.id(b)});
    }
  }
  j["covers"] = covers;
  return j;
}

std::string sibling(const std::string& path, const std::string& ref) {
  return (std::filesystem::path(path).parent_path() / ref).string();
}

}  // namespace

FiniteLattice load_lattice(const std::string& path) {
  return FiniteLattice::validate(poset_from_json(read_json(path)));
}

void save_lattice(const FiniteLattice& l, const std::string& path) {
  std::ofstream out(path);
  out << poset_to_json(l.poset()).dump(2) << "\n";
}

JoinSemilattice0 load_semilattice(const std::string& path) {
  return JoinSemilattice0::validate(poset_from_json(read_json(path)));
}

VarietySpec load_variety(const std::string& path) {
  auto j = read_json(path);
  std::vector<FiniteLattice> generators;
  for (const auto& ref : j.at("generators")) {
    generators.push_back(load_lattice(sibling(path, ref.get<std::string>())));
  }
  return make_variety(generators);
}

SemDiagram load_sem_diagram(const std::string& path) {
  auto j = read_json(path);
  auto index = poset_from_json(j.at("index"));
  std::vector<JoinSemilattice0> nodes;
  for (const auto& n : j.at("nodes")) {
    if (n.is_string()) {
      nodes.push_back(load_semilattice(sibling(path, n.get<std::string>())));
    } else {
      nodes.push_back(JoinSemilattice0::validate(poset_from_json(n)));
    }
  }
  std::map<std::pair<int, int>, std::vector<int>> covers;
  for (const auto& e : j.at("edges")) {
    int from = index.index_of(e.at("from").get<std::string>());
    int to = index.index_of(e.at("to").get<std::string>());
    covers[{from, to}] = e.at("map").get<std::vector<int>>();
  }
  return SemDiagram::from_covers(std::move(index), std::move(nodes), covers);
}

LatDiagram load_lat_diagram(const std::string& path) {
  auto j = read_json(path);
  auto index = poset_from_json(j.at("index"));
  std::vector<FiniteLattice> nodes;
  for (const auto& n : j.at("nodes")) {
    if (n.is_string()) {
      nodes.push_back(load_lattice(sibling(path, n.get<std::string>())));
    } else {
      nodes.push_back(FiniteLattice::validate(poset_from_json(n)));
    }
  }
  std::map<std::pair<int, int>, std::vector<int>> covers;
  for (const auto& e : j.at("edges")) {
    int from = index.index_of(e.at("from").get<std::string>());
    int to = index.index_of(e.at("to").get<std::string>());
    covers[{from, to}] = e.at("map").get<std::vector<int>>();
  }
  return LatDiagram::from_covers(std::move(index), std::move(nodes), covers);
}

std::string text_digest(const std::string& text) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return text_digest(ss.str());
}

void write_manifest(const RunManifest& m, const std::string& path) {
  json j;
  j["command"] = m.command;
  auto inputs = json::array();
  for (const auto& [p, d] : m.inputs) {
    inputs.push_back({{"path", p}, {"digest", d}});
  }
  j["inputs"] = inputs;
  j["bounds"] = m.bounds;
  j["wall_seconds"] = m.wall_seconds;
  j["result_digest"] = m.result_digest;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace latvar
