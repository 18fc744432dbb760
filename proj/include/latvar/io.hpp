// JSON fixture files and run manifests.
#pragma once

#include <string>
#include <vector>

#include "latvar/diagram.hpp"
#include "latvar/lattice.hpp"
#include "latvar/variety.hpp"

namespace latvar {

// Lattices and semilattices share one format:
//   { "elements": ["bot", ...], "covers": [["bot","p"], ...] }
FiniteLattice load_lattice(const std::string& path);
void save_lattice(const FiniteLattice& l, const std::string& path);
JoinSemilattice0 load_semilattice(const std::string& path);

// Variety files list generator fixtures relative to their own directory:
//   { "generators": ["T1.json", ...] }
VarietySpec load_variety(const std::string& path);

// Semilattice diagram files carry the index poset, one node per index
// element (inline or by reference), and the cover-edge maps:
//   { "index": {...}, "nodes": [...],
//     "edges": [{"from": "0", "to": "1", "map": [0, ...]}, ...] }
SemDiagram load_sem_diagram(const std::string& path);
// Same format, with every node required to be a lattice.
LatDiagram load_lat_diagram(const std::string& path);

// FNV-1a over the raw file bytes, as fixed-width hex.
std::string file_digest(const std::string& path);
std::string text_digest(const std::string& text);

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::string bounds;
  double wall_seconds = 0;
  std::string result_digest;
};

void write_manifest(const RunManifest& m, const std::string& path);

}  // namespace latvar
