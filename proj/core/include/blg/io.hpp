#pragma once

#include <string>

#include "blg/bilabeled.hpp"
#include "blg/fourcolor.hpp"
#include "blg/hommatrix.hpp"
#include "blg/intertwine.hpp"

namespace blg {

// Bi-labeled graph JSON:
//   {"n": int, "edges": [[u,v],...], "loops": [u,...], "out": [...], "in": [...]}
std::string blg_to_json(const BiLabeledGraph& h);
BiLabeledGraph blg_from_json(const std::string& text);

// Matrix JSON with decimal-string entries (row major):
//   {"n": int, "l": int, "k": int, "entries": ["0", "18", ...]}
std::string matrix_to_json(const HomMatrix& m);
HomMatrix matrix_from_json(const std::string& text);

// Partition JSON: {"size": int, "classes": [[...], ...]}
std::string partition_to_json(const RefinementPartition& p);
RefinementPartition partition_from_json(const std::string& text);

std::string report_to_json(const FourColorReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Graph files: JSON (bi-labeled, tuples ignored) or the plain text format.
Graph load_graph(const std::string& path);
BiLabeledGraph load_blg(const std::string& path);

}  // namespace blg
