#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqw/classify.hpp"
#include "sqw/operators.hpp"
#include "sqw/search.hpp"
#include "sqw/szegedy.hpp"

namespace sqw {

// Edge-list text format: '#' comment lines, then a line with the vertex
// count, then one "u v" pair per line. The writer emits sorted edges and
// vertex labels as leading comments, so output is deterministic.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

// Tessellation file: JSON {"blue": [[v,...],...], "red": [[v,...],...]};
// polygon order is significant and preserved.
TessellationPair read_tessellation(std::istream& in);
TessellationPair read_tessellation_file(const std::string& path);
std::string format_tessellation(const TessellationPair& pair);

// Amplitude CSV: header "polygon_index,vertex,re,im", one row per polygon
// member. The reader validates the rows against the tessellation and
// normalizes each polygon vector.
std::string format_amplitudes(const Tessellation& t,
                              const std::vector<PolygonStateVector>& vectors);
std::vector<PolygonStateVector> read_amplitudes(std::istream& in, const Tessellation& t);
std::vector<PolygonStateVector> read_amplitudes_file(const std::string& path,
                                                     const Tessellation& t);

// Dense complex matrix CSV with entries "re+imj".
std::string format_complex_entry(Complex z);
Complex parse_complex_entry(const std::string& text);
std::string format_dense_csv(const ComplexMatrix& m);
ComplexMatrix read_dense_csv(std::istream& in);
ComplexMatrix read_dense_csv_file(const std::string& path);

// Search probability series CSV: header "t,p".
std::string format_series_csv(const std::vector<double>& series);

// Reports: human-readable text followed by a structured "[...]" block;
// golden tests pin the structured block only.
std::string classify_report(const Graph& g, const ClassEvidence& evidence);
std::string convert_report(const SzegedyInstance& inst, const BlockCheck& check);
std::string fit_report(const ScalingFit& fit);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace sqw
