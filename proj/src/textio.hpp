#pragma once

#include <string>
#include <vector>

#include "assembly.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "setup.hpp"

namespace bter {

// Degree file: "d<TAB>n_d" per line, ascending d, zero counts omitted.
// Readers of all formats accept '#' comments and blank lines.
void write_degree_file(const std::string& path, const std::vector<uint64_t>& counts);
std::vector<uint64_t> read_degree_file(const std::string& path);

// Clustering file: "d<TAB>c_d" per line for d >= 2; omitted degrees read as 0.
void write_ccd_file(const std::string& path, const std::vector<double>& cd);
std::vector<double> read_ccd_file(const std::string& path);

// Edge file: "u<TAB>v" per line with u < v, sorted; the reader also accepts
// unsorted and flipped pairs. one_based shifts ids on the way in or out.
void write_edge_file(const std::string& path, const Graph& g, bool one_based = false);
Graph read_edge_file(const std::string& path, bool one_based = false);

// Measured-clustering report: "d<TAB>c_d<TAB>wedges<TAB>halfwidth", defined
// bins only; exact measurements carry halfwidth 0.
void write_ccd_report(const std::string& path, const std::vector<double>& cd,
                      const std::vector<uint64_t>& wedges, const std::vector<double>& halfwidth);
void write_ccd_report_exact(const std::string& path, const CcdExact& m);
void write_ccd_report_logbin(const std::string& path, const CcdLogBinned& m);

// Preprocessing tables as bracketed sections of "index<TAB>value" lines.
void write_tables_dump(const std::string& path, const SetupTables& t);

}  // namespace bter
