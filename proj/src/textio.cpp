#include "textio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bter {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail_io("cannot open " + path + " for writing");
  return out;
}

// strips comments, returns false for blank lines
bool payload(std::string& line) {
  size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) fail_io("write failed for " + path);
}

}  // namespace

void write_degree_file(const std::string& path, const std::vector<uint64_t>& counts) {
  std::ofstream out = open_out(path);
  for (uint64_t d = 1; d < counts.size(); ++d)
    if (counts[d] > 0) out << d << '\t' << counts[d] << '\n';
  finish(out, path);
}

std::vector<uint64_t> read_degree_file(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<uint64_t> counts;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!payload(line)) continue;
    std::istringstream ss(line);
    uint64_t d = 0, n = 0;
    if (!(ss >> d >> n) || d == 0)
      fail_io(path + ":" + std::to_string(lineno) + ": expected 'degree<TAB>count'");
    if (d >= counts.size()) counts.resize(d + 1, 0);
    if (counts[d] != 0) fail_io(path + ":" + std::to_string(lineno) + ": duplicate degree");
    counts[d] = n;
  }
  if (counts.empty()) fail_io(path + ": no degree entries");
  return counts;
}

void write_ccd_file(const std::string& path, const std::vector<double>& cd) {
  std::ofstream out = open_out(path);
  char buf[64];
  for (uint64_t d = 2; d < cd.size(); ++d) {
    if (cd[d] > 0.0) {
      std::snprintf(buf, sizeof buf, "%llu\t%.17g\n", static_cast<unsigned long long>(d), cd[d]);
      out << buf;
    }
  }
  finish(out, path);
}

std::vector<double> read_ccd_file(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<double> cd;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!payload(line)) continue;
    std::istringstream ss(line);
    uint64_t d = 0;
    double c = 0.0;
    if (!(ss >> d >> c) || d < 2)
      fail_io(path + ":" + std::to_string(lineno) + ": expected 'degree<TAB>coefficient', degree >= 2");
    if (d >= cd.size()) cd.resize(d + 1, 0.0);
    cd[d] = c;
  }
  if (cd.size() < 2) cd.resize(2, 0.0);
  return cd;
}

void write_edge_file(const std::string& path, const Graph& g, bool one_based) {
  std::ofstream out = open_out(path);
  uint64_t shift = one_based ? 1 : 0;
  for (const Edge& e : g.edges) out << e.u + shift << '\t' << e.v + shift << '\n';
  finish(out, path);
}

Graph read_edge_file(const std::string& path, bool one_based) {
  std::ifstream in = open_in(path);
  RawEdges raw;
  std::string line;
  size_t lineno = 0;
  uint64_t shift = one_based ? 1 : 0;
  uint64_t max_id = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!payload(line)) continue;
    std::istringstream ss(line);
    uint64_t u = 0, v = 0;
    if (!(ss >> u >> v) || u < shift || v < shift)
      fail_io(path + ":" + std::to_string(lineno) + ": expected 'u<TAB>v'");
    u -= shift;
    v -= shift;
    raw.edges.push_back({u, v});
    max_id = std::max({max_id, u, v});
  }
  raw.num_nodes = raw.edges.empty() ? 0 : max_id + 1;
  return dedup(std::move(raw));
}

void write_ccd_report(const std::string& path, const std::vector<double>& cd,
                      const std::vector<uint64_t>& wedges, const std::vector<double>& halfwidth) {
  std::ofstream out = open_out(path);
  char buf[128];
  for (uint64_t d = 2; d < cd.size(); ++d) {
    if (std::isnan(cd[d])) continue;
    double hw = d < halfwidth.size() && !std::isnan(halfwidth[d]) ? halfwidth[d] : 0.0;
    std::snprintf(buf, sizeof buf, "%llu\t%.6f\t%llu\t%.6f\n", static_cast<unsigned long long>(d),
                  cd[d], static_cast<unsigned long long>(d < wedges.size() ? wedges[d] : 0), hw);
    out << buf;
  }
  finish(out, path);
}

void write_ccd_report_exact(const std::string& path, const CcdExact& m) {
  write_ccd_report(path, m.cd, m.wedges, {});
}

void write_ccd_report_logbin(const std::string& path, const CcdLogBinned& m) {
  std::ofstream out = open_out(path);
  char buf[160];
  for (size_t i = 0; i < m.cd.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%llu-%llu\t%.6f\t%llu\t%.6f\n",
                  static_cast<unsigned long long>(m.lo[i]), static_cast<unsigned long long>(m.hi[i]),
                  m.cd[i], static_cast<unsigned long long>(m.wedges[i]), m.halfwidth[i]);
    out << buf;
  }
  finish(out, path);
}

void write_tables_dump(const std::string& path, const SetupTables& t) {
  std::ofstream out = open_out(path);
  char buf[96];
  auto dump_u = [&](const char* name, const std::vector<uint64_t>& v, uint64_t from) {
    out << '[' << name << "]\n";
    for (uint64_t i = from; i < v.size(); ++i) out << i << '\t' << v[i] << '\n';
  };
  auto dump_d = [&](const char* name, const std::vector<double>& v, uint64_t from) {
    out << '[' << name << "]\n";
    for (uint64_t i = from; i < v.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%llu\t%.17g\n", static_cast<unsigned long long>(i), v[i]);
      out << buf;
    }
  };
  out << "[scalars]\n";
  out << "num_nodes\t" << t.num_nodes << '\n';
  out << "max_degree\t" << t.max_degree << '\n';
  std::snprintf(buf, sizeof buf, "w1\t%.17g\nw2\t%.17g\n", t.w1, t.w2);
  out << buf;
  dump_u("nd", t.nd, 1);
  dump_u("degree_first_id", t.degrees.id, 1);
  dump_u("degree_fill", t.degrees.nd_fill, 1);
  dump_d("degree_weight_cum", t.degrees.wd_cum, 1);
  dump_d("degree_fill_fraction", t.degrees.rd, 1);
  dump_u("group_first_id", t.groups.ig, 0);
  dump_u("group_blocks", t.groups.bg, 0);
  dump_u("group_block_size", t.groups.ng, 0);
  dump_d("group_weight_cum", t.groups.wg_cum, 0);
  finish(out, path);
}

}  // namespace bter
