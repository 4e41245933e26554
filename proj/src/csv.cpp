#include "dirac/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirac::cli {

std::string format_abscissa(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v == 0.0 ? 0.0 : v);  // no "-0.000000000000"
  return buf;
}

std::string format_value(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_csv(std::ostream& out, const FigureDataset& dataset) {
  dataset.check();
  out << dataset.abscissa_label;
  for (const Series& s : dataset.series) out << ',' << s.label;
  out << '\n';
  for (Index i = 0; i < dataset.abscissa.size(); ++i) {
    out << format_abscissa(dataset.abscissa(i));
    for (const Series& s : dataset.series) out << ',' << format_value(s.values(i));
    out << '\n';
  }
}

void write_csv(std::ostream& out, const EntropyTrace& trace) { write_csv(out, trace_dataset("trace", trace)); }

void write_csv(std::ostream& out, const DistributionSnapshot& snapshot) {
  write_csv(out, distribution_dataset("distributions", snapshot));
}

void write_field_csv(std::ostream& out, const SpinorField& field) {
  out << kFieldHeader << '\n';
  for (Index i = 0; i < field.size(); ++i) {
    const Complex a = field.minus()(i);
    const Complex b = field.plus()(i);
    out << format_abscissa(field.grid().x(i)) << ',' << format_value(a.real()) << ',' << format_value(a.imag()) << ','
        << format_value(b.real()) << ',' << format_value(b.imag()) << '\n';
  }
}

namespace {

void write_one(const FigureDataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(out, dataset);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

std::vector<std::filesystem::path> write_csv(const FigureDataset& dataset, const std::filesystem::path& path) {
  std::vector<std::filesystem::path> written{path};
  write_one(dataset, path);
  for (const FigureDataset& inset : dataset.insets) {
    std::filesystem::path p = path;
    p.replace_filename(path.stem().string() + "_" + inset.id + ".csv");
    write_one(inset, p);
    written.push_back(p);
  }
  return written;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("csv has no column '" + name + "'");
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty csv");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<Real> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != table.header.size()) throw IoError("csv row width does not match header");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace dirac::cli
