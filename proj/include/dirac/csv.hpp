// CSV emission. The abscissa column is printed fixed with 12 decimals,
// every other column with 12 significant digits; lines end in LF.
//
// Schemas:
//   entropy traces   t,S_bits,rho00,rho01_re,rho01_im,rho11
//   distributions    x,prob_minus,prob_plus
//   evolved fields   x,psi_minus_re,psi_minus_im,psi_plus_re,psi_plus_im
#ifndef DIRAC_CSV_HPP
#define DIRAC_CSV_HPP

#include "dirac/experiments.hpp"

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirac::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kEntropyHeader = "t,S_bits,rho00,rho01_re,rho01_im,rho11";
inline constexpr const char* kDistributionHeader = "x,prob_minus,prob_plus";
inline constexpr const char* kFieldHeader = "x,psi_minus_re,psi_minus_im,psi_plus_re,psi_plus_im";

std::string format_abscissa(Real v);
std::string format_value(Real v);

void write_csv(std::ostream& out, const FigureDataset& dataset);
void write_csv(std::ostream& out, const EntropyTrace& trace);
void write_csv(std::ostream& out, const DistributionSnapshot& snapshot);
void write_field_csv(std::ostream& out, const SpinorField& field);

/// Writes the dataset to `path` and each inset to `<stem>_<inset id>.csv`
/// beside it. Returns every path written. Throws IoError on failure.
std::vector<std::filesystem::path> write_csv(const FigureDataset& dataset, const std::filesystem::path& path);

/// Numeric table read back from a CSV file with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<Real>> rows;

  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace dirac::cli

#endif  // DIRAC_CSV_HPP
