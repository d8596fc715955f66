#include <string>
#include <vector>

#include "matrix_resource.hpp"
#include "wls/algebra.hpp"
#include "wls/errors.hpp"

namespace wls {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

LicenseMatrix LicenseMatrix::from_csv(std::string_view text)
{
  if (text.empty() || text.back() != '\n')
    throw ValidationError("license matrix: missing final LF");
  text.remove_suffix(1);
  auto lines = split(text, '\n');
  if (lines.size() != kDesignationCount + 1)
    throw ValidationError("license matrix: expected 13 lines, got " + std::to_string(lines.size()));

  auto header = split(lines[0], ',');
  if (header.size() != kDesignationCount + 1 || header[0] != "code")
    throw ValidationError("license matrix: bad header");
  for (std::size_t j = 0; j < kDesignationCount; ++j) {
    if (header[j + 1] != code(kAllDesignations[j]))
      throw ValidationError("license matrix: header column " + std::to_string(j + 1) +
                            " is '" + std::string(header[j + 1]) + "'");
  }

  std::array<Row, kDesignationCount> cells{};
  for (std::size_t i = 0; i < kDesignationCount; ++i) {
    const auto line_no = std::to_string(i + 2);
    auto fields = split(lines[i + 1], ',');
    if (fields.size() != kDesignationCount + 1)
      throw ValidationError("license matrix line " + line_no + ": expected 13 fields");
    if (fields[0] != code(kAllDesignations[i]))
      throw ValidationError("license matrix line " + line_no + ": row code '" +
                            std::string(fields[0]) + "' out of order");
    for (std::size_t j = 0; j < kDesignationCount; ++j) {
      auto outcome = outcome_from_code(fields[j + 1]);
      if (!outcome)
        throw ValidationError("license matrix line " + line_no + ": unknown cell '" +
                              std::string(fields[j + 1]) + "'");
      cells[i][j] = *outcome;
    }
  }
  return LicenseMatrix(cells);
}

const LicenseMatrix& LicenseMatrix::builtin()
{
  static const LicenseMatrix matrix = from_csv(detail::license_matrix_csv());
  return matrix;
}

std::string LicenseMatrix::to_csv() const
{
  std::string out = "code";
  for (auto d : kAllDesignations)
    out.append(",").append(code(d));
  out += '\n';
  for (auto row : kAllDesignations) {
    out.append(code(row));
    for (auto column : kAllDesignations)
      out.append(",").append(cell(row, column).code());
    out += '\n';
  }
  return out;
}

}  // namespace wls
