#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "perronkit/matrix.hpp"

namespace perronkit::io {

enum class Format { Auto, MatrixMarket, Csv };
enum class MatrixMarketLayout { Array, Coordinate };

/// Array and CSV inputs at or below this order are stored dense, larger ones
/// as CSR. Coordinate input is always CSR.
inline constexpr std::size_t kDenseOrderLimit = 512;

/// Reads `array real general` or `coordinate real general` (`integer` is
/// accepted as a field too). Duplicate coordinates are rejected.
NonnegMatrix read_matrix_market(std::istream& in);

/// Comma-separated rows, one per line; blank lines are skipped.
NonnegMatrix read_csv(std::istream& in);

/// Entries are written with 17 significant digits.
void write_matrix_market(std::ostream& out, const NonnegMatrix& a, MatrixMarketLayout layout);
void write_csv(std::ostream& out, const NonnegMatrix& a);

/// Auto sniffs the `%%MatrixMarket` banner, otherwise treats the file as CSV.
NonnegMatrix parse_matrix(const std::filesystem::path& path, Format format = Format::Auto);

/// Formats a double with 17 significant digits.
std::string format_real(double v);

}  // namespace perronkit::io
