#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace splitting {

/// A rendered table: every cell is already formatted text.
struct Table {
    std::string name; // short id, used in CSV output
    std::string title;
    std::vector<std::string> header; // first column is the method id
    std::vector<std::vector<std::string>> rows;
};

/// D, L, I, L/D (2 decimals), R/D and Z (1 decimal) for the integer methods
/// of orders 3 and 4, plus the irrational methods (D, L, R/D to 4 decimals,
/// Z to 2).
std::vector<Table> metric_tables();

/// rho rows: integer methods to 1 decimal, irrational methods to 6, and the
/// commutator gate with rho_12 in place of rho_1.
std::vector<Table> residual_tables();

/// metric_tables() followed by residual_tables().
std::vector<Table> all_tables();

/// Columns padded to a common width, right aligned; blank line between tables.
std::string render_text(const std::vector<Table>& tables);
/// One block per table: "table,<name>" then header and rows as CSV.
std::string render_csv(const std::vector<Table>& tables);

/// Line-level differences between expected and actual text; empty when equal.
std::vector<std::string> diff_lines(std::string_view expected, std::string_view actual);

} // namespace splitting
