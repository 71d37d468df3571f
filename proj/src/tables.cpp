#include "splitting/tables.hpp"

#include "splitting/catalog.hpp"
#include "splitting/residual.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace splitting {

namespace {

constexpr std::array five_letter{Word::W11112, Word::W21112, Word::W11221, Word::W22112, Word::W12221, Word::W22221};
constexpr std::array four_letter{Word::W1112, Word::W1221, Word::W2221};

std::string rho_header(Word w) { return "rho_" + std::string(word_name(w)); }

struct MetricDecimals {
    int weights; // D and L
    int ratio;   // R/D
    int z;
};

Table metric_table(std::string name, std::string title, std::initializer_list<std::string_view> ids, MetricDecimals dec) {
    Table t{std::move(name), std::move(title), {"method", "D", "L", "I", "L/D", "R/D", "Z"}, {}};
    for (auto id : ids) {
        const MethodReport r = report(catalog_method(id), catalog_entry(id).claimed_order);
        t.rows.push_back({std::string(id), format_fixed(r.D, dec.weights), format_fixed(r.L, dec.weights),
                          std::to_string(r.I), format_fixed(r.L_over_D, 2), format_fixed(r.R_over_D.value(), dec.ratio),
                          format_fixed(r.Z.value(), dec.z)});
    }
    return t;
}

template <std::size_t K>
Table rho_table(std::string name, std::string title, std::initializer_list<std::string_view> ids,
                const std::array<Word, K>& words, int decimals, bool with_lead = true) {
    Table t{std::move(name), std::move(title), {"method"}, {}};
    if (with_lead) t.header.push_back("rho_1");
    for (Word w : words) t.header.push_back(rho_header(w));
    for (auto id : ids) {
        const MethodReport r = report(catalog_method(id));
        std::vector<std::string> row{std::string(id)};
        if (with_lead) row.push_back(format_fixed(r.rho[Word::W1], decimals == 6 ? 1 : decimals));
        for (Word w : words) row.push_back(format_fixed(r.rho[w], decimals));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace

std::vector<Table> metric_tables() {
    return {
        metric_table("metrics_order3", "3rd order integer methods", {"Z3_1", "Z3_2", "Z3_3", "Z3_4", "Z3_5"}, {0, 1, 1}),
        metric_table("metrics_order4", "4th order integer methods", {"Z4_1", "Z4_2", "Z4_3", "Z4_4"}, {0, 1, 1}),
        metric_table("metrics_irrational", "Irrational methods", {"R3_1", "R4_1", "R4_2", "R4_3", "R4_4"}, {4, 4, 2}),
    };
}

std::vector<Table> residual_tables() {
    std::vector<Table> out;
    out.push_back(rho_table("rho_order3_a", "3rd order integer methods, order-4 residuals",
                            {"Z3_1", "Z3_2", "Z3_3", "Z3_4", "Z3_5"}, four_letter, 1));
    out.push_back(rho_table("rho_order3_b", "3rd order integer methods, order-5 residuals",
                            {"Z3_1", "Z3_2", "Z3_3", "Z3_4", "Z3_5"}, five_letter, 1, false));
    out.push_back(rho_table("rho_r3_a", "3rd order irrational method, order-4 residuals", {"R3_1"}, four_letter, 6));
    out.push_back(rho_table("rho_r3_b", "3rd order irrational method, order-5 residuals", {"R3_1"}, five_letter, 6, false));
    out.push_back(rho_table("rho_order4", "4th order integer methods", {"Z4_1", "Z4_2", "Z4_3", "Z4_4"}, five_letter, 1));
    out.push_back(
        rho_table("rho_r4", "4th order irrational methods", {"R4_1", "R4_2", "R4_3", "R4_4"}, five_letter, 6));

    Table comm{"rho_commutator", "4th order commutator gate", {"method", rho_header(Word::W12)}, {}};
    for (Word w : five_letter) comm.header.push_back(rho_header(w));
    const MethodReport r = report(catalog_method("COMM4"));
    std::vector<std::string> row{"COMM4", format_fixed(r.rho[Word::W12], 1)};
    for (Word w : five_letter) row.push_back(format_fixed(r.rho[w], 1));
    comm.rows.push_back(std::move(row));
    out.push_back(std::move(comm));
    return out;
}

std::vector<Table> all_tables() {
    std::vector<Table> out = metric_tables();
    for (auto& t : residual_tables()) out.push_back(std::move(t));
    return out;
}

std::string render_text(const std::vector<Table>& tables) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : tables) {
        if (!first) out << '\n';
        first = false;
        std::vector<std::size_t> width(t.header.size(), 0);
        auto widen = [&](const std::vector<std::string>& cells) {
            for (std::size_t k = 0; k < cells.size() && k < width.size(); ++k) width[k] = std::max(width[k], cells[k].size());
        };
        widen(t.header);
        for (const auto& r : t.rows) widen(r);
        auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t k = 0; k < cells.size(); ++k) {
                const std::string pad(width[k] - cells[k].size(), ' ');
                // Method ids left aligned, numbers right aligned.
                if (k == 0) out << cells[k] << pad;
                else out << "  " << pad << cells[k];
            }
            out << '\n';
        };
        out << t.title << '\n';
        emit(t.header);
        for (const auto& r : t.rows) emit(r);
    }
    return out.str();
}

std::string render_csv(const std::vector<Table>& tables) {
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << csv_cell(cells[k]);
        out << '\n';
    };
    for (const auto& t : tables) {
        out << "table," << csv_cell(t.name) << '\n';
        emit(t.header);
        for (const auto& r : t.rows) emit(r);
    }
    return out.str();
}

std::vector<std::string> diff_lines(std::string_view expected, std::string_view actual) {
    const auto a = split_lines(expected);
    const auto b = split_lines(actual);
    std::vector<std::string> out;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::string* x = k < a.size() ? &a[k] : nullptr;
        const std::string* y = k < b.size() ? &b[k] : nullptr;
        if (x && y && *x == *y) continue;
        const std::string where = "line " + std::to_string(k + 1) + ": ";
        if (x) out.push_back(where + "- " + *x);
        if (y) out.push_back(where + "+ " + *y);
    }
    return out;
}

} // namespace splitting
