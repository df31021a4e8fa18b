#include "besov_inflate/report.hpp"

#include <cstdio>

#include "besov_inflate/errors.hpp"

namespace besov {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw InvalidParamError("write_csv: ragged table row");
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << format_double(row[c]);
        os << "\n";
    }
}

void write_json(const Table& table, std::ostream& os) {
    os << "{\n  \"columns\": [";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? ", " : "") << '"' << table.columns[c] << '"';
    os << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << (r ? ",\n    [" : "\n    [");
        for (std::size_t c = 0; c < table.rows[r].size(); ++c)
            os << (c ? ", " : "") << format_double(table.rows[r][c]);
        os << "]";
    }
    os << "\n  ]\n}\n";
}

Table inflation_table(const ExperimentReport& report) {
    Table t;
    t.columns = {"t",         "S",        "besov",        "lip",
                 "energy",    "ledger_u0", "ledger_R",    "ledger_F",
                 "ledger_Edrift", "ledger_tE0"};
    for (const auto& r : report.rows)
        t.rows.push_back({r.t, r.block_sum, r.besov, r.lipschitz, r.energy,
                          r.ledger_u0, r.ledger_R, r.ledger_F, r.ledger_Edrift,
                          r.ledger_tE0});
    return t;
}

Table inflation_diagnostics_table(const ExperimentReport& report) {
    Table t;
    t.columns = {"t",
                 "closure_residual",
                 "jacobian_min",
                 "jacobian_max",
                 "composition_ratio",
                 "step2_lhs",
                 "step2_rhs",
                 "boundary_amplitude"};
    for (const auto& r : report.rows)
        t.rows.push_back({r.t, r.closure_residual, r.jacobian_min, r.jacobian_max,
                          r.composition_ratio, r.step2_lhs, r.step2_rhs,
                          r.boundary_amplitude});
    return t;
}

} // namespace besov
