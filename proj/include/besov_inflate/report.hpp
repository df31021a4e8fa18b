#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "besov_inflate/experiment.hpp"

namespace besov {

// Plain numeric table; the interchange format for every subcommand.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// 17-significant-digit CSV (deterministic, byte-identical for equal inputs).
void write_csv(const Table& table, std::ostream& os);
// JSON mirror: {"columns": [...], "rows": [[...], ...]}.
void write_json(const Table& table, std::ostream& os);

std::string format_double(double v);

// Fixed-header time series for the inflation run:
// t,S,besov,lip,energy,ledger_u0,ledger_R,ledger_F,ledger_Edrift,ledger_tE0
Table inflation_table(const ExperimentReport& report);
// All diagnostics (closure residual, jacobian range, Step-2 series, ...).
Table inflation_diagnostics_table(const ExperimentReport& report);

} // namespace besov
