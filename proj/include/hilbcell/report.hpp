#pragma once

#include <string>

#include "hilbcell/cell_topology.hpp"
#include "hilbcell/ps_compare.hpp"
#include "hilbcell/stdbasis.hpp"

namespace hilbcell {

enum class OutputFormat { json, csv, md };

/// "json", "csv" or "md"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

struct CellsDocument {
    NumericalSemigroup gamma;
    TopologyReport report;
    bool oracle_ran = false;
    bool oracle_match = false;
};

struct TableDocument {
    NumericalSemigroup gamma;
    std::vector<TopologyReport> rows; // r = 0 .. r_max
};

std::string render_cells(const CellsDocument& doc, OutputFormat fmt);
std::string render_table(const TableDocument& doc, OutputFormat fmt);

/// json or md (csv not meaningful here).
std::string render_counterexample(const CounterexampleReport& rep, OutputFormat fmt);

std::string render_check(const StdBasisProblem& prob, const StandardBasisCheck& check,
                         OutputFormat fmt);
std::string render_reduce(const StdBasisProblem& prob, const RationalSeries& input,
                          const ReduceResult& result, OutputFormat fmt);
std::string render_solve(const SolveResult& result, OutputFormat fmt);

} // namespace hilbcell
