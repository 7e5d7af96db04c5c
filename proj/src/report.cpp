#include "hilbcell/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace hilbcell {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "md") return OutputFormat::md;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

namespace {

ordered_json semigroup_json(const NumericalSemigroup& g) {
    ordered_json j;
    j["generators"] = g.generators();
    if (g.is_plane_branch()) {
        j["p"] = g.p();
        j["q"] = g.q();
    }
    j["delta"] = g.delta();
    j["conductor"] = g.conductor();
    return j;
}

ordered_json cell_json(const CellRecord& cell) {
    ordered_json j;
    j["alphas"] = cell.semimodule.lambda.alphas();
    j["p_basis"] = cell.semimodule.lambda.p_basis();
    j["shift"] = cell.semimodule.shift;
    j["min_generators"] = minimal_generators(cell.semimodule);
    j["dim"] = cell.dim;
    j["codim"] = cell.codim;
    return j;
}

std::string joined(const std::vector<Int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string gamma_label(const NumericalSemigroup& g) {
    return "<" + joined(g.generators(), ",") + ">";
}

// Paper-style Betti table: one row per r, one column per even degree.
std::string md_betti_table(const std::vector<TopologyReport>& rows, bool cohomology) {
    Int max_dim = 0;
    for (const auto& r : rows) max_dim = std::max(max_dim, r.dim_hilb);
    std::ostringstream os;
    os << "| r |";
    for (Int d = 0; d <= max_dim; ++d)
        os << " h" << (cohomology ? "^" : "_") << 2 * d << " |";
    os << "\n|---|";
    for (Int d = 0; d <= max_dim; ++d) os << "---|";
    os << "\n";
    for (const auto& r : rows) {
        os << "| " << r.r << " |";
        const auto& b = cohomology ? r.betti_coh : r.betti_hom;
        for (Int d = 0; d <= max_dim; ++d) {
            if (d < static_cast<Int>(b.size()))
                os << " " << b[static_cast<std::size_t>(d)] << " |";
            else
                os << "  |";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string render_cells(const CellsDocument& doc, OutputFormat fmt) {
    const auto& rep = doc.report;
    switch (fmt) {
        case OutputFormat::json: {
            ordered_json j;
            j["semigroup"] = semigroup_json(doc.gamma);
            j["r"] = rep.r;
            j["dim"] = rep.dim_hilb;
            j["euler"] = rep.euler;
            j["betti_homology"] = rep.betti_hom;
            j["betti_cohomology"] = rep.betti_coh;
            j["poincare"] = rep.poincare();
            j["cells"] = ordered_json::array();
            for (const auto& cell : rep.cells) j["cells"].push_back(cell_json(cell));
            if (doc.oracle_ran) j["oracle"] = doc.oracle_match ? "MATCH" : "MISMATCH";
            return dump(j);
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "r,index,alphas,p_basis,shift,min_generators,dim,codim\n";
            for (std::size_t i = 0; i < rep.cells.size(); ++i) {
                const auto& cell = rep.cells[i];
                os << rep.r << "," << i << "," << joined(cell.semimodule.lambda.alphas()) << ","
                   << joined(cell.semimodule.lambda.p_basis()) << "," << cell.semimodule.shift
                   << "," << joined(minimal_generators(cell.semimodule)) << "," << cell.dim << ","
                   << cell.codim << "\n";
            }
            return os.str();
        }
        case OutputFormat::md: {
            std::ostringstream os;
            os << "# Cells of degree " << rep.r << " for Gamma = " << gamma_label(doc.gamma)
               << "\n\n";
            os << "euler = " << rep.euler << ", dim = " << rep.dim_hilb
               << ", poincare = " << rep.poincare() << "\n\n";
            os << "| index | alphas | p_basis | shift | min_generators | dim | codim |\n";
            os << "|---|---|---|---|---|---|---|\n";
            for (std::size_t i = 0; i < rep.cells.size(); ++i) {
                const auto& cell = rep.cells[i];
                os << "| " << i << " | " << joined(cell.semimodule.lambda.alphas()) << " | "
                   << joined(cell.semimodule.lambda.p_basis()) << " | " << cell.semimodule.shift
                   << " | " << joined(minimal_generators(cell.semimodule)) << " | " << cell.dim
                   << " | " << cell.codim << " |\n";
            }
            if (doc.oracle_ran)
                os << "\noracle cross-check: " << (doc.oracle_match ? "MATCH" : "MISMATCH")
                   << "\n";
            return os.str();
        }
    }
    return {};
}

std::string render_table(const TableDocument& doc, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            ordered_json j;
            j["semigroup"] = semigroup_json(doc.gamma);
            j["rows"] = ordered_json::array();
            for (const auto& rep : doc.rows) {
                ordered_json row;
                row["r"] = rep.r;
                row["euler"] = rep.euler;
                row["dim"] = rep.dim_hilb;
                row["betti_homology"] = rep.betti_hom;
                row["betti_cohomology"] = rep.betti_coh;
                row["poincare"] = rep.poincare();
                j["rows"].push_back(std::move(row));
            }
            return dump(j);
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "r,euler,dim,betti_homology,betti_cohomology,poincare\n";
            for (const auto& rep : doc.rows)
                os << rep.r << "," << rep.euler << "," << rep.dim_hilb << ","
                   << joined(rep.betti_hom) << "," << joined(rep.betti_coh) << ","
                   << rep.poincare() << "\n";
            return os.str();
        }
        case OutputFormat::md: {
            std::ostringstream os;
            os << "# Cell tables for Gamma = " << gamma_label(doc.gamma) << "\n\n";
            os << "## Euler numbers\n\n| r |";
            for (const auto& rep : doc.rows) os << " " << rep.r << " |";
            os << "\n|---|";
            for (std::size_t i = 0; i < doc.rows.size(); ++i) os << "---|";
            os << "\n| e |";
            for (const auto& rep : doc.rows) os << " " << rep.euler << " |";
            os << "\n\n## Betti numbers (homology)\n\n"
               << md_betti_table(doc.rows, false) << "\n## Betti numbers (cohomology)\n\n"
               << md_betti_table(doc.rows, true);
            return os.str();
        }
    }
    return {};
}

std::string render_counterexample(const CounterexampleReport& rep, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["semigroup"] = semigroup_json(NumericalSemigroup::from_generators({3, 4}));
        j["delta_generators"] = rep.delta_generators;
        j["r"] = rep.r;
        j["delta_normal_shift"] = rep.ps.delta_normal.shift;
        j["s_prime"] = rep.ps.s_prime;
        j["j_sets"] = ordered_json::array();
        for (const auto& [g, set] : rep.ps.j_sets) {
            ordered_json e;
            e["generator"] = g;
            e["j_set"] = set;
            j["j_sets"].push_back(std::move(e));
        }
        j["ps_dim"] = rep.ps.ps_dim;
        j["eq2_dim"] = rep.ps.eq2_dim;
        j["agree"] = rep.ps.agree;
        j["solved_ideal"] = rep.solved_ideal;
        j["links"] = ordered_json::array();
        for (const auto& l : rep.links) {
            ordered_json e;
            e["name"] = l.name;
            e["pass"] = l.pass;
            e["detail"] = l.detail;
            j["links"].push_back(std::move(e));
        }
        j["all_pass"] = rep.all_pass;
        return dump(j);
    }
    if (fmt == OutputFormat::md) {
        std::ostringstream os;
        os << "# Dimension-formula comparison on Gamma = <3,4>, Delta = <"
           << joined(rep.delta_generators, ",") << ">_Gamma\n\n";
        os << "| link | result | detail |\n|---|---|---|\n";
        for (const auto& l : rep.links)
            os << "| " << l.name << " | " << (l.pass ? "PASS" : "FAIL") << " | " << l.detail
               << " |\n";
        os << "\nverdict: " << (rep.all_pass ? "PASS" : "BROKEN") << "\n";
        return os.str();
    }
    throw std::invalid_argument("counterexample report supports json and md output");
}

std::string render_check(const StdBasisProblem& prob, const StandardBasisCheck& check,
                         OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["is_standard_basis"] = check.is_standard;
        j["verified_below"] = check.verified_below;
        j["pairs"] = ordered_json::array();
        for (const auto& pr : check.pairs) {
            ordered_json e;
            e["i"] = pr.i;
            e["j"] = pr.j;
            e["order"] = pr.order;
            e["residue"] = format_series(pr.residue);
            j["pairs"].push_back(std::move(e));
        }
        return dump(j);
    }
    std::ostringstream os;
    os << "standard basis: " << (check.is_standard ? "PASS" : "FAIL") << " (verified below t^"
       << check.verified_below << ")\n";
    for (const auto& pr : check.pairs)
        os << "  S(h" << pr.i << ", h" << pr.j << ") at order " << pr.order
           << ": residue = " << format_series(pr.residue) << "\n";
    (void)prob;
    return os.str();
}

std::string render_reduce(const StdBasisProblem& prob, const RationalSeries& input,
                          const ReduceResult& result, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["input"] = format_series(input);
        j["quotients"] = ordered_json::array();
        for (const auto& q : result.quotients) j["quotients"].push_back(format_series(q));
        j["remainder"] = format_series(result.remainder);
        j["exact_below"] = result.exact_below;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << format_series(input) << "\n";
    for (std::size_t l = 0; l < result.quotients.size(); ++l)
        os << "  q" << l << " = " << format_series(result.quotients[l])
           << "   (h" << l << " = " << format_series(prob.module_gens()[l]) << ")\n";
    os << "remainder = " << format_series(result.remainder) << "   (exact below t^"
       << result.exact_below << ")\n";
    return os.str();
}

std::string render_solve(const SolveResult& result, OutputFormat fmt) {
    const char* status = result.status == SolveResult::Status::resolved ? "resolved"
                         : result.status == SolveResult::Status::inconsistent ? "inconsistent"
                                                                              : "underdetermined";
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["status"] = status;
        j["assignments"] = ordered_json::object();
        for (const auto& [name, value] : result.assignments)
            j["assignments"][name] = format_rational(value);
        if (result.status == SolveResult::Status::inconsistent) {
            j["witness_exponent"] = result.witness_exponent;
            j["witness_value"] = format_rational(result.witness_value);
        }
        if (!result.unresolved.empty()) j["unresolved"] = result.unresolved;
        j["generators"] = ordered_json::array();
        for (const auto& g : result.generators) j["generators"].push_back(format_series(g));
        return dump(j);
    }
    std::ostringstream os;
    os << "solve: " << status << "\n";
    for (const auto& [name, value] : result.assignments)
        os << "  " << name << " = " << format_rational(value) << "\n";
    if (result.status == SolveResult::Status::inconsistent)
        os << "  no solution: coefficient " << format_rational(result.witness_value)
           << " at t^" << result.witness_exponent << " cannot vanish\n";
    for (const auto& name : result.unresolved) os << "  unresolved: " << name << "\n";
    for (std::size_t i = 0; i < result.generators.size(); ++i)
        os << "  h" << i << " = " << format_series(result.generators[i]) << "\n";
    return os.str();
}

} // namespace hilbcell
