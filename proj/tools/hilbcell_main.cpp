#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "hilbcell/cell_topology.hpp"
#include "hilbcell/errors.hpp"
#include "hilbcell/report.hpp"
#include "hilbcell/verify.hpp"

namespace {

using namespace hilbcell;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleBound = 3;
constexpr int kExitPrecision = 4;

void emit(const std::string& text, const std::string& output_file) {
    if (output_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_file);
    if (!out) throw std::invalid_argument("cannot open output file '" + output_file + "'");
    out << text;
}

NumericalSemigroup plane_branch(Int p, Int q) {
    if (p < 2 || q <= p)
        throw std::invalid_argument("need 2 <= p < q");
    return NumericalSemigroup::from_generators({p, q}); // rejects gcd != 1
}

struct CommonOpts {
    Int p = 0, q = 0;
    std::string format = "json";
    std::string output;
    int lower_index = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "smaller generator (>= 2)")->required();
    cmd->add_option("--q", o.q, "larger generator, coprime to p")->required();
    cmd->add_option("--format", o.format, "output format: json, csv or md")
        ->default_val("json");
    cmd->add_option("--output", o.output, "write to file instead of stdout");
    cmd->add_option("--dim-lower-index", o.lower_index,
                    "first summand of the dimension window sum (debug; 1 breaks the "
                    "reference tables)")
        ->default_val(0);
}

int run_cells(const CommonOpts& o, Int r, bool with_oracle) {
    const auto gamma = plane_branch(o.p, o.q);
    if (r < 0) throw std::invalid_argument("need r >= 0");
    CellsDocument doc;
    doc.gamma = gamma;
    doc.report = topology_report(gamma, r, o.lower_index);
    if (with_oracle) {
        const Int bound = oracle_bound(gamma, r);
        auto brute = oracle_enumerate_mod_r(gamma, r);
        std::vector<std::vector<Int>> fast;
        for (const auto& cell : doc.report.cells)
            fast.push_back(cell.semimodule.elements_below(bound));
        std::sort(fast.begin(), fast.end());
        doc.oracle_ran = true;
        doc.oracle_match = fast == brute;
    }
    emit(render_cells(doc, parse_format(o.format)), o.output);
    return doc.oracle_ran && !doc.oracle_match ? kExitCheckFailed : kExitOk;
}

int run_table(const CommonOpts& o, Int r_max) {
    const auto gamma = plane_branch(o.p, o.q);
    if (r_max < 0) throw std::invalid_argument("need r-max >= 0");
    TableDocument doc;
    doc.gamma = gamma;
    for (Int r = 0; r <= r_max; ++r) doc.rows.push_back(topology_report(gamma, r, o.lower_index));
    emit(render_table(doc, parse_format(o.format)), o.output);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine cell decompositions of punctual Hilbert schemes of plane branches"};
    app.require_subcommand(1);

    CommonOpts cells_opts;
    Int cells_r = 0;
    bool cells_oracle = false;
    auto* cells = app.add_subcommand("cells", "cell inventory for one degree");
    add_common(cells, cells_opts);
    cells->add_option("--r", cells_r, "degree (codimension in Gamma)")->required();
    cells->add_flag("--oracle", cells_oracle, "cross-check against the brute-force enumeration");

    CommonOpts table_opts;
    Int table_rmax = 0;
    auto* table = app.add_subcommand("table", "Euler/Betti tables for degrees 0..r-max");
    add_common(table, table_opts);
    table->add_option("--r-max", table_rmax, "largest degree")->required();

    std::string sb_ring, sb_gens, sb_f, sb_format = "md", sb_output;
    Int sb_trunc = 0;
    auto* sb = app.add_subcommand("stdbasis", "standard-basis engine for truncated series");
    sb->add_option("--ring", sb_ring, "ring generators, e.g. \"t^3, t^4+t^5\"")->required();
    sb->add_option("--gens", sb_gens, "module generators (solve: symbols allowed)")->required();
    sb->add_option("--trunc", sb_trunc, "truncation order (0 = automatic)")->default_val(0);
    sb->add_option("--format", sb_format, "output format: json or md")->default_val("md");
    sb->add_option("--output", sb_output, "write to file instead of stdout");
    auto* sb_check = sb->add_subcommand("check", "standard-basis criterion with residues");
    auto* sb_reduce = sb->add_subcommand("reduce", "divide f by the pair");
    sb_reduce->add_option("--f", sb_f, "series to reduce")->required();
    auto* sb_solve =
        sb->add_subcommand("solve", "resolve symbolic coefficients by ring membership");
    sb->require_subcommand(1);

    std::string ce_format = "md", ce_output;
    auto* ce = app.add_subcommand("counterexample",
                                  "dimension-formula comparison chain on <3,4>, <4,6,7>");
    ce->add_option("--format", ce_format, "output format: json or md")->default_val("md");
    ce->add_option("--output", ce_output, "write to file instead of stdout");

    int verify_lower = 0;
    auto* verify = app.add_subcommand("verify", "run the built-in acceptance suite");
    verify
        ->add_option("--dim-lower-index", verify_lower,
                     "dimension window sum start (debug; 1 makes the fixtures fail)")
        ->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cells->parsed()) return run_cells(cells_opts, cells_r, cells_oracle);
        if (table->parsed()) return run_table(table_opts, table_rmax);
        if (sb->parsed()) {
            const auto fmt = parse_format(sb_format);
            VarTable vars;
            std::vector<SymbolicSeries> sym_gens;
            {
                std::string_view text = sb_gens;
                std::size_t start = 0;
                for (std::size_t i = 0; i <= text.size(); ++i)
                    if (i == text.size() || text[i] == ',') {
                        sym_gens.push_back(parse_series(text.substr(start, i - start), vars));
                        start = i + 1;
                    }
            }
            auto ring = parse_series_list(sb_ring);
            if (ring.empty() || ring.front().terms().size() != 1)
                throw std::invalid_argument("first ring generator must be a pure power t^p");
            if (sb_solve->parsed()) {
                const auto result = resolve_in_ring(sym_gens, ring, vars, sb_trunc);
                emit(render_solve(result, fmt), sb_output);
                return kExitOk;
            }
            std::vector<RationalSeries> gens;
            for (const auto& g : sym_gens) gens.push_back(to_rational(g));
            auto prob = StdBasisProblem::create(ring, gens, sb_trunc);
            if (sb_check->parsed()) {
                emit(render_check(prob, standard_basis_check(prob), fmt), sb_output);
                return kExitOk;
            }
            const auto f = parse_rational_series(sb_f);
            emit(render_reduce(prob, f, reduce(f, prob), fmt), sb_output);
            return kExitOk;
        }
        if (ce->parsed()) {
            const auto rep = counterexample_report();
            emit(render_counterexample(rep, parse_format(ce_format)), ce_output);
            return rep.all_pass ? kExitOk : kExitCheckFailed;
        }
        if (verify->parsed()) {
            AcceptanceOptions opts;
            opts.lower_index = verify_lower;
            return run_acceptance(std::cout, opts) ? kExitOk : kExitCheckFailed;
        }
    } catch (const OracleBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracleBound;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << " (suggested truncation: " << e.needed_trunc
                  << ")\n";
        return kExitPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
