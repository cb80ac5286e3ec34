// ldm: lattice-diagram-module calculator.
//
// Subcommands: delta, dim, scan, verify-shift, verify-reductions,
// counterexample, basis-x, depths. Reports are JSON (CSV for scans on
// request); the exit code is 0 only when every requested check holds.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "lattice/basis.hpp"
#include "lattice/json_io.hpp"
#include "lattice/scan.hpp"
#include "lattice/spaces.hpp"

using namespace lattice;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(std::stoi(item));
    return Partition(parts);
}

Cell parse_cell(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("cell must look like r,c");
    return Cell{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::vector<Cell> parse_cell_list(const std::vector<std::string>& items) {
    std::vector<Cell> cells;
    for (const std::string& s : items) cells.push_back(parse_cell(s));
    return cells;
}

std::vector<Cell> parse_cell_group(const std::string& text) {
    // "0,0;1,0;0,1"
    std::vector<Cell> cells;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) cells.push_back(parse_cell(item));
    return cells;
}

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
    }
}

std::string csv_parts(const Partition& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        if (i) s += " ";
        s += std::to_string(mu.parts()[i]);
    }
    return s;
}

Json scan_record_json(const ScanRecord& r) {
    Json j;
    j["mu"] = to_json(r.mu);
    j["cell"] = to_json(r.cell);
    j["k"] = r.k;
    j["s"] = r.s;
    j["bound"] = r.bound;
    if (r.dim_xy) {
        j["dim_xy"] = *r.dim_xy;
        j["hilbert"] = hilbert_json(r.hilbert);
    }
    if (r.dim_x) {
        j["dim_x"] = *r.dim_x;
        j["tableaux"] = *r.tableaux;
    }
    j["equal"] = r.equal;
    return j;
}

int run_delta(const std::vector<std::string>& cell_args, const std::string& out_path) {
    auto canon = canonicalize(parse_cell_list(cell_args));
    int n = static_cast<int>(cell_args.size());
    Polynomial d = delta(canon, n);
    std::cout << d.to_text() << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << d.to_text() << "\n";
    }
    return 0;
}

int run_dim(const Partition& mu, const std::string& out_path) {
    SpanBasis xy = derivative_closure({delta(diagram_of(mu), mu.size())});
    SpanBasis x = x_subspace({delta(diagram_of(mu), mu.size())});
    Json j;
    j["dim_xy"] = xy.dimension();
    j["dim_x"] = x.dimension();
    emit(j, out_path);
    return 0;
}

int run_scan_cmd(const ScanConfig& config, const std::string& out_path,
                 const std::string& format) {
    auto records = run_scan(config);
    bool all_ok = true;
    for (const ScanRecord& r : records) {
        if (!r.bound_ok)
            throw std::logic_error("dimension exceeded its proven bound");
        all_ok = all_ok && r.equal;
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "mu,cell,k,s,dim_xy,bound,dim_x,tableaux,equal\n";
        for (const ScanRecord& r : records) {
            os << '"' << csv_parts(r.mu) << '"' << ','
               << '"' << r.cell.row << ' ' << r.cell.col << '"' << ','
               << r.k << ',' << r.s << ','
               << (r.dim_xy ? std::to_string(*r.dim_xy) : "") << ','
               << r.bound << ','
               << (r.dim_x ? std::to_string(*r.dim_x) : "") << ','
               << (r.tableaux ? std::to_string(*r.tableaux) : "") << ','
               << (r.equal ? "true" : "false") << "\n";
        }
        std::cout << os.str();
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << os.str();
        }
    } else {
        Json arr = Json::array();
        for (const ScanRecord& r : records) arr.push_back(scan_record_json(r));
        emit(Json{{"records", arr}, {"all_equal", all_ok}}, out_path);
    }
    return all_ok ? 0 : kExitCheckFailed;
}

int run_verify_shift(int max_cells, int box, int max_r, int random_count,
                     const std::vector<std::string>& cell_args, const std::string& kind_name,
                     int single_r, const std::string& out_path) {
    std::vector<std::pair<SymKind, std::string>> kinds = {
        {SymKind::PowerSum, "powersum"},
        {SymKind::Elementary, "elementary"},
        {SymKind::Homogeneous, "homogeneous"}};
    Json failures = Json::array();
    long instances = 0;

    auto run_one = [&](SymKind kind, const std::string& name, int r, const LatticeDiagram& L) {
        ++instances;
        if (!verify_shift(kind, r, L).match)
            failures.push_back(Json{{"kind", name}, {"r", r}, {"diagram", to_json(L)}});
    };

    if (!cell_args.empty()) {
        auto canon = canonicalize(parse_cell_list(cell_args));
        if (!canon) throw std::invalid_argument("degenerate diagram");
        for (auto& [kind, name] : kinds) {
            if (!kind_name.empty() && name != kind_name) continue;
            for (int r = 1; r <= max_r; ++r) {
                if (single_r && r != single_r) continue;
                run_one(kind, name, r, canon->diagram);
            }
        }
    } else {
        std::vector<Cell> grid;
        for (int j = 0; j < box; ++j)
            for (int i = 0; i < box; ++i) grid.push_back({i, j});
        const int total = static_cast<int>(grid.size());
        for (long mask = 1; mask < (1L << total); ++mask) {
            int bits = __builtin_popcountl(static_cast<unsigned long>(mask));
            if (bits > max_cells) continue;
            std::vector<Cell> cells;
            for (int b = 0; b < total; ++b)
                if (mask & (1L << b)) cells.push_back(grid[b]);
            LatticeDiagram L = canonicalize(cells)->diagram;
            for (auto& [kind, name] : kinds)
                for (int r = 1; r <= max_r; ++r) run_one(kind, name, r, L);
        }
        std::mt19937_64 rng(12345);
        for (int t = 0; t < random_count; ++t) {
            std::vector<Cell> bigger;
            for (int j = 0; j < box + 1; ++j)
                for (int i = 0; i < box + 1; ++i) bigger.push_back({i, j});
            std::shuffle(bigger.begin(), bigger.end(), rng);
            bigger.resize(static_cast<std::size_t>(max_cells) + 1);
            LatticeDiagram L = canonicalize(bigger)->diagram;
            for (auto& [kind, name] : kinds)
                for (int r = 1; r <= max_r; ++r) run_one(kind, name, r, L);
        }
    }
    bool ok = failures.empty();
    emit(Json{{"instances", instances}, {"failures", failures}, {"match", ok}}, out_path);
    return ok ? 0 : kExitCheckFailed;
}

int run_verify_reductions(int max_mu, const std::string& out_path) {
    Json arr = Json::array();
    bool all_ok = true;
    for (const Partition& mu : partitions_up_to(max_mu))
        for (const Cell& c : mu.cells()) {
            ReductionReport rep = verify_sum_reduction(mu, c);
            bool ok = rep.k1_equal && (!rep.k2_applicable || rep.k2_equal);
            all_ok = all_ok && ok;
            Json j{{"mu", to_json(mu)},
                   {"cell", to_json(c)},
                   {"k1_equal", rep.k1_equal},
                   {"k1_dim", rep.k1_dim_sum}};
            if (rep.k2_applicable) {
                j["k2_equal"] = rep.k2_equal;
                j["k2_dim"] = rep.k2_dim_sum;
            } else {
                j["k2"] = "not applicable";
            }
            arr.push_back(std::move(j));
        }
    emit(Json{{"records", arr}, {"all_equal", all_ok}}, out_path);
    return all_ok ? 0 : kExitCheckFailed;
}

int run_counterexample(const std::string& mu_text, const std::string& target_text,
                       const std::vector<std::string>& gen_texts,
                       const std::string& out_path) {
    bool default_instance = mu_text.empty();
    Partition mu = default_instance ? Partition({3, 2}) : parse_partition(mu_text);
    std::vector<Cell> target = default_instance
                                   ? std::vector<Cell>{{0, 0}, {1, 0}, {0, 2}}
                                   : parse_cell_group(target_text);
    std::vector<std::vector<Cell>> gens;
    if (default_instance) {
        gens = {{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {0, 1}, {0, 2}}};
    } else {
        for (const std::string& g : gen_texts) gens.push_back(parse_cell_group(g));
    }
    bool member = counterexample_probe(mu, target, gens);
    Json j{{"mu", to_json(mu)},
           {"target", cells_json(target)},
           {"member", member}};
    Json gens_json = Json::array();
    for (const auto& g : gens) gens_json.push_back(cells_json(g));
    j["gens"] = gens_json;
    int code = 0;
    if (default_instance) {
        j["reproduced"] = !member;
        code = member ? kExitCheckFailed : 0;
    }
    emit(j, out_path);
    return code;
}

int run_basis_x(const Partition& mu, const Cell& cell, int k, const std::string& out_path) {
    BasisReport rep = build_basis_x(mu, cell, k);
    Json contributions = Json::array();
    for (const auto& [F, count] : rep.contributions)
        contributions.push_back(Json{{"diagram", to_json(F)}, {"count", count}});
    Json j{{"mu", to_json(mu)},
           {"cell", to_json(cell)},
           {"k", k},
           {"size", rep.polys.size()},
           {"tableaux", rep.tableaux},
           {"dim_x", rep.dim_x},
           {"cardinality_ok", rep.cardinality_ok},
           {"independent", rep.independent},
           {"spans_ok", rep.spans_ok},
           {"contributions", contributions}};
    emit(j, out_path);
    return rep.all_ok() ? 0 : kExitCheckFailed;
}

int run_depths(const Partition& mu, const std::optional<Cell>& cell,
               const std::optional<int>& k, const std::string& out_path) {
    Json instances = Json::array();
    bool all_injective = true;
    std::vector<Cell> anchors = cell ? std::vector<Cell>{*cell} : mu.cells();
    for (const Cell& c : anchors) {
        int s = shadow_size(mu, c);
        for (int kk = 1; kk <= s; ++kk) {
            if (k && kk != *k) continue;
            Json tuples = Json::array();
            std::set<std::vector<int>> seen;
            auto diagrams = enumerate_right(mu, c, kk);
            for (const RightDiagram& F : diagrams) {
                auto holes = hole_positions(F);
                auto depths = depth_tuple(mu, holes);
                seen.insert(depths);
                tuples.push_back(Json{{"circled", cells_json(F.circled)},
                                      {"holes", cells_json(holes)},
                                      {"depths", depths}});
            }
            bool injective = seen.size() == diagrams.size();
            all_injective = all_injective && injective;
            instances.push_back(Json{{"mu", to_json(mu)},
                                     {"cell", to_json(c)},
                                     {"k", kk},
                                     {"tuples", tuples},
                                     {"injective", injective}});
        }
    }
    emit(Json{{"instances", instances}, {"injective", all_injective}}, out_path);
    return all_injective ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for derivative spans of lattice-diagram determinants"};
    app.require_subcommand(1);

    std::string out_path, format = "json", mu_text, cell_text, kind_name, target_text;
    std::vector<std::string> cell_args, gen_texts, anchor_texts;
    std::vector<int> k_values;
    int k = 0, jobs = 0, max_mu = 5, max_cells = 4, box = 4, max_r = 3, random_count = 200;
    int single_r = 0, depth_k = 0;
    bool slow = false;
    std::string vars = "xy";

    auto* cmd_delta = app.add_subcommand("delta", "expand a diagram determinant");
    cmd_delta->add_option("--cells", cell_args, "cells r,c")->required()->expected(-1);
    cmd_delta->add_option("--out", out_path, "report file");

    auto* cmd_dim = app.add_subcommand("dim", "dimensions of the derivative span of a shape");
    cmd_dim->add_option("--mu", mu_text, "partition, e.g. 2,1")->required();
    cmd_dim->add_option("--out", out_path, "report file");

    auto* cmd_scan = app.add_subcommand("scan", "dimension survey over small shapes");
    cmd_scan->add_option("--max-mu", max_mu, "largest partition size (default 5)");
    cmd_scan->add_option("--k", k_values, "hole counts (default: all)");
    cmd_scan->add_option("--cell", anchor_texts, "anchor cells r,c (default: all)");
    cmd_scan->add_option("--vars", vars, "xy | x | both (default xy)");
    cmd_scan->add_option("--jobs", jobs, "worker threads (default: hardware)");
    cmd_scan->add_flag("--slow", slow, "raise the size budget by one");
    cmd_scan->add_option("--out", out_path, "report file");
    cmd_scan->add_option("--format", format, "json | csv");

    auto* cmd_vshift = app.add_subcommand("verify-shift", "check the shift expansions");
    cmd_vshift->add_option("--max-cells", max_cells, "sweep cell budget (default 4)");
    cmd_vshift->add_option("--box", box, "sweep box size (default 4)");
    cmd_vshift->add_option("--max-r", max_r, "largest operator order (default 3)");
    cmd_vshift->add_option("--random", random_count, "extra random bigger diagrams");
    cmd_vshift->add_option("--cells", cell_args, "single diagram r,c ...")->expected(-1);
    cmd_vshift->add_option("--kind", kind_name, "powersum | elementary | homogeneous");
    cmd_vshift->add_option("--r", single_r, "single operator order");
    cmd_vshift->add_option("--out", out_path, "report file");

    auto* cmd_vred = app.add_subcommand("verify-reductions",
                                        "check the one- and two-hole sum reductions");
    cmd_vred->add_option("--max-mu", max_mu, "largest partition size (default 5)");
    cmd_vred->add_option("--out", out_path, "report file");

    auto* cmd_cex = app.add_subcommand("counterexample",
                                       "membership probe for a hole-sum space");
    cmd_cex->add_option("--mu", mu_text, "partition (default 3,2)");
    cmd_cex->add_option("--target", target_text, "target holes, e.g. 0,0;1,0;0,2");
    cmd_cex->add_option("--gens", gen_texts, "generating hole sets")->expected(-1);
    cmd_cex->add_option("--out", out_path, "report file");

    auto* cmd_basis = app.add_subcommand("basis-x", "assemble and check an explicit basis");
    cmd_basis->add_option("--mu", mu_text, "partition")->required();
    cmd_basis->add_option("--cell", cell_text, "anchor cell r,c")->required();
    cmd_basis->add_option("--k", k, "number of holes")->required();
    cmd_basis->add_option("--out", out_path, "report file");

    auto* cmd_depths = app.add_subcommand("depths", "hole depth tuples per circled shape");
    cmd_depths->add_option("--mu", mu_text, "partition")->required();
    cmd_depths->add_option("--cell", cell_text, "anchor cell r,c");
    cmd_depths->add_option("--k", depth_k, "circle count");
    cmd_depths->add_option("--out", out_path, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_delta->parsed()) return run_delta(cell_args, out_path);
        if (cmd_dim->parsed()) return run_dim(parse_partition(mu_text), out_path);
        if (cmd_scan->parsed()) {
            ScanConfig config;
            config.k_values = k_values;
            config.anchors = parse_cell_list(anchor_texts);
            config.parallelism = jobs;
            config.slow = slow;
            if (vars == "xy") config.vars = ScanVars::XY;
            else if (vars == "x") config.vars = ScanVars::X;
            else if (vars == "both") config.vars = ScanVars::Both;
            else throw std::invalid_argument("--vars must be xy, x or both");
            // single-set scans are cheap enough for one extra size by default
            config.max_mu_size = cmd_scan->count("--max-mu")
                                     ? max_mu
                                     : (config.vars == ScanVars::X ? 6 : 5);
            return run_scan_cmd(config, out_path, format);
        }
        if (cmd_vshift->parsed())
            return run_verify_shift(max_cells, box, max_r, random_count, cell_args,
                                    kind_name, single_r, out_path);
        if (cmd_vred->parsed()) return run_verify_reductions(max_mu, out_path);
        if (cmd_cex->parsed())
            return run_counterexample(mu_text, target_text, gen_texts, out_path);
        if (cmd_basis->parsed())
            return run_basis_x(parse_partition(mu_text), parse_cell(cell_text), k, out_path);
        if (cmd_depths->parsed())
            return run_depths(parse_partition(mu_text),
                              cell_text.empty() ? std::nullopt
                                                : std::optional<Cell>(parse_cell(cell_text)),
                              depth_k ? std::optional<int>(depth_k) : std::nullopt, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
