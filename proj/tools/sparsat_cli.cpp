// Command-line frontend: sparsify, verify, generate, bench, check-lo, lift.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsat/addcomb.hpp"
#include "sparsat/bench.hpp"
#include "sparsat/generators.hpp"
#include "sparsat/locolor.hpp"
#include "sparsat/oracle.hpp"
#include "sparsat/reduction.hpp"
#include "sparsat/sparsifier.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

bool is_literal_format(const std::string& text) {
    for (std::string_view line : sparsat::detail::split_lines(text)) {
        if (sparsat::detail::is_blank_or_comment(line)) continue;
        return line.rfind("p oitg", 0) == 0;
    }
    return false;
}

nlohmann::json stats_json(const sparsat::SparsifyStats& s) {
    return {{"rounds", s.rounds},
            {"twin_merges", s.twin_merges},
            {"cycle_merges", s.cycle_merges},
            {"n_in", s.n_in},
            {"m_in", s.m_in},
            {"n_out", s.n_out},
            {"m_out", s.m_out},
            {"exponent_estimate", s.exponent_estimate}};
}

int run_sparsify(const std::string& in, const std::string& mode,
                 const std::string& out_instance, const std::string& out_merges,
                 const std::string& stats_path, bool baseline, unsigned threads) {
    std::string text = read_file(in);
    std::string instance_text, merges_text;
    nlohmann::json stats;
    if (mode == "nonmonotone") {
        sparsat::LiteralInstance li = sparsat::parse_literal_instance(text);
        sparsat::NonmonotoneResult res = sparsat::sparsify_nonmonotone(li, threads);
        instance_text = sparsat::serialize(sparsat::quotient_literals(li, res.eq));
        merges_text = sparsat::serialize_merges(res.eq);
        stats = stats_json(res.stats);
        stats["status"] =
            res.status == sparsat::NonmonotoneStatus::Ok ? "ok" : "unsat_detected";
    } else {
        sparsat::Instance inst = sparsat::parse_instance(text);
        if (baseline) {
            auto [eq, out] = sparsat::baseline_pair_merge(inst);
            instance_text = sparsat::serialize(out);
            merges_text = sparsat::serialize_merges(eq);
            stats = {{"rounds", 0},
                     {"twin_merges", 0},
                     {"cycle_merges", 0},
                     {"n_in", inst.n},
                     {"m_in", inst.clauses.size()},
                     {"n_out", out.n},
                     {"m_out", out.clauses.size()},
                     {"exponent_estimate",
                      out.n > 1 && !out.clauses.empty()
                          ? std::log(double(out.clauses.size())) / std::log(double(out.n))
                          : 0.0}};
        } else {
            sparsat::SparsifyResult res = sparsat::sparsify(inst, threads);
            instance_text = sparsat::serialize(res.out);
            merges_text = sparsat::serialize_merges(res.eq);
            stats = stats_json(res.stats);
        }
    }
    write_output(out_instance, instance_text);
    write_output(out_merges, merges_text);
    if (!stats_path.empty()) write_output(stats_path, stats.dump() + "\n");
    return 0;
}

int run_verify(const std::string& in, const std::string& merges, int limit) {
    std::string text = read_file(in);
    sparsat::EquivRel eq = sparsat::parse_merges(read_file(merges));
    try {
        if (is_literal_format(text)) {
            sparsat::LiteralInstance li = sparsat::parse_literal_instance(text);
            if (eq.size() != li.n) throw sparsat::ParseError("merge map size mismatch");
            for (std::uint32_t sol : sparsat::enumerate_literal_solutions(li, limit))
                for (int i = 1; i <= li.n; ++i) {
                    int r = eq.find(i);
                    if (r != i && ((sol >> (i - 1)) & 1u) != ((sol >> (r - 1)) & 1u)) {
                        std::cout << "counterexample: solution " << sol
                                  << " separates " << r << " and " << i << "\n";
                        return 2;
                    }
                }
        } else {
            sparsat::Instance inst = sparsat::parse_instance(text);
            auto cex = sparsat::verify_merges(inst, eq, limit);
            if (cex) {
                std::cout << "counterexample: solution " << cex->solution
                          << " separates " << cex->a << " and " << cex->b << "\n";
                return 2;
            }
        }
    } catch (const sparsat::OracleLimitError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    std::cout << "ok\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong sparsification toolkit for 1-in-3-SAT"};
    app.require_subcommand(1);

    // sparsify
    std::string sp_in, sp_mode = "monotone", sp_out_instance, sp_out_merges, sp_stats;
    bool sp_baseline = false;
    unsigned threads = 1;
    auto* sp = app.add_subcommand("sparsify", "merge provably equal variables");
    sp->add_option("--in", sp_in, "input instance file")->required();
    sp->add_option("--mode", sp_mode, "monotone or nonmonotone")
        ->check(CLI::IsMember({"monotone", "nonmonotone"}));
    sp->add_option("--out-instance", sp_out_instance, "quotient instance output");
    sp->add_option("--out-merges", sp_out_merges, "merge map output");
    sp->add_option("--stats", sp_stats, "JSON-lines stats output");
    sp->add_flag("--baseline", sp_baseline, "run the quadratic pair-merge baseline");
    sp->add_option("--threads", threads, "worker threads for the domination pass");

    // verify
    std::string vf_in, vf_merges;
    int vf_limit = sparsat::kDefaultOracleLimit;
    auto* vf = app.add_subcommand("verify", "certify a merge map against brute force");
    vf->add_option("--in", vf_in, "instance file")->required();
    vf->add_option("--merges", vf_merges, "merge map file")->required();
    vf->add_option("--limit", vf_limit, "enumeration variable limit");

    // generate
    auto* gen = app.add_subcommand("generate", "write instances and families");
    gen->require_subcommand(1);
    std::string gen_out;
    int gx_k = 3, gs_d = 3, gr_n = 10, gr_m = 10, gp_n = 10, gp_m = 10;
    std::uint64_t gr_seed = 1, gp_seed = 1;
    bool gr_nonmonotone = false;
    auto* gx = gen->add_subcommand("xor", "extremal XOR instance");
    gx->add_option("--k", gx_k, "dimension")->required();
    gx->add_option("--out", gen_out, "output file (default stdout)");
    auto* gs = gen->add_subcommand("subset-family", "subset-lattice vector family");
    gs->add_option("--d", gs_d, "dimension")->required();
    gs->add_option("--out", gen_out, "output file (default stdout)");
    auto* gr = gen->add_subcommand("random", "uniform random instance");
    gr->add_option("--n", gr_n, "variables")->required();
    gr->add_option("--m", gr_m, "clauses")->required();
    gr->add_option("--seed", gr_seed, "PRNG seed")->required();
    gr->add_flag("--nonmonotone", gr_nonmonotone, "emit signed literals");
    gr->add_option("--out", gen_out, "output file (default stdout)");
    auto* gp = gen->add_subcommand("planted", "satisfiable instance with hidden assignment");
    gp->add_option("--n", gp_n, "variables")->required();
    gp->add_option("--m", gp_m, "clauses")->required();
    gp->add_option("--seed", gp_seed, "PRNG seed")->required();
    gp->add_option("--out", gen_out, "output file (default stdout)");

    // bench
    std::string bn_family = "xor", bn_range = "2..6", bn_csv;
    auto* bn = app.add_subcommand("bench", "benchmark sparsifier performance");
    bn->add_option("--family", bn_family, "instance family")
        ->check(CLI::IsMember({"xor"}));
    bn->add_option("--k-range", bn_range, "range A..B");
    bn->add_option("--csv", bn_csv, "CSV output file")->required();
    bn->add_option("--threads", threads, "worker threads");

    // check-lo
    std::string cl_in, cl_colours;
    auto* cl = app.add_subcommand("check-lo", "validate an LO colouring");
    cl->add_option("--in", cl_in, "hypergraph (instance) file")->required();
    cl->add_option("--colours", cl_colours, "colouring file")->required();

    // lift
    std::string lf_in, lf_merges, lf_colours, lf_out;
    auto* lf = app.add_subcommand("lift", "lift a quotient colouring through a merge map");
    lf->add_option("--in", lf_in, "original instance, validated when given");
    lf->add_option("--merges", lf_merges, "merge map file")->required();
    lf->add_option("--colours", lf_colours, "quotient colouring file")->required();
    lf->add_option("--out", lf_out, "lifted colouring output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed())
            return run_sparsify(sp_in, sp_mode, sp_out_instance, sp_out_merges, sp_stats,
                                sp_baseline, threads);
        if (vf->parsed()) return run_verify(vf_in, vf_merges, vf_limit);
        if (gen->parsed()) {
            if (gx->parsed())
                write_output(gen_out, sparsat::serialize(sparsat::gen_xor(gx_k)));
            else if (gs->parsed())
                write_output(gen_out,
                             sparsat::serialize_family(sparsat::gen_subset_family(gs_d)));
            else if (gr->parsed())
                write_output(gen_out,
                             gr_nonmonotone
                                 ? sparsat::serialize(
                                       sparsat::gen_random_nonmonotone(gr_n, gr_m, gr_seed))
                                 : sparsat::serialize(
                                       sparsat::gen_random(gr_n, gr_m, gr_seed)));
            else if (gp->parsed())
                write_output(gen_out,
                             sparsat::serialize(sparsat::gen_planted(gp_n, gp_m, gp_seed)));
            return 0;
        }
        if (bn->parsed()) {
            auto sep = bn_range.find("..");
            if (sep == std::string::npos)
                throw std::runtime_error("bad --k-range, expected A..B");
            int lo = std::stoi(bn_range.substr(0, sep));
            int hi = std::stoi(bn_range.substr(sep + 2));
            std::ostringstream csv;
            sparsat::write_bench_csv(csv, sparsat::bench_xor(lo, hi, threads));
            write_output(bn_csv, csv.str());
            return 0;
        }
        if (cl->parsed()) {
            sparsat::Instance h = sparsat::parse_instance(read_file(cl_in));
            sparsat::Colouring c = sparsat::parse_colouring(read_file(cl_colours));
            auto bad = sparsat::check_lo(h, c);
            if (bad) {
                std::cout << "violation: edge " << bad->v[0] << ' ' << bad->v[1] << ' '
                          << bad->v[2] << "\n";
                return 2;
            }
            std::cout << "ok\n";
            return 0;
        }
        if (lf->parsed()) {
            sparsat::EquivRel eq = sparsat::parse_merges(read_file(lf_merges));
            sparsat::Colouring cq = sparsat::parse_colouring(read_file(lf_colours));
            sparsat::Colouring lifted = sparsat::lift_colouring(eq, cq);
            write_output(lf_out, sparsat::serialize_colouring(lifted));
            if (!lf_in.empty()) {
                sparsat::Instance h = sparsat::parse_instance(read_file(lf_in));
                auto bad = sparsat::check_lo(h, lifted);
                if (bad) {
                    std::cerr << "lifted colouring violates edge " << bad->v[0] << ' '
                              << bad->v[1] << ' ' << bad->v[2] << "\n";
                    return 2;
                }
            }
            return 0;
        }
    } catch (const sparsat::OracleLimitError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
