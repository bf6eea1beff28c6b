#include "kbip/cli.hpp"

#include "kbip/certificate.hpp"
#include "kbip/connectivity.hpp"
#include "kbip/oracle.hpp"
#include "kbip/tree_packing.hpp"
#include "kbip/witness_builder.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace kbip::cli {

namespace {

struct Options {
    long long a = 0;
    long long b = 0;
    int k = 0;
    int i = 0;
    bool breakdown = false;
    std::string format = "json";
    std::string input;
};

void add_sizes(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--a", opt.a, "size of the first side")->required();
    cmd.add_option("--b", opt.b, "size of the second side")->required();
}

void add_format(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
}

// The caller's i counts terminals on the --a side; internally X is the
// smaller side.
int internal_index(const BipartiteOrder& order, int k, int caller_i)
{
    return order.swapped() ? k - caller_i : caller_i;
}

int caller_index(const BipartiteOrder& order, int k, int internal_i)
{
    return order.swapped() ? k - internal_i : internal_i;
}

void print_breakdown(std::ostream& out, const BipartiteOrder& order, int k, int caller_i)
{
    const KappaBreakdown bd = kappa_terminal(order, k, internal_index(order, k, caller_i));
    // a1_side follows the caller's orientation as well.
    std::string side = "none";
    if (bd.a1_side)
        side = (*bd.a1_side == Side::X) != order.swapped() ? "X" : "Y";
    out << "i=" << caller_i << " a2=" << bd.a2 << " a1=" << bd.a1 << " a1_side=" << side << " a0=" << bd.a0
        << " kappa=" << bd.kappa << '\n';
}

void write_document(std::ostream& out, const CertificateDocument& doc, const std::string& format)
{
    if (format == "dot")
        out << emit_dot(doc);
    else
        out << emit_json(doc) << '\n';
}

int run_kappa(const Options& opt, CLI::App& cmd, std::ostream& out)
{
    const BipartiteOrder order = normalize(opt.a, opt.b);
    if (cmd.count("--i") > 0) {
        print_breakdown(out, order, opt.k, opt.i);
    } else if (opt.breakdown) {
        const IndexRange range = terminal_index_range(order, opt.k);
        for (int n = range.lo; n <= range.hi; ++n)
            print_breakdown(out, order, opt.k, caller_index(order, opt.k, n));
    } else {
        out << kappa_bipartite(order, opt.k) << '\n';
    }
    return kExitOk;
}

int run_pack(const Options& opt, std::ostream& out)
{
    const BipartiteOrder order = normalize(opt.a, opt.b);
    write_document(out, make_document(opt.a, opt.b, build_packing(order)), opt.format);
    return kExitOk;
}

int run_witness(const Options& opt, CLI::App& cmd, std::ostream& out)
{
    const BipartiteOrder order = normalize(opt.a, opt.b);
    const int i = cmd.count("--i") > 0 ? internal_index(order, opt.k, opt.i) : min_terminal_index(order, opt.k);
    const SteinerWitness witness = build_witness(order, opt.k, i);
    write_document(out, make_document(opt.a, opt.b, witness), opt.format);
    return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err)
{
    std::ifstream file(opt.input);
    if (!file) {
        err << "error: cannot open " << opt.input << '\n';
        return kExitUsage;
    }
    std::ostringstream text;
    text << file.rdbuf();
    const CertificateDocument doc = parse_json(text.str());
    const ValidationReport report = verify_document(doc);
    if (!report.ok()) {
        err << to_string(report.first().kind) << ": " << report.first().detail << '\n';
        return kExitVerifyFailed;
    }
    out << "ok: " << (doc.kind == CertificateKind::Packing ? "packing" : "witness") << " with "
        << doc.trees.size() << " trees\n";
    return kExitOk;
}

int run_oracle(const Options& opt, CLI::App& cmd, std::ostream& out)
{
    if (opt.a < 1 || opt.b < 1)
        throw InvalidArgument("side sizes must be positive");
    if (cmd.count("--k") > 0)
        out << oracle::kappa_k(static_cast<int>(opt.a), static_cast<int>(opt.b), opt.k) << '\n';
    else
        out << oracle::spanning_packing(static_cast<int>(opt.a), static_cast<int>(opt.b)) << '\n';
    return kExitOk;
}

int run_table(const Options& opt, std::ostream& out)
{
    const BipartiteOrder order = normalize(opt.a, opt.b);
    for (int k = 2; k <= order.vertex_count(); ++k)
        out << k << '\t' << kappa_bipartite(order, k) << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized connectivity of complete bipartite graphs, with certificates", "kbip"};
    app.require_subcommand(1);
    Options opt;

    auto* kappa = app.add_subcommand("kappa", "print kappa_k(K_{a,b}) or per-terminal-set breakdowns");
    add_sizes(*kappa, opt);
    kappa->add_option("--k", opt.k, "terminal count")->required();
    kappa->add_flag("--breakdown", opt.breakdown, "print the tree counts for every terminal set");
    kappa->add_option("--i", opt.i, "terminals on the a side (prints one breakdown)");

    auto* pack = app.add_subcommand("pack", "emit a maximum edge-disjoint spanning-tree packing");
    add_sizes(*pack, opt);
    add_format(*pack, opt);

    auto* witness = app.add_subcommand("witness", "emit a maximum internally disjoint tree set for S_i");
    add_sizes(*witness, opt);
    witness->add_option("--k", opt.k, "terminal count")->required();
    witness->add_option("--i", opt.i, "terminals on the a side (default: a minimizing index)");
    add_format(*witness, opt);

    auto* verify = app.add_subcommand("verify", "re-check a JSON certificate");
    verify->add_option("--input", opt.input, "certificate file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force kappa_k, or the spanning packing number without --k");
    add_sizes(*oracle_cmd, opt);
    oracle_cmd->add_option("--k", opt.k, "terminal count");

    auto* table = app.add_subcommand("table", "print k and kappa_k for every 2 <= k <= a+b");
    add_sizes(*table, opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (kappa->parsed())
            return run_kappa(opt, *kappa, out);
        if (pack->parsed())
            return run_pack(opt, out);
        if (witness->parsed())
            return run_witness(opt, *witness, out);
        if (verify->parsed())
            return run_verify(opt, out, err);
        if (oracle_cmd->parsed())
            return run_oracle(opt, *oracle_cmd, out);
        if (table->parsed())
            return run_table(opt, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const oracle::InstanceTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace kbip::cli
