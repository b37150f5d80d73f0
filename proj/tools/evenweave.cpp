#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "evenweave/evenweave.hpp"

namespace
{

using namespace evenweave;

enum Exit : int { ok = 0, fail = 1, usage = 2, io_error = 3, budget = 4 };

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body))
        throw IoError("cannot write " + path);
}

SearchBudget make_budget(std::uint64_t nodes, double seconds)
{
    SearchBudget b;
    b.max_nodes = nodes;
    if (seconds > 0)
        b.max_seconds = seconds;
    return b;
}

std::vector<Vertex> parse_anchor(const std::string& text)
{
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto v = parse_vertex(tok);
        if (!v)
            throw InvalidArgument("malformed anchor vertex '" + tok + "'");
        out.push_back(*v);
    }
    return out;
}

void print_report(const CertificateReport& r)
{
    for (const auto& line : r.tree)
        std::cout << line << "\n";
    for (const auto& f : r.failures)
        std::cout << "  failed " << f.claim << " at " << f.node << ": " << f.detail << "\n";
}

struct Args
{
    int t = 0;
    int v = 0;
    std::string format = "text";
    std::string out;
    std::string in;
    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = 0;
    std::size_t threshold = 24;
    std::string anchor;
};

int cmd_generate(const Args& a)
{
    const auto built = build_unparalleled(a.v, a.t, {a.threshold, make_budget(a.budget_nodes, a.budget_seconds)});
    const auto doc = to_document(built.system);
    const auto body = render(doc, a.format == "json" ? DocumentFormat::json : DocumentFormat::text);
    // with no --out the document owns stdout
    std::ostream& info = a.out.empty() ? std::cerr : std::cout;
    if (a.out.empty())
        std::cout << body;
    else
        write_file(a.out, body);

    const auto rep = check_certificate(built.certificate, built.system);
    info << "CS(" << a.v << "," << 2 * a.t << "): " << doc.cycles.size() << " cycles, "
         << built.system.provenance.tag() << "\n";
    info << "certificate: " << (rep.passed ? "PASS" : "FAIL") << " (" << rep.nodes_checked << " nodes)\n";
    if (static_cast<std::size_t>(a.v) <= a.threshold) {
        const auto hunt = find_parallel_class(built.system.system, make_budget(a.budget_nodes, a.budget_seconds));
        info << "hunt: " << to_string(hunt.status) << " (" << hunt.nodes << " nodes)\n";
        if (hunt.status == ParallelClassStatus::found)
            return fail;
        if (hunt.status == ParallelClassStatus::budget_exceeded)
            return budget;
    } else {
        info << "hunt: skipped, v > " << a.threshold << "\n";
    }
    return rep.passed ? ok : fail;
}

int cmd_verify(const Args& a)
{
    const auto doc = parse_document(read_file(a.in));
    const auto sys = doc.system();
    bool passed = true;

    for (const auto& c : doc.cycles)
        if (c.length() != static_cast<std::size_t>(2 * doc.t)) {
            std::cout << "cycle " << c.str() << " has length " << c.length() << ", expected " << 2 * doc.t << "\n";
            passed = false;
        }

    const auto dec = check_decomposition(sys);
    std::cout << "decomposition: " << (dec.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& m : dec.malformed)
        std::cout << "  malformed: " << m << "\n";
    for (const auto& d : dec.duplicated)
        std::cout << "  duplicated edge " << to_string(d.edge) << " x" << d.count << "\n";
    for (const auto& e : dec.uncovered)
        std::cout << "  uncovered edge " << to_string(e) << "\n";
    for (const auto& e : dec.foreign)
        std::cout << "  foreign edge " << to_string(e) << "\n";
    passed = passed && dec.passed;

    std::optional<std::vector<Vertex>> anchors = doc.anchors;
    if (!a.anchor.empty())
        anchors = parse_anchor(a.anchor);
    if (anchors) {
        const auto in = check_intersecting(sys, anchors);
        std::cout << "intersecting: " << (in.passed ? "PASS" : "FAIL") << " (" << in.pairs_checked << " pairs)\n";
        if (in.witness)
            std::cout << "  disjoint on anchors: " << doc.cycles[in.witness->first].str() << " and "
                      << doc.cycles[in.witness->second].str() << "\n";
        passed = passed && in.passed;
    }
    std::cout << (passed ? "PASS" : "FAIL") << "\n";
    return passed ? ok : fail;
}

int cmd_hunt(const Args& a)
{
    const auto doc = parse_document(read_file(a.in));
    const auto r = find_parallel_class(doc.system(), make_budget(a.budget_nodes, a.budget_seconds));
    std::cout << to_string(r.status) << " (" << r.nodes << " nodes)\n";
    for (const auto& c : r.parallel_class)
        std::cout << "  " << c.str() << "\n";
    return r.status == ParallelClassStatus::budget_exceeded ? budget : ok;
}

int cmd_certify(const Args& a)
{
    const auto built = build_unparalleled(a.v, a.t, {a.threshold, make_budget(a.budget_nodes, a.budget_seconds)});
    const auto rep = check_certificate(built.certificate, built.system,
                                       {a.threshold, make_budget(a.budget_nodes, a.budget_seconds)});
    print_report(rep);
    std::cout << (rep.passed ? "PASS" : "FAIL") << "\n";
    return rep.passed ? ok : fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"unparalleled 2t-cycle systems of K_v - I"};
    app.require_subcommand(1);
    Args a;

    auto* gen = app.add_subcommand("generate", "build a system and write it as a document");
    gen->add_option("--t", a.t, "half the cycle length")->required();
    gen->add_option("--v", a.v, "order of K_v - I")->required();
    gen->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--out", a.out, "output file (stdout when absent)");

    auto* ver = app.add_subcommand("verify", "check that a document is a cycle decomposition");
    ver->add_option("--in", a.in)->required();
    ver->add_option("--anchor", a.anchor, "comma-separated anchor set; overrides the document");

    auto* hunt = app.add_subcommand("hunt", "search a document for a parallel class");
    hunt->add_option("--in", a.in)->required();

    auto* cert = app.add_subcommand("certify", "build a system and recheck its certificate");
    cert->add_option("--t", a.t)->required();
    cert->add_option("--v", a.v)->required();

    for (auto* sub : {gen, ver, hunt, cert}) {
        sub->add_option("--budget-nodes", a.budget_nodes);
        sub->add_option("--budget-seconds", a.budget_seconds);
    }
    for (auto* sub : {gen, cert})
        sub->add_option("--exhaustive-threshold", a.threshold);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*gen)
            return cmd_generate(a);
        if (*ver)
            return cmd_verify(a);
        if (*hunt)
            return cmd_hunt(a);
        return cmd_certify(a);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fail;
    }
}
