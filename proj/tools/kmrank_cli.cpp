// kmrank: command-line front end for the (k,m)-rank library.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 domain error (bad partition, no decomposition, out-of-domain map).

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmrank/bijections.hpp"
#include "kmrank/census.hpp"
#include "kmrank/checks.hpp"
#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/partition.hpp"
#include "kmrank/qseries.hpp"
#include "kmrank/rank.hpp"
#include "kmrank/select_insert.hpp"
#include "kmrank/text_io.hpp"

using nlohmann::json;
using namespace kmrank;

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kDomain = 3 };

struct Options {
    std::string partition;
    bool from_stdin = false;
    bool as_json = false;
    bool trace = false;
    int k = 1;
    int m = 0;
    int r = 0;
    int a = 1;
    int n = 0;
    int order = 30;
    bool garvan = false;
    bool inverse = false;
    bool classic = false;
    std::optional<int> k_given;
    std::string identity;
};

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out.empty() ? "-" : out;
}

std::string rank_line(const RankStats& s) {
    return "a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) + " r=" + std::to_string(s.r) +
           " widths=" + join(s.widths);
}

// Each handler maps one input partition to one output record.
using Handler = std::function<void(const Partition&, const Options&)>;

void do_decompose(const Partition& lambda, const Options& o) {
    const DurfeeDecomposition d = decompose(lambda, o.k, o.m);
    if (o.as_json) {
        std::cout << to_json(d).dump() << '\n';
        return;
    }
    std::cout << "widths " << join(d.widths) << '\n';
    for (std::size_t i = 0; i < d.sides.size(); ++i) std::cout << "side" << i + 1 << ' ' << to_text(d.sides[i]) << '\n';
    std::cout << "below " << to_text(d.below) << '\n';
}

void do_rank(const Partition& lambda, const Options& o) {
    const RankStats s = o.garvan ? garvan_rank(lambda, o.k) : rank_km(lambda, o.k, o.m);
    std::optional<SelectionTrace> tr;
    if (o.trace && !o.garvan) tr = select(side_sequence(decompose(lambda, o.k, o.m)));
    if (o.as_json) {
        json j = to_json(s);
        if (tr) j["trace"] = to_json(*tr);
        std::cout << j.dump() << '\n';
        return;
    }
    std::cout << rank_line(s) << '\n';
    if (tr) std::cout << "rows=" << join(tr->rows) << " parts=" << join(tr->parts) << '\n';
}

void do_conjugate(const Partition& lambda, const Options& o) {
    Partition mu;
    std::function<RankStats(const Partition&)> stats;
    if (o.garvan) {
        mu = garvan_conjugate(lambda, o.k);
        stats = [&](const Partition& p) { return garvan_rank(p, o.k); };
    } else if (o.k_given) {
        mu = gen_conjugate(lambda, o.k);
        stats = [&](const Partition& p) { return rank_km(p, o.k, 0); };
    } else {
        mu = lambda.conjugate();
        if (!lambda.empty()) stats = [](const Partition& p) { return rank_km(p, 1, 0); };
    }
    if (!o.as_json) {
        std::cout << to_text(mu) << '\n';
        return;
    }
    json j{{"input", to_text(lambda)}, {"output", to_text(mu)}};
    if (stats) {
        j["before"] = to_json(stats(lambda));
        j["after"] = to_json(stats(mu));
    }
    std::cout << j.dump() << '\n';
}

void do_dyson(const Partition& lambda, const Options& o) {
    Partition mu;
    if (o.classic)
        mu = o.inverse ? dyson_map_inverse(lambda, o.r) : dyson_map(lambda, o.r);
    else
        mu = o.inverse ? gen_dyson_inverse(lambda, o.k, o.m, o.r) : gen_dyson(lambda, o.k, o.m, o.r);
    if (!o.as_json) {
        std::cout << to_text(mu) << '\n';
        return;
    }
    json j{{"input", to_text(lambda)}, {"output", to_text(mu)}, {"size", mu.size()}};
    if (!o.classic) {
        const int m_in = o.inverse ? o.m + 2 : o.m;
        const int m_out = o.inverse ? o.m : o.m + 2;
        j["before"] = to_json(rank_km(lambda, o.k, m_in));
        j["after"] = to_json(rank_km(mu, o.k, m_out));
    }
    std::cout << j.dump() << '\n';
}

void report(const Error& e) { std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n'; }

// Runs the handler on the positional partition or on every non-blank stdin
// line. A bad line is reported and skipped; the exit code records it.
int run_partitions(const Handler& handler, const Options& o) {
    if (!o.from_stdin) {
        handler(parse_partition(o.partition), o);
        return kOk;
    }
    int status = kOk;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            handler(parse_partition(line), o);
        } catch (const Error& e) {
            report(e);
            status = kDomain;
        }
    }
    return status;
}

int do_census(const Options& o) {
    const CensusTable t = census(o.n, o.k, o.m);
    if (o.as_json) {
        std::cout << to_json(t).dump() << '\n';
        return kOk;
    }
    std::cout << "# n=" << t.n << " k=" << t.k << " m=" << t.m << " total=" << t.total() << '\n';
    for (const auto& [r, count] : t.rows) std::cout << r << ' ' << count << '\n';
    return kOk;
}

int do_verify(const Options& o) {
    const VerificationReport rep = verify_identity(IdentitySpec{o.identity, o.k, o.a, o.m, o.r}, o.order);
    if (o.as_json) {
        std::cout << to_json(rep).dump() << '\n';
    } else {
        std::cout << rep.identity.name << " k=" << o.k << " a=" << o.a << " m=" << o.m << " r=" << o.r
                  << " order=" << rep.order << ": " << (rep.success ? "ok" : "MISMATCH") << '\n';
        if (rep.mismatch_index)
            std::cout << "first mismatch at q^" << *rep.mismatch_index << ": " << rep.lhs_label << '='
                      << rep.lhs_value << ' ' << rep.rhs_label << '=' << rep.rhs_value << '\n';
    }
    return rep.success ? kOk : kMismatch;
}

int do_selftest(const Options& o) {
    const auto results = checks::selftest_suite();
    bool all = true;
    json j = json::array();
    for (const auto& r : results) {
        all = all && r.ok();
        if (o.as_json)
            j.push_back({{"id", r.id},
                         {"title", r.title},
                         {"passed", r.ok()},
                         {"cases", r.cases},
                         {"failed_cases", r.failed_cases},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds},
                         {"failures", r.failures},
                         {"notes", r.notes}});
        else
            std::cout << checks::format(r) << std::endl;
    }
    if (o.as_json) std::cout << j.dump(2) << '\n';
    return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Durfee rectangles, (k,m)-ranks and the bijections built on them"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("partition", o.partition, "Parts separated by commas or spaces; '-' is empty");
        sub->add_flag("--stdin", o.from_stdin, "Read one partition per line from stdin");
        sub->add_flag("--json", o.as_json, "Emit JSON");
    };

    auto* dec = app.add_subcommand("decompose", "Successive m-Durfee rectangles");
    add_input(dec);
    dec->add_option("--k", o.k, "Number of rectangles")->check(CLI::PositiveNumber);
    dec->add_option("--m", o.m, "Height minus width");

    auto* rank = app.add_subcommand("rank", "(k,m)-rank or Garvan's k-rank");
    add_input(rank);
    rank->add_option("--k", o.k)->check(CLI::PositiveNumber);
    rank->add_option("--m", o.m);
    rank->add_flag("--garvan", o.garvan, "Garvan's rank (m is ignored)");
    rank->add_flag("--trace", o.trace, "Show the selected rows and parts");

    auto* conj = app.add_subcommand("conjugate", "Conjugation; generalized with --k");
    add_input(conj);
    conj->add_option("--k", o.k_given, "Use the k-th generalized conjugation")->check(CLI::PositiveNumber);
    conj->add_flag("--garvan", o.garvan, "Garvan's conjugation (needs --k)");

    auto* dys = app.add_subcommand("dyson", "Generalized Dyson map");
    add_input(dys);
    dys->add_option("--k", o.k)->check(CLI::PositiveNumber);
    dys->add_option("--m", o.m);
    dys->add_option("--r", o.r);
    dys->add_flag("--inverse", o.inverse, "Apply the inverse map");
    dys->add_flag("--classic", o.classic, "Dyson's original d_r (k and m ignored)");

    auto* cen = app.add_subcommand("census", "Count partitions of n by (k,m)-rank");
    cen->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    cen->add_option("--k", o.k)->check(CLI::PositiveNumber);
    cen->add_option("--m", o.m);
    cen->add_flag("--json", o.as_json);

    auto* ver = app.add_subcommand("verify", "Check an identity coefficient by coefficient");
    ver->add_option("identity", o.identity, "pentagonal|schur|rr|andrews|jacobi|h_closed_form")->required();
    ver->add_option("--k", o.k)->check(CLI::PositiveNumber);
    ver->add_option("--a", o.a);
    ver->add_option("--m", o.m);
    ver->add_option("--r", o.r);
    ver->add_option("--order", o.order)->check(CLI::NonNegativeNumber);
    ver->add_flag("--json", o.as_json);

    auto* self = app.add_subcommand("selftest", "Run every worked example and property sweep");
    self->add_flag("--json", o.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    for (auto* sub : {dec, rank, conj, dys}) {
        if (sub->parsed() && !o.from_stdin && sub->count("partition") == 0) {
            std::cerr << "error: a partition argument or --stdin is required\n";
            return kUsage;
        }
    }
    if (o.k_given) o.k = *o.k_given;
    if (conj->parsed() && o.garvan && !o.k_given) {
        std::cerr << "error: --garvan needs --k\n";
        return kUsage;
    }

    try {
        if (dec->parsed()) return run_partitions(do_decompose, o);
        if (rank->parsed()) return run_partitions(do_rank, o);
        if (conj->parsed()) return run_partitions(do_conjugate, o);
        if (dys->parsed()) return run_partitions(do_dyson, o);
        if (cen->parsed()) return do_census(o);
        if (ver->parsed()) return do_verify(o);
        if (self->parsed()) return do_selftest(o);
    } catch (const Error& e) {
        report(e);
        return e.code() == ErrorCode::InternalInvariantViolation ? kMismatch : kDomain;
    }
    return kUsage;
}
