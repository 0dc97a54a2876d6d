#include "partbij/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "partbij/bijection.hpp"
#include "partbij/enumeration.hpp"
#include "partbij/errors.hpp"
#include "partbij/json_io.hpp"
#include "partbij/params.hpp"
#include "partbij/series.hpp"

namespace partbij::cli {

namespace {

struct Invocation {
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t r = 0;
    std::string partition;
    std::uint64_t max_n = 0;
    std::string family = "A";
    std::string method = "enumerate";
    std::string format;
    unsigned jobs = 1;
    std::uint64_t cap = 0;
};

void add_params(CLI::App* cmd, Invocation& inv)
{
    cmd->add_option("--p", inv.p, "modulus p >= 2")->required();
    cmd->add_option("--a", inv.a, "residue a, 1 <= a < p, gcd(a, p) = 1")->required();
    cmd->add_option("--r", inv.r, "r >= 0")->required();
}

void add_format(CLI::App* cmd, Invocation& inv, std::string const& fallback)
{
    cmd->add_option("--format", inv.format, "output format: text or json (default " + fallback + ")")
        ->check(CLI::IsMember({"text", "json"}));
}

Family family_of(std::string const& name) { return name == "A" ? Family::A : Family::B; }

void print_partition(std::ostream& out, Partition const& pt, std::string const& format)
{
    if (format == "json")
        out << partition_to_json(pt).dump() << '\n';
    else
        out << format_partition(pt) << '\n';
}

void print_counts(std::ostream& out, std::vector<bigint> const& counts, std::string const& format)
{
    if (format == "json")
        out << count_table_json(counts) << '\n';
    else
        out << count_table_csv(counts);
}

void print_report_text(std::ostream& out, VerificationReport const& report)
{
    auto const& ps = report.params;
    out << "p=" << ps.p << " a=" << ps.a << " r=" << ps.r << " M=" << ps.block << " L=" << ps.modulus
        << " n_max=" << report.n_max << '\n';
    out << "n,count_A,count_B,image_size,roundtrip_failures,weight_failures,membership_failures,collision_failures\n";
    for (auto const& rec : report.per_n)
        out << rec.n << ',' << rec.count_a << ',' << rec.count_b << ',' << rec.image_size << ','
            << rec.roundtrip_failures << ',' << rec.weight_failures << ',' << rec.membership_failures << ','
            << rec.collision_failures << '\n';
    out << (report.pass ? "pass" : "FAIL") << '\n';
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bijection between partitions with residue-restricted multiplicities and partitions "
                 "with congruence-restricted parts"};
    app.name(args.empty() ? "partbij" : args.front());
    app.require_subcommand(1);

    Invocation inv;

    auto* map_cmd = app.add_subcommand("map", "apply the forward map to a partition in family A");
    auto* unmap_cmd = app.add_subcommand("unmap", "apply the inverse map to a partition in family B");
    for (auto* cmd : {map_cmd, unmap_cmd}) {
        add_params(cmd, inv);
        cmd->add_option("--partition", inv.partition, "partition text, e.g. \"2^2,1^3\"")->required();
        add_format(cmd, inv, "text");
    }

    auto* member_cmd = app.add_subcommand("member", "test membership in family A or B");
    add_params(member_cmd, inv);
    member_cmd->add_option("--family", inv.family)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    member_cmd->add_option("--partition", inv.partition)->required();
    add_format(member_cmd, inv, "text");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustively verify the bijection for n = 0..max-n");
    add_params(verify_cmd, inv);
    verify_cmd->add_option("--max-n,--n", inv.max_n)->required();
    verify_cmd->add_option("--jobs", inv.jobs, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    verify_cmd->add_option("--cap", inv.cap, "largest n allowed");
    add_format(verify_cmd, inv, "json");

    auto* count_cmd = app.add_subcommand("count", "count a family for n = 0..max-n");
    add_params(count_cmd, inv);
    count_cmd->add_option("--family", inv.family)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    count_cmd->add_option("--max-n,--n", inv.max_n)->required();
    count_cmd->add_option("--method", inv.method)
        ->check(CLI::IsMember({"enumerate", "series"}))
        ->capture_default_str();
    count_cmd->add_option("--cap", inv.cap, "largest n allowed");
    add_format(count_cmd, inv, "text");

    auto* series_cmd = app.add_subcommand("series", "generating-function coefficients for n = 0..max-n");
    add_params(series_cmd, inv);
    series_cmd->add_option("--side,--family", inv.family)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    series_cmd->add_option("--max-n,--n", inv.max_n)->required();
    series_cmd->add_option("--cap", inv.cap, "largest order allowed");
    add_format(series_cmd, inv, "text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty())
            reversed.pop_back();
        app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    if (inv.format.empty())
        inv.format = verify_cmd->parsed() ? "json" : "text";

    try {
        const auto ps = validate_params(inv.p, inv.a, inv.r);

        if (map_cmd->parsed() || unmap_cmd->parsed()) {
            auto pt = parse_partition(inv.partition);
            print_partition(out, map_cmd->parsed() ? forward(ps, pt) : inverse(ps, pt), inv.format);
            return success;
        }

        if (member_cmd->parsed()) {
            bool member = in_family(ps, family_of(inv.family), parse_partition(inv.partition));
            out << (member ? "true" : "false") << '\n';
            return success;
        }

        if (verify_cmd->parsed()) {
            auto report = verify_bijection(ps, inv.max_n, inv.jobs, inv.cap ? inv.cap : default_enumeration_cap);
            if (inv.format == "json")
                out << report_to_json(report).dump(2) << '\n';
            else
                print_report_text(out, report);
            return report.pass ? success : verification_failed;
        }

        if (count_cmd->parsed()) {
            std::vector<bigint> counts;
            if (inv.method == "series") {
                counts = family_series(ps, family_of(inv.family), inv.max_n,
                                       inv.cap ? inv.cap : default_series_cap)
                             .coeffs;
            } else {
                auto cap = inv.cap ? inv.cap : default_enumeration_cap;
                if (inv.max_n > cap)
                    throw resource_limit("max-n " + std::to_string(inv.max_n) + " exceeds the enumeration cap "
                                         + std::to_string(cap));
                for (std::uint64_t n = 0; n <= inv.max_n; ++n)
                    counts.emplace_back(count_family(ps, family_of(inv.family), n, cap));
            }
            print_counts(out, counts, inv.format);
            return success;
        }

        if (series_cmd->parsed()) {
            auto s = family_series(ps, family_of(inv.family), inv.max_n, inv.cap ? inv.cap : default_series_cap);
            print_counts(out, s.coeffs, inv.format);
            return success;
        }
    } catch (std::exception const& e) {
        // param_error, input_error, family_violation, overflow_error, resource_limit
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace partbij::cli
