#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nsurf/enumerate.hpp"
#include "nsurf/report.hpp"

namespace {

// Exit codes, stable and documented in the README:
//   0 success           3 invariant violation
//   1 usage error       4 enumeration cap reached (incomplete)
//   2 parse error       5 incompatible sum operands
enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kInvariant = 3,
    kIncomplete = 4,
    kIncompatible = 5,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nsurf::ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nsurf::Triangulation load(const std::string& path) {
    return nsurf::Triangulation::parse(read_file(path));
}

bool json_format(const std::string& fmt) { return fmt != "table"; }

int run_sum(const std::string& input, const std::string& vec_a, const std::string& vec_b) {
    nsurf::Triangulation tri = load(input);
    nsurf::MatchingSystem sys = nsurf::matching_system(tri);
    nsurf::NormalVector a = nsurf::NormalVector::parse(vec_a, tri.tets());
    nsurf::NormalVector b = nsurf::NormalVector::parse(vec_b, tri.tets());
    for (const auto* v : {&a, &b}) {
        if (!nsurf::is_admissible(*v))
            throw nsurf::ValidationError("operand is not admissible: " + v->str());
        if (!nsurf::satisfies_matching(sys, *v))
            throw nsurf::ValidationError("operand fails the matching equations: " + v->str());
    }
    nsurf::NormalVector sum = nsurf::haken_sum(a, b);

    auto chi = [&](const nsurf::NormalVector& v) {
        return nsurf::surface_invariants(tri, nsurf::build_surface(tri, v)).euler_total;
    };
    long long chi_a = chi(a), chi_b = chi(b), chi_sum = chi(sum);
    nsurf::Int w_a = nsurf::weight(tri, a), w_b = nsurf::weight(tri, b),
               w_sum = nsurf::weight(tri, sum);

    std::cout << sum.str() << "\n";
    std::cout << "chi: " << chi_a << " + " << chi_b << " = " << chi_sum
              << (chi_a + chi_b == chi_sum ? " (additive)" : " (MISMATCH)") << "\n";
    std::cout << "weight: " << w_a << " + " << w_b << " = " << w_sum
              << (w_a + w_b == w_sum ? " (additive)" : " (MISMATCH)") << "\n";
    if (chi_a + chi_b != chi_sum || w_a + w_b != w_sum) return kInvariant;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fundamental normal surface toolkit for closed triangulated 3-manifolds"};
    app.require_subcommand(1);

    std::string input, format = "table";
    long long cap = 10'000;
    long long genus = 0;
    std::string g_range = "2..64";
    std::string vec_a, vec_b;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", input, "triangulation file")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "json-like"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and check a triangulation");
    add_common(validate, true);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list the fundamental surfaces");
    add_common(enumerate, true);
    enumerate->add_option("--cap", cap, "coordinate-sum ceiling per basis run")
        ->check(CLI::PositiveNumber);

    CLI::App* report = app.add_subcommand(
        "report", "fundamental surfaces plus the constants K, P, c and the power bound");
    add_common(report, true);
    report->add_option("--cap", cap, "coordinate-sum ceiling per basis run")
        ->check(CLI::PositiveNumber);
    report->add_option("--genus", genus, "report the bound for this fibre genus")
        ->check(CLI::Range(2ll, std::numeric_limits<long long>::max()));

    CLI::App* sum = app.add_subcommand("sum", "Haken sum of two compatible vectors");
    add_common(sum, true);
    sum->add_option("--vec-a", vec_a, "first vector, \"v [n0 n1 ...]\"")->required();
    sum->add_option("--vec-b", vec_b, "second vector")->required();

    CLI::App* hyp = app.add_subcommand("check-hyperbolic",
                                       "rotation certificates for the 4g-gon example");
    hyp->add_option("--g-range", g_range, "genus sweep, \"A..B\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (validate->parsed()) {
            nsurf::Triangulation tri = load(input);
            std::cout << (json_format(format) ? nsurf::render_validate_json(tri)
                                              : nsurf::render_validate_text(tri));
            return kOk;
        }
        if (enumerate->parsed() || report->parsed()) {
            nsurf::Triangulation tri = load(input);
            nsurf::EnumerationOptions opts;
            opts.cap = cap;
            nsurf::FundamentalReport rep = nsurf::fundamental_report(tri, opts);
            std::optional<long long> g;
            if (report->parsed() && genus >= 2) g = genus;
            std::cout << (json_format(format) ? nsurf::render_report_json(rep, g)
                                              : nsurf::render_report_table(rep, g));
            return kOk;
        }
        if (sum->parsed()) return run_sum(input, vec_a, vec_b);
        if (hyp->parsed()) {
            auto sep = g_range.find("..");
            if (sep == std::string::npos) {
                std::cerr << "expected --g-range A..B\n";
                return kUsage;
            }
            long long lo = std::stoll(g_range.substr(0, sep));
            long long hi = std::stoll(g_range.substr(sep + 2));
            bool all_pass = true;
            for (long long g = lo; g <= hi; ++g) {
                nsurf::RotationCertificate cert = nsurf::verify_rotation_bound(g);
                std::cout << nsurf::render_certificate_line(cert) << "\n";
                all_pass = all_pass && cert.pass;
            }
            return all_pass ? kOk : kInvariant;
        }
    } catch (const nsurf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const nsurf::IncompatibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIncompatible;
    } catch (const nsurf::EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIncomplete;
    } catch (const nsurf::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
