// Batch front door for the rainbow-set toolkit.
//
//   rainbow solve <instance.json>            construct a certificate
//   rainbow verify <instance.json> <cert.json>
//   rainbow exhaustive --s N [--workers W]   scan all rotation-reduced arc families
//   rainbow conjecture --t T --s N           brute-force scan below the t/2 threshold
//   rainbow enumerate --t T --m M            list independent m-sets, one JSON line each
//
// Exit codes: 0 success/verified, 1 domain failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/json_io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/solver.hpp"

namespace {

using nlohmann::json;

int exit_code_for(const rainbow::Error& error) {
    switch (error.code()) {
        case rainbow::ErrorCode::ParseError:
        case rainbow::ErrorCode::InvalidParameters:
            return 2;
        default:
            return 1;
    }
}

void print_error(const rainbow::Error& error) {
    json detail{{"error", rainbow::to_string(error.code())}, {"message", error.what()}};
    if (error.set_index() >= 0) detail["set"] = error.set_index() + 1;
    std::cerr << detail.dump() << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw rainbow::Error(rainbow::ErrorCode::ParseError, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

int run_solve(const std::string& instance_path) {
    const rainbow::Instance instance = rainbow::parse_instance(read_file(instance_path));
    const rainbow::RainbowCertificate certificate = rainbow::solve(instance);
    std::cout << rainbow::certificate_to_json(certificate).dump() << "\n";
    return 0;
}

int run_verify(const std::string& instance_path, const std::string& certificate_path) {
    const rainbow::Instance instance = rainbow::parse_instance(read_file(instance_path));
    const auto assignment = rainbow::parse_certificate_assignment(read_file(certificate_path));
    const rainbow::VerifyFailure failure = rainbow::check_assignment(instance, assignment);
    std::cout << rainbow::to_string(failure) << "\n";
    return failure == rainbow::VerifyFailure::none ? 0 : 1;
}

int report_outcome(const rainbow::ScanReport& report) {
    std::cout << rainbow::scan_report_to_json(report).dump() << "\n";
    return report.failures.empty() ? 0 : 1;
}

int run_enumerate(int t, int m) {
    const rainbow::CycleContext context(t);
    rainbow::for_each_independent_set(context, m, [](const std::vector<int>& members) {
        json line = json::array();
        for (int v : members) line.push_back(v + 1);
        std::cout << line.dump() << "\n";
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow independent set solver and oracle for cycles"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string certificate_path;
    int scan_s = 0;
    int max_s = 7;
    int workers = 0;
    int conj_t = 0;
    int conj_s = 0;
    int enum_t = 0;
    int enum_m = 0;

    auto* solve_cmd = app.add_subcommand("solve", "construct a rainbow certificate");
    solve_cmd->add_option("instance", instance_path, "instance JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate");
    verify_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    verify_cmd->add_option("certificate", certificate_path, "certificate JSON file")->required();

    auto* exhaustive_cmd =
        app.add_subcommand("exhaustive", "solve and check every rotation-reduced family");
    exhaustive_cmd->add_option("--s", scan_s, "set and family size")->required();
    exhaustive_cmd->add_option("--max-s", max_s, "largest accepted s (default 7)");
    exhaustive_cmd->add_option("--workers", workers, "worker threads (default: all cores)");

    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "brute-force scan of families with s < t/2");
    conjecture_cmd->add_option("--t", conj_t, "cycle order")->required();
    conjecture_cmd->add_option("--s", conj_s, "set and family size")->required();
    conjecture_cmd->add_option("--workers", workers, "worker threads (default: all cores)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list independent m-sets of C_t");
    enumerate_cmd->add_option("--t", enum_t, "cycle order")->required();
    enumerate_cmd->add_option("--m", enum_m, "set size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(instance_path);
        if (verify_cmd->parsed()) return run_verify(instance_path, certificate_path);
        if (exhaustive_cmd->parsed()) {
            if (scan_s < 1 || scan_s > max_s) {
                throw rainbow::Error(rainbow::ErrorCode::InvalidParameters,
                                     "s must be in [1, " + std::to_string(max_s) + "]");
            }
            return report_outcome(rainbow::exhaustive_theorem_check(scan_s, workers));
        }
        if (conjecture_cmd->parsed()) {
            return report_outcome(rainbow::conjecture_scan(conj_t, conj_s, workers));
        }
        if (enumerate_cmd->parsed()) return run_enumerate(enum_t, enum_m);
    } catch (const rainbow::Error& error) {
        print_error(error);
        return exit_code_for(error);
    }
    return 2;
}
