// orbitcalc: command-line front end.
//
// Exit codes: 0 ok, 1 usage/parse/invalid input, 2 weight or codimension,
// 3 inexact division or other internal inconsistency, 4 dependent basis,
// 5 invalid tree, 6 relation verification failed, 7 table mismatch.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <orbitcalc/classes.hpp>
#include <orbitcalc/errors.hpp>
#include <orbitcalc/io.hpp>
#include <orbitcalc/series.hpp>
#include <orbitcalc/special.hpp>

using namespace orbitcalc;

namespace
{

enum Exit {
    ok = 0,
    bad_input = 1,
    weight = 2,
    not_divisible = 3,
    dependent = 4,
    invalid_tree = 5,
    verify_failed = 6,
    table_mismatch = 7,
};

int exit_code(const Error &e)
{
    if (dynamic_cast<const WeightMismatch *>(&e) || dynamic_cast<const CodimNegative *>(&e)) {
        return weight;
    }
    if (dynamic_cast<const DegenerateBasis *>(&e)) {
        return dependent;
    }
    if (dynamic_cast<const InvalidTree *>(&e) || dynamic_cast<const NonexistentProfile *>(&e)) {
        return invalid_tree;
    }
    if (dynamic_cast<const NotDivisible *>(&e) || dynamic_cast<const InternalError *>(&e)
        || dynamic_cast<const NonIntegral *>(&e) || dynamic_cast<const NotSymmetric *>(&e)) {
        return not_divisible;
    }
    return bad_input;
}

// Throws ParseError when (r+1)(d+1) exceeds ORBITCALC_MAX_DEGREE.
void check_size(int r, int d)
{
    long cap = 64;
    if (const char *env = std::getenv("ORBITCALC_MAX_DEGREE")) {
        char *end = nullptr;
        cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap <= 0) {
            throw ParseError(std::string("ORBITCALC_MAX_DEGREE must be a positive integer, got '") + env + "'");
        }
    }
    const long size = static_cast<long>(r + 1) * (d + 1);
    if (r >= 0 && d >= 0 && size > cap) {
        throw ParseError("(r+1)(d+1) = " + std::to_string(size) + " exceeds ORBITCALC_MAX_DEGREE = "
                         + std::to_string(cap));
    }
}

enum class OutputFormat { polynomial, schubert, report };

std::string render(const RamificationProfile &p, const EquivariantClass &c, OutputFormat format)
{
    switch (format) {
        case OutputFormat::polynomial:
            return to_string(c.payload);
        case OutputFormat::schubert:
            return to_string(nonequivariant_class(c));
        case OutputFormat::report:
            break;
    }
    std::string out;
    out += "profile: " + to_string(p) + "\n";
    out += "points: " + std::to_string(p.point_count()) + "\n";
    out += "degree: " + std::to_string(p.expected_weight() - 3) + "\n";
    if (c.possibly_infinite_stabiliser) {
        out += "warning: at most two ramification points; the stabiliser is infinite for any such series\n";
    }
    out += "class: " + to_string(c.payload) + "\n";
    out += "schubert: " + to_string(nonequivariant_class(c));
    return out;
}

struct WorbArgs {
    int r = -1;
    int d = -1;
    std::vector<std::string> profiles;
    std::vector<std::string> profile_files;
    std::string output = "polynomial";
    int jobs = 1;
};

struct WorbResult {
    std::string label;
    std::string text;
    std::optional<int> code;
    std::string error;
};

int cmd_worb(const WorbArgs &args)
{
    std::vector<RamificationProfile> profiles;
    std::vector<std::string> labels;
    for (const auto &text : args.profiles) {
        if (args.r < 0 || args.d < 0) {
            throw ParseError("--profile needs --r and --d");
        }
        check_size(args.r, args.d);
        profiles.emplace_back(args.r, args.d, parse_profile_points(text));
        labels.push_back(text);
    }
    for (const auto &path : args.profile_files) {
        profiles.push_back(parse_profile_json(read_text_file(path)));
        check_size(profiles.back().r(), profiles.back().d());
        if ((args.r >= 0 && args.r != profiles.back().r()) || (args.d >= 0 && args.d != profiles.back().d())) {
            throw ParseError(path + ": r and d disagree with the command line");
        }
        labels.push_back(path);
    }
    if (profiles.empty()) {
        throw ParseError("no profile given");
    }
    const OutputFormat format = args.output == "schubert" ? OutputFormat::schubert
                                : args.output == "report" ? OutputFormat::report
                                                          : OutputFormat::polynomial;

    std::vector<WorbResult> results(profiles.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        OrbitClassCalculator calc;
        for (std::size_t i = first; i < profiles.size(); i += stride) {
            results[i].label = labels[i];
            try {
                results[i].text = render(profiles[i], calc.weighted_orbit_class(profiles[i]), format);
            } catch (const Error &e) {
                results[i].code = exit_code(e);
                results[i].error = e.what();
            }
        }
    };
    const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(std::max(args.jobs, 1)), profiles.size());
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) {
        pool.emplace_back(work, j, jobs);
    }
    work(0, jobs);
    for (auto &t : pool) {
        t.join();
    }

    const bool many = results.size() > 1;
    for (const auto &res : results) {
        if (res.code) {
            std::cerr << "error: " << res.label << ": " << res.error << "\n";
            return *res.code;
        }
        if (many && format == OutputFormat::report) {
            std::cout << "[" << res.label << "]\n" << res.text << "\n";
        } else if (many) {
            std::cout << res.label << ": " << res.text << "\n";
        } else {
            std::cout << res.text << "\n";
        }
    }
    return ok;
}

int cmd_analyze(const std::string &path)
{
    const LinearSeries s = parse_series_json(read_text_file(path));
    check_size(s.r(), s.d());
    std::cout << "series: r=" << s.r() << " d=" << s.d() << "\n";
    std::cout << "wronskian: " << to_string(wronskian(s)) << "\n";
    const RamificationData data = ramification_profile(s);
    std::cout << "profile: " << to_string(data.profile) << "\n";
    std::cout << "ramification points:\n";
    for (const auto &c : data.classes) {
        std::cout << "  " << to_string(c.points) << ": " << to_string(c.sequence) << " weight " << c.multiplicity
                  << "\n";
    }
    std::cout << "boundary orbits:\n";
    for (const auto &b : boundary_orbits(s)) {
        std::cout << "  " << to_string(b.sequence) << " dim " << b.dimension << "\n";
    }
    if (data.profile.expected_weight() < 3) {
        std::cout << "class: undefined, (r+1)(d-r) = " << data.profile.expected_weight() << " < 3\n";
        return ok;
    }
    const EquivariantClass c = weighted_orbit_class(data.profile);
    std::cout << "class: " << to_string(c.payload) << "\n";
    std::cout << "schubert: " << to_string(nonequivariant_class(c)) << "\n";
    if (c.possibly_infinite_stabiliser) {
        std::cout << "warning: at most two ramification points; the stabiliser is infinite\n";
    }
    return ok;
}

int cmd_specialize(const std::string &path, bool verify_flag, const std::string &certificate)
{
    const LabelledTree tree = parse_tree_json(read_text_file(path));
    check_size(tree.r, tree.d);
    const TreeReport report = validate_tree(tree);
    if (!report.ok()) {
        for (const auto &[kind, what] : report.failures) {
            std::cerr << "invalid tree: " << to_string(kind) << ": " << what << "\n";
        }
        return invalid_tree;
    }
    const Relation rel = decompose(tree);
    std::cout << to_string(rel) << "\n";
    if (!verify_flag && certificate.empty()) {
        return ok;
    }
    const RelationCheck check = verify(rel);
    if (!certificate.empty()) {
        std::ofstream out(certificate, std::ios::binary);
        if (!out) {
            throw ParseError("cannot write '" + certificate + "'");
        }
        out << certificate_json(rel, check) << "\n";
    }
    if (verify_flag) {
        if (check.holds) {
            std::cout << "PASS\n";
        } else {
            std::cout << "FAIL\ndifference: " << to_string(check.difference) << "\n";
            return verify_failed;
        }
    }
    return ok;
}

int cmd_exists(int r, int d, const std::string &text)
{
    check_size(r, d);
    const RamificationProfile p(r, d, parse_profile_points(text));
    std::cout << (profile_exists(p) ? "true" : "false") << "\n";
    return ok;
}

int cmd_predegree(const std::vector<int> &m)
{
    std::cout << predegree(DivisorMultiplicities(m)).get_str() << "\n";
    return ok;
}

int cmd_table(const std::string &name)
{
    if (name != "quartic-pencils") {
        throw ParseError("unknown table '" + name + "'; available: quartic-pencils");
    }
    const std::pair<const char *, const char *> rows[] = {
        {"(0,2)x6", "24*O[3] + 48*O[2,1]"},       {"(0,3),(0,2)x4", "16*O[3] + 40*O[2,1]"},
        {"(0,4),(0,2)x3", "12*O[3] + 24*O[2,1]"}, {"(0,3)x2,(0,2)x2", "8*O[3] + 32*O[2,1]"},
        {"(0,3)x3", "24*O[2,1]"},                 {"(0,4),(0,3),(0,2)", "4*O[3] + 16*O[2,1]"},
    };
    OrbitClassCalculator calc;
    bool all = true;
    for (const auto &[text, expected] : rows) {
        const RamificationProfile p(1, 4, parse_profile_points(text));
        const std::string got = to_string(nonequivariant_class(calc.weighted_orbit_class(p)));
        const bool match = got == expected;
        all = all && match;
        std::cout << std::left << std::setw(20) << text << std::setw(24) << got << (match ? "ok" : "MISMATCH");
        if (!match) {
            std::cout << " (expected " << expected << ")";
        }
        std::cout << "\n";
    }
    return all ? ok : table_mismatch;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Equivariant orbit classes of linear series on the projective line"};
    app.require_subcommand(1);

    WorbArgs worb;
    auto *worb_cmd = app.add_subcommand("worb", "weighted orbit class of a ramification profile");
    worb_cmd->add_option("--r", worb.r, "rank of the series");
    worb_cmd->add_option("--d", worb.d, "degree of the series");
    worb_cmd->add_option("--profile", worb.profiles, "inline profile, e.g. \"(0,3),(0,2)x4\"; repeatable");
    worb_cmd->add_option("--profile-file", worb.profile_files, "JSON profile file; repeatable")
        ->check(CLI::ExistingFile);
    worb_cmd->add_option("--output", worb.output, "polynomial, schubert or report")
        ->check(CLI::IsMember({"polynomial", "schubert", "report"}));
    worb_cmd->add_option("--jobs", worb.jobs, "evaluate profiles on N threads")->check(CLI::PositiveNumber);

    std::string series_path;
    auto *analyze_cmd = app.add_subcommand("analyze", "Wronskian, ramification and orbit class of a series file");
    analyze_cmd->add_option("file", series_path, "JSON series file")->required();

    std::string tree_path;
    std::string certificate;
    bool verify_flag = false;
    auto *spec_cmd = app.add_subcommand("specialize", "relation of a labelled dual tree");
    spec_cmd->add_option("file", tree_path, "JSON tree file")->required();
    spec_cmd->add_flag("--verify", verify_flag, "compute both sides and compare");
    spec_cmd->add_option("--certificate", certificate, "write the relation and its check as JSON");

    int ex_r = -1;
    int ex_d = -1;
    std::string ex_profile;
    auto *exists_cmd = app.add_subcommand("exists", "whether a series with the given profile exists");
    exists_cmd->add_option("--r", ex_r, "rank")->required();
    exists_cmd->add_option("--d", ex_d, "degree")->required();
    exists_cmd->add_option("--profile", ex_profile, "inline profile")->required();

    std::vector<int> multiplicities;
    auto *pre_cmd = app.add_subcommand("predegree", "pre-degree of a point configuration");
    pre_cmd->add_option("m", multiplicities, "multiplicities")->required();

    std::string table_name;
    auto *table_cmd = app.add_subcommand("table", "recompute a reference table");
    table_cmd->add_option("name", table_name, "quartic-pencils")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*worb_cmd) {
            return cmd_worb(worb);
        }
        if (*analyze_cmd) {
            return cmd_analyze(series_path);
        }
        if (*spec_cmd) {
            return cmd_specialize(tree_path, verify_flag, certificate);
        }
        if (*exists_cmd) {
            return cmd_exists(ex_r, ex_d, ex_profile);
        }
        if (*pre_cmd) {
            return cmd_predegree(multiplicities);
        }
        if (*table_cmd) {
            return cmd_table(table_name);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    }
    return bad_input;
}
