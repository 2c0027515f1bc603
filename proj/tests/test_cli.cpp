// End-to-end checks for the command-line tool. Runs the real binary (path
// passed as argv[1]) through fit -> generate -> measure -> regenerate and
// verifies exit codes, output files, and stdout report lines.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                                     \
    do {                                                                         \
        if (!(cond)) {                                                           \
            ++g_failures;                                                        \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << (msg) \
                      << "\n";                                                   \
        }                                                                        \
    } while (0)

struct RunResult {
    int status = -1;
    std::string output;
};

std::string g_cli;
fs::path g_dir;

std::string path(const std::string& name) { return (g_dir / name).string(); }

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

RunResult run(const std::string& args) {
    std::string out_file = path("cmd_output.tmp");
    std::string cmd = shell_quote(g_cli) + " " + args + " > " + shell_quote(out_file) + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

// value after "key = " on its own line; NaN when absent
double report_value(const std::string& output, const std::string& key) {
    std::istringstream in(output);
    std::string line;
    std::string prefix = key + " = ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) return std::strtod(line.c_str() + prefix.size(), nullptr);
    }
    return std::nan("");
}

bool has_line_with(const std::string& output, const std::string& needle) {
    return output.find(needle) != std::string::npos;
}

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uint64_t degree_file_node_sum(const std::string& p) {
    std::ifstream in(p);
    uint64_t d = 0, n = 0, total = 0;
    while (in >> d >> n) total += n;
    return total;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <cli-binary>\n";
        return 2;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / ("bter_cli_" + std::to_string(::getpid()));
    fs::create_directories(g_dir);

    // --- fit: dgln family with a clustering target writes both input files
    RunResult fit = run("fit --family dgln --dbar 8 --dstar 500 -n 20000 --cmax 0.5 --gcc 0.1 "
                        "--seed 5 -o " + shell_quote(path("p")));
    CHECK_MSG(fit.status == 0, "fit exit code: " + std::to_string(fit.status) + "\n" + fit.output);
    CHECK_MSG(has_line_with(fit.output, "alpha = "), "fit prints alpha");
    CHECK_MSG(has_line_with(fit.output, "beta = "), "fit prints beta");
    CHECK_MSG(has_line_with(fit.output, "xi = "), "fit prints xi");
    double tg = report_value(fit.output, "target_gcc");
    CHECK_MSG(std::fabs(tg - 0.1) < 1e-3, "fit target_gcc near request, got " + std::to_string(tg));
    double fit_mean = report_value(fit.output, "realized_mean_degree");
    CHECK_MSG(std::fabs(fit_mean - 8.0) < 0.8, "realized mean degree near 8");
    CHECK_MSG(fs::exists(path("p.dd.txt")), "fit wrote degree file");
    CHECK_MSG(fs::exists(path("p.ccd.txt")), "fit wrote clustering file");
    CHECK_MSG(degree_file_node_sum(path("p.dd.txt")) == 20000, "degree file sums to n");

    // --- generate: seeded runs are reproducible byte-for-byte
    std::string gen_args = "generate --dd " + shell_quote(path("p.dd.txt")) + " --ccd " +
                           shell_quote(path("p.ccd.txt")) + " --seed 9 -o ";
    RunResult gen = run(gen_args + shell_quote(path("g.txt")));
    CHECK_MSG(gen.status == 0, "generate exit code: " + std::to_string(gen.status) + "\n" + gen.output);
    CHECK_MSG(report_value(gen.output, "edges") > 0, "generate reports edges");
    RunResult gen_again = run(gen_args + shell_quote(path("g_again.txt")));
    CHECK_MSG(gen_again.status == 0, "repeat generate exit code");
    CHECK_MSG(slurp(path("g.txt")) == slurp(path("g_again.txt")),
              "same seed reproduces the edge file");
    CHECK_MSG(!slurp(path("g.txt")).empty(), "edge file non-empty");

    RunResult gen_p4 = run("generate --dd " + shell_quote(path("p.dd.txt")) + " --ccd " +
                           shell_quote(path("p.ccd.txt")) +
                           " --seed 9 --partitions 4 --split-phases -o " +
                           shell_quote(path("g_p4.txt")));
    CHECK_MSG(gen_p4.status == 0, "partitioned generate exit code");

    // --- measure: exact estimator writes dd/ccd/report files
    RunResult meas = run("measure --graph " + shell_quote(path("g.txt")) + " -o " +
                         shell_quote(path("m")));
    CHECK_MSG(meas.status == 0, "measure exit code: " + std::to_string(meas.status) + "\n" + meas.output);
    CHECK_MSG(fs::exists(path("m.dd.txt")), "measure wrote degree file");
    CHECK_MSG(fs::exists(path("m.ccd.txt")), "measure wrote clustering file");
    CHECK_MSG(fs::exists(path("m.ccd_report.txt")), "measure wrote report");
    double gcc1 = report_value(meas.output, "gcc");
    double mean1 = report_value(meas.output, "mean_degree");
    CHECK_MSG(gcc1 > 0.0 && gcc1 < 1.0, "measured gcc sane");
    CHECK_MSG(mean1 > 0.0, "measured mean degree sane");

    // --- sampled estimator with geometric bins
    RunResult meas_s = run("measure --graph " + shell_quote(path("g.txt")) +
                           " --sampled 2000 --seed 3 --log-bin -o " + shell_quote(path("ms")));
    CHECK_MSG(meas_s.status == 0, "sampled measure exit code");
    CHECK_MSG(fs::exists(path("ms.ccd_logbin.txt")), "sampled measure wrote binned profile");
    double gcc_s = report_value(meas_s.output, "gcc");
    CHECK_MSG(std::fabs(gcc_s - gcc1) < 0.05, "sampled gcc near exact");

    // --- regenerate from the measured files: model statistics are stable
    RunResult gen2 = run("generate --dd " + shell_quote(path("m.dd.txt")) + " --ccd " +
                         shell_quote(path("m.ccd.txt")) + " --seed 10 -o " +
                         shell_quote(path("g2.txt")));
    CHECK_MSG(gen2.status == 0,
              "regenerate exit code: " + std::to_string(gen2.status) + "\n" + gen2.output);
    RunResult meas2 = run("measure --graph " + shell_quote(path("g2.txt")) + " -o " +
                          shell_quote(path("m2")));
    CHECK_MSG(meas2.status == 0, "remeasure exit code");
    double gcc2 = report_value(meas2.output, "gcc");
    double mean2 = report_value(meas2.output, "mean_degree");
    CHECK_MSG(std::fabs(gcc2 - gcc1) < 0.05,
              "gcc stable across regeneration: " + std::to_string(gcc1) + " vs " +
                  std::to_string(gcc2));
    CHECK_MSG(std::fabs(mean2 - mean1) / mean1 < 0.15,
              "mean degree stable across regeneration: " + std::to_string(mean1) + " vs " +
                  std::to_string(mean2));

    // --- compare the two measured distributions
    RunResult cmp = run("compare --dd-a " + shell_quote(path("m.dd.txt")) + " --dd-b " +
                        shell_quote(path("m2.dd.txt")) + " --ccd-a " +
                        shell_quote(path("m.ccd.txt")) + " --ccd-b " +
                        shell_quote(path("m2.ccd.txt")));
    CHECK_MSG(cmp.status == 0, "compare exit code");
    CHECK_MSG(has_line_with(cmp.output, "dd_l1_distance = "), "compare prints L1 distance");

    // --- error paths map onto the documented exit codes
    RunResult missing = run("generate --dd " + shell_quote(path("absent.txt")) + " --ccd " +
                            shell_quote(path("p.ccd.txt")) + " --seed 1 -o " +
                            shell_quote(path("x.txt")));
    CHECK_MSG(missing.status == 4, "missing input file exits 4, got " +
                                       std::to_string(missing.status));

    RunResult badflag = run("generate --dd a --ccd b --frobnicate -o c");
    CHECK_MSG(badflag.status == 2, "unknown option exits 2, got " + std::to_string(badflag.status));

    RunResult nocmd = run("");
    CHECK_MSG(nocmd.status == 2, "missing subcommand exits 2, got " + std::to_string(nocmd.status));

    RunResult infeasible = run("fit --family dgln --dbar 8 --dstar 500 -n 2000 --cmax 0.3 "
                               "--gcc 0.4 --seed 5 -o " + shell_quote(path("inf")));
    CHECK_MSG(infeasible.status == 3,
              "unreachable clustering target exits 3, got " + std::to_string(infeasible.status));

    std::ofstream(path("garbage.txt")) << "0\t5\nnot numbers\n";
    RunResult garbage = run("generate --dd " + shell_quote(path("garbage.txt")) + " --ccd " +
                            shell_quote(path("p.ccd.txt")) + " --seed 1 -o " +
                            shell_quote(path("y.txt")));
    CHECK_MSG(garbage.status == 4, "malformed degree file exits 4, got " +
                                       std::to_string(garbage.status));

    fs::remove_all(g_dir);
    if (g_failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cerr << "cli: " << g_failures << " check(s) failed\n";
    return 1;
}
