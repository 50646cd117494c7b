// divlat: validate divides and produce lattice reports.
//
// Exit status: 0 all pass, 1 suite failure, 2 invalid input, 3 I/O error.

#include "divlat/ag_diagram.hpp"
#include "divlat/corpus.hpp"
#include "divlat/divide_io.hpp"
#include "divlat/expected.hpp"
#include "divlat/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace divlat;

namespace {

enum Status { kPass = 0, kFail = 1, kInvalid = 2, kIoError = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void print_diagnostics(const std::vector<std::string>& diags) {
    for (const auto& d : diags) {
        std::cerr << "error: " << d << '\n';
    }
}

int cmd_validate(const std::string& path) {
    const std::string text = slurp(path);
    auto outcome = parse_divide(text);
    if (!outcome.ok()) {
        print_diagnostics(outcome.diagnostics);
        return kInvalid;
    }
    try {
        auto s = sign_divide(*outcome.divide);
        for (const auto& w : s.faces.warnings) {
            std::cerr << "warning: " << w << '\n';
        }
    } catch (const DivideError& e) {
        print_diagnostics(e.diagnostics());
        return kInvalid;
    }
    std::cout << "valid: " << outcome.divide->name << '\n';
    return kPass;
}

struct ReportArgs {
    std::string path;
    std::string json_out;
    std::string dot_ag;
    std::string dot_quiver;
    std::string csv_dir;
    std::string vertex_order;
    unsigned max_power = 60;
};

int cmd_report(const ReportArgs& a) {
    const std::string text = slurp(a.path);
    auto outcome = parse_divide(text);
    if (!outcome.ok()) {
        print_diagnostics(outcome.diagnostics);
        return kInvalid;
    }
    PipelineOptions opt;
    opt.vertex_order = split_ids(a.vertex_order);
    opt.max_power = a.max_power;
    PipelineResult r;
    try {
        r = run_pipeline(*outcome.divide, opt);
    } catch (const DivideError& e) {
        print_diagnostics(e.diagnostics());
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    spit(a.json_out.empty() ? "-" : a.json_out, report_json(r, sha256_hex(text)));
    if (!a.dot_ag.empty()) {
        spit(a.dot_ag, to_dot(r.ag, r.depths));
    }
    if (!a.dot_quiver.empty()) {
        spit(a.dot_quiver, quiver_dot(r.euler, r.ag));
    }
    if (!a.csv_dir.empty()) {
        try {
            write_csv_dir(r, a.csv_dir);
        } catch (const std::runtime_error& e) {
            throw IoError(e.what());
        }
    }
    for (const auto& f : r.failures) {
        std::cerr << "fail: " << f << '\n';
    }
    return r.all_pass() ? kPass : kFail;
}

int cmd_generate(const std::string& family, int n) {
    CorpusEntry e;
    if (family == "a") {
        if (n < 1) {
            std::cerr << "error: family a needs n >= 1\n";
            return kInvalid;
        }
        e = gen_a(n);
    } else if (family == "e6") {
        e = gen_e6();
    } else if (family == "depth1") {
        e = gen_depth1();
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kInvalid;
    }
    std::cout << write_divide(e.divide);
    return kPass;
}

struct RunRow {
    std::string name;
    std::string source;
    int status = kPass;
    PipelineResult result;
    std::vector<std::string> problems;
    double millis = 0;
};

// natural order: A2 before A10
bool name_less(const std::string& a, const std::string& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i;
            std::size_t je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) {
                ++ie;
            }
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) {
                ++je;
            }
            const auto na = std::stoull(a.substr(i, ie - i));
            const auto nb = std::stoull(b.substr(j, je - j));
            if (na != nb) {
                return na < nb;
            }
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) {
                return a[i] < b[j];
            }
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

struct CorpusArgs {
    int max_n = 12;
    std::vector<std::string> flip_seed;
    std::string corpus_dir;
    unsigned jobs = 1;
    bool quiet = false;
};

int cmd_corpus_run(const CorpusArgs& a) {
    struct Job {
        std::string name;
        std::string source;
        std::optional<Divide> divide;
        std::optional<ExpectedFacts> expected;
        std::vector<std::string> parse_errors;
    };
    std::vector<Job> jobs;
    for (auto& e : builtin_corpus(a.max_n)) {
        if (std::find(a.flip_seed.begin(), a.flip_seed.end(), e.name) != a.flip_seed.end()) {
            e.divide.sign_seed.sign = -e.divide.sign_seed.sign;
        }
        jobs.push_back(Job{e.name, "builtin", e.divide, e.expected, {}});
    }
    std::string dir = a.corpus_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("DIVLAT_CORPUS_DIR")) {
            dir = env;
        }
    }
    if (!dir.empty()) {
        std::error_code ec;
        if (!fs::is_directory(dir, ec)) {
            throw IoError("corpus directory not found: " + dir);
        }
        std::vector<fs::path> files;
        for (const auto& item : fs::directory_iterator(dir)) {
            if (item.is_regular_file() && item.path().extension() == ".json") {
                files.push_back(item.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
            auto outcome = parse_divide(slurp(p.string()));
            Job job{p.stem().string(), "custom", std::nullopt, std::nullopt, outcome.diagnostics};
            if (outcome.ok()) {
                job.divide = std::move(outcome.divide);
            }
            jobs.push_back(std::move(job));
        }
    }

    std::vector<RunRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const Job& job = jobs[k];
            RunRow& row = rows[k];
            row.name = job.name;
            row.source = job.source;
            const auto start = std::chrono::steady_clock::now();
            if (!job.divide) {
                row.status = kInvalid;
                row.problems = job.parse_errors;
            } else {
                try {
                    row.result = run_pipeline(*job.divide);
                    row.problems = row.result.failures;
                    if (job.expected) {
                        for (auto& m : check_expected(*job.expected, row.result)) {
                            row.problems.push_back("expected " + m);
                        }
                    }
                    row.status = row.problems.empty() ? kPass : kFail;
                } catch (const DivideError& e) {
                    row.status = kInvalid;
                    row.problems = e.diagnostics();
                }
            }
            const auto stop = std::chrono::steady_clock::now();
            row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        }
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    std::sort(rows.begin(), rows.end(), [](const RunRow& x, const RunRow& y) { return name_less(x.name, y.name); });

    int status = kPass;
    std::cout << std::left << std::setw(10) << "entry" << std::setw(9) << "source" << std::right << std::setw(4)
              << "mu" << std::setw(4) << "d" << std::setw(4) << "r" << std::setw(7) << "depth" << std::setw(8)
              << "order" << "  " << std::left << std::setw(8) << "verdict" << std::right << std::setw(10) << "ms"
              << '\n';
    for (const auto& row : rows) {
        const bool ran = row.status != kInvalid;
        std::string order = "-";
        if (ran) {
            order = row.result.desc_poly.order ? std::to_string(*row.result.desc_poly.order) : ">60";
        }
        const char* verdict = row.status == kPass ? "pass" : (row.status == kFail ? "FAIL" : "INVALID");
        std::cout << std::left << std::setw(10) << row.name << std::setw(9) << row.source << std::right
                  << std::setw(4) << (ran ? std::to_string(row.result.invariants.mu) : "-") << std::setw(4)
                  << (ran ? std::to_string(row.result.invariants.d) : "-") << std::setw(4)
                  << (ran ? std::to_string(row.result.invariants.r) : "-") << std::setw(7)
                  << (ran ? std::to_string(row.result.depths.diagram_depth) : "-") << std::setw(8) << order << "  "
                  << std::left << std::setw(8) << verdict << std::right << std::setw(10) << std::fixed
                  << std::setprecision(2) << row.millis << '\n';
        if (!a.quiet) {
            for (const auto& p : row.problems) {
                std::cout << "    " << p << '\n';
            }
        }
        if (row.status == kInvalid) {
            status = kInvalid;
        } else if (row.status == kFail && status == kPass) {
            status = kFail;
        }
    }
    std::cout << rows.size() << " entries, " << (status == kPass ? "all pass" : "failures present") << '\n';
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divlat: divides, saddle/region diagrams and Milnor lattices"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check a divide file");
    validate->add_option("path", validate_path, "divide file")->required();

    ReportArgs rep;
    auto* report = app.add_subcommand("report", "run the full pipeline on a divide file");
    report->add_option("path", rep.path, "divide file")->required();
    report->add_option("--json", rep.json_out, "report output (default stdout)");
    report->add_option("--dot-ag", rep.dot_ag, "diagram DOT output");
    report->add_option("--dot-quiver", rep.dot_quiver, "quiver DOT output");
    report->add_option("--csv-dir", rep.csv_dir, "directory for matrix CSV files");
    report->add_option("--vertex-order", rep.vertex_order, "comma-separated vertex ids or labels");
    report->add_option("--max-power", rep.max_power, "bound for the monodromy order search");

    std::string family;
    int n = 0;
    auto* generate = app.add_subcommand("generate", "print a built-in divide");
    generate->add_option("family", family, "a | e6 | depth1")->required();
    generate->add_option("n", n, "index for family a");

    CorpusArgs cor;
    auto* corpus = app.add_subcommand("corpus-run", "run every built-in entry");
    corpus->add_option("--max-n", cor.max_n, "largest A_n");
    corpus->add_option("--flip-seed", cor.flip_seed, "negate the seed sign of the named entry");
    corpus->add_option("--corpus-dir", cor.corpus_dir, "extra divide files (overrides DIVLAT_CORPUS_DIR)");
    corpus->add_option("--jobs", cor.jobs, "worker threads");
    corpus->add_flag("--quiet", cor.quiet, "table only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInvalid;
    }

    try {
        if (*validate) {
            return cmd_validate(validate_path);
        }
        if (*report) {
            return cmd_report(rep);
        }
        if (*generate) {
            return cmd_generate(family, n);
        }
        if (*corpus) {
            return cmd_corpus_run(cor);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kInvalid;
}
