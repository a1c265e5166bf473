// Batch front end: moments, Gram matrices, projections and verification.
//
// Exit status: 0 success, 1 failed assertion, 2 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfock/check/suite.hpp"
#include "mfock/error.hpp"
#include "mfock/fock.hpp"
#include "mfock/meixner.hpp"
#include "mfock/serialize.hpp"

namespace {

using namespace mfock;

constexpr int kInputError = 2;
constexpr int kAssertionFailure = 1;

struct Options {
    std::string nu_path;
    std::string functions_path;
    int max_degree = -1;
    std::vector<std::string> words;
    int digits = 10;
    std::uint64_t seed = 1;
    int cases = 20;
    std::string out_path;
    bool skip_meixner = false;
};

struct Job {
    JacobiData nu = JacobiData::constant(Rational(0), Rational(1), 8);
    std::map<std::string, PiecewisePolynomial> functions;
    std::vector<std::string> names;  // sorted, index = position
    Json nu_json;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Job load(const Options& opt) {
    Job job;
    if (!opt.nu_path.empty()) job.nu = decode_jacobi(parse_json(read_file(opt.nu_path)));
    job.nu_json = encode(job.nu);
    job.functions = opt.functions_path.empty() ? check::default_functions()
                                               : decode_function_table(parse_json(read_file(opt.functions_path)));
    for (const auto& [name, f] : job.functions) job.names.push_back(name);
    return job;
}

std::vector<int> resolve(const Job& job, const std::string& text) {
    std::vector<int> word;
    std::stringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto it = std::find(job.names.begin(), job.names.end(), name);
        if (it == job.names.end()) throw ParseError("unknown function name '" + name + "' in word '" + text + "'");
        word.push_back(static_cast<int>(it - job.names.begin()));
    }
    if (word.empty()) throw ParseError("empty word");
    return word;
}

std::vector<std::vector<int>> requested_words(const Job& job, const Options& opt, int default_degree) {
    std::vector<std::vector<int>> out;
    for (const auto& w : opt.words) out.push_back(resolve(job, w));
    if (out.empty()) {
        const int n = opt.max_degree > 0 ? opt.max_degree : default_degree;
        out = check::all_words(static_cast<int>(job.names.size()), n);
    }
    return out;
}

std::vector<PiecewisePolynomial> pick(const Job& job, const std::vector<int>& word) {
    std::vector<PiecewisePolynomial> out;
    for (int k : word) out.push_back(job.functions.at(job.names[static_cast<std::size_t>(k)]));
    return out;
}

std::string label(const Job& job, const std::vector<int>& word) {
    std::string s = "(";
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k > 0) s += ",";
        s += job.names[static_cast<std::size_t>(word[k])];
    }
    return s + ")";
}

Json name_list(const Job& job, const std::vector<int>& word) {
    Json out = Json::array();
    for (int k : word) out.push_back(job.names[static_cast<std::size_t>(k)]);
    return out;
}

void write_report(const Options& opt, const Json& report) {
    if (opt.out_path.empty()) return;
    std::ofstream out(opt.out_path);
    if (!out) throw ParseError("cannot write '" + opt.out_path + "'");
    out << report.dump(2) << "\n";
}

Json header(const char* command, const Job& job) {
    Json functions = Json::object();
    for (const auto& [name, f] : job.functions) functions[name] = encode(f);
    return Json{{"command", command}, {"nu", job.nu_json}, {"functions", std::move(functions)}};
}

int cmd_moments(const Options& opt) {
    const Job job = load(opt);
    Json report = header("moments", job);
    Json rows = Json::array();
    for (const auto& w : requested_words(job, opt, 4)) {
        const Rational m = moment(job.nu, pick(job, w));
        std::cout << label(job, w) << "\t" << m << "\t" << m.to_decimal(opt.digits) << "\n";
        rows.push_back(Json{{"word", name_list(job, w)}, {"exact", encode(m)}, {"decimal", m.to_decimal(opt.digits)}});
    }
    report["rows"] = std::move(rows);
    write_report(opt, report);
    return 0;
}

int cmd_gram(const Options& opt) {
    const Job job = load(opt);
    const auto words = requested_words(job, opt, 2);
    std::vector<StratifiedFunction> projections;
    for (const auto& w : words) projections.push_back(orthogonal_projection(job.nu, pick(job, w)));

    Json report = header("gram", job);
    Json labels = Json::array();
    Json matrix = Json::array();
    for (const auto& w : words) {
        labels.push_back(name_list(job, w));
        std::cout << "\t" << label(job, w);
    }
    std::cout << "\n";
    for (std::size_t r = 0; r < words.size(); ++r) {
        Json row = Json::array();
        std::cout << label(job, words[r]);
        for (std::size_t c = 0; c < words.size(); ++c) {
            const Rational v = fock_inner(job.nu, FockVector(projections[r]), FockVector(projections[c]));
            std::cout << "\t" << v;
            row.push_back(encode(v));
        }
        std::cout << "\n";
        matrix.push_back(std::move(row));
    }
    report["words"] = std::move(labels);
    report["matrix"] = std::move(matrix);
    write_report(opt, report);
    return 0;
}

int cmd_project(const Options& opt) {
    const Job job = load(opt);
    Json report = header("project", job);
    Json rows = Json::array();
    const NormSequence c = job.nu.norms();
    for (const auto& w : requested_words(job, opt, 2)) {
        const StratifiedFunction p = orthogonal_projection(job.nu, pick(job, w));
        const Rational n2 = norm2(p, c);
        std::cout << label(job, w) << "\tstrata " << p.components().size() << "\tnorm2 " << n2 << "\t"
                  << n2.to_decimal(opt.digits) << "\n";
        rows.push_back(Json{{"word", name_list(job, w)},
                            {"degree", p.degree()},
                            {"norm2", encode(n2)},
                            {"decimal", n2.to_decimal(opt.digits)},
                            {"projection", encode(p)}});
    }
    report["rows"] = std::move(rows);
    write_report(opt, report);
    return 0;
}

int cmd_meixner(const Options& opt) {
    const Job job = load(opt);
    std::vector<PiecewisePolynomial> family;
    for (const auto& name : job.names) family.push_back(job.functions.at(name));
    const int degree = opt.max_degree > 0 ? opt.max_degree : 3;
    if (degree > job.nu.depth()) throw DepthError("max degree " + std::to_string(degree) + " exceeds Jacobi depth");
    const MeixnerReport r = meixner_verify(job.nu, family, degree);

    std::cout << (r.meixner ? "constant Jacobi data" : "non-constant Jacobi data") << ", lambda " << r.lambda
              << ", eta " << r.eta << "\n";
    for (const auto& d : r.degrees) {
        std::cout << "degree " << d.degree << "\t" << (d.pass ? "pass" : "fail") << "\tresidual_norm "
                  << d.residual_norm << "\t" << d.residual_norm.to_decimal(opt.digits);
        if (!d.witness.empty()) {
            std::vector<int> w = d.witness;
            std::cout << "\twitness " << label(job, w);
        }
        std::cout << "\n";
    }
    if (!r.meixner) {
        if (const auto f = r.first_failure()) {
            std::cout << "expected failure witnessed at degree " << *f << "\n";
        } else {
            std::cout << "no residual found up to degree " << degree << "\n";
        }
    }
    Json report = header("meixner-check", job);
    report["report"] = encode(r);
    write_report(opt, report);
    return r.consistent() ? 0 : kAssertionFailure;
}

int cmd_verify(const Options& opt) {
    const Job job = load(opt);
    check::SuiteConfig config;
    config.nu = job.nu;
    config.functions = job.functions;
    if (opt.max_degree > 0) config.max_degree = opt.max_degree;
    config.seed = opt.seed;
    config.random_cases = opt.cases;
    config.meixner = !opt.skip_meixner;

    const auto results = check::run_suite(config);
    Json report = header("verify", job);
    Json rows = Json::array();
    const check::CheckResult* first_failure = nullptr;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        Json row{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}};
        if (!r.witness.is_null()) row["witness"] = r.witness;
        rows.push_back(std::move(row));
        if (!r.passed && first_failure == nullptr) first_failure = &r;
    }
    report["results"] = std::move(rows);
    write_report(opt, report);
    if (first_failure != nullptr) {
        std::cout << "counterexample (" << first_failure->name << "): " << first_failure->witness.dump() << "\n";
        return kAssertionFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus for the monotone Fock space of a Levy noise"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--nu", opt.nu_path, "Jacobi data file (JSON)");
        sub->add_option("--functions", opt.functions_path, "named functions file (JSON object)");
        sub->add_option("--max-degree", opt.max_degree, "largest word length")->check(CLI::Range(1, 12));
        sub->add_option("--digits", opt.digits, "decimal digits for display")->check(CLI::Range(0, 200));
        sub->add_option("--out", opt.out_path, "write a JSON report here");
    };

    std::map<std::string, int (*)(const Options&)> commands{{"moments", cmd_moments},
                                                             {"gram", cmd_gram},
                                                             {"project", cmd_project},
                                                             {"meixner-check", cmd_meixner},
                                                             {"verify", cmd_verify}};
    std::map<std::string, std::string> help{{"moments", "mixed moments of words"},
                                            {"gram", "Gram matrix of orthogonal projections"},
                                            {"project", "orthogonal projections of words"},
                                            {"meixner-check", "constant-coefficient characterization report"},
                                            {"verify", "run the invariant suite"}};
    for (const auto& [name, fn] : commands) {
        CLI::App* sub = app.add_subcommand(name, help[name]);
        add_common(sub);
        if (name != "verify" && name != "meixner-check") {
            sub->add_option("--word", opt.words, "comma-separated function names (repeatable)");
        }
        if (name == "verify") {
            sub->add_option("--seed", opt.seed, "seed for random cases");
            sub->add_option("--cases", opt.cases, "random cases per property")->check(CLI::Range(1, 10000));
            sub->add_flag("--skip-meixner", opt.skip_meixner, "omit the characterization check");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        for (const auto& [name, fn] : commands) {
            if (app.got_subcommand(name)) return fn(opt);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DepthError& e) {
        std::cerr << "depth exceeded: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
