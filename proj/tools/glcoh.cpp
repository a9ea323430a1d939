#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glcoh/coinvariants.hpp"
#include "glcoh/document.hpp"
#include "glcoh/errors.hpp"
#include "glcoh/verify.hpp"

namespace {

using namespace glcoh;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScaleGuard = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v <= 0) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + item + "' as a positive integer");
        }
    }
    if (parts.empty()) throw UsageError("empty list: '" + text + "'");
    return parts;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts = parse_int_list(text);
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw UsageError("'" + text + "' is not weakly decreasing");
    return Partition(std::move(parts));
}

SkewTuple parse_tuple(const std::string& text) {
    std::vector<Partition> blocks;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|')) blocks.push_back(parse_partition(block));
    if (blocks.empty()) throw UsageError("empty tuple: '" + text + "'");
    return SkewTuple(std::move(blocks));
}

void emit(const ResultDocument& doc, const std::string& format) {
    if (format == "json")
        std::cout << to_json(doc);
    else if (format == "csv")
        std::cout << to_csv(doc);
    else
        std::cout << to_pretty(doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poincare series of GL cohomology with matrix-polynomial coefficients"};
    app.require_subcommand(1);

    std::string format = "pretty";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}))
            ->capture_default_str();
    };

    std::string mu_text, path_text = "orbit";
    long long p = 2;
    int r = 1;
    int dmax = 5;

    CLI::App* sym = app.add_subcommand("sym", "Series for S^{mu(r)}gl");
    sym->add_option("--mu", mu_text, "Partition, e.g. 2,1")->required();
    sym->add_option("--p", p, "Prime")->required();
    sym->add_option("--r", r, "Twist")->required();
    sym->add_option("--path", path_text, "Computation path")
        ->check(CLI::IsMember({"orbit", "sandwich", "both"}))
        ->capture_default_str();
    sym->add_option("--dmax", dmax, "Sandwich scale guard")->capture_default_str();
    add_format(sym);

    CLI::App* gamma = app.add_subcommand("gamma", "Series for Gamma^{p(r)}gl");
    gamma->add_option("--p", p, "Prime")->required();
    gamma->add_option("--r", r, "Twist (>= 1)")->required();
    add_format(gamma);

    int tensor_d = 1;
    CLI::App* tensor = app.add_subcommand("tensor", "Total series of the tensor model");
    tensor->add_option("--d", tensor_d, "Tensor degree")->required();
    tensor->add_option("--p", p, "Prime")->required();
    tensor->add_option("--r", r, "Twist")->required();
    add_format(tensor);

    std::string left_text, right_text;
    CLI::App* ext = app.add_subcommand("ext", "Graded sandwich dimensions of one tuple pair");
    ext->add_option("--left", left_text, "Tuple, e.g. 2,1|1")->required();
    ext->add_option("--right", right_text, "Tuple")->required();
    ext->add_option("--p", p, "Prime")->required();
    ext->add_option("--r", r, "Twist")->required();
    ext->add_option("--dmax", dmax, "Sandwich scale guard")->capture_default_str();
    add_format(ext);

    VerifyOptions vopts;
    bool corrupt = false;
    std::string primes_text = "2,3,5";
    CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--dmax", vopts.dmax, "Property grid bound")->capture_default_str();
    verify->add_option("--primes", primes_text, "Primes for the grid")->capture_default_str();
    verify->add_option("--rmax", vopts.rmax, "Twist bound")->capture_default_str();
    verify->add_option("--naive-dmax", vopts.naive_dmax, "Exhaustive naive-orbit bound")
        ->capture_default_str();
    verify->add_option("--naive-random", vopts.naive_random_cases,
                       "Random naive-orbit cases one degree higher")
        ->capture_default_str();
    verify->add_option("--seed", vopts.seed, "Random seed")->capture_default_str();
    verify->add_flag("--corrupt-convention", corrupt,
                     "Negative control: take coinvariants under the row groups");

    int table_wmax = 3;
    CLI::App* table = app.add_subcommand("table", "CSV grid of sym series");
    table->add_option("--wmax", table_wmax, "Maximum weight of mu")->capture_default_str();
    table->add_option("--p", p, "Prime")->required();
    table->add_option("--r", r, "Twist")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sym->parsed()) {
            PathChoice path = path_text == "orbit"      ? PathChoice::orbit
                              : path_text == "sandwich" ? PathChoice::sandwich
                                                        : PathChoice::both;
            Prop23Options opts;
            opts.dmax = dmax;
            emit(cmd_sym(parse_partition(mu_text), p, r, path, opts), format);
        } else if (gamma->parsed()) {
            emit(cmd_gamma(p, r), format);
        } else if (tensor->parsed()) {
            emit(cmd_tensor(tensor_d, p, r), format);
        } else if (ext->parsed()) {
            Prop23Options opts;
            opts.dmax = dmax;
            emit(cmd_ext(parse_tuple(left_text), parse_tuple(right_text), p, r,
                         opts),
                 format);
        } else if (verify->parsed()) {
            for (int v : parse_int_list(primes_text))
                if (!is_prime(v))
                    throw UsageError(std::to_string(v) + " is not prime");
            vopts.primes.clear();
            for (int v : parse_int_list(primes_text)) vopts.primes.push_back(v);
            if (corrupt)
                vopts.convention = SandwichConvention::coinvariants_on_rows;
            auto results = run_verification(vopts);
            for (const auto& res : results)
                std::cout << (res.passed ? "PASS" : "FAIL") << " " << res.name
                          << (res.passed ? "" : ": " + res.detail) << "\n";
            bool ok = all_passed(results);
            std::cout << (ok ? "all properties passed"
                             : "some properties FAILED")
                      << "\n";
            return ok ? kExitOk : kExitVerifyFailed;
        } else if (table->parsed()) {
            std::cout << "mu,degree,dimension\n";
            for (int w = 1; w <= table_wmax; ++w)
                for (const auto& mu : partitions_of(w)) {
                    auto series = theorem1_series(mu, p, r);
                    for (const auto& [deg, coeff] : series.sparse())
                        std::cout << '"' << mu.to_string() << '"' << ","
                                  << deg << "," << coeff.str() << "\n";
                }
        }
        return kExitOk;
    } catch (const ScaleGuardError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitScaleGuard;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
