#include <array>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symprod/checks.hpp"
#include "symprod/descriptor.hpp"
#include "symprod/genera.hpp"
#include "symprod/orbifold.hpp"
#include "symprod/series.hpp"
#include "symprod/spaces.hpp"

namespace {

using nlohmann::json;
using namespace symprod;

json terms_json(const TruncatedSeries& s) {
    json arr = json::array();
    for (const auto& [e, c] : s.terms()) {
        arr.push_back({{"var_exponents", {e.q, e.t, e.y, e.u}},
                       {"numerator", c.numerator().str()},
                       {"denominator", c.denominator().str()}});
    }
    return arr;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct BettiArgs {
    std::string space;
    int n = 0;
    int dmax = -1;
    bool as_json = false;
};

void run_betti(const BettiArgs& a) {
    const SpaceSpec spec = parse_descriptor(a.space);
    const std::vector<long long> betti = betti_sp(resolve(spec), a.n, a.dmax);
    if (a.as_json) {
        json result = json::array();
        for (size_t d = 0; d < betti.size(); ++d) {
            result.push_back({{"degree", d}, {"value", betti[d]}});
        }
        emit({{"command", "betti"},
              {"inputs",
               {{"space", describe(spec)},
                {"n", a.n},
                {"dmax", static_cast<int>(betti.size()) - 1}}},
              {"result", result}});
        return;
    }
    for (size_t d = 0; d < betti.size(); ++d) {
        std::cout << "d=" << d << ": " << betti[d] << "\n";
    }
}

struct EulerArgs {
    std::string space;
    int order = 8;
    bool as_json = false;
};

void run_euler(const EulerArgs& a) {
    const SpaceSpec spec = parse_descriptor(a.space);
    const TruncatedSeries series = euler_sp_series(resolve(spec), a.order);
    if (a.as_json) {
        json result = json::array();
        for (int n = 0; n <= a.order; ++n) {
            Exponents e;
            e.q = n;
            result.push_back({{"n", n}, {"value", series.coefficient(e).as_int64()}});
        }
        emit({{"command", "euler"},
              {"inputs", {{"space", describe(spec)}, {"order", a.order}}},
              {"result", result}});
        return;
    }
    for (int n = 0; n <= a.order; ++n) {
        Exponents e;
        e.q = n;
        std::cout << (n ? " " : "") << series.coefficient(e).str();
    }
    std::cout << "\n";
}

struct GenusArgs {
    int g = 0;
    int order = 8;
    bool as_json = false;
};

void print_per_n(const TruncatedSeries& series, int order, const char* command, const json& inputs,
                 bool as_json, const std::array<std::string, 4>& var_names) {
    if (as_json) {
        json result = json::array();
        for (int n = 0; n <= order; ++n) {
            ExponentQuery at;
            at.t = n;
            result.push_back({{"n", n}, {"value", terms_json(coeff(series, at))}});
        }
        emit({{"command", command}, {"inputs", inputs}, {"result", result}});
        return;
    }
    for (int n = 0; n <= order; ++n) {
        ExponentQuery at;
        at.t = n;
        std::cout << "n=" << n << ": " << to_string(coeff(series, at), var_names) << "\n";
    }
}

void run_chi_y(const GenusArgs& a) {
    print_per_n(chi_y_sp_series(a.g, a.order), a.order, "chi-y",
                {{"g", a.g}, {"order", a.order}}, a.as_json, {"q", "t", "y", "u"});
}

void run_elliptic(const GenusArgs& a) {
    print_per_n(ell_sp_series(a.g, a.order), a.order, "elliptic",
                {{"g", a.g}, {"order", a.order}}, a.as_json, {"q", "t", "y", "e^(1/4)"});
}

struct SignatureArgs {
    int g = 0;
    int k = -1;  // -1 = closed surface
    int order = 0;
    bool as_json = false;
};

void run_signature(const SignatureArgs& a) {
    long long value = 0;
    if (a.k >= 0) {
        if (a.order % 2 != 0) {
            throw std::invalid_argument(
                "signature: --k selects the punctured formula for SP^{2n}; --order must be even");
        }
        value = signature_punctured_sp(a.g, a.k, a.order / 2);
    } else {
        value = signature_closed_sp(a.g, a.order);
    }
    if (a.as_json) {
        json inputs = {{"g", a.g}, {"order", a.order}};
        if (a.k >= 0) inputs["k"] = a.k;
        json result = json::array();
        result.push_back({{"n", a.order}, {"value", value}});
        emit({{"command", "signature"}, {"inputs", inputs}, {"result", result}});
        return;
    }
    std::cout << value << "\n";
}

struct DmvvArgs {
    std::string coeffs_path;
    int torder = 8;
    int qorder = 8;
    int ymin = -8;
    int ymax = 8;
    bool as_json = false;
};

void run_dmvv(const DmvvArgs& a) {
    std::ifstream in(a.coeffs_path);
    if (!in) {
        throw std::invalid_argument("cannot open coefficient file '" + a.coeffs_path + "'");
    }
    const EllCoefficients coeffs = parse_ell_coefficients(in);
    const TruncatedSeries series = dmvv_series(coeffs, a.torder, a.qorder, a.ymin, a.ymax);
    if (a.as_json) {
        json result = json::array();
        for (int i = 0; i <= a.torder; ++i) {
            ExponentQuery at;
            at.t = i;
            result.push_back({{"n", i}, {"value", terms_json(coeff(series, at))}});
        }
        emit({{"command", "dmvv"},
              {"inputs",
               {{"coeffs", a.coeffs_path},
                {"torder", a.torder},
                {"qorder", a.qorder},
                {"ymin", a.ymin},
                {"ymax", a.ymax}}},
              {"result", result}});
        return;
    }
    for (int i = 0; i <= a.torder; ++i) {
        ExponentQuery at;
        at.t = i;
        std::cout << "t^" << i << ": " << to_string(coeff(series, at)) << "\n";
    }
}

struct OrbifoldArgs {
    std::string space;
    int n = 1;
    bool as_json = false;
};

void run_orbifold_euler(const OrbifoldArgs& a) {
    const SpaceSpec spec = parse_descriptor(a.space);
    const long long value = orbifold_euler_bruteforce(resolve(spec), a.n);
    if (a.as_json) {
        json result = json::array();
        result.push_back({{"n", a.n}, {"value", value}});
        emit({{"command", "orbifold-euler"},
              {"inputs", {{"space", describe(spec)}, {"n", a.n}}},
              {"result", result}});
        return;
    }
    std::cout << value << "\n";
}

struct CheckArgs {
    std::string family = "small";
    bool as_json = false;
};

int run_check(const CheckArgs& a) {
    const checks::Family family =
        a.family == "full" ? checks::Family::full : checks::Family::small;
    const std::vector<checks::SuiteResult> results = checks::run_all(family);
    bool all_passed = true;
    if (a.as_json) {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all_passed = all_passed && r.passed;
        }
        emit({{"command", "check"}, {"inputs", {{"family", a.family}}}, {"result", out}});
    } else {
        for (const auto& r : results) {
            if (r.passed) {
                std::cout << r.name << ": PASS\n";
            } else {
                std::cout << r.name << ": FAIL (" << r.detail << ")\n";
                all_passed = false;
            }
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological invariants of symmetric products of surfaces"};
    app.require_subcommand(1);
    int exit_code = 0;

    BettiArgs betti_args;
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of SP^n(X)");
    betti_cmd->add_option("space", betti_args.space, "Space descriptor")->required();
    betti_cmd->add_option("--n", betti_args.n, "Symmetric-power order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    betti_cmd->add_option("--dmax", betti_args.dmax, "Largest homological degree to report")
        ->check(CLI::NonNegativeNumber);
    betti_cmd->add_flag("--json", betti_args.as_json, "Emit JSON");
    betti_cmd->callback([&] { run_betti(betti_args); });

    EulerArgs euler_args;
    auto* euler_cmd =
        app.add_subcommand("euler", "Euler characteristics of SP^0(X)..SP^N(X)");
    euler_cmd->add_option("space", euler_args.space, "Space descriptor")->required();
    euler_cmd->add_option("--order", euler_args.order, "Largest symmetric-power order N")
        ->required()
        ->check(CLI::NonNegativeNumber);
    euler_cmd->add_flag("--json", euler_args.as_json, "Emit JSON");
    euler_cmd->callback([&] { run_euler(euler_args); });

    GenusArgs chi_y_args;
    auto* chi_y_cmd = app.add_subcommand("chi-y", "chi_y genera of SP^n of a closed surface");
    chi_y_cmd->add_option("--g", chi_y_args.g, "Genus")->required()->check(CLI::NonNegativeNumber);
    chi_y_cmd->add_option("--order", chi_y_args.order, "Largest symmetric-power order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    chi_y_cmd->add_flag("--json", chi_y_args.as_json, "Emit JSON");
    chi_y_cmd->callback([&] { run_chi_y(chi_y_args); });

    SignatureArgs signature_args;
    auto* signature_cmd =
        app.add_subcommand("signature", "Signature of SP^m (closed or punctured surface)");
    signature_cmd->add_option("--g", signature_args.g, "Genus")
        ->required()
        ->check(CLI::NonNegativeNumber);
    signature_cmd->add_option("--k", signature_args.k, "Puncture count (omit for closed)")
        ->check(CLI::PositiveNumber);
    signature_cmd->add_option("--order", signature_args.order, "Symmetric-power order m")
        ->required()
        ->check(CLI::NonNegativeNumber);
    signature_cmd->add_flag("--json", signature_args.as_json, "Emit JSON");
    signature_cmd->callback([&] { run_signature(signature_args); });

    GenusArgs elliptic_args;
    auto* elliptic_cmd =
        app.add_subcommand("elliptic", "Elliptic genera of SP^n of a closed surface");
    elliptic_cmd->add_option("--g", elliptic_args.g, "Genus")
        ->required()
        ->check(CLI::NonNegativeNumber);
    elliptic_cmd->add_option("--order", elliptic_args.order, "Largest symmetric-power order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    elliptic_cmd->add_flag("--json", elliptic_args.as_json, "Emit JSON");
    elliptic_cmd->callback([&] { run_elliptic(elliptic_args); });

    DmvvArgs dmvv_args;
    auto* dmvv_cmd = app.add_subcommand("dmvv", "DMVV orbifold elliptic genus product");
    dmvv_cmd->add_option("--coeffs", dmvv_args.coeffs_path, "Ell(X) coefficient file (m l c lines)")
        ->required();
    dmvv_cmd->add_option("--torder", dmvv_args.torder, "t truncation order")
        ->check(CLI::NonNegativeNumber);
    dmvv_cmd->add_option("--qorder", dmvv_args.qorder, "q truncation order")
        ->check(CLI::NonNegativeNumber);
    dmvv_cmd->add_option("--ymin", dmvv_args.ymin, "Lower y-window bound");
    dmvv_cmd->add_option("--ymax", dmvv_args.ymax, "Upper y-window bound");
    dmvv_cmd->add_flag("--json", dmvv_args.as_json, "Emit JSON");
    dmvv_cmd->callback([&] { run_dmvv(dmvv_args); });

    OrbifoldArgs orbifold_args;
    auto* orbifold_cmd =
        app.add_subcommand("orbifold-euler", "Orbifold Euler characteristic of (X^n, S_n)");
    orbifold_cmd->add_option("space", orbifold_args.space, "Space descriptor")->required();
    orbifold_cmd->add_option("--n", orbifold_args.n, "Symmetric-power order")
        ->required()
        ->check(CLI::PositiveNumber);
    orbifold_cmd->add_flag("--json", orbifold_args.as_json, "Emit JSON");
    orbifold_cmd->callback([&] { run_orbifold_euler(orbifold_args); });

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Run the cross-validation suites");
    check_cmd->add_option("--family", check_args.family, "Suite family")
        ->check(CLI::IsMember({"small", "full"}));
    check_cmd->add_flag("--json", check_args.as_json, "Emit JSON");
    check_cmd->callback([&] { exit_code = run_check(check_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
