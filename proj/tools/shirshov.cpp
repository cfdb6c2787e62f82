#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "shirshov/gsb.hpp"
#include "shirshov/parse.hpp"
#include "shirshov/report.hpp"
#include "shirshov/rewrite.hpp"
#include "shirshov/theory_file.hpp"

using namespace shirshov;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;
constexpr int kFuelExhausted = 3;

struct Loaded {
    TheoryFile file;
    Theory theory;
};

Loaded load(const std::string& path) {
    TheoryFile file = read_theory_file(path);
    Theory th = build_theory(file);
    if (const char* env = std::getenv("SHIRSHOV_FUEL")) {
        std::uint64_t fuel = 0;
        const std::string s = env;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), fuel);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw ParseError("SHIRSHOV_FUEL must be a non-negative integer, got '" + s + "'");
        th.set_fuel(fuel);
    }
    return {std::move(file), std::move(th)};
}

int cmd_normalize(const std::string& path, const std::string& text, bool trace) {
    auto [file, th] = load(path);
    const Polynomial f = parse_polynomial(text, th.signature(), th.order(), th.field());
    ReductionTrace tr;
    auto res = normal_form(f, th, th.fuel(), trace ? &tr : nullptr);
    if (trace)
        for (std::size_t i = 0; i < tr.steps.size(); ++i)
            std::cout << "step " << i + 1 << ": " << format_step(tr.steps[i], th) << "\n";
    if (res.status == ReductionStatus::FuelExhausted) {
        std::cerr << "fuel exhausted after " << res.steps << " steps; partial result: "
                  << format(res.poly, th.signature()) << "\n";
        return kFuelExhausted;
    }
    std::cout << format(res.poly, th.signature()) << "\n";
    return kOk;
}

int cmd_check(const std::string& path, std::uint32_t bound, std::uint32_t v_bound, bool json) {
    auto [file, th] = load(path);
    const GsbReport rep = check_gsb(th, bound, v_bound, th.fuel());
    std::cout << (json ? gsb_report_json(rep, th, hash_hex(theory_hash(file))) : gsb_report_text(rep, th));
    if (rep.counts.fuel_exhausted > 0) return kFuelExhausted;
    return rep.verified() ? kOk : kFailure;
}

int cmd_complete(const std::string& path, std::uint32_t bound, std::uint32_t v_bound, std::size_t max_rules,
                 const std::string& out) {
    auto [file, th] = load(path);
    const CompletionResult res = complete(th, bound, v_bound, max_rules, th.fuel());
    for (const auto& step : res.log)
        std::cerr << "added " << format_rule(res.theory.rule(*res.theory.find_rule(step.rule_name)), th.signature())
                  << "  (" << to_string(step.kind) << " at " << format(step.w, th.signature()) << ")\n";
    if (res.fuel_exhausted) {
        std::cerr << "fuel exhausted\n";
        return kFuelExhausted;
    }
    if (res.budget_exceeded) {
        std::cerr << "budget exceeded: more than " << max_rules << " new rules needed\n";
        return kFailure;
    }
    std::vector<std::string> lines;
    for (const auto& step : res.log)
        lines.push_back(format_rule(res.theory.rule(*res.theory.find_rule(step.rule_name)), th.signature()));
    if (!lines.empty()) file.append_rules("completion", lines);
    const std::string text = write_theory_file(file);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream o(out, std::ios::binary);
        if (!o) throw ParseError("cannot write " + out);
        o << text;
    }
    std::cerr << res.final_report.verdict() << "\n";
    return kOk;
}

int cmd_dims(const std::string& path, std::uint32_t max_size, bool oracle) {
    auto [file, th] = load(path);
    const auto d = dims(th, max_size);
    std::vector<std::uint64_t> o;
    if (oracle) o = quotient_dims_oracle(th, max_size);
    std::cout << "size\tdim" << (oracle ? "\toracle" : "") << "\n";
    bool agree = true;
    for (std::uint32_t k = 0; k < max_size; ++k) {
        std::cout << k + 1 << "\t" << d[k];
        if (oracle) {
            std::cout << "\t" << o[k];
            agree = agree && d[k] == o[k];
        }
        std::cout << "\n";
    }
    if (!agree) {
        std::cerr << "dimension mismatch between Irr enumeration and the quotient oracle\n";
        return kFailure;
    }
    return kOk;
}

int cmd_irr(const std::string& path, std::uint32_t size, bool count_only) {
    auto [file, th] = load(path);
    const auto words = irr_enumerate(th, size);
    if (count_only) {
        std::cout << words.size() << "\n";
    } else {
        for (const auto& w : words) std::cout << format(w, th.signature()) << "\n";
    }
    return kOk;
}

int cmd_compare(const std::string& path, const std::string& a, const std::string& b) {
    auto [file, th] = load(path);
    const Term u = th.ambient(parse_word(a, th.signature()));
    const Term v = th.ambient(parse_word(b, th.signature()));
    std::cout << to_string(th.order().compare(u, v)) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-Shirshov bases for Omega-algebras and L-algebras"};
    app.require_subcommand(1);
    std::string theory;
    int code = kOk;

    auto add_theory = [&](CLI::App* sub) { sub->add_option("theory", theory, "theory file")->required(); };

    auto* normalize = app.add_subcommand("normalize", "print the normal form of a polynomial");
    add_theory(normalize);
    std::string poly;
    bool trace = false;
    normalize->add_option("poly", poly, "polynomial, e.g. '2 * x>(x<x) - x'")->required();
    normalize->add_flag("--trace", trace, "print each rewrite step");

    std::uint32_t bound = 5;
    std::uint32_t v_bound = kDefaultVBound;
    auto* check = app.add_subcommand("check", "verify the Groebner-Shirshov property up to a bound");
    add_theory(check);
    bool json = false;
    check->add_option("--bound", bound, "largest leaf count of instantiated rules")->capture_default_str();
    check->add_option("--vbound", v_bound, "largest leaf count of right multipliers")->capture_default_str();
    check->add_flag("--json", json, "machine-readable report");

    auto* comp = app.add_subcommand("complete", "add rules until all compositions are trivial");
    add_theory(comp);
    std::size_t max_rules = 100;
    std::string out;
    comp->add_option("--bound", bound)->capture_default_str();
    comp->add_option("--vbound", v_bound)->capture_default_str();
    comp->add_option("--max-rules", max_rules, "give up when more rules are needed")->capture_default_str();
    comp->add_option("--out", out, "output theory file (default stdout)");

    auto* dims_cmd = app.add_subcommand("dims", "dimension of each homogeneous component");
    add_theory(dims_cmd);
    std::uint32_t max_size = 5;
    bool oracle = false;
    dims_cmd->add_option("--max-size", max_size)->capture_default_str();
    dims_cmd->add_flag("--oracle", oracle, "cross-check against exact linear algebra");

    auto* irr = app.add_subcommand("irr", "list irreducible words of one size");
    add_theory(irr);
    std::uint32_t size = 1;
    bool count_only = false;
    irr->add_option("--size", size)->required();
    irr->add_flag("--count-only", count_only);

    auto* compare = app.add_subcommand("compare", "compare two words under the theory's order");
    add_theory(compare);
    std::string t1, t2;
    compare->add_option("t1", t1)->required();
    compare->add_option("t2", t2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*normalize) code = cmd_normalize(theory, poly, trace);
        else if (*check) code = cmd_check(theory, bound, v_bound, json);
        else if (*comp) code = cmd_complete(theory, bound, v_bound, max_rules, out);
        else if (*dims_cmd) code = cmd_dims(theory, max_size, oracle);
        else if (*irr) code = cmd_irr(theory, size, count_only);
        else if (*compare) code = cmd_compare(theory, t1, t2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return code;
}
