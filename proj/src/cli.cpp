#include "motivic/cli.hpp"

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "motivic/expr.hpp"
#include "motivic/format.hpp"
#include "motivic/group_classes.hpp"
#include "motivic/recursion.hpp"
#include "motivic/series.hpp"

namespace motivic {

namespace {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kNotAUnit = 2,
    kPole = 3,
    kVerifyFailed = 4,
    kOtherError = 70,
};

OutputFormat format_from_string(const std::string& s) {
    if (s == "latex") return OutputFormat::Latex;
    if (s == "json") return OutputFormat::Json;
    return OutputFormat::Plain;
}

int cmd_eval(const std::string& text, OutputFormat fmt) {
    MotivicClass value = eval_expr(*parse(text));
    std::cout << format_class(value, fmt) << "\n";
    return kOk;
}

int cmd_trace(const std::string& group, long long n, OutputFormat fmt) {
    DerivationTrace trace = group == "O" ? recurse_bo(n).second : recurse_bso(n).second;
    std::cout << format_trace(trace, fmt);
    return kOk;
}

int cmd_verify(const std::string& check, long long max_n) {
    if (check == "inverse") {
        for (long long n = 2; n <= max_n; ++n) {
            if (!(class_of(GroupSpec::bso(n)) * class_of(GroupSpec::so(n)) == MotivicClass::one())) {
                std::cerr << "verification failed: {BSO_" << n << "} * {SO_" << n << "} != 1\n";
                return kVerifyFailed;
            }
        }
        std::cout << "inverse: {BSO_n} * {SO_n} = 1 for 2 <= n <= " << max_n << "\n";
        return kOk;
    }
    if (check == "theorem") {
        VerifyReport report = verify_theorem(max_n);
        if (!report.passed) {
            std::cerr << "verification failed: " << report.first_failure << "\n";
            return kVerifyFailed;
        }
        std::cout << "theorem: closed forms match the recursion for 2 <= n <= " << report.n_max << " ("
                  << report.checks_run << " checks)\n";
        return kOk;
    }
    // recursion: the internal identities of every derivation trace.
    std::string why;
    for (long long n = 2; n <= max_n; ++n) {
        auto [bo, bo_trace] = recurse_bo(n);
        if (!validate_trace(bo_trace, &why)) {
            std::cerr << "verification failed: " << why << "\n";
            return kVerifyFailed;
        }
        auto [bso, bso_trace] = recurse_bso(n);
        if (!validate_trace(bso_trace, &why)) {
            std::cerr << "verification failed: " << why << "\n";
            return kVerifyFailed;
        }
        if (n % 2 == 1 && !(bso == bo)) {
            std::cerr << "verification failed: n=" << n << ": recurse_BSO != recurse_BO for odd n\n";
            return kVerifyFailed;
        }
    }
    std::cout << "recursion: trace identities hold for 2 <= n <= " << max_n << "\n";
    return kOk;
}

int cmd_expand(const std::string& text, std::optional<long long> order) {
    MotivicClass value = eval_expr(*parse(text));
    if (value.is_zero()) {
        std::cout << "0\n";
        return kOk;
    }
    const long long cutoff = order ? *order : *value.degree() - 24;
    std::cout << to_plain(expand(value, cutoff)) << "\n";
    return kOk;
}

int cmd_count(const std::string& text, const std::string& q_text) {
    MotivicClass value = eval_expr(*parse(text));
    Rational q = rational_from_string(q_text);
    std::cout << value.eval_at(q).str() << "\n";
    return kOk;
}

int cmd_table(const std::string& kind, long long max_n) {
    GroupKind gk = kind == "bo" ? GroupKind::BO : kind == "bso" ? GroupKind::BSO : GroupKind::SO;
    for (long long n = 0; n <= max_n; ++n)
        std::cout << n << "\t" << to_plain(class_of({gk, n})) << "\n";
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact classes of orthogonal groups and their classifying stacks in the "
                 "Grothendieck ring of stacks, computed in Z[L] localized at L and L^n - 1"};
    app.require_subcommand(1);

    std::string expr_text, format_str = "plain", group_str, check_str, kind_str, q_str;
    long long n = 0, max_n = 2;
    std::optional<long long> order;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "output format")
            ->check(CLI::IsMember({"plain", "latex", "json"}));
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a class expression to canonical form");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"BSO(7) * SO(7)\"")->required();
    add_format(eval_cmd);

    CLI::App* trace_cmd = app.add_subcommand("trace", "print the derivation of {BO_n} or {BSO_n}");
    trace_cmd->add_option("--group", group_str, "O or SO")
        ->required()
        ->check(CLI::IsMember({"O", "SO"}));
    trace_cmd->add_option("--n", n, "rank parameter")->required();
    add_format(trace_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("--check", check_str, "inverse, theorem or recursion")
        ->required()
        ->check(CLI::IsMember({"inverse", "theorem", "recursion"}));
    verify_cmd->add_option("--max", max_n, "largest n to check")->required();

    CLI::App* expand_cmd = app.add_subcommand("expand", "Laurent expansion in descending powers of L");
    expand_cmd->add_option("expr", expr_text, "expression")->required();
    expand_cmd->add_option("--order", order, "truncation order (default: leading exponent - 24)");

    CLI::App* count_cmd = app.add_subcommand("count", "evaluate the underlying rational function at L = q");
    count_cmd->add_option("expr", expr_text, "expression")->required();
    count_cmd->add_option("--q", q_str, "rational evaluation point")->required();

    CLI::App* table_cmd = app.add_subcommand("table", "print one canonical class per line");
    table_cmd->add_option("--kind", kind_str, "bo, bso or so")
        ->required()
        ->check(CLI::IsMember({"bo", "bso", "so"}));
    table_cmd->add_option("--max", max_n, "largest n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(expr_text, format_from_string(format_str));
        if (trace_cmd->parsed()) return cmd_trace(group_str, n, format_from_string(format_str));
        if (verify_cmd->parsed()) return cmd_verify(check_str, max_n);
        if (expand_cmd->parsed()) return cmd_expand(expr_text, order);
        if (count_cmd->parsed()) return cmd_count(expr_text, q_str);
        if (table_cmd->parsed()) return cmd_table(kind_str, max_n);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kParseError;
    } catch (const NotAUnitError& e) {
        std::cerr << e.what() << "\n";
        return kNotAUnit;
    } catch (const PoleError& e) {
        std::cerr << e.what() << "\n";
        return kPole;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOtherError;
    }
    return kOtherError;
}

} // namespace motivic
