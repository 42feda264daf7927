#include "pposets/cli.hpp"

#include <algorithm>
#include <cstdint>

#include "CLI11.hpp"
#include "pposets/bruhat.hpp"
#include "pposets/hopf.hpp"
#include "pposets/tamari.hpp"
#include "pposets/verify.hpp"

namespace pposets {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitGuard = 3;

std::uint64_t parse_eval(const std::string& text) {
    if (text.rfind("q=", 0) != 0)
        throw CLI::ValidationError("--eval", "expected the form q=VALUE");
    try {
        return std::stoull(text.substr(2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--eval", "expected a nonnegative integer value");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact computations with plane posets"};
    app.require_subcommand(1);

    int unsafe_n = kDefaultGuard;
    app.add_option("--unsafe-n", unsafe_n,
                   "raise the enumeration guard above the default of " +
                       std::to_string(kDefaultGuard));

    int n = 0, jobs = 1, max_n = 0;
    bool forests = false, dot = false, prime = false;
    std::string format = "words", perm_text, poset_text, left_text, right_text;
    std::string suite, eval_text;
    std::uint64_t modulus = 0;

    CLI::App* cmd_enum = app.add_subcommand("enum", "list all plane posets of size n");
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_flag("--forests", forests, "only plane forests");
    cmd_enum->add_option("--format", format)
        ->check(CLI::IsMember({"words", "json"}));

    CLI::App* cmd_psi = app.add_subcommand("psi", "word to plane poset (JSON h-pairs)");
    cmd_psi->add_option("--perm", perm_text)->required();

    CLI::App* cmd_psi_inv =
        app.add_subcommand("psi-inv", "plane poset (word or JSON) to word");
    cmd_psi_inv->add_option("--poset", poset_text)->required();

    CLI::App* cmd_order =
        app.add_subcommand("order", "compare two posets: LE, GE, EQ or INCOMPARABLE");
    cmd_order->add_option("--left", left_text)->required();
    cmd_order->add_option("--right", right_text)->required();

    CLI::App* cmd_covers = app.add_subcommand("covers", "elements covering the poset");
    cmd_covers->add_option("--poset", poset_text)->required();

    CLI::App* cmd_hasse = app.add_subcommand("hasse", "Hasse diagram of size n");
    cmd_hasse->add_option("--n", n)->required();
    cmd_hasse->add_flag("--forests", forests, "restrict to plane forests");
    cmd_hasse->add_flag("--dot", dot, "DOT output instead of JSON");

    CLI::App* cmd_coproduct = app.add_subcommand("coproduct", "delta_q of a poset");
    cmd_coproduct->add_option("--poset", poset_text)->required();
    cmd_coproduct->add_flag("--prime", prime, "the splitting coproduct delta'_q");

    CLI::App* cmd_pair = app.add_subcommand("pair", "Hopf pairing of two posets");
    cmd_pair->add_option("--left", left_text)->required();
    cmd_pair->add_option("--right", right_text)->required();

    CLI::App* cmd_gram = app.add_subcommand("gram", "Gram matrix of size n as CSV");
    cmd_gram->add_option("--n", n)->required();
    CLI::Option* eval_opt = cmd_gram->add_option("--eval", eval_text, "evaluate at q=V");
    cmd_gram->add_option("--mod", modulus, "reduce values modulo a prime")
        ->needs(eval_opt)
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{0} - 1));
    cmd_gram->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    CLI::App* cmd_level = app.add_subcommand("level", "rank of a poset in the order");
    cmd_level->add_option("--poset", poset_text)->required();

    CLI::App* cmd_tamari = app.add_subcommand(
        "tamari", "check the forest order against the rotation lattice");
    cmd_tamari->add_option("--n", n)->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run an identity suite");
    cmd_verify->add_option("--suite", suite)->required();
    cmd_verify->add_option("--max-n", max_n)->required();
    cmd_verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    // Let global options (such as --unsafe-n) appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    int guard = unsafe_n;
    if (app.count("--unsafe-n") > 0)
        err << "warning: size guard set to " << guard
            << "; runtimes grow factorially beyond the default of "
            << kDefaultGuard << "\n";
    try {
        if (cmd_enum->parsed()) {
            std::vector<PlanePoset> all = enumerate_plane_posets(n, guard);
            if (forests) {
                std::erase_if(all, [](const PlanePoset& p) { return !is_plane_forest(p); });
            }
            if (format == "json") {
                out << "[";
                for (std::size_t i = 0; i < all.size(); ++i)
                    out << (i ? "," : "") << poset_to_json(all[i]);
                out << "]\n";
            } else {
                for (std::size_t i = 0; i < all.size(); ++i)
                    out << (i ? " " : "") << all[i].word_string();
                out << "\n";
            }
        } else if (cmd_psi->parsed()) {
            out << poset_to_json(psi(Permutation::parse(perm_text))) << "\n";
        } else if (cmd_psi_inv->parsed()) {
            out << parse_poset(poset_text).word_string() << "\n";
        } else if (cmd_order->parsed()) {
            PlanePoset l = parse_poset(left_text), r = parse_poset(right_text);
            if (l == r)
                out << "EQ\n";
            else if (leq(l, r))
                out << "LE\n";
            else if (leq(r, l))
                out << "GE\n";
            else
                out << "INCOMPARABLE\n";
        } else if (cmd_covers->parsed()) {
            std::vector<PlanePoset> up = covers(parse_poset(poset_text));
            for (std::size_t i = 0; i < up.size(); ++i)
                out << (i ? " " : "") << up[i].word_string();
            out << "\n";
        } else if (cmd_hasse->parsed()) {
            HasseGraph g = hasse(n, forests, guard);
            out << (dot ? hasse_to_dot(g) : hasse_to_json(g) + "\n");
        } else if (cmd_coproduct->parsed()) {
            PlanePoset p = parse_poset(poset_text);
            out << (prime ? delta_prime_q(p) : delta_q(p)).to_string() << "\n";
        } else if (cmd_pair->parsed()) {
            out << pairing(parse_poset(left_text), parse_poset(right_text)).to_string()
                << "\n";
        } else if (cmd_gram->parsed()) {
            std::vector<std::vector<QPolynomial>> g = gram_matrix(n, guard, jobs);
            bool evaluate = !eval_text.empty();
            std::uint64_t q_value = evaluate ? parse_eval(eval_text) : 0;
            for (const auto& row : g) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c)
                        out << ",";
                    if (!evaluate)
                        out << row[c].to_string();
                    else if (modulus)
                        out << row[c].evaluate_mod(q_value, modulus);
                    else
                        out << row[c].evaluate(Coeff(q_value)).str();
                }
                out << "\n";
            }
        } else if (cmd_level->parsed()) {
            out << level(parse_poset(poset_text)) << "\n";
        } else if (cmd_tamari->parsed()) {
            HasseGraph g = hasse(n, true, guard);
            RotationGraph t = tamari_oracle(n, guard);
            bool ok = check_tamari_isomorphism(n, guard);
            out << "n=" << n << " forests=" << g.nodes.size()
                << " trees=" << t.nodes.size() << " isomorphic="
                << (ok ? "true" : "false") << "\n";
            if (!ok)
                return kExitVerification;
        } else if (cmd_verify->parsed()) {
            bool failed = false;
            if (suite == "all") {
                out << "[";
                bool first = true;
                for (const std::string& name : identity_names()) {
                    IdentityReport r = verify_identity(name, max_n, jobs, guard);
                    failed = failed || !r.passed();
                    out << (first ? "" : ",") << report_to_json(r);
                    first = false;
                }
                out << "]\n";
            } else {
                IdentityReport r = verify_identity(suite, max_n, jobs, guard);
                failed = !r.passed();
                out << report_to_json(r) << "\n";
            }
            if (failed)
                return kExitVerification;
        }
    } catch (const ResourceGuardError& e) {
        err << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace pposets
