// Command-line front end: one-off computations plus the named verification suites.
// Exit status: 0 success, 1 a check failed, 2 usage or parse error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "axb/axb.hpp"

namespace {

using json = nlohmann::ordered_json;
using axb::Int;

struct Globals {
    std::optional<Int> window;
    std::string primes;
    std::string format = "text";
    std::uint64_t seed = 1;
};

axb::SuiteOptions suite_options(const Globals& g) {
    axb::SuiteOptions o;
    o.window = g.window;
    if (!g.primes.empty()) o.primes = axb::parse_primes(g.primes);
    o.seed = g.seed;
    return o;
}

int emit(const Globals& g, const json& j, const std::string& text, int code = 0) {
    if (g.format == "json") {
        json out;
        out["schema_version"] = axb::Report::schema_version;
        out.update(j);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return code;
}

int emit_report(const Globals& g, const axb::Report& r) {
    if (g.format == "json") std::cout << r.to_json().dump(2) << "\n";
    else std::cout << r.to_text();
    return r.exit_code();
}

std::string system_of(const std::string& requested, const std::string& expr) {
    if (requested != "auto") return requested;
    return expr.find('S') != std::string::npos ? "K" : "L";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for the Toeplitz algebra of the affine semigroup N x| N^x"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--window", g.window, "Main window bound of the suite or computation");
    app.add_option("--primes", g.primes, "Comma-separated prime list, e.g. 2,3,5");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized corpora");

    auto* lub_cmd = app.add_subcommand("lub", "Least upper bound of two semigroup elements (m,a)");
    std::string lx, ly;
    lub_cmd->add_option("x", lx)->required();
    lub_cmd->add_option("y", ly)->required();

    auto* act_cmd = app.add_subcommand("act", "Partial action of (r,a) on a spectrum point");
    std::string ag, ap;
    act_cmd->add_option("g", ag, "Group element (r,a) with rational entries")->required();
    act_cmd->add_option("point", ap, "A(m;N) or B(r;N)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run one verification suite");
    std::string suite;
    std::optional<std::string> verify_beta;
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--beta", verify_beta, "kms-phase: also report q_mult factoring at this beta");

    auto* transfer_cmd = app.add_subcommand("transfer", "Apply a transfer operator or endomorphism");
    Int ta = 2;
    std::string texpr, tsystem = "auto", top = "transfer";
    transfer_cmd->add_option("a", ta)->required()->check(CLI::PositiveNumber);
    transfer_cmd->add_option("expr", texpr, "Laurent polynomial in i or Toeplitz element in S")->required();
    transfer_cmd->add_option("--system", tsystem)->check(CLI::IsMember({"auto", "L", "K"}));
    transfer_cmd->add_option("--op", top)->check(CLI::IsMember({"transfer", "endo", "rho"}));

    auto* kms_cmd = app.add_subcommand("kms", "Evaluate a KMS or ground state and the factoring predicates");
    std::optional<std::string> kbeta, kelement;
    bool kground = false, kinf = false;
    kms_cmd->add_option("--beta", kbeta);
    kms_cmd->add_flag("--ground", kground);
    kms_cmd->add_flag("--infinity", kinf);
    kms_cmd->add_option("--element", kelement, "Operator expression, e.g. \"s v3 v3* s*\"");

    auto* dec_cmd = app.add_subcommand("decompose", "Ideal decomposition of 1 - sum_k s^k v_a v_a* s*^k");
    Int da = 2;
    dec_cmd->add_option("a", da)->required()->check(CLI::PositiveNumber);

    auto* cube_cmd = app.add_subcommand("cube", "Check commuting faces of the quotient cube");
    std::string face;
    cube_cmd->add_option("--face", face, "Face name; all faces when omitted");

    app.add_subcommand("report", "Run every suite and print the combined report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (lub_cmd->parsed()) {
            auto x = axb::parse_semigroup(lx), y = axb::parse_semigroup(ly);
            auto l = axb::lub(x, y);
            std::string s = l ? l->to_string() : "inf";
            return emit(g, {{"x", x.to_string()}, {"y", y.to_string()}, {"lub", s}}, s + "\n");
        }
        if (act_cmd->parsed()) {
            auto el = axb::parse_group(ag);
            auto w = axb::parse_point(ap);
            axb::Window win = axb::default_action_window();
            if (g.window) win.max_k = *g.window;
            auto r = axb::partial_act(el, w, win);
            std::string status = r.status == axb::ActionStatus::defined     ? "defined"
                                 : r.status == axb::ActionStatus::undefined ? "undefined"
                                                                            : "unidentified";
            std::string image = r.point ? axb::to_string(*r.point) : "";
            json j{{"g", el.to_string()}, {"point", axb::to_string(w)}, {"status", status}, {"image", image},
                   {"brute_force", r.via_brute_force}};
            if (r.window) j["window"] = r.window->to_string();
            if (!r.note.empty()) j["note"] = r.note;
            std::string text = r.point ? image + "\n" : status + (r.note.empty() ? "" : ": " + r.note) + "\n";
            return emit(g, j, text);
        }
        if (verify_cmd->parsed()) {
            auto o = suite_options(g);
            if (verify_beta) o.beta = axb::Rational::parse(*verify_beta);
            auto r = axb::run_suite(suite, o);
            if (!r) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            return emit_report(g, *r);
        }
        if (transfer_cmd->parsed()) {
            std::string sys = system_of(tsystem, texpr);
            std::string out;
            if (sys == "L") {
                auto f = axb::parse_laurent(texpr);
                if (top == "rho") throw std::invalid_argument("rho maps Toeplitz elements; use --system K");
                out = (top == "transfer" ? axb::transfer_L(ta, f) : axb::alpha(ta, f)).to_string();
            } else {
                auto t = axb::parse_toeplitz(texpr);
                if (top == "rho") out = axb::rho(t).to_string();
                else out = (top == "transfer" ? axb::transfer_K(ta, t) : axb::beta(ta, t)).to_string();
            }
            return emit(g, {{"system", sys}, {"op", top}, {"a", ta}, {"input", texpr}, {"result", out}}, out + "\n");
        }
        if (kms_cmd->parsed()) {
            if (int(kground) + int(kinf) + int(bool(kbeta)) != 1)
                throw std::invalid_argument("choose exactly one of --beta, --ground, --infinity");
            auto params = kground ? axb::StateParams::ground()
                          : kinf  ? axb::StateParams::kms_infinity()
                                  : axb::StateParams::finite(axb::Rational::parse(*kbeta));
            Int bound = 100;
            if (!g.primes.empty()) bound = axb::parse_primes(g.primes).back();
            auto add = axb::factors_through(params, axb::Quotient::add, bound);
            auto mult = axb::factors_through(params, axb::Quotient::mult, bound);
            json j{{"state", params.to_string()}, {"factors_through_q_add", add.to_string()},
                   {"factors_through_q_mult", mult.to_string()}};
            std::string text = params.to_string() + "\n  factors through q_add: " + add.to_string() +
                               (add.condition.empty() ? "" : " (" + add.condition + ")") +
                               "\n  factors through q_mult: " + mult.to_string() + "\n";
            if (kelement) {
                auto e = axb::parse_operator(*kelement);
                auto v = axb::kms_value(params, e);
                j["element"] = e.to_string();
                j["value"] = v.value.to_string();
                j["composite_extension"] = v.uses_composite;
                text += "  phi(" + e.to_string() + ") = " + v.value.to_string() +
                        (v.uses_composite ? "  [composite a: multiplicative extension]" : "") + "\n";
            }
            return emit(g, j, text);
        }
        if (dec_cmd->parsed()) {
            auto terms = axb::lemma65_decompose(da);
            auto check = axb::verify_decomposition(da, terms);
            json list = json::array();
            std::string text = "1 - sum_{k<" + std::to_string(da) + "} s^k v_" + std::to_string(da) + " v_" +
                               std::to_string(da) + "* s*^k =\n";
            for (auto& t : terms) {
                std::string c = t.conjugator.empty() ? "1" : axb::to_string(t.conjugator);
                list.push_back({{"conjugator", c}, {"prime", t.prime}});
                std::string defect = "(1 - sum_{k<" + std::to_string(t.prime) + "} s^k v_" + std::to_string(t.prime) +
                                     " v_" + std::to_string(t.prime) + "* s*^k)";
                text += t.conjugator.empty() ? "  + " + defect + "\n" : "  + (" + c + ") " + defect + " (" + c + ")*\n";
            }
            if (terms.empty()) text += "  0\n";
            bool ok = check.symbolic && check.backend;
            text += std::string("  symbolic: ") + (check.symbolic ? "pass" : "fail") +
                    ", backend: " + (check.backend ? "pass" : "fail") + "\n";
            return emit(g, {{"a", da}, {"terms", list}, {"symbolic", check.symbolic}, {"backend", check.backend}}, text,
                        ok ? 0 : 1);
        }
        if (cube_cmd->parsed()) {
            auto o = suite_options(g);
            if (face.empty()) return emit_report(g, axb::suite_cube(o));
            auto primes = o.primes.value_or(axb::primes_up_to(13));
            auto r = axb::cube_face_check(face, primes);
            axb::Report rep("cube");
            rep.check("face " + face + " commutes", r.passed(), "primes " + axb::detail::join_ints(primes),
                      r.mismatches.empty() ? "" : r.mismatches.front(), std::to_string(r.checked) + " elements");
            return emit_report(g, rep);
        }
        // report
        auto o = suite_options(g);
        axb::Report all("all");
        for (auto& s : axb::suite_registry()) all.merge(s.run(o));
        return emit_report(g, all);
    } catch (const axb::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
