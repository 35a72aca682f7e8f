// Command-line front end: expansion dumps, verification suites and the
// cancellation derivations, with machine-readable reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "transverify/transverify.hpp"

namespace tv = transverify;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

long default_q_order(std::optional<long> cli_value, long fallback) {
    if (cli_value) return *cli_value;
    if (const char* env = std::getenv("TRANSVERIFY_DEFAULT_QORDER")) {
        long v = std::atol(env);
        if (v >= 1) return v;
    }
    return fallback;
}

// Accepts "1.1i", "0.3+1.2i", "-0.4+0.9i", "2", "-0.5-0.25i".
std::optional<tv::Complex> parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    std::string t = s;
    if (t.empty()) return std::nullopt;
    if (t.back() == 'i') {
        t.pop_back();
        // split imaginary part at the last +/- not in position 0 or after e/E
        size_t split = std::string::npos;
        for (size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        try {
            if (split == std::string::npos) {
                im = (t.empty() || t == "+") ? 1.0 : (t == "-") ? -1.0 : std::stod(t);
            } else {
                re = std::stod(t.substr(0, split));
                std::string imag = t.substr(split);
                im = (imag == "+") ? 1.0 : (imag == "-") ? -1.0 : std::stod(imag);
            }
        } catch (...) {
            return std::nullopt;
        }
        return tv::Complex(re, im);
    }
    try {
        re = std::stod(t);
    } catch (...) {
        return std::nullopt;
    }
    return tv::Complex(re, 0.0);
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return kExitPass;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitPass;
}

std::string scalar_str(const tv::Scalar& s) { return s.str(); }

std::string render_qexp_markdown(const tv::QExpansion& q, const std::string& title) {
    std::ostringstream os;
    os << "# " << title << "\n\n| q-exponent | coefficient |\n|---|---|\n";
    for (const auto& [n, c] : q.terms()) {
        os << "| ";
        if (n % tv::kQDenom == 0) os << n / tv::kQDenom;
        else os << n << "/" << tv::kQDenom;
        os << " | " << scalar_str(c) << " |\n";
    }
    if (q.trunc() < tv::kInfTrunc)
        os << "\ntruncated at exponent " << q.trunc() << "/" << tv::kQDenom << "\n";
    return os.str();
}

std::string render_qexp_csv(const tv::QExpansion& q) {
    std::ostringstream os;
    os << "num,denom,coefficient\n";
    for (const auto& [n, c] : q.terms())
        os << n << "," << tv::kQDenom << ",\"" << scalar_str(c) << "\"\n";
    return os.str();
}

std::string render_yseries_markdown(const tv::YSeries& s, const std::string& title) {
    std::ostringstream os;
    os << "# " << title << "\n\n| y-degree | expansion |\n|---|---|\n";
    for (const auto& [d, c] : s.terms()) os << "| " << d << " | " << c.str() << " |\n";
    os << "\ny-truncation " << s.y_trunc() << "\n";
    return os.str();
}

std::string render_form_markdown(const tv::FormElement& e, const std::string& title) {
    std::ostringstream os;
    os << "# " << title << "\n\n| monomial | expansion |\n|---|---|\n";
    for (const auto& [m, c] : e.terms()) os << "| " << m.str() << " | " << c.str() << " |\n";
    return os.str();
}

std::string render_form_csv(const tv::FormElement& e) {
    std::ostringstream os;
    os << "monomial,expansion\n";
    for (const auto& [m, c] : e.terms())
        os << "\"" << m.str() << "\",\"" << c.str() << "\"\n";
    return os.str();
}

struct ExpandArgs {
    std::string kind;
    std::string name;
    std::optional<long> q_order;
    int y_order = 8;
    int k = 1;
    std::string route = "theta";
    std::string format = "json";
    std::string out;
};

int run_expand(const ExpandArgs& a) {
    using namespace tv;
    long Q = default_q_order(a.q_order, 6);

    if (a.kind == "theta") {
        ThetaFamily fam;
        if (a.name == "theta") fam = ThetaFamily::Theta;
        else if (a.name == "theta1") fam = ThetaFamily::Theta1;
        else if (a.name == "theta2") fam = ThetaFamily::Theta2;
        else if (a.name == "theta3") fam = ThetaFamily::Theta3;
        else {
            std::cerr << "error: unknown theta family " << a.name << "\n";
            return kExitUsage;
        }
        YSeries s = theta_expand(fam, a.y_order, Q);
        if (a.format == "json") return write_output(to_json(s).dump(2), a.out);
        if (a.format == "markdown")
            return write_output(render_yseries_markdown(s, a.name), a.out);
        std::ostringstream os;
        os << "y_degree,expansion\n";
        for (const auto& [d, c] : s.terms()) os << d << ",\"" << c.str() << "\"\n";
        return write_output(os.str(), a.out);
    }

    if (a.kind == "modform") {
        ModularForm f;
        if (a.name == "delta1") f = delta(1, Q);
        else if (a.name == "delta2") f = delta(2, Q);
        else if (a.name == "delta3") f = delta(3, Q);
        else if (a.name == "epsilon1") f = epsilon(1, Q);
        else if (a.name == "epsilon2") f = epsilon(2, Q);
        else if (a.name == "epsilon3") f = epsilon(3, Q);
        else {
            std::cerr << "error: unknown modular form " << a.name << "\n";
            return kExitUsage;
        }
        if (a.format == "json") return write_output(to_json(f).dump(2), a.out);
        if (a.format == "markdown")
            return write_output(render_qexp_markdown(f.series, a.name), a.out);
        return write_output(render_qexp_csv(f.series), a.out);
    }

    if (a.kind == "phi") {
        bool tilde = a.name.rfind("PhiTilde", 0) == 0;
        std::string fam_part = tilde ? a.name.substr(9) : a.name.substr(4);
        PhiFamily fam;
        if (fam_part == "L") fam = PhiFamily::L;
        else if (fam_part == "W") fam = PhiFamily::W;
        else if (fam_part == "Wp") fam = PhiFamily::Wp;
        else {
            std::cerr << "error: unknown phi family " << a.name
                      << " (expect Phi_L|Phi_W|Phi_Wp|PhiTilde_L|PhiTilde_W|PhiTilde_Wp)\n";
            return kExitUsage;
        }
        RingSpec spec = tilde ? RingSpec::upper(a.k, Q) : RingSpec::lower(a.k, Q);
        FormElement e(spec);
        if (a.route == "theta")
            e = tilde ? phi_tilde_theta_route(fam, spec) : phi_theta_route(fam, spec);
        else if (a.route == "bundle")
            e = tilde ? phi_tilde_bundle_route(fam, spec) : phi_bundle_route(fam, spec);
        else {
            std::cerr << "error: unknown route " << a.route << "\n";
            return kExitUsage;
        }
        if (a.format == "json") return write_output(to_json(e).dump(2), a.out);
        if (a.format == "markdown") return write_output(render_form_markdown(e, a.name), a.out);
        return write_output(render_form_csv(e), a.out);
    }

    if (a.kind == "cs") {
        RingSpec low = RingSpec::lower(a.k, Q);
        RingSpec up = RingSpec::upper(a.k, Q);
        FormElement e{low};
        if (a.name == "tm-L") e = cs_tm(PhiFamily::L, low).element;
        else if (a.name == "tm-W") e = cs_tm(PhiFamily::W, low).element;
        else if (a.name == "tm-Wp") e = cs_tm(PhiFamily::Wp, low).element;
        else if (a.name == "xi-L") e = cs_xi(PhiFamily::L, low).element;
        else if (a.name == "xi-W") e = cs_xi(PhiFamily::W, low).element;
        else if (a.name == "xi-Wp") e = cs_xi(PhiFamily::Wp, low).element;
        else if (a.name == "tilde-L") e = cs_tilde(PhiFamily::L, up).element;
        else if (a.name == "tilde-W") e = cs_tilde(PhiFamily::W, up).element;
        else if (a.name == "tilde-Wp") e = cs_tilde(PhiFamily::Wp, up).element;
        else {
            std::cerr << "error: unknown cs family " << a.name << "\n";
            return kExitUsage;
        }
        if (a.format == "json") return write_output(to_json(e).dump(2), a.out);
        if (a.format == "markdown") return write_output(render_form_markdown(e, a.name), a.out);
        return write_output(render_form_csv(e), a.out);
    }

    std::cerr << "error: unknown expand kind " << a.kind << "\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of transgressed characteristic forms"};
    app.require_subcommand(1);

    // expand
    ExpandArgs ea;
    std::optional<long> q_order_flag;
    auto* expand = app.add_subcommand("expand", "dump a computed expansion");
    expand->add_option("kind", ea.kind, "theta|modform|phi|cs")->required();
    expand->add_option("name", ea.name, "object name")->required();
    expand->add_option("--q-order", q_order_flag, "q-series order");
    expand->add_option("--y-order", ea.y_order, "y-series order");
    expand->add_option("--k", ea.k, "ring configuration index k");
    expand->add_option("--route", ea.route, "phi construction route: theta|bundle");
    expand->add_option("--format", ea.format, "json|markdown|csv")
        ->check(CLI::IsMember({"json", "markdown", "csv"}));
    expand->add_option("--out", ea.out, "write output to file");

    // verify
    std::string suite_tag;
    std::optional<long> v_q_order;
    int v_y_order = 0;
    double v_tol = 1e-9;
    std::vector<std::string> tau_args;
    std::string v_format = "json", v_out;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_tag, "suite tag")
        ->required()
        ->check(CLI::IsMember(tv::suite_tags()));
    verify->add_option("--q-order", v_q_order, "q-series order");
    verify->add_option("--y-order", v_y_order, "y-series order");
    verify->add_option("--tol", v_tol, "numeric tolerance");
    verify->add_option("--tau", tau_args, "tau sample, e.g. 0.3+1.2i (repeatable)");
    verify->add_option("--format", v_format, "json|markdown|csv")
        ->check(CLI::IsMember({"json", "markdown", "csv"}));
    verify->add_option("--out", v_out, "write report to file");

    // derive
    std::string case_tag;
    std::optional<long> d_q_order;
    std::string d_format = "json", d_out;
    auto* derive_cmd = app.add_subcommand("derive", "run a cancellation derivation");
    derive_cmd->add_option("case", case_tag, "cancel-TM-11|cancel-XI-11|cancel-TILDE-9")
        ->required()
        ->check(CLI::IsMember({"cancel-TM-11", "cancel-XI-11", "cancel-TILDE-9"}));
    derive_cmd->add_option("--q-order", d_q_order, "q-series order (>= 2)");
    derive_cmd->add_option("--format", d_format, "json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    derive_cmd->add_option("--out", d_out, "write report to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) {
            ea.q_order = q_order_flag;
            return run_expand(ea);
        }

        if (verify->parsed()) {
            tv::SuiteOptions opt;
            opt.q_order = v_q_order.value_or(0);
            opt.y_order = v_y_order;
            opt.tol = v_tol;
            for (const auto& s : tau_args) {
                auto z = parse_complex(s);
                if (!z) {
                    std::cerr << "error: cannot parse tau sample '" << s << "'\n";
                    return kExitUsage;
                }
                opt.tau_samples.push_back(*z);
            }
            tv::VerificationReport rep = tv::run_suite(suite_tag, opt);
            std::string text = v_format == "json"       ? tv::to_json(rep).dump(2)
                               : v_format == "markdown" ? tv::render_markdown(rep)
                                                        : tv::render_csv(rep);
            int rc = write_output(text, v_out);
            if (rc != kExitPass) return rc;
            return rep.pass() ? kExitPass : kExitFail;
        }

        if (derive_cmd->parsed()) {
            tv::CancelCase c = case_tag == "cancel-TM-11"   ? tv::CancelCase::TM11
                               : case_tag == "cancel-XI-11" ? tv::CancelCase::XI11
                                                            : tv::CancelCase::TILDE9;
            long Q = default_q_order(d_q_order, 4);
            tv::CancellationReport rep = tv::derive(c, Q);
            std::string text;
            if (d_format == "json") {
                text = tv::to_json(rep).dump(2);
            } else {
                std::ostringstream os;
                os << "# " << rep.case_id << " (q-order " << rep.q_order << ")\n\n";
                os << "- residual zero: " << (rep.residual_zero ? "yes" : "NO") << "\n";
                os << "- companion identity (2^6 factor): "
                   << (rep.gamma0_side_ok ? "holds" : "FAILS") << "\n";
                os << "- constant-term identity: " << (rep.const_term_ok ? "holds" : "FAILS")
                   << "\n";
                os << "- z0: " << rep.matched_z0 << "\n";
                os << "- z1: " << rep.matched_z1 << "\n";
                os << "- constant term: " << rep.matched_lhs << "\n";
                text = os.str();
            }
            int rc = write_output(text, d_out);
            if (rc != kExitPass) return rc;
            return rep.ok() ? kExitPass : kExitFail;
        }
    } catch (const tv::InsufficientOrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
