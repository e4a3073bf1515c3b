#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcq/charney.hpp"
#include "mcq/chowfy.hpp"
#include "mcq/errors.hpp"
#include "mcq/eulerian.hpp"
#include "mcq/matroid.hpp"
#include "mcq/permstat.hpp"
#include "mcq/qsym.hpp"
#include "mcq/rankselect.hpp"
#include "mcq/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mcq;

json qpoly_json(const QPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.coeffs()) out.push_back({e, c.str()});
    return out;
}

json laurent_json(const LaurentQT& f) {
    json out = json::array();
    for (const auto& [t, c] : f.coeffs())
        out.push_back({{"t", t}, {"q", qpoly_json(c)}});
    return out;
}

json qsym_json(const QSymElem& x) {
    json out = json::array();
    for (const auto& [deg, terms] : x.graded())
        for (const auto& [s, c] : terms)
            out.push_back({{"degree", deg},
                           {"subset", subset_to_list(s)},
                           {"coeff", laurent_json(c)}});
    return out;
}

std::string laurent_csv(const LaurentQT& f) {
    std::string out = "t,q,coeff\n";
    for (const auto& [t, c] : f.coeffs())
        for (const auto& [e, coef] : c.coeffs())
            out += std::to_string(t) + "," + std::to_string(e) + "," + coef.str() + "\n";
    return out;
}

void emit_laurent(const LaurentQT& f, const std::string& out) {
    if (out == "json")
        std::cout << laurent_json(f).dump() << "\n";
    else if (out == "csv")
        std::cout << laurent_csv(f);
    else
        std::cout << f.str() << "\n";
}

[[noreturn]] void usage_error(const std::string& msg) {
    throw CLI::ValidationError("usage", msg);
}

struct HilbArgs {
    std::string family = "uniform";
    int r = -1, n = -1;
    std::string variant = "chow";
    std::string flats;
    std::string out = "latex";
};

struct CdArgs {
    int r = -1, n = -1;
    std::string variant = "chow";
    std::string method = "all";
    std::string out = "latex";
};

int run(int argc, char** argv) {
    CLI::App app{"Exact Hilbert/Frobenius series and Charney-Davis quantities of "
                 "Chow rings of matroids"};
    app.require_subcommand(1);

    HilbArgs ha;
    auto* hilb_cmd = app.add_subcommand("hilb", "Hilbert series");
    hilb_cmd->add_option("--family", ha.family, "uniform|quniform|file")
        ->check(CLI::IsMember({"uniform", "quniform", "file"}));
    hilb_cmd->add_option("-r", ha.r, "rank");
    hilb_cmd->add_option("-n", ha.n, "ground-set size");
    hilb_cmd->add_option("--variant", ha.variant, "chow|aug")
        ->check(CLI::IsMember({"chow", "aug"}));
    hilb_cmd->add_option("--flats", ha.flats, "flats JSON file (family=file)");
    hilb_cmd->add_option("--out", ha.out, "json|csv|latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));

    HilbArgs fa;
    auto* frob_cmd = app.add_subcommand("frob", "graded Frobenius series (uniform)");
    frob_cmd->add_option("-r", fa.r, "rank");
    frob_cmd->add_option("-n", fa.n, "ground-set size");
    frob_cmd->add_option("--variant", fa.variant, "chow|aug")
        ->check(CLI::IsMember({"chow", "aug"}));
    frob_cmd->add_option("--out", fa.out, "json|latex")
        ->check(CLI::IsMember({"json", "latex"}));

    std::string eu_kind = "A";
    int eu_n = -1;
    bool eu_q = false;
    std::string eu_out = "latex";
    auto* eu_cmd = app.add_subcommand("eulerian", "Eulerian polynomial families");
    eu_cmd->add_option("--kind", eu_kind, "A|d|binomial")
        ->check(CLI::IsMember({"A", "d", "binomial"}));
    eu_cmd->add_option("-n", eu_n, "size");
    eu_cmd->add_flag("--q", eu_q, "keep q symbolic");
    eu_cmd->add_option("--out", eu_out, "json|csv|latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));

    CdArgs ca;
    auto* cd_cmd = app.add_subcommand("cd", "Charney-Davis quantities");
    cd_cmd->add_option("-r", ca.r, "rank");
    cd_cmd->add_option("-n", ca.n, "ground-set size");
    cd_cmd->add_option("--variant", ca.variant, "chow|aug")
        ->check(CLI::IsMember({"chow", "aug"}));
    cd_cmd->add_option("--method", ca.method, "eval|descents|secant|determinant|all")
        ->check(CLI::IsMember({"eval", "descents", "secant", "determinant", "all"}));
    cd_cmd->add_option("--out", ca.out, "json|latex")
        ->check(CLI::IsMember({"json", "latex"}));

    std::string mat_flats, mat_variant = "chow", mat_out = "text";
    std::vector<std::string> mat_auts;
    auto* mat_cmd = app.add_subcommand("matroid", "report on a flats-file matroid");
    mat_cmd->add_option("--flats", mat_flats, "flats JSON file")->required();
    mat_cmd->add_option("--variant", mat_variant, "chow|aug")
        ->check(CLI::IsMember({"chow", "aug"}));
    mat_cmd->add_option("--aut", mat_auts, "automorphism in cycle notation (repeatable)");
    mat_cmd->add_option("--out", mat_out, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string vsuite = "all";
    int vmax = 6;
    auto* ver_cmd = app.add_subcommand("verify", "run identity verification suites");
    ver_cmd->add_option("--suite", vsuite,
                        "all|arith|perms|qsym|eulerian|hilbert|frobenius|rankselect|cd");
    ver_cmd->add_option("--max-n", vmax, "size bound (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*hilb_cmd) {
        bool aug = ha.variant == "aug";
        LaurentQT f;
        if (ha.family == "file") {
            if (ha.flats.empty()) usage_error("--family file requires --flats");
            f = hilb(from_flats_file(ha.flats), aug);
        } else {
            if (ha.r < 0 || ha.n < 0) usage_error("hilb requires -r and -n");
            f = ha.family == "quniform" ? hilb_q_uniform(ha.r, ha.n, aug)
                                        : hilb(uniform_matroid(ha.r, ha.n), aug);
        }
        emit_laurent(f, ha.out);
        return 0;
    }
    if (*frob_cmd) {
        if (fa.r < 0 || fa.n < 0) usage_error("frob requires -r and -n");
        auto g = grfrob_uniform(fa.r, fa.n, fa.variant == "aug");
        if (fa.out == "json")
            std::cout << qsym_json(g).dump() << "\n";
        else
            std::cout << g.latex() << "\n";
        return 0;
    }
    if (*eu_cmd) {
        if (eu_n < 0) usage_error("eulerian requires -n");
        LaurentQT f;
        if (eu_kind == "A")
            f = eu_q ? eulerian_A_q(eu_n) : eulerian_A(eu_n);
        else if (eu_kind == "d")
            f = eu_q ? eulerian_d_q(eu_n) : eulerian_d(eu_n);
        else
            f = eu_q ? eulerian_binomial_q(eu_n) : eulerian_binomial(eu_n);
        emit_laurent(f, eu_out);
        return 0;
    }
    if (*cd_cmd) {
        if (ca.r < 0 || ca.n < 0) usage_error("cd requires -r and -n");
        bool aug = ca.variant == "aug";
        if (ca.method == "all") {
            auto rep = cd_report(ca.r, ca.n, aug);
            if (ca.out == "json") {
                json j{{"r", rep.r},
                       {"n", rep.n},
                       {"variant", ca.variant},
                       {"eval", qpoly_json(rep.eval)},
                       {"descents", qpoly_json(rep.descents)},
                       {"secant", qpoly_json(rep.secant)},
                       {"determinant", qpoly_json(rep.determinant)},
                       {"normalized", qpoly_json(rep.normalized)},
                       {"agreement", rep.agreement}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "eval:        " << rep.eval.str() << "\n"
                          << "descents:    " << rep.descents.str() << "\n"
                          << "secant:      " << rep.secant.str() << "\n"
                          << "determinant: " << rep.determinant.str() << "\n"
                          << "normalized:  " << rep.normalized.str() << "\n"
                          << "agreement:   " << (rep.agreement ? "yes" : "no") << "\n";
            }
            if (!rep.agreement) return 1;
            return 0;
        }
        QPoly p;
        if (ca.method == "eval")
            p = cd_eval(ca.r, ca.n, aug);
        else if (ca.method == "descents")
            p = cd_descents(ca.r, ca.n, aug);
        else if (ca.method == "secant")
            p = cd_secant(ca.r, ca.n, aug);
        else
            p = cd_determinant(ca.r, ca.n, aug);
        if (ca.out == "json")
            std::cout << qpoly_json(p).dump() << "\n";
        else
            std::cout << p.str() << "\n";
        return 0;
    }
    if (*mat_cmd) {
        bool aug = mat_variant == "aug";
        auto m = from_flats_file(mat_flats);
        auto h = hilb(m, aug);
        Int cdv = cd(m, aug);
        std::vector<std::pair<std::vector<int>, Int>> flag_rows;
        uint32_t all = m.rank() >= 1 ? (1u << (m.rank() - 1)) - 1 : 0;
        for (uint32_t s = 0; s <= all; ++s) {
            flag_rows.emplace_back(subset_to_list(s), flag_h(m, s));
            if (all == 0) break;
        }
        std::vector<std::pair<std::string, Int>> char_rows;
        char_rows.emplace_back("e", cd_character(m, parse_cycles("", m.ground()), aug));
        for (const auto& a : mat_auts)
            char_rows.emplace_back(a, cd_character(m, parse_cycles(a, m.ground()), aug));
        if (mat_out == "json") {
            json jf = json::array();
            for (const auto& [s, v] : flag_rows)
                jf.push_back({{"subset", s}, {"h", v.str()}});
            json jc = json::array();
            for (const auto& [a, v] : char_rows)
                jc.push_back({{"aut", a}, {"character", v.str()}});
            json j{{"ground", m.ground()},
                   {"rank", m.rank()},
                   {"flats", m.flats().size()},
                   {"valid", true},
                   {"variant", mat_variant},
                   {"hilb", laurent_json(h)},
                   {"cd", cdv.str()},
                   {"flag_h", jf},
                   {"characters", jc}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "validation: passed (" << m.flats().size() << " flats)\n"
                      << "ground:     " << m.ground() << "\n"
                      << "rank:       " << m.rank() << "\n"
                      << "hilb:       " << h.str() << "\n"
                      << "cd:         " << cdv << "\n"
                      << "flag h-vector:\n";
            for (const auto& [s, v] : flag_rows) {
                std::cout << "  {";
                for (size_t i = 0; i < s.size(); ++i)
                    std::cout << (i ? "," : "") << s[i];
                std::cout << "}: " << v << "\n";
            }
            std::cout << "character table:\n";
            for (const auto& [a, v] : char_rows)
                std::cout << "  " << (a.empty() ? "e" : a) << ": " << v << "\n";
        }
        return 0;
    }
    if (*ver_cmd) {
        auto reports = run_suites(vsuite, vmax);
        bool all_pass = true;
        json jr = json::array();
        for (auto& rep : reports) {
            std::sort(rep.checks.begin(), rep.checks.end(),
                      [](const CheckResult& a, const CheckResult& b) {
                          return a.name < b.name;
                      });
            json jc = json::array();
            for (const auto& c : rep.checks) {
                jc.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"ms", c.ms},
                              {"detail", c.detail}});
                all_pass = all_pass && c.pass;
            }
            jr.push_back({{"suite", rep.suite}, {"pass", rep.all_pass()}, {"checks", jc}});
        }
        json j{{"max_n", vmax}, {"pass", all_pass}, {"suites", jr}};
        std::cout << j.dump(2) << "\n";
        return all_pass ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const identity_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
