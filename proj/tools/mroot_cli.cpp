#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mroot.h"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { mroot_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OwnedSystem {
    mroot_system* p = nullptr;
    ~OwnedSystem() { mroot_system_free(p); }
};

[[noreturn]] void die(mroot_status st) {
    std::cerr << "error: " << mroot_last_error() << "\n";
    std::exit(st == MROOT_ERR_PARSE || st == MROOT_ERR_INVALID ? 1 : 1);
}

OwnedSystem load_system(const std::string& path) {
    OwnedSystem sys;
    std::string text = read_input(path);
    if (auto st = mroot_system_parse(text.c_str(), &sys.p); st != MROOT_OK) die(st);
    return sys;
}

std::string fmt_cplx(const json& z) {
    double re = z.at("re"), im = z.at("im");
    char buf[64];
    if (im == 0.0)
        std::snprintf(buf, sizeof buf, "%.12g", re);
    else
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

std::string fmt_point(const json& pt) {
    std::string out = "(";
    for (size_t i = 0; i < pt.size(); ++i) {
        if (i) out += ", ";
        out += fmt_cplx(pt[i]);
    }
    return out + ")";
}

void print_deflation_summary(const json& d) {
    for (const auto& lv : d.at("levels")) {
        const auto& sm = lv.at("smallness");
        const auto& rk = lv.at("rank");
        std::printf("level %d: order=%d  |F|=%.6g  eta=%.6g  |F(x0)|=%.6g  rank=%d  eps=%.6g\n",
                    lv.at("k").get<int>(), lv.at("order").get<int>(),
                    sm.at("norm_f").get<double>(), sm.at("eta").get<double>(),
                    sm.at("value_norm").get<double>(), rk.at("rank").get<int>(),
                    rk.at("epsilon").get<double>());
    }
    std::printf("status: %s", d.at("status").get<std::string>().c_str());
    if (!d.at("thickness").is_null())
        std::printf(", thickness %d", d.at("thickness").get<int>());
    std::printf("\n");
}

int run_rank(const std::string& matrix_path, bool raw) {
    std::string text = read_input(matrix_path);
    OwnedString out;
    int rank = 0;
    if (auto st = mroot_rank(text.c_str(), &out.p, &rank); st != MROOT_OK) die(st);
    if (raw) {
        std::fputs(out.p, stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("rank: %d\n", rank);
    std::printf("sigma:");
    for (const auto& s : j.at("sigma")) std::printf(" %.12g", s.get<double>());
    std::printf("\nepsilon: %.12g\n", j.at("epsilon").get<double>());
    if (!j.at("consistent").get<bool>())
        std::printf("warning: profile inconsistent with the plain threshold count\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mroot: locate and certify multiple roots of polynomial systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", mroot_version());

    std::string system_path, point, matrix_path;
    double radius = 0.25, cert_radius = 0.0, tol = 1e-14;
    int order = 8, max_depth = 32, max_iters = 30, cap = 12;
    bool raw = false, redeflate = false, at_root = false;

    auto add_common = [&](CLI::App* cmd, bool needs_point = true) {
        cmd->add_option("system", system_path, "system file ('-' for stdin)")->required();
        if (needs_point)
            cmd->add_option("--point", point, "evaluation point, e.g. -0.01,0.02")->required();
        cmd->add_flag("--json", raw, "print the raw JSON report");
    };

    auto* rank_cmd = app.add_subcommand("rank", "eps-free numerical rank of a matrix");
    rank_cmd->add_option("--matrix", matrix_path, "matrix file ('-' for stdin)")->required();
    rank_cmd->add_flag("--json", raw, "print the raw JSON report");

    auto* deflate_cmd = app.add_subcommand("deflate", "build the deflation sequence at a point");
    add_common(deflate_cmd);
    deflate_cmd->add_option("--radius", radius, "ball radius for the smallness tests");
    deflate_cmd->add_option("--order", order, "series order budget p");
    deflate_cmd->add_option("--max-depth", max_depth, "kerneling depth cap");

    auto* newton_cmd = app.add_subcommand("newton", "Newton iteration on the deflated system");
    add_common(newton_cmd);
    newton_cmd->add_option("--radius", radius, "ball radius for the smallness tests");
    newton_cmd->add_option("--order", order, "series order budget p");
    newton_cmd->add_option("--max-depth", max_depth, "kerneling depth cap");
    newton_cmd->add_option("--max-iters", max_iters, "iteration cap");
    newton_cmd->add_option("--tol", tol, "stop tolerance on the step norm");
    newton_cmd->add_flag("--redeflate", redeflate, "rebuild the deflation at every iterate");

    auto* certify_cmd = app.add_subcommand("certify", "deflate and certify the root");
    add_common(certify_cmd);
    certify_cmd->add_option("--radius", radius, "deflation ball radius");
    certify_cmd->add_option("--order", order, "series order budget p");
    certify_cmd->add_option("--max-depth", max_depth, "kerneling depth cap");
    certify_cmd->add_option("--cert-radius", cert_radius,
                            "certificate ball radius (defaults to --radius)");
    certify_cmd->add_flag("--at-root", at_root,
                          "emit the quadratic-convergence certificate at a candidate root");

    auto* mult_cmd = app.add_subcommand("multiplicity", "local multiplicity at a root");
    add_common(mult_cmd);
    mult_cmd->add_option("--cap", cap, "degree cap for stabilization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (rank_cmd->parsed()) return run_rank(matrix_path, raw);

        auto sys = load_system(system_path);

        if (deflate_cmd->parsed()) {
            OwnedString out;
            int completed = 0;
            if (auto st = mroot_deflate(sys.p, point.c_str(), radius, order, max_depth, &out.p,
                                        &completed);
                st != MROOT_OK)
                die(st);
            if (raw)
                std::fputs(out.p, stdout);
            else
                print_deflation_summary(json::parse(out.str()));
            return completed ? 0 : 2;
        }

        if (newton_cmd->parsed()) {
            OwnedString out;
            int converged = 0;
            if (auto st = mroot_newton(sys.p, point.c_str(), radius, order, max_depth, max_iters,
                                       tol, redeflate ? 1 : 0, &out.p, &converged);
                st != MROOT_OK)
                die(st);
            json j = json::parse(out.str());
            if (raw) {
                std::fputs(out.p, stdout);
            } else {
                const auto& its = j.at("iterates");
                for (size_t k = 0; k < its.size(); ++k)
                    std::printf("x_%zu = %s\n", k, fmt_point(its[k]).c_str());
                std::printf("converged: %s\n", converged ? "true" : "false");
            }
            bool defl_ok = j.at("deflation").at("status").get<std::string>() == "completed";
            return defl_ok ? 0 : 2;
        }

        if (certify_cmd->parsed()) {
            if (cert_radius <= 0.0) cert_radius = radius;
            OwnedString out;
            int verdict = 0;
            if (auto st = mroot_certify(sys.p, point.c_str(), radius, order, max_depth,
                                        cert_radius, at_root ? 1 : 0, &out.p, &verdict);
                st != MROOT_OK)
                die(st);
            if (raw) {
                std::fputs(out.p, stdout);
            } else {
                json j = json::parse(out.str());
                print_deflation_summary(j.at("deflation"));
                if (!j.at("certificate").is_null()) {
                    const auto& c = j.at("certificate");
                    std::printf("%s certificate: beta=%.6g kappa=%.6g gamma=%.6g alpha=%.6g "
                                "bound=%.6g\n",
                                c.at("kind").get<std::string>().c_str(),
                                c.at("beta").get<double>(), c.at("kappa").get<double>(),
                                c.at("gamma").get<double>(), c.at("alpha").get<double>(),
                                c.at("bound").get<double>());
                    if (!c.at("theta_interval").is_null())
                        std::printf("uniqueness radius: %.6g (interval up to %.6g)\n",
                                    c.at("theta_interval")[0].get<double>(),
                                    c.at("theta_interval")[1].get<double>());
                    if (!c.at("radius").is_null())
                        std::printf("convergence radius: %.6g\n", c.at("radius").get<double>());
                }
                std::printf("verdict: %s\n", verdict ? "certified" : "not certified");
            }
            return verdict ? 0 : 2;
        }

        if (mult_cmd->parsed()) {
            OwnedString out;
            int mu = 0;
            if (auto st = mroot_multiplicity(sys.p, point.c_str(), cap, &out.p, &mu);
                st != MROOT_OK)
                die(st);
            if (raw) {
                std::fputs(out.p, stdout);
            } else {
                json j = json::parse(out.str());
                std::printf("multiplicity: %d (stabilized: %s, cap used: %d)\n", mu,
                            j.at("stabilized").get<bool>() ? "true" : "false",
                            j.at("degree_cap_used").get<int>());
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
