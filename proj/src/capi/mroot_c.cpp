#include "mroot.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "certify.hpp"
#include "deflate.hpp"
#include "multiplicity.hpp"
#include "newton.hpp"
#include "numrank.hpp"
#include "parser.hpp"
#include "report.hpp"

using namespace mroot;

struct mroot_system {
    PolySystem sys;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mroot_status classify(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return MROOT_ERR_PARSE;
    if (dynamic_cast<const OrderBudgetError*>(&e)) return MROOT_ERR_BUDGET;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return MROOT_ERR_INVALID;
    if (dynamic_cast<const std::length_error*>(&e)) return MROOT_ERR_INVALID;
    return MROOT_ERR_NUMERIC;
}

template <typename Fn>
mroot_status guarded(Fn&& fn) {
    try {
        fn();
        return MROOT_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return classify(e);
    } catch (...) {
        g_last_error = "unknown error";
        return MROOT_ERR_NUMERIC;
    }
}

std::vector<cd> point_for(const mroot_system* sys, const char* point) {
    auto x = parse_point(point ? point : "");
    if (static_cast<int>(x.size()) != sys->sys.n)
        throw std::invalid_argument("point dimension does not match the system");
    return x;
}

void emit(const json& j, char** json_out) {
    if (json_out) *json_out = dup_string(dump_report(j));
}

}  // namespace

extern "C" {

const char* mroot_version(void) { return "mroot 1.0.0"; }

const char* mroot_last_error(void) { return g_last_error.c_str(); }

void mroot_string_free(char* s) { std::free(s); }

mroot_status mroot_system_parse(const char* text, mroot_system** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return MROOT_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        auto sys = new mroot_system{parse_system(text)};
        *out = sys;
    });
}

void mroot_system_free(mroot_system* sys) { delete sys; }

int mroot_system_nvars(const mroot_system* sys) { return sys ? sys->sys.n : 0; }

int mroot_system_size(const mroot_system* sys) {
    return sys ? static_cast<int>(sys->sys.size()) : 0;
}

mroot_status mroot_rank(const char* matrix_text, char** json_out, int* rank_out) {
    if (!matrix_text) {
        g_last_error = "null argument";
        return MROOT_ERR_INVALID;
    }
    return guarded([&] {
        auto M = parse_matrix(matrix_text);
        auto prof = numerical_rank(M);
        if (rank_out) *rank_out = prof.rank;
        emit(to_json(prof), json_out);
    });
}

mroot_status mroot_deflate(const mroot_system* sys, const char* point, double radius,
                           int order, int max_depth, char** json_out, int* completed_out) {
    if (!sys) {
        g_last_error = "null system";
        return MROOT_ERR_INVALID;
    }
    return guarded([&] {
        DeflationOptions opt;
        opt.R = radius;
        opt.order = order;
        opt.max_depth = max_depth;
        auto trace = deflation_sequence(sys->sys, point_for(sys, point), opt);
        if (completed_out) *completed_out = trace.status == DeflationStatus::completed ? 1 : 0;
        emit(to_json(trace), json_out);
    });
}

mroot_status mroot_newton(const mroot_system* sys, const char* point, double radius,
                          int order, int max_depth, int max_iters, double tol,
                          int redeflate, char** json_out, int* converged_out) {
    if (!sys) {
        g_last_error = "null system";
        return MROOT_ERR_INVALID;
    }
    return guarded([&] {
        NewtonOptions opt;
        opt.deflation.R = radius;
        opt.deflation.order = order;
        opt.deflation.max_depth = max_depth;
        opt.max_iters = max_iters;
        opt.tol = tol;
        opt.redeflate = redeflate != 0;
        auto run = singular_newton(sys->sys, point_for(sys, point), opt);
        if (converged_out) *converged_out = run.converged ? 1 : 0;
        emit(to_json(run), json_out);
    });
}

mroot_status mroot_certify(const mroot_system* sys, const char* point, double radius,
                           int order, int max_depth, double cert_radius, int at_root,
                           char** json_out, int* verdict_out) {
    if (!sys) {
        g_last_error = "null system";
        return MROOT_ERR_INVALID;
    }
    return guarded([&] {
        auto x0 = point_for(sys, point);
        DeflationOptions opt;
        opt.R = radius;
        opt.order = order;
        opt.max_depth = max_depth;
        BallContext ball{x0, cert_radius};
        auto cert = certify_singular(sys->sys, x0, opt, ball, at_root != 0);
        if (verdict_out) *verdict_out = cert.verdict ? 1 : 0;
        emit(to_json(cert), json_out);
    });
}

mroot_status mroot_multiplicity(const mroot_system* sys, const char* point, int cap,
                                char** json_out, int* mu_out) {
    if (!sys) {
        g_last_error = "null system";
        return MROOT_ERR_INVALID;
    }
    return guarded([&] {
        auto res = multiplicity(sys->sys, point_for(sys, point), cap);
        if (mu_out) *mu_out = res.mu;
        emit(to_json(res), json_out);
    });
}

}  // extern "C"
