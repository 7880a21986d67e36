#include "report.hpp"

#include <algorithm>
#include <numeric>

namespace mroot {

json to_json(const cd& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const std::vector<cd>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(to_json(z));
    return a;
}

json to_json(const Poly& p) {
    std::vector<const std::pair<const Mono, cd>*> terms;
    terms.reserve(p.t.size());
    for (const auto& kv : p.t) terms.push_back(&kv);
    auto grade = [](const Mono& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
        int da = grade(a->first), db = grade(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    json a = json::array();
    for (auto* kv : terms)
        a.push_back(json{{"exponents", kv->first}, {"coeff", to_json(kv->second)}});
    return a;
}

json to_json(const SeriesSystem& s) {
    json eqs = json::array();
    for (const auto& p : s.series) eqs.push_back(to_json(p));
    return json{{"center", to_json(s.center)},
                {"order", s.order},
                {"level", s.level},
                {"series", eqs}};
}

json to_json(const RankProfile& p) {
    json cands = json::array();
    for (const auto& c : p.candidates)
        cands.push_back(json{{"m", c.m}, {"b", c.b}, {"g", c.g}, {"a", c.a}});
    json j{{"sigma", p.sigma},
           {"s_sums", p.s_sums},
           {"candidates", cands},
           {"epsilon", p.epsilon},
           {"rank", p.rank},
           {"tau_zero", p.tau_zero},
           {"consistent", p.consistent}};
    j["chosen_m"] = p.chosen_m ? json(*p.chosen_m) : json(nullptr);
    return j;
}

json to_json(const SmallnessReport& r) {
    return json{{"norm_f", r.norm_f}, {"value_norm", r.value_norm}, {"eta", r.eta},
                {"cond1", r.cond1},   {"cond2", r.cond2},           {"small", r.small}};
}

json to_json(const DeflationTrace& t) {
    json levels = json::array();
    for (size_t k = 0; k < t.levels.size(); ++k) {
        const auto& lv = t.levels[k];
        json j{{"k", k},
               {"order", lv.system.order},
               {"smallness", to_json(lv.smallness)},
               {"rank", to_json(lv.profile)},
               {"system", to_json(lv.system)}};
        j["row_perm"] = lv.row_perm;
        j["col_perm"] = lv.col_perm;
        levels.push_back(std::move(j));
    }
    json j{{"status", to_string(t.status)}, {"levels", levels}};
    j["thickness"] = t.thickness ? json(*t.thickness) : json(nullptr);
    j["deflated"] = t.deflated ? to_json(*t.deflated) : json(nullptr);
    j["extracted_rows"] = t.extracted_rows;
    return j;
}

json to_json(const NewtonRun& r) {
    json its = json::array();
    for (const auto& x : r.iterates) its.push_back(to_json(x));
    return json{{"iterates", its},
                {"residual_norms", r.residual_norms},
                {"step_norms", r.step_norms},
                {"quadratic_ratios", r.quadratic_ratios},
                {"converged", r.converged},
                {"deflation", to_json(r.trace)}};
}

json to_json(const Certificate& c) {
    json j{{"kind", c.kind == CertificateKind::alpha ? "alpha" : "gamma"},
           {"beta", c.beta},
           {"kappa", c.kappa},
           {"gamma", c.gamma_val},
           {"alpha", c.alpha_val},
           {"bound", c.bound},
           {"norm", c.norm_g},
           {"verdict", c.verdict}};
    j["theta_interval"] =
        c.theta_interval ? json::array({c.theta_interval->first, c.theta_interval->second})
                         : json(nullptr);
    j["radius"] = c.radius ? json(*c.radius) : json(nullptr);
    return j;
}

json to_json(const SingularCertificate& c) {
    json j{{"verdict", c.verdict}, {"deflation", to_json(c.trace)}};
    j["certificate"] = c.certificate ? to_json(*c.certificate) : json(nullptr);
    j["failed_level"] = c.failed_level ? json(*c.failed_level) : json(nullptr);
    return j;
}

json to_json(const MultiplicityResult& m) {
    return json{{"mu", m.mu},
                {"degree_cap_used", m.degree_cap_used},
                {"stabilized", m.stabilized},
                {"dims", m.dims}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mroot
