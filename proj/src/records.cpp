#include "ghost/records.hpp"

#include <string>

namespace ghost {

namespace {

bool is_collatz(std::uint32_t q, std::int64_t d) { return q == 3 && d == 1; }

}  // namespace

Json to_json(const PadicInt& a) {
    return Json{{"residue", a.residue().get_str()}, {"precision", a.precision()}};
}

PadicInt padic_from_json(const Json& j) {
    return PadicInt::make(mpz_class(j.at("residue").get<std::string>()),
                          j.at("precision").get<std::uint32_t>());
}

Json to_json(const ParityPattern& p, bool admissible) {
    Json sigma = Json::array();
    for (std::uint32_t s : p.sigma()) sigma.push_back(s);
    return Json{{"x", p.x()},
                {"y", p.y()},
                {"sigma", std::move(sigma)},
                {"ell", p.ell()},
                {"admissible", admissible}};
}

Json to_json(const GhostCycle& g) {
    Json j;
    if (!is_collatz(g.q, g.d)) {
        j["q"] = g.q;
        j["d"] = g.d;
    }
    j["pattern"] = to_json(g.pattern, g.admissible);
    j["C"] = g.constant.get_str();
    j["modulus"] = g.modulus.value().get_str();
    j["n0"] = to_json(g.n0);
    j["verdict"] = g.is_integer() ? "IntegerCycle" : "Ghost";
    if (g.is_integer()) j["integer_value"] = g.integer_value().get_str();
    return j;
}

Json to_json(const CycleTrace& t, bool admissible, OddRule rule) {
    Json j;
    if (!is_collatz(rule.q, rule.d)) {
        j["q"] = rule.q;
        j["d"] = rule.d;
    }
    j["pattern"] = to_json(t.pattern, admissible);
    Json m = Json::array();
    for (const PadicInt& v : t.m) m.push_back(to_json(v));
    j["m"] = std::move(m);
    j["valuations"] = t.step_valuations;
    j["closed"] = t.closed;
    j["final_precision"] = t.final_precision;
    return j;
}

Json to_json(const ScanRecord& r) {
    Json j = to_json(r.ghost);
    if (r.dynamics_verified) j["dynamics_verified"] = *r.dynamics_verified;
    if (r.integer_confirmed) j["integer_confirmed"] = *r.integer_confirmed;
    return j;
}

Json summary_json(const ScanReport& report) {
    const ScanConfig& c = report.config;
    Json integral = Json::array();
    for (std::size_t i : report.summary.integral) {
        const GhostCycle& g = report.records[i].ghost;
        integral.push_back(Json{{"pattern", to_json(g.pattern, g.admissible)},
                                {"integer_value", g.integer_value().get_str()}});
    }
    Json density = Json::array();
    for (const auto& [ell, counts] : report.summary.by_length) {
        density.push_back(Json{{"ell", ell},
                               {"admissible", counts.first},
                               {"integral", counts.second},
                               {"fraction", static_cast<double>(counts.second) /
                                                static_cast<double>(counts.first)}});
    }
    return Json{{"config",
                 {{"ell_max", c.ell_max},
                  {"precision", c.precision},
                  {"map", {{"q", c.map.q()}, {"d", c.map.d()}}},
                  {"verify_dynamics", c.verify_dynamics},
                  {"verify_sample", c.verify_sample},
                  {"seed", c.seed}}},
                {"summary",
                 {{"total", report.summary.total},
                  {"admissible", report.summary.admissible},
                  {"integer", report.summary.integer},
                  {"ghost", report.summary.ghost},
                  {"dynamics_verified", report.summary.verified},
                  {"integral_patterns", std::move(integral)}}},
                {"integral_density", {{"exploratory", true}, {"by_ell", std::move(density)}}},
                {"wall_seconds", report.wall_seconds}};
}

Json to_json(const DensityReport& report) {
    Json histogram = Json::object();
    for (const auto& [depth, count] : report.histogram) histogram[std::to_string(depth)] = count;
    Json j{{"exploratory", true},
           {"note", "agreement depth of ghost cycles with the target; a probe, not a proof"},
           {"target", to_json(report.target)},
           {"ell_max", report.ell_max},
           {"patterns_scanned", report.scanned},
           {"best_depth", report.best_depth}};
    j["best"] = report.best ? to_json(*report.best) : Json(nullptr);
    j["histogram"] = std::move(histogram);
    return j;
}

void write_jsonl(std::ostream& out, const std::vector<ScanRecord>& records) {
    for (const ScanRecord& r : records) out << to_json(r).dump() << '\n';
}

void write_fiber_csv(std::ostream& out, const std::vector<FiberRow>& rows) {
    out << "y,x,period_exact,period_bruteforce,agree\n";
    for (const FiberRow& r : rows) {
        out << r.y << ',' << r.x << ',' << r.period_exact.get_str() << ',';
        if (r.period_bruteforce) {
            out << *r.period_bruteforce;
        } else if (r.bruteforce_run) {
            out << "inconclusive";
        }
        out << ',';
        if (r.bruteforce_run) out << (r.agree() ? "true" : "false");
        out << '\n';
    }
}

Json to_json(const std::vector<FiberRow>& rows) {
    Json out = Json::array();
    for (const FiberRow& r : rows) {
        Json j{{"y", r.y}, {"x", r.x}, {"period_exact", r.period_exact.get_str()}};
        if (r.bruteforce_run) {
            j["period_bruteforce"] =
                r.period_bruteforce ? Json(*r.period_bruteforce) : Json("inconclusive");
            j["agree"] = r.agree();
        }
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace ghost
