#include "shirshov/report.hpp"

#include "json.hpp"

namespace shirshov {

namespace {

nlohmann::ordered_json path_json(const Path& p) {
    auto out = nlohmann::ordered_json::array();
    for (auto i : p) out.push_back(i);
    return out;
}

std::string path_text(const Path& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + "]";
}

}  // namespace

std::string gsb_report_json(const GsbReport& rep, const Theory& th, const std::string& theory_hash) {
    const Signature& sig = th.signature();
    nlohmann::ordered_json j;
    j["theory_hash"] = theory_hash;
    j["bound"] = rep.bound;
    j["v_bound"] = rep.v_bound;
    j["rules_instantiated"] = rep.instances.size();
    j["counts"] = {{"inclusion", rep.counts.inclusion}, {"right_mul", rep.counts.right_mul},
                   {"checked", rep.counts.checked},     {"trivial", rep.counts.trivial},
                   {"nontrivial", rep.counts.nontrivial}, {"fuel_exhausted", rep.counts.fuel_exhausted}};
    auto comps = nlohmann::ordered_json::array();
    for (const auto& w : rep.witnesses) {
        nlohmann::ordered_json c;
        c["kind"] = to_string(w.kind);
        c["w"] = format(w.w, sig);
        auto rules = nlohmann::ordered_json::array();
        rules.push_back(format_instance(rep.instances[w.f], th));
        if (w.kind == CompositionKind::Inclusion) {
            rules.push_back(format_instance(rep.instances[w.g], th));
            c["rules"] = rules;
            c["path"] = path_json(w.path);
        } else {
            c["rules"] = rules;
            c["v"] = format(*w.v, sig);
        }
        c["verdict"] = to_string(w.verdict);
        c["normal_form"] = format(w.normal_form, sig);
        comps.push_back(std::move(c));
    }
    j["compositions"] = std::move(comps);
    j["verdict"] = rep.verdict();
    return j.dump(2) + "\n";
}

std::string gsb_report_text(const GsbReport& rep, const Theory& th) {
    const Signature& sig = th.signature();
    std::string out;
    out += "instances: " + std::to_string(rep.instances.size()) + "\n";
    out += "compositions: " + std::to_string(rep.counts.checked) + " (inclusion " +
           std::to_string(rep.counts.inclusion) + ", right-mul " + std::to_string(rep.counts.right_mul) + ")\n";
    out += "trivial: " + std::to_string(rep.counts.trivial) + ", non-trivial: " + std::to_string(rep.counts.nontrivial) +
           ", fuel-exhausted: " + std::to_string(rep.counts.fuel_exhausted) + "\n";
    for (const auto& w : rep.witnesses) {
        out += to_string(w.verdict) + " " + to_string(w.kind) + " composition\n";
        out += "  w = " + format(w.w, sig) + "\n";
        out += "  f = " + format_instance(rep.instances[w.f], th) + "\n";
        if (w.kind == CompositionKind::Inclusion) {
            out += "  g = " + format_instance(rep.instances[w.g], th) + " at " + path_text(w.path) + "\n";
        } else {
            out += "  v = " + format(*w.v, sig) + "\n";
        }
        out += "  normal form: " + format(w.normal_form, sig) + "\n";
    }
    out += rep.verdict() + "\n";
    return out;
}

std::string format_step(const TraceStep& step, const Theory& th) {
    const Rule& r = th.rule(step.rule);
    std::string out = step.coeff.str() + " * " + format(step.word, th.signature()) + " at " + path_text(step.path) +
                      " by " + r.name;
    if (!r.lhs.is_ground()) out += format(step.binding, r.lhs.vars(), th.signature());
    return out;
}

}  // namespace shirshov
