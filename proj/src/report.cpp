#include "ffrt/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ffrt {

namespace {

using nlohmann::json;

const char* kind_name(SummandKind k) {
    switch (k) {
        case SummandKind::TiltFree: return "TiltFree";
        case SummandKind::K: return "K";
        case SummandKind::Cov: return "Cov";
        case SummandKind::SheafSymQ: return "SheafSymQ";
        case SummandKind::SheafK: return "SheafK";
    }
    return "?";
}

json indices_of(const SummandInstance& s) {
    if (s.kind == SummandKind::K || s.kind == SummandKind::SheafK) return json::array({s.j, s.k});
    return json::array({s.l});
}

json entry_json(const SummandInstance& s, const json& multiplicity, const std::string& flag) {
    json e;
    e["kind"] = kind_name(s.kind);
    e["indices"] = indices_of(s);
    e["frobenius_level"] = s.frobenius_level;
    if (s.twist)
        e["twist"] = *s.twist;
    else
        e["twist"] = nullptr;
    e["multiplicity"] = multiplicity;
    e["flag"] = flag;
    return e;
}

std::string flag_name(MultFlag f) { return f == MultFlag::Nonzero ? "nonzero" : "possible"; }

void print_table_header(std::ostringstream& os) {
    os << std::left << std::setw(12) << "kind" << std::setw(10) << "indices" << std::setw(7)
       << "level" << std::setw(9) << "twist" << std::setw(18) << "multiplicity" << "flag\n";
}

void print_table_row(std::ostringstream& os, const SummandInstance& s, const std::string& mult,
                     const std::string& flag) {
    std::string idx = s.kind == SummandKind::K || s.kind == SummandKind::SheafK
                          ? "(" + std::to_string(s.j) + "," + std::to_string(s.k) + ")"
                          : "(" + std::to_string(s.l) + ")";
    os << std::left << std::setw(12) << kind_name(s.kind) << std::setw(10) << idx << std::setw(7)
       << s.frobenius_level << std::setw(9) << (s.twist ? std::to_string(*s.twist) : "-")
       << std::setw(18) << mult << flag << "\n";
}

}  // namespace

std::string emit_catalog_report(const std::string& scenario,
                                const std::vector<SummandInstance>& entries, int n,
                                std::int64_t p, int r, ReportFormat format,
                                const std::vector<std::string>& notes, long long runtime_ms) {
    if (format == ReportFormat::Json) {
        json out;
        out["scenario"] = scenario;
        out["params"] = {{"n", n}, {"p", p}, {"r", r}};
        out["consistent"] = true;
        out["entries"] = json::array();
        for (const auto& s : entries)
            out["entries"].push_back(entry_json(
                s, s.flag == MultFlag::Nonzero ? json("unknown-positive") : json("possible"),
                flag_name(s.flag)));
        out["residual_degrees"] = json::array();
        out["runtime_ms"] = runtime_ms;
        if (!notes.empty()) out["notes"] = notes;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << scenario << "  n=" << n << " p=" << p << " r=" << r << "\n";
    print_table_header(os);
    for (const auto& s : entries)
        print_table_row(os, s, s.flag == MultFlag::Nonzero ? "unknown-positive" : "possible",
                        flag_name(s.flag));
    for (const auto& note : notes) os << "# " << note << "\n";
    os << entries.size() << " entries\n";
    return os.str();
}

std::string emit_verify_report(const VerifyReport& rep, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json out;
        out["scenario"] = scenario_name(rep.scenario);
        out["params"] = {{"n", rep.params.n}, {"p", rep.params.p},     {"r", rep.params.r},
                         {"j", rep.params.j}, {"k", rep.params.k},     {"max_degree", rep.params.D}};
        out["consistent"] = rep.consistent;
        out["status"] = rep.status;
        out["entries"] = json::array();
        for (const auto& e : rep.entries) {
            if (e.attachments.empty()) {
                out["entries"].push_back(
                    entry_json(e.inst,
                               e.inst.flag == MultFlag::Nonzero ? json("unknown-positive")
                                                                 : json("possible"),
                               e.status));
            } else {
                for (const auto& [d, m] : e.attachments) {
                    SummandInstance inst = e.inst;
                    inst.twist = d;
                    out["entries"].push_back(entry_json(inst, json(m), e.status));
                }
            }
        }
        out["residual_degrees"] = rep.residual_degrees;
        if (rep.first_failure)
            out["first_failure"] = {{"degree", rep.first_failure->first},
                                    {"weight", rep.first_failure->second}};
        if (!rep.detail.empty()) out["detail"] = rep.detail;
        out["runtime_ms"] = rep.runtime_ms;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "verify " << scenario_name(rep.scenario) << "  n=" << rep.params.n
       << " p=" << rep.params.p << " r=" << rep.params.r;
    if (rep.scenario == Scenario::TjS_G1 || rep.scenario == Scenario::Kjk_G1)
        os << " j=" << rep.params.j;
    if (rep.scenario == Scenario::Kjk_G1 || rep.scenario == Scenario::B1_predictor)
        os << " k=" << rep.params.k;
    os << " D=" << rep.params.D << "\n";
    os << "status: " << rep.status << "\n";
    if (!rep.entries.empty()) {
        print_table_header(os);
        for (const auto& e : rep.entries) {
            if (e.attachments.empty()) {
                print_table_row(os, e.inst, "-", e.status);
            } else {
                long long total = 0;
                for (const auto& [d, m] : e.attachments) total += m;
                SummandInstance inst = e.inst;
                inst.twist = e.attachments.front().first;
                print_table_row(os, inst, std::to_string(total), e.status);
            }
        }
    }
    if (rep.first_failure)
        os << "first failure at degree " << rep.first_failure->first << ", weight "
           << rep.first_failure->second << "\n";
    if (!rep.detail.empty()) os << "# " << rep.detail << "\n";
    os << "runtime_ms: " << rep.runtime_ms << "\n";
    return os.str();
}

}  // namespace ffrt
