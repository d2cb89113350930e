#include "davenport/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace davenport {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json report_object(const IdentityReport& rep) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    ordered_json j;
    j["identity"] = rep.identity;
    j["params"] = std::move(params);
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["residual"] = rep.residual;
    j["bound"] = rep.bound;
    j["bound_is_heuristic"] = rep.bound_is_heuristic;
    j["pass"] = rep.pass;
    return j;
}

std::string flat_params(const IdentityReport& rep) {
    std::string out;
    for (const auto& [k, v] : rep.params) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

ordered_json fine_object(const FineReport& rep) {
    ordered_json j;
    j["family"] = rep.family;
    j["base_fn"] = rep.base_fn;
    j["N"] = rep.N;
    j["coprime_ok"] = rep.coprime_ok;
    j["value"] = rep.value;
    j["bound"] = rep.bound;
    j["bound_is_heuristic"] = rep.bound_is_heuristic;
    j["method"] = rep.method;
    return j;
}

} // namespace

std::string reports_json(const std::vector<IdentityReport>& reps) {
    ordered_json arr = ordered_json::array();
    for (const IdentityReport& rep : reps) arr.push_back(report_object(rep));
    return arr.dump(2) + "\n";
}

std::string reports_csv(const std::vector<IdentityReport>& reps) {
    std::string out = "identity,lhs,rhs,residual,bound,bound_is_heuristic,pass,params\n";
    for (const IdentityReport& rep : reps) {
        out += rep.identity + ',' + fmt(rep.lhs) + ',' + fmt(rep.rhs) + ',' + fmt(rep.residual) +
               ',' + fmt(rep.bound) + ',' + (rep.bound_is_heuristic ? "true" : "false") + ',' +
               (rep.pass ? "true" : "false") + ',' + flat_params(rep) + '\n';
    }
    return out;
}

std::string reports_table(const std::vector<IdentityReport>& reps) {
    std::ostringstream out;
    for (const IdentityReport& rep : reps) {
        out << (rep.pass ? "PASS " : "FAIL ") << rep.identity << '[' << flat_params(rep) << ']'
            << " lhs=" << fmt(rep.lhs) << " rhs=" << fmt(rep.rhs)
            << " residual=" << fmt(rep.residual) << " bound=" << fmt(rep.bound)
            << (rep.bound_is_heuristic ? " (heuristic)" : "") << '\n';
    }
    return out.str();
}

std::string fine_json(const FineScan& scan) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const FineReport& rep : scan.reports) arr.push_back(fine_object(rep));
    j["reports"] = std::move(arr);
    j["coprime_total"] = scan.coprime_total;
    j["coprime_small"] = scan.coprime_small;
    j["noncoprime_total"] = scan.noncoprime_total;
    j["noncoprime_small"] = scan.noncoprime_small;
    return j.dump(2) + "\n";
}

std::string fine_csv(const FineScan& scan) {
    std::string out = "family,base_fn,N,coprime_ok,value,bound,bound_is_heuristic,method\n";
    for (const FineReport& rep : scan.reports) {
        out += rep.family + ',' + rep.base_fn + ',' + std::to_string(rep.N) + ',' +
               (rep.coprime_ok ? "true" : "false") + ',' + fmt(rep.value) + ',' + fmt(rep.bound) +
               ',' + (rep.bound_is_heuristic ? "true" : "false") + ',' + rep.method + '\n';
    }
    return out;
}

std::string fine_table(const FineScan& scan) {
    std::ostringstream out;
    for (const FineReport& rep : scan.reports) {
        out << rep.family << '(' << rep.base_fn << ") N=" << rep.N
            << (rep.coprime_ok ? " coprime   " : " noncoprime") << " value=" << fmt(rep.value)
            << " bound=" << fmt(rep.bound) << (rep.bound_is_heuristic ? " (heuristic)" : "")
            << ' ' << rep.method << '\n';
    }
    out << "coprime small/total: " << scan.coprime_small << '/' << scan.coprime_total
        << "  noncoprime small/total: " << scan.noncoprime_small << '/' << scan.noncoprime_total
        << '\n';
    return out.str();
}

std::string probe_json(const std::vector<ProbeRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const ProbeRow& row : rows) {
        ordered_json j;
        j["x"] = row.x.str();
        j["D"] = row.D;
        j["ratio"] = row.ratio;
        j["log_comparison"] = row.log_comparison;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
    std::string out = "x,D,ratio,log_comparison\n";
    for (const ProbeRow& row : rows)
        out += row.x.str() + ',' + fmt(row.D) + ',' + fmt(row.ratio) + ',' +
               fmt(row.log_comparison) + '\n';
    return out;
}

std::string probe_table(const std::vector<ProbeRow>& rows) {
    std::ostringstream out;
    for (const ProbeRow& row : rows)
        out << "x=" << row.x.str() << " D=" << fmt(row.D) << " ratio=" << fmt(row.ratio)
            << " D*2x/logx=" << fmt(row.log_comparison) << '\n';
    return out.str();
}

} // namespace davenport
