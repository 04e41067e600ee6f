#include "scalemodes/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace scalemodes {

namespace {

using ordered_json = nlohmann::ordered_json;

// Re-parse the %.9g rendering so the JSON number carries at most 9
// significant digits (keeps reports byte-stable across platforms).
ordered_json number_sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return ordered_json::parse(buf);
}

} // namespace

RunReport make_run_report(const std::string& input, const Histogram& h, const ModeSet& ms,
                          const std::string& method, std::optional<double> epsilon,
                          double runtime_ms) {
    RunReport r;
    r.input = input;
    r.n_bins = h.n_bins();
    r.method = method;
    r.epsilon = epsilon;
    r.threshold_t = ms.threshold.threshold;
    r.curves.reserve(ms.curves.size());
    for (std::size_t i = 0; i < ms.curves.size(); ++i) {
        CurveReport c;
        c.position = ms.curves[i].positions.front();
        c.birth_step = ms.curves[i].birth_step;
        c.length = ms.curves[i].length();
        c.meaningful = ms.meaningful[i];
        r.curves.push_back(c);
    }
    r.boundaries = ms.boundaries;
    r.modes.reserve(ms.modes.size());
    for (const std::array<int, 2>& m : ms.modes) r.modes.push_back(m);
    r.runtime_ms = runtime_ms;
    return r;
}

std::string write_report_json(const RunReport& r) {
    ordered_json j;
    j["input"] = r.input;
    j["n_bins"] = r.n_bins;
    j["method"] = r.method;
    if (r.epsilon)
        j["epsilon"] = number_sig9(*r.epsilon);
    else
        j["epsilon"] = nullptr;
    j["threshold_T"] = number_sig9(r.threshold_t);

    j["curves"] = ordered_json::array();
    for (const CurveReport& c : r.curves) {
        ordered_json jc;
        jc["position"] = c.position;
        jc["birth_step"] = c.birth_step;
        jc["length"] = c.length;
        jc["meaningful"] = c.meaningful;
        j["curves"].push_back(std::move(jc));
    }

    j["boundaries"] = r.boundaries;
    j["modes"] = ordered_json::array();
    for (const std::array<int, 2>& m : r.modes) j["modes"].push_back({m[0], m[1]});
    j["runtime_ms"] = number_sig9(r.runtime_ms);
    return j.dump(2) + "\n";
}

RunReport read_report_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("report: invalid json: ") + e.what());
    }
    try {
        RunReport r;
        r.input = j.at("input").get<std::string>();
        r.n_bins = j.at("n_bins").get<int>();
        r.method = j.at("method").get<std::string>();
        if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<double>();
        r.threshold_t = j.at("threshold_T").get<double>();
        for (const ordered_json& jc : j.at("curves")) {
            CurveReport c;
            c.position = jc.at("position").get<int>();
            c.birth_step = jc.at("birth_step").get<int>();
            c.length = jc.at("length").get<int>();
            c.meaningful = jc.at("meaningful").get<bool>();
            r.curves.push_back(c);
        }
        r.boundaries = j.at("boundaries").get<std::vector<int>>();
        for (const ordered_json& jm : j.at("modes")) {
            if (!jm.is_array() || jm.size() != 2)
                throw std::runtime_error("mode entries must be [lo, hi] pairs");
            r.modes.push_back({jm[0].get<int>(), jm[1].get<int>()});
        }
        r.runtime_ms = j.at("runtime_ms").get<double>();
        return r;
    } catch (const ordered_json::exception& e) {
        throw std::runtime_error(std::string("report: missing or ill-typed field: ") + e.what());
    }
}

void write_report_file(const std::string& path, const RunReport& r) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("report: cannot open '" + path + "' for writing");
    out << write_report_json(r);
    if (!out) throw std::runtime_error("report: write failed");
}

RunReport read_report_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("report: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_report_json(buf.str());
}

} // namespace scalemodes
