#include "goodies/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace goodies {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Json to_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["schema"] = c.schema;
    j["seed"] = c.seed;
    j["seed_source"] = c.seed_source;
    j["threads"] = c.threads;
    if (c.runs) j["runs"] = c.runs;
    for (const auto& [k, v] : c.params) j["params"][k] = v;
    return j;
}

Json to_json(const Value& v) {
    Json j;
    j["mode"] = v.mode == Mode::rational ? "rational" : "real";
    if (v.mode == Mode::rational) j["exact"] = rational_string(v.exact);
    j["approx"] = v.to_double();
    return j;
}

Json to_json(const SimStats& s) {
    Json j;
    j["runs"] = s.runs;
    j["mean_unhappy"] = s.mean_unhappy;
    j["variance_unhappy"] = s.variance_unhappy;
    j["se_unhappy"] = s.se_unhappy;
    j["sum_unhappy"] = s.sum_unhappy;
    j["sum_unhappy_sq"] = s.sum_unhappy_sq;
    if (s.has_tau) {
        j["mean_tau"] = s.mean_tau;
        j["variance_tau"] = s.variance_tau;
        j["se_tau"] = s.se_tau;
        j["sum_tau"] = s.sum_tau;
        j["sum_tau_sq"] = s.sum_tau_sq;
        Json gaps = Json::array();
        for (size_t g = 0; g < s.gaps.survivor_mean_decrease.size(); ++g) {
            Json row;
            row["gap"] = g;
            row["survivor_mean_decrease"] = s.gaps.survivor_mean_decrease[g];
            row["uniform_share"] = s.gaps.uniform_share[g];
            gaps.push_back(std::move(row));
        }
        j["gaps"] = std::move(gaps);
    }
    return j;
}

Json to_json(const Violation& v) {
    Json j;
    Json subjects = Json::array();
    for (const auto& a : v.subjects) subjects.push_back(a.to_string());
    j["subjects"] = std::move(subjects);
    j["values"] = v.values;
    j["note"] = v.note;
    return j;
}

Json to_json(const SweepReport& r) {
    Json j;
    j["predicate"] = r.predicate;
    j["range"] = r.range;
    j["instances"] = r.instances;
    j["violation_count"] = r.violations.size();
    Json vs = Json::array();
    for (const auto& v : r.violations) vs.push_back(to_json(v));
    j["violations"] = std::move(vs);
    if (r.has_min_slack) {
        j["min_slack"] = rational_string(r.min_slack);
        j["min_slack_approx"] = to_double(r.min_slack);
        Json w = Json::array();
        for (const auto& a : r.min_slack_witness) w.push_back(a.to_string());
        j["min_slack_witness"] = std::move(w);
    }
    return j;
}

Json to_json(const JointDistribution& d) {
    Json j;
    j["types"] = d.k;
    j["t_min"] = d.t_min;
    j["t_max"] = d.t_max;
    Json rows = Json::array();
    for (const auto& [key, p] : d.prob) {
        Json row;
        row["type"] = key.first;
        row["t"] = key.second;
        row["prob"] = rational_string(p);
        row["prob_approx"] = to_double(p);
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["total"] = rational_string(d.total());
    return j;
}

Json to_json(const BoundsReport& r) {
    Json j;
    j["assortment"] = r.a.to_string();
    j["wald_upper"] = r.wald;
    if (r.has_chernoff)
        j["chernoff_lower"] = r.chernoff;
    else
        j["chernoff_lower"] = nullptr;
    j["h_hat"] = r.h_hat_value;
    j["tau_method"] = r.tau_method;
    j["tau"] = r.tau_value;
    j["tau_se"] = r.tau_se;
    j["bounds_hold"] = r.bounds_hold;
    return j;
}

Json to_json(const K2Decomposition& d) {
    Json j;
    j["n1"] = d.n1;
    j["n2"] = d.n2;
    j["p1"] = rational_string(d.p1);
    j["p2"] = rational_string(d.p2);
    j["e1"] = rational_string(d.e1);
    j["e2"] = rational_string(d.e2);
    j["first_term"] = rational_string(d.first_term);
    j["second_term"] = rational_string(d.second_term);
    j["expected_unhappy"] = rational_string(d.expected_unhappy);
    j["expected_unhappy_approx"] = to_double(d.expected_unhappy);
    return j;
}

Json make_envelope(const RunConfig& config, Json results, Json violations) {
    Json j;
    j["config"] = to_json(config);
    j["results"] = std::move(results);
    j["violations"] = std::move(violations);
    return j;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_csv(std::ostream& os, const RunConfig& config, const CsvTable& table) {
    os << "# config: " << to_json(config).dump() << "\n";
    for (size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        os << csv_cell(table.header[i]);
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_cell(row[i]);
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const Json& doc) { os << doc.dump(2) << "\n"; }

}  // namespace goodies
