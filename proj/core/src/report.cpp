#include "sparsepoly/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sparsepoly {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    // shortest representation that round-trips
    for (int prec = 6; prec <= 17; ++prec) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        double back = 0;
        std::sscanf(buf, "%lf", &back);
        if (back == x) return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    j["params"] = r.params;  // std::map keeps key order stable
    j["verdict"] = to_string(r.verdict);
    j["pass"] = r.pass();
    if (r.witness) {
        Json w;
        w["location"] = r.witness->location;
        w["lhs"] = r.witness->lhs;
        w["rhs"] = r.witness->rhs;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const RootReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    Json roots = Json::array();
    for (const auto& cr : r.roots) {
        Json e;
        e["re"] = format_double(cr.value.real());
        e["im"] = format_double(cr.value.imag());
        e["radius"] = format_double(cr.radius);
        e["clustered"] = cr.clustered;
        roots.push_back(e);
    }
    j["roots"] = roots;
    j["lower_bound"] = r.lower_bound ? Json(format_double(*r.lower_bound)) : Json(nullptr);
    j["upper_bound"] = r.upper_bound ? Json(format_double(*r.upper_bound)) : Json(nullptr);
    j["all_inside_annulus"] = r.all_inside_annulus;
    j["precision_used"] = r.precision_used;
    j["max_modulus"] = format_double(r.max_modulus);
    j["min_modulus"] = format_double(r.min_modulus);
    return j;
}

Json to_json(const RealRootCount& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["count"] = r.count;
    Json iv = Json::array();
    for (const auto& i : r.isolating_intervals)
        iv.push_back(Json::array({format_rational(i.lo), format_rational(i.hi)}));
    j["isolating_intervals"] = iv;
    j["square_free"] = r.square_free;
    return j;
}

Json to_json(const ConcavityCertificate& c) {
    Json j;
    j["object_id"] = c.object_id;
    j["nonneg"] = c.nonneg;
    if (c.first_negative) {
        Json t;
        t["exp"] = c.first_negative->exp.get_str();
        t["coeff"] = c.first_negative->coeff.get_str();
        j["first_negative"] = t;
    } else {
        j["first_negative"] = nullptr;
    }
    j["one_minus_z_mult"] = c.one_minus_z_mult;
    return j;
}

Json to_json(const ParityScan& p) {
    Json j;
    j["m"] = p.m;
    j["n_lo"] = p.n_lo;
    j["n_hi"] = p.n_hi;
    j["word"] = p.word;
    j["never_both_odd"] = p.never_both_odd;
    j["period"] = p.period;
    j["expected_period"] = p.expected_period;
    return j;
}

Json to_json(const ConjectureScanResult& s) {
    Json j;
    j["m"] = s.m;
    Json rows = Json::array();
    for (const auto& r : s.rows) {
        Json e;
        e["m"] = r.m;
        e["n"] = r.n;
        if (r.skipped)
            e["count"] = nullptr;
        else
            e["count"] = r.count;
        e["skipped"] = r.skipped;
        rows.push_back(e);
    }
    j["rows"] = rows;
    j["m2_equality_holds"] = s.m2_equality_holds;
    j["even_bound_holds"] = s.even_bound_holds;
    j["count_period"] = s.count_period;
    j["parity"] = to_json(s.parity);
    return j;
}

ScanRow scan_row(const RootReport& r) {
    ScanRow row;
    row.m = r.m;
    row.n = r.n;
    row.count = static_cast<long>(r.roots.size());
    row.bound_lower = r.lower_bound;
    row.bound_upper = r.upper_bound;
    if (!r.roots.empty()) {
        row.max_modulus = r.max_modulus;
        row.min_modulus = r.min_modulus;
    }
    return row;
}

std::vector<ScanRow> scan_rows(const ConjectureScanResult& s) {
    std::vector<ScanRow> out;
    for (const auto& r : s.rows) {
        ScanRow row;
        row.m = r.m;
        row.n = r.n;
        if (!r.skipped) row.count = r.count;
        if (s.m % 2 == 1 && s.count_period > 0) row.period_detected = s.count_period;
        out.push_back(row);
    }
    return out;
}

namespace {

std::string cell_long(const std::optional<long>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string cell_double(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string render_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << kScanCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.m << ',' << r.n << ',' << cell_long(r.count) << ','
            << cell_long(r.period_detected) << ',' << cell_double(r.bound_lower)
            << ',' << cell_double(r.bound_upper) << ',' << cell_double(r.max_modulus)
            << ',' << cell_double(r.min_modulus) << '\n';
    }
    return out.str();
}

namespace {

std::string csv_escape(const std::string& s) {
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

std::string render_identity_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream out;
    out << "id,params,verdict,pass,witness\n";
    for (const auto& r : reports) {
        std::ostringstream p;
        bool first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) p << ' ';
            first = false;
            p << k << '=' << v;
        }
        std::string w;
        if (r.witness) w = r.witness->location;
        out << csv_escape(r.id) << ',' << csv_escape(p.str()) << ','
            << to_string(r.verdict) << ',' << (r.pass() ? "true" : "false") << ','
            << csv_escape(w) << '\n';
    }
    return out.str();
}

std::string render_text(const std::vector<IdentityReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.pass() ? "PASS " : (r.hard_failure() ? "FAIL " : "SKIP "))
            << r.id;
        for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
        if (!r.pass()) out << " [" << to_string(r.verdict) << ']';
        if (r.witness) out << "  at " << r.witness->location;
        out << '\n';
    }
    return out.str();
}

std::string render_text(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << "m=" << r.m << " n=" << r.n;
        if (r.count) out << " count=" << *r.count;
        if (r.period_detected) out << " period=" << *r.period_detected;
        if (r.bound_lower) out << " lower=" << format_double(*r.bound_lower);
        if (r.bound_upper) out << " upper=" << format_double(*r.bound_upper);
        if (r.min_modulus) out << " min|z|=" << format_double(*r.min_modulus);
        if (r.max_modulus) out << " max|z|=" << format_double(*r.max_modulus);
        out << '\n';
    }
    return out.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << bytes;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace sparsepoly
