#include "cyclo/report.hpp"

#include <cmath>
#include <cstdio>
#include <iterator>

#include "json.hpp"

namespace cyclo {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += '"';
    return out;
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

std::string to_json_line(const CheckReport& r, std::optional<double> ms) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["p"] = r.p;
    j["N"] = r.N;
    j["nu"] = r.nu;
    j["g"] = r.g;
    j["verdict"] = to_string(r.verdict);
    if (r.verdict == Verdict::skipped)
        j["skip_reason"] = r.skip_reason;
    if (r.lhs)
        j["lhs"] = *r.lhs;
    if (r.rhs)
        j["rhs"] = *r.rhs;
    if (r.modulus)
        j["modulus"] = *r.modulus;
    auto aux = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.aux)
        aux[k] = v;
    j["aux"] = aux;
    if (ms)
        j["ms"] = std::round(*ms * 1000.0) / 1000.0;
    return j.dump();
}

std::string csv_header() {
    return "check,p,N,nu,g,verdict,skip_reason,lhs,rhs,modulus,aux,ms";
}

std::string to_csv_row(const CheckReport& r, std::optional<double> ms) {
    std::string aux;
    for (const auto& [k, v] : r.aux) {
        if (!aux.empty())
            aux += ';';
        aux += k;
        aux += '=';
        aux += v;
    }
    const std::string cells[] = {
        r.check,
        std::to_string(r.p),
        std::to_string(r.N),
        std::to_string(r.nu),
        std::to_string(r.g),
        to_string(r.verdict),
        r.verdict == Verdict::skipped ? r.skip_reason : std::string(),
        r.lhs ? std::to_string(*r.lhs) : std::string(),
        r.rhs ? std::to_string(*r.rhs) : std::string(),
        r.modulus ? std::to_string(*r.modulus) : std::string(),
        aux,
        ms ? format_ms(*ms) : std::string(),
    };
    std::string out;
    for (size_t i = 0; i < std::size(cells); ++i) {
        if (i)
            out += ',';
        out += csv_escape(cells[i]);
    }
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

} // namespace cyclo
