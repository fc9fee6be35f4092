/*
   Copyright 2026 The z4codes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "distance.hpp"

namespace z4 {

enum class Construction { cyclic_free, cyclic_nonfree, qc_free, qc_nonfree };

enum class Classification { unset, none, decent, good, very_good, great, inconsistent };

/// One discovered code: type parameters, measured distance, provenance
/// polynomials, Gray-image linearity and the database classification.
/// Serialized as one tab-separated line; elapsed times are deliberately not
/// part of the format so identical runs produce identical bytes.
struct CodeRecord {
    int n = 0, k1 = 0, k2 = 0;
    DistanceResult d;
    Construction construction = Construction::cyclic_free;
    std::optional<int> m, ell;            // QC parameters, absent for cyclic
    std::string g_string;                 // generator (cyclic) or seed (QC) polynomial
    std::vector<std::string> f_strings;   // QC multipliers
    bool gray_linear = false;
    Classification classification = Classification::unset;

    bool is_qc() const { return construction == Construction::qc_free || construction == Construction::qc_nonfree; }
};

inline std::string to_token(Construction c) {
    switch (c) {
        case Construction::cyclic_free: return "cyclic-free";
        case Construction::cyclic_nonfree: return "cyclic-nonfree";
        case Construction::qc_free: return "qc-free";
        case Construction::qc_nonfree: return "qc-nonfree";
    }
    throw std::logic_error("bad construction");
}

inline Construction construction_from_token(std::string_view t) {
    if (t == "cyclic-free") return Construction::cyclic_free;
    if (t == "cyclic-nonfree") return Construction::cyclic_nonfree;
    if (t == "qc-free") return Construction::qc_free;
    if (t == "qc-nonfree") return Construction::qc_nonfree;
    throw std::invalid_argument("unknown construction: " + std::string(t));
}

inline std::string to_token(Classification c) {
    switch (c) {
        case Classification::unset: return "-";
        case Classification::none: return "none";
        case Classification::decent: return "decent";
        case Classification::good: return "good";
        case Classification::very_good: return "very_good";
        case Classification::great: return "great";
        case Classification::inconsistent: return "inconsistent";
    }
    throw std::logic_error("bad classification");
}

inline Classification classification_from_token(std::string_view t) {
    if (t == "-") return Classification::unset;
    if (t == "none") return Classification::none;
    if (t == "decent") return Classification::decent;
    if (t == "good") return Classification::good;
    if (t == "very_good") return Classification::very_good;
    if (t == "great") return Classification::great;
    if (t == "inconsistent") return Classification::inconsistent;
    throw std::invalid_argument("unknown classification: " + std::string(t));
}

inline std::string to_token(DistanceMethod m) {
    return m == DistanceMethod::direct ? "direct" : "dual";
}

inline std::string distance_field(const DistanceResult& d) {
    std::string status = d.status == DistanceStatus::exact      ? "exact"
                         : d.status == DistanceStatus::timed_out ? "timed-out"
                                                                 : "skipped";
    std::string value = d.d ? std::to_string(*d.d) : "-";
    return status + ":" + value + ":" + to_token(d.method);
}

inline DistanceResult distance_from_field(std::string_view f) {
    auto p1 = f.find(':');
    auto p2 = f.rfind(':');
    if (p1 == std::string_view::npos || p2 == p1) throw std::invalid_argument("malformed distance field");
    std::string_view status = f.substr(0, p1), value = f.substr(p1 + 1, p2 - p1 - 1), method = f.substr(p2 + 1);
    DistanceResult d;
    if (status == "exact")
        d.status = DistanceStatus::exact;
    else if (status == "timed-out")
        d.status = DistanceStatus::timed_out;
    else if (status == "skipped")
        d.status = DistanceStatus::skipped;
    else
        throw std::invalid_argument("unknown distance status: " + std::string(status));
    if (d.status == DistanceStatus::exact) {
        if (value == "-") throw std::invalid_argument("exact distance missing its value");
        d.d = std::stoi(std::string(value));
    } else if (value != "-") {
        throw std::invalid_argument("non-exact distance carries a value");
    }
    if (method == "direct")
        d.method = DistanceMethod::direct;
    else if (method == "dual")
        d.method = DistanceMethod::dual_macwilliams;
    else
        throw std::invalid_argument("unknown distance method: " + std::string(method));
    return d;
}

inline std::string format_record(const CodeRecord& r) {
    std::string f;
    if (r.f_strings.empty())
        f = "-";
    else
        for (size_t i = 0; i < r.f_strings.size(); ++i) f += (i ? ";" : "") + r.f_strings[i];
    std::ostringstream out;
    out << r.n << '\t' << r.k1 << '\t' << r.k2 << '\t' << distance_field(r.d) << '\t' << to_token(r.construction)
        << '\t' << (r.m ? std::to_string(*r.m) : "-") << '\t' << (r.ell ? std::to_string(*r.ell) : "-") << '\t'
        << r.g_string << '\t' << f << '\t' << (r.gray_linear ? "linear" : "nonlinear") << '\t'
        << to_token(r.classification);
    return out.str();
}

inline CodeRecord parse_record(std::string_view line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        fields.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    if (fields.size() != 11) throw std::invalid_argument("record must have 11 tab-separated fields");
    CodeRecord r;
    r.n = std::stoi(fields[0]);
    r.k1 = std::stoi(fields[1]);
    r.k2 = std::stoi(fields[2]);
    r.d = distance_from_field(fields[3]);
    r.construction = construction_from_token(fields[4]);
    if (fields[5] != "-") r.m = std::stoi(fields[5]);
    if (fields[6] != "-") r.ell = std::stoi(fields[6]);
    r.g_string = fields[7];
    if (fields[8] != "-") {
        std::string cur;
        for (char ch : fields[8]) {
            if (ch == ';') {
                r.f_strings.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        r.f_strings.push_back(cur);
    }
    if (fields[9] == "linear")
        r.gray_linear = true;
    else if (fields[9] == "nonlinear")
        r.gray_linear = false;
    else
        throw std::invalid_argument("unknown linearity token: " + fields[9]);
    r.classification = classification_from_token(fields[10]);
    if (r.n < 0 || r.k1 < 0 || r.k2 < 0 || r.k1 + r.k2 > r.n)
        throw std::invalid_argument("record type parameters are inconsistent");
    return r;
}

}  // namespace z4
