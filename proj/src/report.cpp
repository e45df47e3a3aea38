/*
   Copyright 2026 hermw authors

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

#include "hermw/report.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hermw {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, const std::string& what) {
    token = trim(token);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("malformed index set: expected an integer for " + what +
                                    ", got '" + std::string(token) + "'");
    return value;
}

}  // namespace

IndexSet parse_set(const std::string& text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("malformed index set: empty input");

    if (s.front() == 'S') {
        const auto open = s.find('(');
        const auto comma = s.find(',');
        const auto close = s.find(')');
        if (open != 1 || comma == std::string_view::npos || close != s.size() - 1 ||
            !(open < comma && comma < close))
            throw std::invalid_argument("malformed segment: expected S(p,q)");
        const int p = parse_int(s.substr(open + 1, comma - open - 1), "p");
        const int q = parse_int(s.substr(comma + 1, close - comma - 1), "q");
        if (p < 1) throw std::invalid_argument("segment start must be positive");
        if (q < 0) throw std::invalid_argument("segment length must be non-negative");
        return segment(p, q);
    }

    std::vector<int> elements;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string_view::npos ? s.size() : comma;
        elements.push_back(parse_int(s.substr(start, end - start), "an element"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IndexSet(std::move(elements));  // rejects duplicates and non-positive entries
}

Json to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
    return Json{{"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
}

IntPolynomial polynomial_from_json(const Json& j) {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
    IntPolynomial p(std::move(coeffs));
    if (p.degree() != j.at("degree").get<int>())
        throw std::invalid_argument("polynomial JSON degree does not match coefficients");
    return p;
}

Json to_json(const IndexSet& f) {
    Json arr = Json::array();
    for (int e : f) arr.push_back(e);
    return arr;
}

IndexSet index_set_from_json(const Json& j) {
    std::vector<int> elements;
    for (const auto& e : j) elements.push_back(e.get<int>());
    return IndexSet(std::move(elements));
}

Json to_json(const IdentityVerdict& v) {
    return Json{{"name", v.name},
                {"instance", v.instance},
                {"holds_exactly", v.holds_exactly},
                {"sign_flip_detected", v.sign_flip_detected},
                {"discrepancy", to_json(v.discrepancy)},
                {"discrepancy_imag", to_json(v.discrepancy_imag)}};
}

Json to_json(const ZeroCertificate& c) {
    return Json{{"set", to_json(c.set)},
                {"degree", c.degree},
                {"squarefree", c.squarefree},
                {"gcd_with_derivative", to_json(c.gcd_with_derivative)},
                {"origin_multiplicity", c.origin_multiplicity},
                {"real_root_count", c.real_root_count},
                {"veselov_ok", c.veselov_ok}};
}

Json to_json(const SegmentCertificate& c) {
    return Json{{"p", c.p},
                {"q", c.q},
                {"a1_coprime", c.a1_coprime},
                {"a2_squarefree", c.a2_squarefree},
                {"a3_coprime", c.a3_coprime},
                {"resultant_a1", c.resultant_a1.get_str()},
                {"resultant_a3", c.resultant_a3.get_str()},
                {"gcd_a1", to_json(c.gcd_a1)},
                {"gcd_a3", to_json(c.gcd_a3)},
                {"gcd_with_derivative", to_json(c.gcd_with_derivative)}};
}

Json to_json(const SegmentRootCount& c) {
    return Json{{"n", c.n},
                {"k", c.k},
                {"expected_real_roots", c.expected},
                {"actual_real_roots", c.actual},
                {"degree", c.degree},
                {"expected_degree", c.expected_degree},
                {"squarefree", c.squarefree}};
}

Json to_json(const OrthogonalityResult& r) {
    return Json{{"orthogonal", r.orthogonal}, {"integral", r.integral},
                {"norm1", r.norm1},           {"norm2", r.norm2},
                {"relative", r.relative},     {"tolerance", r.tolerance},
                {"radius", r.radius},         {"tail_bound", r.tail_bound}};
}

Json to_json(const std::complex<double>& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json make_report(const std::string& command, Json inputs, Json results,
                 const std::vector<double>& per_item_seconds) {
    const double total =
        std::accumulate(per_item_seconds.begin(), per_item_seconds.end(), 0.0);
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"timing", Json{{"total_seconds", total}, {"per_item_seconds", per_item_seconds}}}};
}

std::string root_cloud_csv(const std::vector<std::complex<double>>& roots) {
    std::ostringstream os;
    os << "re,im\n";
    for (const auto& z : roots) {
        os << Json(z.real()).dump() << "," << Json(z.imag()).dump() << "\n";
    }
    return os.str();
}

}  // namespace hermw
