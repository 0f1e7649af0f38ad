#include "finsler/algebra_io.hpp"

#include "finsler/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace finsler {

using nlohmann::json;

namespace {

Rational rational_from_json_number(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return rational_from_double(v.get<double>());
    throw ValidationError("expected a number in phi_poly");
}

PhiFamily parse_metric(const json& m) {
    if (m.is_string()) {
        const std::string name = m.get<std::string>();
        if (name == "square") return make_phi(PhiKind::Square);
        if (name == "randers-square") return make_phi(PhiKind::RandersSquare);
        throw ValidationError("metric must be \"square\", \"randers-square\" or {\"phi_poly\": [...]}, got \"" +
                              name + "\"");
    }
    if (m.is_object() && m.contains("phi_poly")) {
        const json& arr = m.at("phi_poly");
        if (!arr.is_array() || arr.empty()) throw ValidationError("phi_poly must be a nonempty array");
        std::vector<Rational> coeffs;
        for (const auto& v : arr) coeffs.push_back(rational_from_json_number(v));
        return make_phi(PhiKind::Custom, coeffs);
    }
    throw ValidationError("unrecognized metric specification");
}

AlphaRicciMode parse_alpha_mode(const json& j, int n) {
    if (j.is_null()) return AlphaRicciMode::lie_group();
    if (!j.is_object() || !j.contains("mode")) throw ValidationError("alpha_ricci needs a \"mode\" field");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "lie-group") return AlphaRicciMode::lie_group();
    if (mode == "explicit") {
        if (!j.contains("matrix")) throw ValidationError("explicit alpha_ricci needs a \"matrix\" field");
        const json& rows = j.at("matrix");
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw ValidationError("alpha_ricci matrix must be " + std::to_string(n) + "x" + std::to_string(n));
        std::vector<double> m;
        m.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ValidationError("alpha_ricci matrix must be " + std::to_string(n) + "x" + std::to_string(n));
            for (const auto& v : row) m.push_back(v.get<double>());
        }
        return AlphaRicciMode::explicit_matrix(std::move(m));
    }
    throw ValidationError("alpha_ricci mode must be \"lie-group\" or \"explicit\"");
}

} // namespace

ProblemSpec parse_algebra_json(const json& j, const std::string& origin) {
    if (!j.is_object()) throw ValidationError(origin + ": top level must be an object");
    for (const char* field : {"dimension", "c", "metric"})
        if (!j.contains(field)) throw ValidationError(origin + ": missing field \"" + field + "\"");

    const int n = j.at("dimension").get<int>();
    if (n < 2) throw ValidationError(origin + ": dimension must be >= 2");
    const double c = j.at("c").get<double>();

    PhiFamily phi = parse_metric(j.at("metric"));

    LieAlgebra alg(n, c);
    if (j.contains("brackets")) {
        const json& brs = j.at("brackets");
        if (!brs.is_array()) throw ValidationError(origin + ": brackets must be an array");
        for (const auto& br : brs) {
            if (!br.contains("i") || !br.contains("j") || !br.contains("coeffs"))
                throw ValidationError(origin + ": bracket entries need i, j, coeffs");
            const int i = br.at("i").get<int>();
            const int jj = br.at("j").get<int>();
            if (i < 1 || jj < 1 || i > n || jj > n)
                throw ValidationError(origin + ": bracket indices out of range 1.." + std::to_string(n));
            if (i >= jj)
                throw ValidationError(origin + ": bracket entries must have i < j (found i=" +
                                      std::to_string(i) + ", j=" + std::to_string(jj) + ")");
            for (const auto& [key, val] : br.at("coeffs").items()) {
                int m = 0;
                try {
                    m = std::stoi(key);
                } catch (...) {
                    throw ValidationError(origin + ": coeffs keys must be basis indices, got \"" + key + "\"");
                }
                if (m < 1 || m > n)
                    throw ValidationError(origin + ": coeffs index out of range 1.." + std::to_string(n));
                const double v = val.get<double>();
                alg.cc(i - 1, jj - 1, m - 1) += v;
                alg.cc(jj - 1, i - 1, m - 1) -= v; // antisymmetric completion
            }
        }
    }

    ProblemSpec spec;
    spec.algebra = validate_algebra(std::move(alg), phi);
    spec.alpha_mode = parse_alpha_mode(j.contains("alpha_ricci") ? j.at("alpha_ricci") : json(), n);
    spec.phi = std::move(phi);
    return spec;
}

ProblemSpec parse_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return parse_algebra_json(j, path.string());
}

json serialize_algebra(const ProblemSpec& spec) {
    const LieAlgebra& alg = spec.algebra;
    json j;
    j["dimension"] = alg.n;
    j["c"] = alg.c;
    switch (spec.phi.kind) {
    case PhiKind::Square: j["metric"] = "square"; break;
    case PhiKind::RandersSquare: j["metric"] = "randers-square"; break;
    default: {
        json coeffs = json::array();
        for (const auto& r : spec.phi.coeffs) coeffs.push_back(to_double(Rational(r)));
        j["metric"] = json{{"phi_poly", coeffs}};
    }
    }
    json brackets = json::array();
    for (int i = 0; i < alg.n; ++i)
        for (int jj = i + 1; jj < alg.n; ++jj) {
            json coeffs = json::object();
            for (int m = 0; m < alg.n; ++m)
                if (alg.cc(i, jj, m) != 0.0) coeffs[std::to_string(m + 1)] = alg.cc(i, jj, m);
            if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
        }
    j["brackets"] = brackets;
    if (spec.alpha_mode.kind == AlphaRicciMode::Kind::LieGroup) {
        j["alpha_ricci"] = {{"mode", "lie-group"}};
    } else {
        json rows = json::array();
        for (int i = 0; i < alg.n; ++i) {
            json row = json::array();
            for (int k = 0; k < alg.n; ++k)
                row.push_back(spec.alpha_mode.matrix[static_cast<std::size_t>(i) * alg.n + k]);
            rows.push_back(row);
        }
        j["alpha_ricci"] = {{"mode", "explicit"}, {"matrix", rows}};
    }
    return j;
}

} // namespace finsler
