/*
   Copyright 2026 The wopineq Authors

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

#include "wop/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "wop/errors.hpp"

namespace wop {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_from(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return Rational::from_double(j.get<double>());
    throw InvalidInput("expected a rational string or a number, got " + j.dump());
}

double double_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return Rational::parse(j.get<std::string>()).to_double();
    throw InvalidInput("expected a number, got " + j.dump());
}

Interval interval_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("\"interval\" must be a two-element array");
    return Interval(rational_from(j[0]), rational_from(j[1]));
}

json rational_array(std::span<const Rational> xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json config_json(const BasisConfig& cfg) {
    return json{{"interval", json::array({cfg.interval.a().str(), cfg.interval.b().str()})},
                {"m", cfg.weight},
                {"N", cfg.degree},
                {"orientation", std::string(to_string(cfg.orientation))}};
}

double param(const json& params, const char* key, double fallback) {
    return params.contains(key) ? double_from(params.at(key)) : fallback;
}

Signal builtin_signal(const json& j) {
    const std::string name = j.at("name").get<std::string>();
    const Interval iv = interval_from(j.at("interval"));
    const json params = j.value("params", json::object());
    if (name == "sin") {
        const double amp = param(params, "amplitude", 1.0);
        const double freq = param(params, "frequency", 1.0);
        const double phase = param(params, "phase", 0.0);
        return Signal(BlackBoxSignal{iv, 1,
                                     [=](double s) { return std::vector<double>{amp * std::sin(freq * s + phase)}; },
                                     [=](double s) {
                                         return std::vector<double>{amp * freq * std::cos(freq * s + phase)};
                                     }});
    }
    if (name == "exp") {
        const double amp = param(params, "amplitude", 1.0);
        const double rate = param(params, "rate", 1.0);
        return Signal(BlackBoxSignal{iv, 1, [=](double s) { return std::vector<double>{amp * std::exp(rate * s)}; },
                                     [=](double s) {
                                         return std::vector<double>{amp * rate * std::exp(rate * s)};
                                     }});
    }
    if (name == "poly-float") {
        if (!params.contains("coefficients") || !params.at("coefficients").is_array() ||
            params.at("coefficients").empty())
            throw InvalidInput("poly-float needs params.coefficients as a non-empty array of arrays");
        std::vector<std::vector<double>> coeffs;
        for (const auto& comp : params.at("coefficients")) {
            std::vector<double> c;
            for (const auto& x : comp) c.push_back(double_from(x));
            coeffs.push_back(std::move(c));
        }
        const double a = iv.a().to_double();
        const auto eval = [coeffs, a](double s) {
            std::vector<double> out;
            for (const auto& c : coeffs) {
                double acc = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * (s - a) + *it;
                out.push_back(acc);
            }
            return out;
        };
        const auto deriv = [coeffs, a](double s) {
            std::vector<double> out;
            for (const auto& c : coeffs) {
                double acc = 0.0;
                for (std::size_t k = c.size(); k-- > 1;) acc = acc * (s - a) + static_cast<double>(k) * c[k];
                out.push_back(acc);
            }
            return out;
        };
        return Signal(BlackBoxSignal{iv, coeffs.size(), eval, deriv});
    }
    throw InvalidInput("unknown builtin signal \"" + name + "\"");
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string to_json_string(const PolynomialSignal& w) {
    json comps = json::array();
    for (const auto& c : w.components()) comps.push_back(rational_array(c.coefficients()));
    const json j{{"kind", "polynomial"},
                 {"interval", json::array({w.interval().a().str(), w.interval().b().str()})},
                 {"anchor", std::string(to_string(w.component(0).anchor()))},
                 {"components", std::move(comps)}};
    return j.dump();
}

Signal parse_signal_json(std::string_view text) {
    const json j = parse_json(text);
    try {
        if (!j.is_object() || !j.contains("kind")) throw InvalidInput("signal JSON needs a \"kind\"");
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "builtin") return builtin_signal(j);
        if (kind != "polynomial") throw InvalidInput("unknown signal kind \"" + kind + "\"");

        const Interval iv = interval_from(j.at("interval"));
        Anchor anchor = Anchor::left;
        if (j.contains("anchor")) {
            const std::string a = j.at("anchor").get<std::string>();
            if (a == "right")
                anchor = Anchor::right;
            else if (a != "left")
                throw InvalidInput("anchor must be \"left\" or \"right\"");
        }
        const json& comps = j.at("components");
        if (!comps.is_array() || comps.empty()) throw InvalidInput("\"components\" must be a non-empty array");
        std::vector<ShiftedPolynomial> polys;
        for (const auto& comp : comps) {
            if (!comp.is_array()) throw InvalidInput("each component must be an array of coefficients");
            std::vector<Rational> c;
            for (const auto& x : comp) {
                if (!x.is_string() && !x.is_number_integer())
                    throw InvalidInput("polynomial coefficients must be rational strings");
                c.push_back(rational_from(x));
            }
            polys.emplace_back(anchor, std::move(c));
        }
        return Signal(PolynomialSignal(iv, std::move(polys)));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("signal JSON: ") + e.what());
    }
}

std::string to_json_string(const RationalMatrix& m) { return matrix_json(m).dump(); }

ParsedMatrix parse_matrix_json(std::string_view text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("R")) j = j.at("R");
    if (!j.is_array() || j.empty()) throw InvalidInput("matrix JSON must be a non-empty array of rows");
    const std::size_t n = j.size();
    bool exact = true;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j[0].size()) throw InvalidInput("matrix rows must be arrays of equal length");
        for (const auto& x : row) {
            if (x.is_number_float()) exact = false;
            else if (!x.is_string() && !x.is_number_integer())
                throw InvalidInput("matrix entries must be rational strings or numbers");
        }
    }
    const std::size_t cols = j[0].size();
    ParsedMatrix out{std::nullopt, RealMatrix(n, cols)};
    if (exact) {
        RationalMatrix m(n, cols);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from(j[r][c]);
        out.real = to_real(m);
        out.exact = std::move(m);
    } else {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < cols; ++c) out.real(r, c) = double_from(j[r][c]);
    }
    return out;
}

std::string basis_to_json(const WopBasis& basis, const BoundMatrices& bm) {
    json polys = json::array();
    for (const auto& p : basis.polys()) polys.push_back(rational_array(p.coefficients()));
    const json j{{"config", config_json(basis.config())},
                 {"polys", std::move(polys)},
                 {"chi", rational_array(basis.chi())},
                 {"G", matrix_json(basis.G())},
                 {"Ginv", matrix_json(bm.Ginv)},
                 {"LambdaInv", matrix_json(bm.LambdaInv)},
                 {"Xi", matrix_json(bm.Xi)}};
    return j.dump();
}

std::string bound_matrices_to_json(const WopBasis& basis, const BoundMatrices& bm) {
    const json j{{"config", config_json(basis.config())},
                 {"Ginv", matrix_json(bm.Ginv)},
                 {"LambdaInv", matrix_json(bm.LambdaInv)},
                 {"Xi", matrix_json(bm.Xi)}};
    return j.dump();
}

std::string basis_to_csv(const WopBasis& basis, const BoundMatrices& bm) {
    const std::size_t n = basis.degree() + 1;
    std::ostringstream os;
    os << "matrix";
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) os << ",(" << i << "," << j << ")";
    os << "\n";
    const auto row = [&](const char* name, const RationalMatrix& m) {
        os << name;
        for (const auto& x : m.entries()) os << "," << x.str();
        os << "\n";
    };
    row("G", basis.G());
    row("Ginv", bm.Ginv);
    row("LambdaInv", bm.LambdaInv);
    row("Xi", bm.Xi);
    return os.str();
}

namespace {

std::string latex_rational(const Rational& x) {
    if (x.is_integer()) return x.str();
    const mpq_class& q = x.mpq();
    const mpz_class num = abs(q.get_num());
    std::string s = x.sign() < 0 ? "-" : "";
    return s + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string latex_matrix(const RationalMatrix& m) {
    std::ostringstream os;
    os << "\\begin{bmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " & ";
            os << latex_rational(m(i, j));
        }
        os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{bmatrix}";
    return os.str();
}

std::string basis_to_latex(const WopBasis& basis, const BoundMatrices& bm) {
    const BasisConfig& cfg = basis.config();
    std::ostringstream os;
    os << "% N = " << cfg.degree << ", m = " << cfg.weight << ", [a, b] = [" << cfg.interval.a() << ", "
       << cfg.interval.b() << "], orientation " << to_string(cfg.orientation) << "\n";
    os << "G^{-1} = " << latex_matrix(bm.Ginv) << "\n\n";
    os << "\\Lambda^{-1} = " << latex_matrix(bm.LambdaInv) << "\n\n";
    os << "\\Xi = " << latex_matrix(bm.Xi) << "\n";
    return os.str();
}

namespace {

template <class T>
json bound_json(const BoundResult<T>& r) {
    const auto val = [](const T& x) -> json {
        if constexpr (std::is_same_v<T, Rational>)
            return x.str();
        else
            return x;
    };
    return json{{"bound", val(r.bound)},
                {"energy", val(r.energy)},
                {"gap", val(r.gap)},
                {"N", r.degree},
                {"m", r.weight},
                {"interval", json::array({r.interval.a().str(), r.interval.b().str()})},
                {"orientation", std::string(to_string(r.orientation))},
                {"path", std::string(to_string(r.path))}};
}

}  // namespace

std::string to_json_string(const ExactBound& r) { return bound_json(r).dump(); }
std::string to_json_string(const RealBound& r) { return bound_json(r).dump(); }

std::string to_json_string(const CrosscheckReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"trial", f.trial},
                                {"m", f.weight},
                                {"N", f.degree},
                                {"detail", f.detail},
                                {"closed_form", f.closed_form},
                                {"generic", f.generic},
                                {"signal", json::parse(f.signal_json)},
                                {"R", json::parse(f.R_json)}});
    json j{{"id", std::string(to_string(r.id))},
           {"trials", r.trials},
           {"exact_matches", r.exact_matches},
           {"max_abs_discrepancy", r.max_abs_discrepancy.str()},
           {"failures", std::move(failures)}};
    if (r.id == CorollaryId::C10) j["psi_form"] = r.psi == PsiForm::derived ? "derived" : "printed";
    return j.dump();
}

std::string to_json_string(const DominanceReport& r) {
    const json j{{"stronger", std::string(to_string(r.stronger))},
                 {"weaker", std::string(to_string(r.weaker))},
                 {"trials", r.trials},
                 {"violations", r.violations},
                 {"formula_mismatches", r.formula_mismatches},
                 {"min_difference", r.min_difference}};
    return j.dump();
}

}  // namespace wop
