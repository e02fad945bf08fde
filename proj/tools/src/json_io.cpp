#include "json_io.hpp"

#include <cmath>

namespace liealg::io {

json to_json(const Rational& q) { return q.str(); }

json to_json(const Scalar& s) {
    if (s.is_rational()) return s.a().str();
    return json{{"a", s.a().str()}, {"b", s.b().str()}, {"d", s.d()}};
}

json to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json algebra_to_json(const StructureTensor& t) {
    std::size_t n = t.dim();
    json brackets = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!t.pair_nonzero(i, j)) continue;
            json coeffs = json::array();
            for (std::size_t k = 0; k < n; ++k) coeffs.push_back(to_json(t.coeff(i, j, k)));
            brackets.push_back(json{{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
        }
    return json{{"dim", n}, {"brackets", std::move(brackets)}};
}

json label_params(const ClassLabel& l) {
    json p = json::object();
    switch (l.family) {
        case Family::G3_2_1:
            p["lambda"] = to_json(l.lambda);
            p["lambda_inv"] = to_json(l.lambda.inverse());
            p["j"] = to_json(l.key);
            break;
        case Family::G3_2_3: {
            int o = l.orientation < 0 ? -1 : 1;
            p["j"] = to_json(l.key);
            p["orientation"] = o;
            // display only: φ with 4cos²φ = j
            p["phi"] = std::acos(o * std::sqrt(Scalar(l.key).to_double()) / 2);
            break;
        }
        case Family::G4_2_3: p["lambda"] = to_json(l.lambda); break;
        case Family::G5p2k_2:
        case Family::G6p2k_2_1:
        case Family::G6p2k_2_2: p["k"] = l.k; break;
        case Family::AffR_plus_Heis: p["m"] = l.m; break;
        default: break;
    }
    return p;
}

json label_to_json(const ClassLabel& l) {
    json out{{"family", family_name(l.family)}, {"params", label_params(l)}, {"abelian_ext", l.d}};
    if (l.family != Family::TwoStepNilpotent_OutOfScope) out["dim"] = l.dim();
    out["decomposable"] = l.decomposable();
    return out;
}

Rational rational_from_json(const json& j) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("expected a rational string \"p/q\", got " + j.dump());
}

Scalar scalar_from_json(const json& j) {
    if (!j.is_object()) return Scalar(rational_from_json(j));
    if (!j.contains("a") || !j.contains("b") || !j.contains("d") || !j["d"].is_number_integer())
        throw InputError("quadratic scalar needs \"a\", \"b\" and integer \"d\"");
    try {
        return Scalar(rational_from_json(j["a"]), rational_from_json(j["b"]), j["d"].get<long long>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Mat matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty array of rows");
    std::size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) throw InputError("matrix rows must be non-empty arrays");
        if (cols && row.size() != cols) throw InputError("matrix rows have different lengths");
        cols = row.size();
    }
    Mat m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
    return m;
}

StructureTensor algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError("algebra needs an integer \"dim\"");
    long long n = j["dim"].get<long long>();
    if (n < 1 || n > 64) throw InputError("dim must lie in [1, 64]");
    StructureTensor t(static_cast<std::size_t>(n));
    if (!j.contains("brackets")) return t;
    if (!j["brackets"].is_array()) throw InputError("\"brackets\" must be an array");
    std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
    for (const auto& b : j["brackets"]) {
        if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs") || !b["i"].is_number_integer() ||
            !b["j"].is_number_integer() || !b["coeffs"].is_array())
            throw InputError("bracket entries need integer \"i\", \"j\" and a \"coeffs\" array");
        long long i = b["i"].get<long long>(), k = b["j"].get<long long>();
        if (i < 1 || k > n || i >= k) throw InputError("bracket indices must satisfy 1 <= i < j <= dim");
        if (b["coeffs"].size() != static_cast<std::size_t>(n)) throw InputError("coeffs must have length dim");
        auto slot = static_cast<std::size_t>((i - 1) * n + (k - 1));
        if (seen[slot]++) throw InputError("bracket [" + std::to_string(i) + ", " + std::to_string(k) + "] given twice");
        Vec v;
        for (const auto& c : b["coeffs"]) v.push_back(scalar_from_json(c));
        t.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1), v);
    }
    return t;
}

namespace {

int int_param(const json& p, const char* key, int fallback) {
    if (!p.contains(key)) return fallback;
    if (!p[key].is_number_integer()) throw InputError(std::string("param \"") + key + "\" must be an integer");
    return p[key].get<int>();
}

const json& require(const json& p, const char* key) {
    if (!p.contains(key)) throw InputError(std::string("missing param \"") + key + "\"");
    return p[key];
}

}  // namespace

ClassLabel label_from_json(const std::string& family, const json& params, int d) {
    auto f = family_from_name(family);
    if (!f) throw InputError("unknown family " + family);
    if (!params.is_object()) throw InputError("params must be a JSON object");
    switch (*f) {
        case Family::G3_2_1: return ClassLabel::g3_2_1(scalar_from_json(require(params, "lambda")), d);
        case Family::G3_2_3: {
            ClassLabel l = ClassLabel::g3_2_3(rational_from_json(require(params, "j")), d);
            l.orientation = int_param(params, "orientation", 1);
            return l;
        }
        case Family::G4_2_3: {
            Scalar lam = scalar_from_json(require(params, "lambda"));
            if (!lam.is_rational()) throw InputError("G4_2_3 needs a rational lambda");
            return ClassLabel::g4_2_3(lam.rational(), d);
        }
        case Family::G5p2k_2:
        case Family::G6p2k_2_1:
        case Family::G6p2k_2_2: return ClassLabel::with_k(*f, int_param(params, "k", 0), d);
        case Family::AffR_plus_Heis: return ClassLabel::heis(int_param(params, "m", 1), d);
        default: return ClassLabel::simple(*f, d);
    }
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

}  // namespace liealg::io
