#include "mfock/serialize.hpp"

#include "mfock/error.hpp"

namespace mfock {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_array()) throw ParseError(std::string("field '") + name + "' must be a list");
    return v;
}

int int_value(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<Rational> rational_list(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a list of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(decode_rational(x));
    return out;
}

Json rational_list(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(encode(x));
    return out;
}

}  // namespace

Json encode(const Rational& r) { return r.to_string(); }

Json encode(const PiecewisePolynomial& f) {
    Json pieces = Json::array();
    for (const auto& p : f.pieces()) pieces.push_back(rational_list(p.coefficients()));
    return Json{{"breakpoints", rational_list(f.breakpoints())}, {"pieces", std::move(pieces)}};
}

Json encode(const JacobiData& nu) {
    return Json{{"b", rational_list(nu.b_values())}, {"a", rational_list(nu.a_values())}, {"depth", nu.depth()}};
}

Json encode(const StratifiedFunction& f) {
    Json out = Json::array();
    for (const auto& [key, terms] : f.components()) {
        Json jt = Json::array();
        for (const auto& t : terms) {
            Json factors = Json::array();
            for (const auto& h : t.factors) factors.push_back(encode(h));
            jt.push_back(Json{{"coeff", encode(t.coefficient)}, {"factors", std::move(factors)}});
        }
        out.push_back(Json{{"composition", key.parts()}, {"terms", std::move(jt)}});
    }
    return out;
}

Json encode(const FockVector& v) {
    Json graded = Json::array();
    for (const auto& [deg, f] : v.graded()) graded.push_back(Json{{"degree", deg}, {"function", encode(f)}});
    return Json{{"scalar", encode(v.scalar())}, {"graded", std::move(graded)}};
}

Json encode(const MeixnerReport& report) {
    Json degrees = Json::array();
    for (const auto& d : report.degrees) {
        Json row{{"degree", d.degree}, {"status", d.pass ? "pass" : "fail"}, {"residual_norm", encode(d.residual_norm)}};
        if (!d.witness.empty()) row["witness"] = d.witness;
        degrees.push_back(std::move(row));
    }
    return Json{{"meixner", report.meixner},
                {"lambda", encode(report.lambda)},
                {"eta", encode(report.eta)},
                {"degrees", std::move(degrees)}};
}

Rational decode_rational(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a string \"p/q\" or an integer");
}

PiecewisePolynomial decode_piecewise(const Json& j) {
    std::vector<Rational> bps = rational_list(array_field(j, "breakpoints"));
    std::vector<Polynomial> pieces;
    for (const auto& p : array_field(j, "pieces")) pieces.emplace_back(rational_list(p));
    return PiecewisePolynomial(std::move(bps), std::move(pieces));
}

JacobiData decode_jacobi(const Json& j) {
    const int depth = int_value(field(j, "depth"), "depth");
    if (depth < 1) throw ParseError("depth must be >= 1");
    if (j.contains("lambda") || j.contains("eta")) {
        return JacobiData::constant(decode_rational(field(j, "lambda")), decode_rational(field(j, "eta")), depth);
    }
    std::vector<Rational> b = rational_list(array_field(j, "b"));
    std::vector<Rational> a = rational_list(array_field(j, "a"));
    if (static_cast<int>(b.size()) != depth) throw ParseError("length of 'b' must equal depth");
    return JacobiData(std::move(b), std::move(a));
}

StratifiedFunction decode_stratified(const Json& j, int degree) {
    if (!j.is_array()) throw ParseError("stratified function must be a list of strata");
    StratifiedFunction out(degree);
    for (const auto& stratum : j) {
        const Json& parts = array_field(stratum, "composition");
        std::vector<int> ls;
        for (const auto& l : parts) ls.push_back(int_value(l, "composition part"));
        const Composition key(std::move(ls));
        if (key.degree() != degree) throw DomainError("composition degree does not match stratum degree");
        for (const auto& t : array_field(stratum, "terms")) {
            std::vector<PiecewisePolynomial> factors;
            for (const auto& h : array_field(t, "factors")) factors.push_back(decode_piecewise(h));
            out.add_term(key, decode_rational(field(t, "coeff")), std::move(factors));
        }
    }
    return out;
}

FockVector decode_fock(const Json& j) {
    FockVector v(decode_rational(field(j, "scalar")));
    for (const auto& g : array_field(j, "graded")) {
        v.add(decode_stratified(field(g, "function"), int_value(field(g, "degree"), "degree")));
    }
    return v;
}

std::map<std::string, PiecewisePolynomial> decode_function_table(const Json& j) {
    if (!j.is_object()) throw ParseError("function table must be an object of named functions");
    std::map<std::string, PiecewisePolynomial> out;
    for (const auto& [name, value] : j.items()) {
        if (name.empty() || name.find(',') != std::string::npos) {
            throw ParseError("invalid function name '" + name + "'");
        }
        out.emplace(name, decode_piecewise(value));
    }
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mfock
