#include "fgl/io.hpp"

#include <fstream>
#include <sstream>

namespace fgl::io {

Rat parse_rational(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            const auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(Int(s));
            return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }
    throw std::invalid_argument("rational must be an integer or a string");
}

std::string rational_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

CoeffSeq parse_coeff_seq(const json& doc) {
    if (!doc.contains("b") || !doc["b"].is_array())
        throw std::invalid_argument("coefficient file needs an array field \"b\"");
    std::vector<Rat> b;
    b.reserve(doc["b"].size());
    for (const auto& v : doc["b"]) b.push_back(parse_rational(v));
    return CoeffSeq(std::move(b));
}

EulerFactor parse_euler_factor(const json& doc) {
    if (!doc.contains("p") || !doc["p"].is_number_integer())
        throw std::invalid_argument("Euler factor needs an integer field \"p\"");
    if (!doc.contains("gamma") || !doc["gamma"].is_array())
        throw std::invalid_argument("Euler factor needs an array field \"gamma\"");
    Prime p(doc["p"].get<std::int64_t>());
    std::vector<Int> gamma;
    for (const auto& v : doc["gamma"]) {
        const Rat r = parse_rational(v);
        if (denominator(r) != 1) throw std::invalid_argument("gamma entries must be integers");
        gamma.push_back(numerator(r));
    }
    return EulerFactor{p, std::move(gamma)};
}

LaurentPoly parse_laurent(const json& doc) {
    if (!doc.contains("vars") || !doc.contains("terms"))
        throw std::invalid_argument("Laurent file needs \"vars\" and \"terms\"");
    const int vars = doc["vars"].get<int>();
    std::map<std::vector<int>, Int> terms;
    for (const auto& t : doc["terms"]) {
        std::vector<int> exp = t.at("exp").get<std::vector<int>>();
        const Rat c = parse_rational(t.at("coef"));
        if (denominator(c) != 1) throw std::invalid_argument("coefficients must be integers");
        terms[std::move(exp)] += numerator(c);
    }
    return LaurentPoly(vars, std::move(terms));
}

WeightSystem parse_weights(const json& doc) {
    if (!doc.contains("gamma") || !doc["gamma"].is_object())
        throw std::invalid_argument("weight file needs an object field \"gamma\"");
    std::map<std::int64_t, std::int64_t> gamma;
    for (const auto& [key, v] : doc["gamma"].items())
        gamma[std::stoll(key)] = v.get<std::int64_t>();
    return WeightSystem(std::move(gamma));
}

json residue_json(const Residue& r) {
    return json{{"value", r.value().str()},
                {"prime", r.prime().value()},
                {"precision", r.precision()}};
}

json height_json(const Height& h) {
    switch (h.kind) {
        case Height::Kind::finite: return json{{"kind", "finite"}, {"value", h.value}};
        case Height::Kind::infinite_up_to:
            return json{{"kind", "infinite-up-to-bound"}, {"bound", h.value}};
        case Height::Kind::infinite: return json{{"kind", "infinite"}};
    }
    return {};
}

json charpoly_json(const CharPoly& cp) {
    json alphas = json::array();
    for (const auto& a : cp.alphas) alphas.push_back(residue_json(a));
    json out{{"prime", cp.prime.value()},
             {"height", height_json(cp.height)},
             {"precision", cp.precision},
             {"alphas", alphas}};
    if (!cp.monic_associate.empty()) {
        json monic = json::array();
        for (const auto& c : cp.monic_associate) monic.push_back(residue_json(c));
        out["monic_associate"] = monic;
    }
    return out;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return doc;
}

}  // namespace fgl::io
