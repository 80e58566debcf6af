#pragma once

#include <string>

#include <json.hpp>

#include "fgl/artin_mazur.hpp"
#include "fgl/charpoly.hpp"
#include "fgl/hypergeom.hpp"
#include "fgl/lfun.hpp"
#include "fgl/series.hpp"

namespace fgl::io {

using nlohmann::json;

/// Rationals travel as decimal strings ("-3", "5/7"); plain JSON integers are
/// accepted on input.
Rat parse_rational(const json& v);
std::string rational_string(const Rat& x);

/// {"b": [1, 1, ...]} with entries as integers or rational strings.
CoeffSeq parse_coeff_seq(const json& doc);

/// {"p": 3, "gamma": [-1, 3]} meaning P_3 = 1 - T + 3T^2.
EulerFactor parse_euler_factor(const json& doc);

/// {"vars": 2, "terms": [{"exp": [1,0], "coef": 1}, ...]}.
LaurentPoly parse_laurent(const json& doc);

/// {"gamma": {"15": 1, "1": 1, "3": -2, "5": -2}}.
WeightSystem parse_weights(const json& doc);

json residue_json(const Residue& r);
json height_json(const Height& h);
json charpoly_json(const CharPoly& cp);

json load_file(const std::string& path);

}  // namespace fgl::io
