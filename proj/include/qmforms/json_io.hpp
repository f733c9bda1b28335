#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qmforms/gauss_manin.hpp"
#include "qmforms/qmform.hpp"
#include "qmforms/qseries.hpp"

namespace qmf {

using Json = nlohmann::json;

// ["1/1", "-24/1", ...]
Json to_json(const QSeries& s);
// Accepts rational strings and integer numbers; ParseError otherwise.
QSeries series_from_json(const Json& j);

// {"weight": m, "terms": [{"a": .., "b": .., "c": .., "coeff": "num/den"}]}
Json to_json(const QMForm& f);
QMForm form_from_json(const Json& j);

// [{"exponents": [e0, e1, e2, e3], "coeff": "num/den"}]
Json to_json(const TPoly& p);

// [re, im]
Json to_json(std::complex<double> z);

// Terms such as "3/4*g1^2*g2 - g3", "g2/12" or "1", read as a form of the
// given weight. ParseError on bad syntax, InvariantViolation if the terms do
// not all have that weight.
QMForm parse_form(std::string_view text, int weight);

// "1.5", "-2", "1+2i", "0.5-3i", "2i" or "re,im".
std::complex<double> parse_complex(std::string_view text);

}  // namespace qmf
