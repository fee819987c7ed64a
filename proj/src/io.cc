// Copyright 2026 The phaseret Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phaseret/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "phaseret/errors.hpp"

namespace phaseret::io {
namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw InvalidArgument(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

std::int64_t int_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

double number_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number()) throw InvalidArgument(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::vector<Complex> complex_array(const Json& v, const char* name) {
  if (!v.is_array()) throw InvalidArgument(std::string("field '") + name + "' must be an array");
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const Json& z : v) out.push_back(complex_from_json(z));
  return out;
}

Json complex_array_json(const std::vector<Complex>& values) {
  Json arr = Json::array();
  for (const Complex& z : values) arr.push_back(complex_to_json(z));
  return arr;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& doc) {
  if (doc.is_number()) return Complex(doc.get<double>(), 0.0);
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number() || !doc[1].is_number()) {
    throw InvalidArgument("complex numbers are written as [re, im]");
  }
  return Complex(doc[0].get<double>(), doc[1].get<double>());
}

Json to_json(const GridSignal& signal) {
  return Json{{"n", signal.size()},
              {"extent", signal.grid().extent()},
              {"values", complex_array_json(signal.values())}};
}

GridSignal signal_from_json(const Json& doc) {
  const Grid grid(int_field(doc, "n"), number_field(doc, "extent"));
  std::vector<Complex> values = complex_array(field(doc, "values"), "values");
  if (values.size() != grid.size()) {
    throw InvalidArgument("signal has " + std::to_string(values.size()) + " values but n = " +
                          std::to_string(grid.size()));
  }
  return GridSignal(grid, std::move(values));
}

Json to_json(const MaskKind& mask) {
  Json doc{{"kind", mask_tag(mask)}};
  if (const auto* s = std::get_if<mask::GaussSine>(&mask)) {
    if (s->freq.exact) {
      doc["a"] = s->freq.exact->to_string();
    } else {
      doc["a"] = s->freq.value;
    }
  } else if (const auto* c = std::get_if<mask::Custom>(&mask)) {
    doc["values"] = complex_array_json(c->values);
  }
  return doc;
}

MaskKind mask_from_json(const Json& doc) {
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw InvalidArgument("mask kind must be a string");
  const std::string tag = kind.get<std::string>();
  if (tag == "gauss") return mask::Gauss{};
  if (tag == "gauss_deriv") return mask::GaussDeriv{};
  if (tag == "gauss_affine") return mask::GaussAffine{};
  if (tag == "gauss_sine") {
    const Json& a = field(doc, "a");
    if (a.is_string()) return mask::GaussSine{SineFrequency::from_rational(Rational::parse(a.get<std::string>()))};
    if (a.is_number()) return mask::GaussSine{SineFrequency::from_real(a.get<double>())};
    throw InvalidArgument("sine frequency must be \"p/q\" or a number");
  }
  if (tag == "custom") return mask::Custom{complex_array(field(doc, "values"), "values")};
  throw InvalidArgument("unknown mask kind '" + tag + "'");
}

Json to_json(const MeasurementRecord& record) {
  return Json{{"mask", to_json(record.mask())},
              {"n", record.size()},
              {"extent", record.grid().extent()},
              {"magnitudes", record.magnitudes()}};
}

MeasurementRecord record_from_json(const Json& doc) {
  const Grid grid(int_field(doc, "n"), number_field(doc, "extent"));
  const Json& mags = field(doc, "magnitudes");
  if (!mags.is_array()) throw InvalidArgument("field 'magnitudes' must be an array");
  std::vector<double> values;
  values.reserve(mags.size());
  for (const Json& v : mags) {
    if (!v.is_number()) throw InvalidArgument("magnitudes must be numbers");
    values.push_back(v.get<double>());
  }
  return MeasurementRecord(mask_from_json(field(doc, "mask")), grid, std::move(values));
}

std::string record_to_csv(const MeasurementRecord& record) {
  const Grid freq = record.frequency_grid();
  std::string out = "xi,magnitude\n";
  for (std::size_t j = 0; j < record.size(); ++j) {
    out += format_double(freq.point(j)) + "," + format_double(record.magnitudes()[j]) + "\n";
  }
  return out;
}

Json to_json(const TrigPoly& p) {
  return Json{{"N", p.N()}, {"coeffs", complex_array_json(p.coeffs())}};
}

TrigPoly trigpoly_from_json(const Json& doc) {
  const std::int64_t n = int_field(doc, "N");
  std::vector<Complex> coeffs = complex_array(field(doc, "coeffs"), "coeffs");
  if (n < 1 || coeffs.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("polynomial has " + std::to_string(coeffs.size()) +
                          " coefficients but N = " + std::to_string(n));
  }
  return TrigPoly(std::move(coeffs));
}

Json to_json(const std::vector<TrigPoly>& list) {
  Json arr = Json::array();
  for (const TrigPoly& p : list) arr.push_back(to_json(p));
  return arr;
}

std::vector<TrigPoly> trigpoly_list_from_json(const Json& doc) {
  if (!doc.is_array()) throw InvalidArgument("expected an array of polynomials");
  std::vector<TrigPoly> out;
  for (const Json& p : doc) out.push_back(trigpoly_from_json(p));
  return out;
}

std::string samples_to_csv(const std::vector<double>& values) {
  std::string out = "k,x_k,value\n";
  const double m = static_cast<double>(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += std::to_string(k) + "," + format_double(static_cast<double>(k) / m) + "," +
           format_double(values[k]) + "\n";
  }
  return out;
}

Json to_json(const EquivalenceVerdict& verdict) {
  return Json{{"kind", to_string(verdict.kind)},
              {"constant", complex_to_json(verdict.constant)},
              {"residual", verdict.residual}};
}

EquivalenceVerdict verdict_from_json(const Json& doc) {
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw InvalidArgument("verdict kind must be a string");
  EquivalenceVerdict v;
  v.kind = equivalence_kind_from_string(kind.get<std::string>());
  v.constant = complex_from_json(field(doc, "constant"));
  v.residual = number_field(doc, "residual");
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

void write_json_file(const std::string& path, const Json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace phaseret::io
