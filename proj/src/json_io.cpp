#include "holokrein/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "holokrein/error.hpp"

namespace holokrein {

namespace {

void put_string(const std::string& s, std::string& out) {
  // nlohmann's escaping is deterministic; reuse it for string scalars.
  out += Json(s).dump();
}

void put_double(double x, std::string& out) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  out += buf;
}

void emit(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        put_string(it.key(), out);
        out += pretty ? ": " : ":";
        emit(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (complex pairs, small vectors) stay on one line.
      const bool inline_array =
          j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        if (inline_array && !first && pretty) out += ' ';
        first = false;
        if (!inline_array) newline(depth + 1);
        emit(e, indent, depth + 1, out);
      }
      if (!inline_array) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: put_double(j.get<double>(), out); return;
    case Json::value_t::string: put_string(j.get<std::string>(), out); return;
    default: out += j.dump(); return;
  }
}

Json band_to_json(const Band& b) {
  Json values = Json::array();
  for (const auto& v : b.values) values.push_back(complex_to_json(v));
  return {{"offset", b.offset}, {"values", values}};
}

Band band_from_json(const Json& j) {
  Band b;
  b.offset = j.at("offset").get<int>();
  for (const auto& v : j.at("values")) b.values.push_back(complex_from_json(v));
  return b;
}

Construction construction_from_label(const std::string& label) {
  if (label == "fock_bargmann") return Construction::FockBargmann;
  if (label == "antifock_bargmann") return Construction::AntiFockBargmann;
  if (label.rfind("schroedinger", 0) == 0) return Construction::Schroedinger;
  throw Error(ErrorCode::InvalidArgument, "unknown representation label '" + label + "'");
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  return out;
}

Json complex_to_json(cplx c) { return Json::array({c.real(), c.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorCode::InvalidArgument, "expected a number or [re, im]");
}

Json compact_complex(cplx c) {
  if (c.imag() == 0.0) return c.real();
  return complex_to_json(c);
}

Json to_json(const TruncFn& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(complex_to_json(c));
  return {{"degree_cap", f.degree_cap()}, {"exact", f.exact()}, {"coefficients", coeffs}};
}

TruncFn truncfn_from_json(const Json& j) {
  std::vector<cplx> coeffs;
  const Json& list = j.is_array() ? j : j.at("coefficients");
  for (const auto& c : list) coeffs.push_back(complex_from_json(c));
  if (j.is_object() && j.contains("degree_cap")) {
    const int cap = j.at("degree_cap").get<int>();
    if (cap < static_cast<int>(coeffs.size()) - 1) {
      throw Error(ErrorCode::InvalidArgument, "more coefficients than the degree cap allows");
    }
    coeffs.resize(static_cast<std::size_t>(cap + 1));
  }
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
  const bool exact = !(j.is_object() && j.contains("exact")) || j.at("exact").get<bool>();
  return TruncFn(std::move(coeffs), exact);
}

Json to_json(const BasisRep& rep) {
  Json j;
  j["label"] = rep.label();
  j["parameters"] = {{"sign", rep.sign},       {"theta", rep.theta},         {"gamma", rep.gamma},
                     {"mu", rep.mu},           {"min_level", rep.min_level}, {"max_level", rep.max_level}};
  j["annihilator"] = band_to_json(rep.annihilator);
  j["creator"] = band_to_json(rep.creator);
  j["gauge"] = rep.gauge;
  j["gram"] = rep.gram;
  j["signature"] = krein_decomposition(rep.gram).signature;
  return j;
}

BasisRep basisrep_from_json(const Json& j) {
  BasisRep rep;
  rep.construction = construction_from_label(j.at("label").get<std::string>());
  const Json& p = j.at("parameters");
  rep.sign = p.at("sign").get<int>();
  rep.theta = p.at("theta").get<double>();
  rep.gamma = p.at("gamma").get<double>();
  rep.mu = p.value("mu", 0.0);
  rep.min_level = p.at("min_level").get<int>();
  rep.max_level = p.at("max_level").get<int>();
  rep.annihilator = band_from_json(j.at("annihilator"));
  rep.creator = band_from_json(j.at("creator"));
  rep.gauge = j.at("gauge").get<std::vector<double>>();
  rep.gram = j.at("gram").get<std::vector<double>>();
  const auto size = static_cast<std::size_t>(rep.size());
  if (rep.size() < 1 || rep.gauge.size() != size || rep.gram.size() != size || rep.annihilator.values.size() != size ||
      rep.creator.values.size() != size) {
    throw Error(ErrorCode::InvalidArgument, "representation arrays do not match the level window");
  }
  if (rep.sign != 1 && rep.sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  return rep;
}

std::string multi_index_key(const MultiIndex& n) {
  std::string out;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(n[k]);
  }
  return out;
}

MultiIndex parse_multi_index_key(const std::string& key) {
  MultiIndex n;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 0) {
      throw Error(ErrorCode::InvalidArgument, "bad multi-index key '" + key + "'");
    }
    n.push_back(v);
  }
  if (n.empty()) throw Error(ErrorCode::InvalidArgument, "empty multi-index key");
  return n;
}

Json to_json(const MultiIndexState& f) {
  Json coeffs = Json::object();
  for (const auto& [n, c] : f.coefficients) coeffs[multi_index_key(n)] = complex_to_json(c);
  return {{"modes", f.modes}, {"degree_cap", f.degree_cap}, {"coefficients", coeffs}};
}

MultiIndexState state_from_json(const Json& j) {
  MultiIndexState f;
  const Json& coeffs = j.contains("coefficients") ? j.at("coefficients") : j;
  int max_total = 0;
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    MultiIndex n = parse_multi_index_key(it.key());
    if (f.modes == 0) f.modes = static_cast<int>(n.size());
    if (static_cast<int>(n.size()) != f.modes) throw Error(ErrorCode::InvalidArgument, "inconsistent multi-index length");
    int total = 0;
    for (int k : n) total += k;
    max_total = std::max(max_total, total);
    f.add(n, complex_from_json(it.value()));
  }
  if (j.contains("modes")) {
    const int modes = j.at("modes").get<int>();
    if (f.modes != 0 && f.modes != modes) throw Error(ErrorCode::InvalidArgument, "modes does not match the keys");
    f.modes = modes;
  }
  f.degree_cap = j.contains("degree_cap") ? j.at("degree_cap").get<int>() : max_total;
  f.validate();
  return f;
}

Json to_json(const RepVerification& v) {
  return {{"star_property_max_residual", v.star_property_max_residual},
          {"star_property_creator_max_residual", v.star_property_creator_max_residual},
          {"ccr_max_residual", v.ccr_max_residual},
          {"gram_recursion_max_residual", v.gram_recursion_max_residual},
          {"gauge_isometry_max_residual", v.gauge_isometry_max_residual},
          {"gauge_covariance_max_residual", v.gauge_covariance_max_residual},
          {"gauge_samples", v.gauge_samples}};
}

Json to_json(const CMat2& m) {
  return Json::array({Json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                      Json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

Json to_json(const CanonicalForm& c) {
  return {{"type", std::string(to_string(c.type))},
          {"sign", c.sign},
          {"theta", c.theta},
          {"level_shift", c.level_shift},
          {"gamma", c.gamma},
          {"gauge_phase", c.gauge_phase},
          {"s", to_json(c.s)},
          {"canonical_v", to_json(c.canonical_v)},
          {"residual", c.residual}};
}

Json to_json(const NullDiagnosis& d) {
  Json chain = Json::array();
  for (const auto& step : d.chain) {
    chain.push_back(
        {{"level", step.level}, {"factor", step.factor}, {"value", step.value}, {"forced_zero", step.forced_zero}});
  }
  return {{"null_subrepresentation", d.null_subrepresentation},
          {"forced_zero_levels", d.forced_zero_levels},
          {"chain", chain},
          {"gram", d.gram},
          {"min_level", d.min_level},
          {"max_level", d.max_level}};
}

Json to_json(const OrbitClassification& c) {
  Json j{{"type", std::string(to_string(c.type))}, {"q", compact_complex(c.q)}};
  if (c.witness) {
    j["witness"] = {{"a", compact_complex(c.witness->a)},
                    {"b", compact_complex(c.witness->b)},
                    {"lambda", compact_complex(c.witness->lambda)}};
  }
  return j;
}

Json to_json(const PcfValue& v) {
  return {{"lambda", v.lambda},
          {"x", compact_complex(v.x)},
          {"value", compact_complex(v.value)},
          {"derivative", compact_complex(v.derivative)},
          {"second_derivative", compact_complex(v.second_derivative)},
          {"error_estimate", v.error_estimate}};
}

}  // namespace holokrein
