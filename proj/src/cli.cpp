#include "holokrein/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "holokrein/algebra.hpp"
#include "holokrein/error.hpp"
#include "holokrein/expr.hpp"
#include "holokrein/json_io.hpp"
#include "holokrein/krein_rep.hpp"
#include "holokrein/multimode.hpp"
#include "holokrein/orbits.hpp"
#include "holokrein/pcf.hpp"
#include "holokrein/truncfn.hpp"

namespace holokrein::cli {

namespace {

/// Error carrying extra machine-readable fields for stderr.
struct DetailedError : Error {
  DetailedError(ErrorCode code, const std::string& msg, Json details)
      : Error(code, msg), details(std::move(details)) {}
  Json details;
};

struct Config {
  int degree_cap = 12;
  int levels = 8;
  double tolerance = 1e-10;
  int samples = 100;
  unsigned seed = 12345;
  int nodes = 0;  // 0: derive from the degree cap
};

[[noreturn]] void bad_value(const std::string& what, const std::string& text) {
  throw Error(ErrorCode::ParseError, "cannot read " + what + " from '" + text + "'");
}

double parse_double(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') bad_value(what, text);
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0' || v < -1000000 || v > 1000000) bad_value(what, text);
  return static_cast<int>(v);
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ExactComplex parse_exact_scalar(const std::string& text) {
  const AlgebraElement x = parse_element(text, GeneratorSet::holomorphic());
  if (x.degree() != 0) throw Error(ErrorCode::ParseError, "expected a scalar, got '" + text + "'");
  return x.coefficient({});
}

/// "1.5", "-2i", "0.5-1.5i", "i"; anything else is read as an exact scalar expression.
cplx parse_complex(const std::string& raw, const std::string& what) {
  std::string t;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) bad_value(what, raw);
  auto number = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* b = s.c_str();
    char* e = nullptr;
    out = std::strtod(b, &e);
    return e != b && *e == '\0';
  };
  double re = 0.0, im = 0.0;
  if (number(t, re)) return {re, 0.0};
  if (t.back() == 'i') {
    const std::string body = t.substr(0, t.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    const std::string real_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string imag_part = split == std::string::npos ? body : body.substr(split);
    if (imag_part.empty() || imag_part == "+") imag_part = "1";
    if (imag_part == "-") imag_part = "-1";
    if ((real_part.empty() || number(real_part, re)) && number(imag_part, im)) return {re, im};
  }
  try {
    return parse_exact_scalar(raw).to_complex();
  } catch (const Error&) {
    bad_value(what, raw);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(strip(part));
  return out;
}

ExactMat2 parse_exact_matrix(const std::string& text, const std::string& what) {
  if (text == "identity") return ExactMat2::identity();
  if (text == "schroedinger") return schroedinger_matrix_exact();
  if (text == "sigma1") return pauli::sigma1<ExactComplex>();
  if (text == "sigma3") return pauli::sigma3<ExactComplex>();
  const auto parts = split_list(text);
  if (parts.size() != 4) bad_value(what + " (four comma-separated entries, row-major)", text);
  return {parse_exact_scalar(parts[0]), parse_exact_scalar(parts[1]), parse_exact_scalar(parts[2]),
          parse_exact_scalar(parts[3])};
}

CMat2 parse_complex_matrix(const std::string& text, const std::string& what) {
  if (text == "identity" || text == "schroedinger" || text == "sigma1" || text == "sigma3") {
    return to_complex(parse_exact_matrix(text, what));
  }
  const auto parts = split_list(text);
  if (parts.size() != 4) bad_value(what + " (four comma-separated entries, row-major)", text);
  return {parse_complex(parts[0], what), parse_complex(parts[1], what), parse_complex(parts[2], what),
          parse_complex(parts[3], what)};
}

int parse_sign(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1" || text == "plus") return 1;
  if (text == "-" || text == "-1" || text == "minus") return -1;
  bad_value("sign", text);
}

EtaSignature parse_eta(const std::string& text) {
  EtaSignature eta;
  for (const auto& p : split_list(text)) {
    if (p == "+" || p == "+1" || p == "1") {
      eta.push_back(1);
    } else if (p == "-" || p == "-1") {
      eta.push_back(-1);
    } else {
      bad_value("eta entry", p);
    }
  }
  validate_eta(eta);
  return eta;
}

std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream file(source);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open '" + source + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

/// Inline JSON text, "@path", or "-" for stdin.
Json read_json_arg(const std::string& arg, std::istream& in) {
  std::string text = arg;
  if (arg == "-") {
    text = read_source("-", in);
  } else if (!arg.empty() && arg.front() == '@') {
    text = read_source(arg.substr(1), in);
  }
  return Json::parse(text);
}

TruncFn read_function(const std::string& arg, int degree_cap, std::istream& in) {
  const std::string t = strip(arg);
  if (!t.empty() && (t.front() == '{' || t.front() == '[' || t.front() == '@' || t == "-")) {
    const Json j = read_json_arg(t, in);
    if (j.is_object() && j.contains("degree_cap")) return truncfn_from_json(j);
    TruncFn f = truncfn_from_json(j);
    if (f.degree_cap() > degree_cap) throw Error(ErrorCode::InvalidArgument, "function exceeds the degree cap");
    std::vector<cplx> coeffs = f.coefficients();
    coeffs.resize(static_cast<std::size_t>(degree_cap + 1));
    return TruncFn(std::move(coeffs), f.exact());
  }
  const auto parts = split_list(t);
  if (static_cast<int>(parts.size()) > degree_cap + 1) {
    throw Error(ErrorCode::InvalidArgument, "more coefficients than the degree cap allows");
  }
  std::vector<cplx> coeffs(static_cast<std::size_t>(degree_cap + 1));
  for (std::size_t k = 0; k < parts.size(); ++k) coeffs[k] = parse_complex(parts[k], "coefficient");
  return TruncFn(std::move(coeffs));
}

MultiIndexState read_state(const std::string& arg, int degree_cap, std::istream& in) {
  MultiIndexState f = state_from_json(read_json_arg(strip(arg), in));
  f.degree_cap = std::max(f.degree_cap, degree_cap);
  return f;
}

void load_config(const std::string& path, Config& cfg) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open config '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError, "config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "degree_cap") {
      cfg.degree_cap = parse_int(value, key);
    } else if (key == "levels") {
      cfg.levels = parse_int(value, key);
    } else if (key == "tolerance") {
      cfg.tolerance = parse_double(value, key);
    } else if (key == "samples") {
      cfg.samples = parse_int(value, key);
    } else if (key == "seed") {
      cfg.seed = static_cast<unsigned>(parse_int(value, key));
    } else if (key == "nodes") {
      cfg.nodes = parse_int(value, key);
    } else {
      throw Error(ErrorCode::ParseError, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

std::optional<GeneratorSet> algebra_from_eta(const std::string& eta) {
  if (eta.empty()) return std::nullopt;
  return GeneratorSet::multimode(parse_eta(eta));
}

int exit_code_for(ErrorCode code) { return code == ErrorCode::ParseError ? 2 : 1; }

}  // namespace

Result run(const std::vector<std::string>& args, std::istream& in) {
  Result result;
  Config cfg;

  CLI::App app{"Canonical commutation relation toolkit: algebra, orbits, PCF, Krein representations", "holokrein"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  bool compact = false;
  app.add_option("--config", config_path, "key = value file with defaults (degree_cap, levels, tolerance, ...)");
  app.add_flag("--compact", compact, "print JSON on a single line");

  // Options are collected as strings and converted after the config file is applied.
  std::map<std::string, std::string> opt;
  std::vector<std::string> exprs;
  auto option = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    return sub->add_option("--" + name, opt[name], help);
  };

  auto* normal = app.add_subcommand("normal-order", "normal-order an algebra element");
  normal->add_option("expr", exprs, "expression")->required()->expected(1);
  option(normal, "eta", "multimode signature, e.g. 1,-1");

  auto* comm = app.add_subcommand("commutator", "commutator [x, y], normal-ordered");
  comm->add_option("exprs", exprs, "two expressions")->required()->expected(2);
  option(comm, "eta", "multimode signature");

  auto* involve = app.add_subcommand("involve", "apply the involution K with matrix C_K");
  involve->add_option("expr", exprs, "holomorphic expression")->required()->expected(1);
  option(involve, "ck", "sigma1 | sigma3 | four entries")->default_str("sigma1");

  auto* isomap = app.add_subcommand("isomap", "map a Heisenberg element through (a*, a) = V (z, d)");
  isomap->add_option("expr", exprs, "expression in a, a*")->required()->expected(1);
  option(isomap, "v", "identity | schroedinger | four entries");

  auto* classify = app.add_subcommand("classify-orbit", "classify (n3, n-, n+) under the adjoint action");
  option(classify, "n3", "sigma3 coordinate");
  option(classify, "nminus", "sigma- coordinate");
  option(classify, "nplus", "sigma+ coordinate");
  option(classify, "tolerance", "relative zero tolerance");

  auto* gamma = app.add_subcommand("gamma-s", "apply Gamma_S to a truncated power series");
  option(gamma, "alpha", "S(alpha, beta) diagonal entry");
  option(gamma, "beta", "S(alpha, beta) lower-left entry");
  option(gamma, "f", "coefficients c0,c1,... or JSON");
  option(gamma, "degree", "degree cap");

  auto* project = app.add_subcommand("project", "Fourier projection under the rotation family");
  option(project, "f", "coefficients c0,c1,... or JSON");
  option(project, "k", "Fourier index");
  option(project, "nodes", "quadrature nodes");
  option(project, "degree", "degree cap");

  auto* pcf = app.add_subcommand("pcf-eval", "parabolic cylinder function D_lambda(x) and derivatives");
  option(pcf, "lambda", "order");
  option(pcf, "x", "argument (complex allowed)");

  auto* build = app.add_subcommand("build-rep", "build a truncated Krein representation");
  option(build, "kind", "fock | antifock | schroedinger");
  option(build, "flavor", "bargmann | schroedinger (antifock only)");
  option(build, "theta", "theta in (-1, 0]");
  option(build, "gamma", "scale gamma > 0");
  option(build, "levels", "top level N");
  option(build, "sign", "+ or -");
  option(build, "min-level", "lowest level of the window");

  auto* verify = app.add_subcommand("verify-rep", "check a representation JSON (file or - for stdin)");
  option(verify, "input", "path or -")->default_str("-");
  option(verify, "samples", "gauge samples");
  option(verify, "seed", "random seed");

  auto* reduce = app.add_subcommand("reduce-canonical", "reduce an isomorphism V with gauge constant mu");
  option(reduce, "v", "identity | schroedinger | four entries");
  option(reduce, "mu", "gauge constant");
  option(reduce, "tolerance", "reduction tolerance");

  auto* mbuild = app.add_subcommand("multimode-build", "build the multimode monomial representation");
  option(mbuild, "eta", "signature, e.g. 1,-1,1");
  option(mbuild, "degree", "total-degree cap");

  auto* spectral = app.add_subcommand("spectral-check", "gauge Fourier support of <g, U(s) f>");
  option(spectral, "eta", "signature");
  option(spectral, "degree", "total-degree cap");
  option(spectral, "f", "state JSON, @file or -");
  option(spectral, "g", "state JSON, @file or -");
  option(spectral, "nodes", "sample nodes");
  option(spectral, "tolerance", "support threshold");

  auto* descent = app.add_subcommand("vacuum-descent", "descend from a state to the vacuum ray");
  option(descent, "eta", "signature");
  option(descent, "degree", "total-degree cap");
  option(descent, "f", "state JSON, @file or -");

  auto emit_error = [&](const std::string& code, const std::string& message, Json details, int exit_code) {
    Json err = details.is_object() ? std::move(details) : Json::object();
    err["error"] = code;
    err["message"] = message;
    result.err = dump_json(err, compact ? -1 : 2) + "\n";
    result.exit_code = exit_code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what(), Json::object(), 2);
    return result;
  }

  auto has = [&](const std::string& name) { return opt.count(name) && !opt.at(name).empty(); };
  auto str = [&](const std::string& name, const std::string& fallback) {
    return has(name) ? opt.at(name) : fallback;
  };
  auto num = [&](const std::string& name, double fallback) {
    return has(name) ? parse_double(opt.at(name), "--" + name) : fallback;
  };
  auto integer = [&](const std::string& name, int fallback) {
    return has(name) ? parse_int(opt.at(name), "--" + name) : fallback;
  };
  auto complex_opt = [&](const std::string& name, cplx fallback) {
    return has(name) ? parse_complex(opt.at(name), "--" + name) : fallback;
  };
  auto require = [&](const std::string& name) -> const std::string& {
    if (!has(name)) throw Error(ErrorCode::ParseError, "missing required option --" + name);
    return opt.at(name);
  };

  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    Json out;

    if (normal->parsed()) {
      out["result"] = to_string(normal_order(parse_element(exprs.at(0), algebra_from_eta(str("eta", "")))));
    } else if (comm->parsed()) {
      const auto alg = algebra_from_eta(str("eta", ""));
      AlgebraElement x = parse_element(exprs.at(0), alg);
      AlgebraElement y = parse_element(exprs.at(1), alg ? alg : std::optional<GeneratorSet>(x.algebra()));
      out["result"] = to_string(commutator(x, y));
    } else if (involve->parsed()) {
      const Involution k(parse_exact_matrix(str("ck", "sigma1"), "--ck"));
      out["result"] = to_string(k.apply(parse_element(exprs.at(0), GeneratorSet::holomorphic())));
    } else if (isomap->parsed()) {
      const ExactMat2 v = parse_exact_matrix(str("v", "identity"), "--v");
      out["result"] = to_string(apply_isomorphism(v, parse_element(exprs.at(0), GeneratorSet::heisenberg())));
    } else if (classify->parsed()) {
      const SlVector n{complex_opt("n3", 0.0), complex_opt("nminus", 0.0), complex_opt("nplus", 0.0)};
      out = to_json(classify_orbit(n, num("tolerance", cfg.tolerance)));
    } else if (gamma->parsed()) {
      const int degree = integer("degree", cfg.degree_cap);
      const cplx alpha = parse_complex(require("alpha"), "--alpha");
      const cplx beta = complex_opt("beta", 0.0);
      const TruncFn f = read_function(require("f"), degree, in);
      out["result"] = to_json(gamma_S(alpha, beta, f));
      if (f.degree_cap() >= 2) out["implementation_residual"] = verify_implementation(alpha, beta, f);
    } else if (project->parsed()) {
      const int degree = integer("degree", cfg.degree_cap);
      const TruncFn f = read_function(require("f"), degree, in);
      const int k = integer("k", 0);
      const int nodes = integer("nodes", cfg.nodes > 0 ? cfg.nodes : default_fourier_nodes(f.degree_cap()));
      out["k"] = k;
      out["nodes"] = nodes;
      out["result"] = to_json(fourier_project(rotation_family(), f, k, nodes));
    } else if (pcf->parsed()) {
      out = to_json(weber_D(parse_double(require("lambda"), "--lambda"), parse_complex(require("x"), "--x")));
    } else if (build->parsed()) {
      const std::string kind = str("kind", "fock");
      const int levels = integer("levels", cfg.levels);
      BasisRep rep;
      if (kind == "fock") {
        rep = build_fock_bargmann(levels);
      } else if (kind == "antifock") {
        const std::string flavor = str("flavor", "bargmann");
        if (flavor != "bargmann" && flavor != "schroedinger") bad_value("--flavor", flavor);
        rep = build_antifock(levels, flavor == "bargmann" ? AntiFockFlavor::Bargmann : AntiFockFlavor::Schroedinger);
      } else if (kind == "schroedinger") {
        const double theta = num("theta", 0.0);
        const double g = num("gamma", 1.0);
        const int min_level = integer("min-level", 0);
        if (min_level < 0 && theta > -1.0 && theta <= 0.0) {
          const NullDiagnosis diag = detect_null_subrep(theta, min_level, levels, g);
          if (diag.null_subrepresentation) {
            throw DetailedError(ErrorCode::NullSubrepresentation,
                                "the *-property forces every Gram value from level " +
                                    std::to_string(diag.forced_zero_levels.front()) + " up to vanish",
                                Json{{"certificate", to_json(diag)}});
          }
        }
        rep = build_schroedinger_theta(theta, g, levels, parse_sign(str("sign", "+")), min_level);
      } else {
        bad_value("--kind", kind);
      }
      out = to_json(rep);
    } else if (verify->parsed()) {
      const BasisRep rep = basisrep_from_json(Json::parse(read_source(str("input", "-"), in)));
      const int samples = integer("samples", cfg.samples);
      const unsigned seed = has("seed") ? static_cast<unsigned>(integer("seed", 0)) : cfg.seed;
      out = to_json(verify_rep(rep, samples, seed));
      out["label"] = rep.label();
      out["min_level"] = rep.min_level;
      out["max_level"] = rep.max_level;
      out["seed"] = seed;
    } else if (reduce->parsed()) {
      const CMat2 v = parse_complex_matrix(str("v", "identity"), "--v");
      out = to_json(reduce_to_canonical(v, complex_opt("mu", 0.0), num("tolerance", 1e-8)));
    } else if (mbuild->parsed()) {
      const MultimodeRep rep = build_multimode_rep(parse_eta(require("eta")), integer("degree", cfg.degree_cap));
      const MultimodeVerification check = verify_multimode_rep(rep);
      Json gram = Json::object();
      Json basis = Json::array();
      for (int j = 0; j < rep.size(); ++j) {
        const std::string key = multi_index_key(rep.basis[static_cast<std::size_t>(j)]);
        basis.push_back(key);
        gram[key] = rep.gram[static_cast<std::size_t>(j)];
      }
      out["eta"] = rep.eta;
      out["degree_cap"] = rep.degree_cap;
      out["size"] = rep.size();
      out["basis"] = basis;
      out["gram"] = gram;
      out["gauge_spectrum"] = check.gauge_spectrum;
      out["ccr_max_residual"] = check.ccr_max_residual;
      out["star_property_max_residual"] = check.star_property_max_residual;
    } else if (spectral->parsed()) {
      const int degree = integer("degree", cfg.degree_cap);
      const MultimodeRep rep = build_multimode_rep(parse_eta(require("eta")), degree);
      const MultiIndexState f = read_state(require("f"), degree, in);
      const MultiIndexState g = has("g") ? read_state(opt.at("g"), degree, in) : f;
      const int nodes = integer("nodes", cfg.nodes > 0 ? cfg.nodes : 2 * (degree + 1));
      const SpectralSupport s = spectral_condition_check(rep, f, g, nodes, num("tolerance", cfg.tolerance));
      Json coeffs = Json::array();
      for (const auto& [k, c] : s.coefficients) coeffs.push_back(Json::array({k, complex_to_json(c)}));
      out["support"] = s.support;
      out["nodes"] = nodes;
      out["coefficients"] = coeffs;
    } else if (descent->parsed()) {
      const int degree = integer("degree", cfg.degree_cap);
      const MultimodeRep rep = build_multimode_rep(parse_eta(require("eta")), degree);
      const VacuumDescent d = vacuum_descent(rep, read_state(require("f"), degree, in));
      out["vacuum"] = to_json(d.vacuum);
      out["steps"] = d.steps;
      out["lowest_component"] = d.lowest_component;
      out["path"] = d.path;
    }
    result.out = dump_json(out, compact ? -1 : 2) + "\n";
  } catch (const ExprParseError& e) {
    emit_error("ParseError", e.what(), Json{{"offset", e.offset()}, {"expected", e.expected()}}, 2);
  } catch (const DetailedError& e) {
    emit_error(std::string(to_string(e.code())), e.what(), e.details, exit_code_for(e.code()));
  } catch (const Error& e) {
    emit_error(std::string(to_string(e.code())), e.what(), Json::object(), exit_code_for(e.code()));
  } catch (const Json::exception& e) {
    emit_error("ParseError", e.what(), Json::object(), 2);
  }
  return result;
}

}  // namespace holokrein::cli
