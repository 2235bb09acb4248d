#include "parastab/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parastab/degrees.hpp"
#include "parastab/error.hpp"
#include "parastab/frobdynamics.hpp"
#include "parastab/hnpolygon.hpp"
#include "parastab/slbounds.hpp"

namespace parastab {

namespace {

using nlohmann::json; // object keys are sorted, so dumps are deterministic

std::string rv(const Rat &x) { return rat_str(x); }

std::int64_t parse_int64(const std::string &s, const std::string &location) {
  std::int64_t value = 0;
  const char *first = s.data();
  const char *last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ValidationError(location, "expected an integer, got '" + s + "'");
  return value;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int> parse_index_list(const std::string &s, const std::string &location) {
  std::vector<int> out;
  if (s.empty())
    return out;
  for (const std::string &part : split(s, ','))
    out.push_back(static_cast<int>(parse_int64(part, location)));
  return out;
}

RatVec parse_rat_list(const std::string &s, const std::string &location) {
  RatVec out;
  if (s.empty())
    return out;
  for (const std::string &part : split(s, ','))
    out.push_back(rat_parse(part, location));
  return out;
}

std::vector<std::pair<std::int64_t, Rat>> parse_quotients(const std::string &s,
                                                          const std::string &location) {
  std::vector<std::pair<std::int64_t, Rat>> out;
  if (s.empty())
    return out;
  for (const std::string &part : split(s, ',')) {
    auto pos = part.find(':');
    if (pos == std::string::npos)
      throw ValidationError(location, "expected rank:degree, got '" + part + "'");
    out.emplace_back(parse_int64(part.substr(0, pos), location),
                     rat_parse(part.substr(pos + 1), location));
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> parse_rat_pairs(const std::string &s,
                                                 const std::string &location) {
  std::vector<std::pair<Rat, Rat>> out;
  if (s.empty())
    return out;
  for (const std::string &part : split(s, ',')) {
    auto pos = part.find(':');
    if (pos == std::string::npos)
      throw ValidationError(location, "expected a:b, got '" + part + "'");
    out.emplace_back(rat_parse(part.substr(0, pos), location),
                     rat_parse(part.substr(pos + 1), location));
  }
  return out;
}

// --- root system resolution, with optional config-file defaults ---

struct SystemChoice {
  std::string type;
  int rank = 0;
  bool type_set = false;
  bool rank_set = false;
};

RootSystem resolve_system(const SystemChoice &choice, const std::string &config_path) {
  std::string type = choice.type;
  int rank = choice.rank;
  bool have_type = choice.type_set;
  bool have_rank = choice.rank_set;
  if ((!have_type || !have_rank) && !config_path.empty()) {
    std::ifstream in(config_path);
    if (!in)
      throw ValidationError("cli.config", "cannot read config file '" + config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json cfg = json::parse(buf.str(), nullptr, false);
    if (cfg.is_discarded() || !cfg.is_object())
      throw ValidationError("cli.config", "config file is not a JSON object");
    if (!have_type && cfg.contains("type") && cfg["type"].is_string()) {
      type = cfg["type"].get<std::string>();
      have_type = true;
    }
    if (!have_rank && cfg.contains("rank") && cfg["rank"].is_number_integer()) {
      rank = cfg["rank"].get<int>();
      have_rank = true;
    }
  }
  if (!have_type || !have_rank)
    throw ValidationError("cli.system",
                          "missing --type/--rank (no config default available)");
  return build_root_system(type, rank);
}

// --- JSON input plumbing (files or '-' for stdin) ---

json load_json_input(const std::string &path) {
  std::string text;
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in)
      throw ValidationError("cli.input", "cannot read input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ValidationError("cli.input", "input is not valid JSON");
  return j;
}

const json &require_field(const json &j, const std::string &key,
                          const std::string &location) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(location, "missing field '" + key + "'");
  return j.at(key);
}

Rat rat_from_json(const json &j, const std::string &location) {
  if (j.is_string())
    return rat_parse(j.get<std::string>(), location);
  if (j.is_number_integer())
    return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw ValidationError(location, "expected a rational as \"p/q\" string or integer");
}

std::vector<int> index_list_from_json(const json &j, const std::string &location) {
  if (!j.is_array())
    throw ValidationError(location, "expected an array of indices");
  std::vector<int> out;
  for (const json &e : j) {
    if (!e.is_number_integer())
      throw ValidationError(location, "indices must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<int> to_zero_based(const std::vector<int> &one_based,
                               const std::string &location) {
  std::vector<int> out;
  out.reserve(one_based.size());
  for (int i : one_based) {
    if (i < 1)
      throw ValidationError(location, "indices are 1-based, got " + std::to_string(i));
    out.push_back(i - 1);
  }
  return out;
}

Facet facet_from_json(const RootSystem &rs, const json &j, const std::string &location) {
  std::vector<int> I = to_zero_based(
      index_list_from_json(require_field(j, "I", location), location), location);
  std::vector<int> word;
  if (j.contains("chamber"))
    word = to_zero_based(index_list_from_json(j.at("chamber"), location), location);
  return make_facet(rs, I, weyl_from_word(rs, word));
}

InvariantProfile profile_from_json(const RootSystem &rs, const json &j,
                                   const std::string &location) {
  Facet f = facet_from_json(rs, j, location);
  const json &narr = require_field(j, "n", location);
  if (!narr.is_array() || narr.size() != f.I.size())
    throw ValidationError(location, "field 'n' must be an array aligned with I");
  std::map<int, Rat> n;
  for (std::size_t idx = 0; idx < f.I.size(); ++idx)
    n[f.I[idx]] = rat_from_json(narr.at(idx), location);
  return make_profile(f, n);
}

// --- presentation helpers ---

json invariants_json(const InvariantProfile &p) {
  json out = json::object();
  for (const auto &[i, ni] : p.n)
    out[std::to_string(i + 1)] = rv(ni);
  return out;
}

json word_1based(const std::vector<int> &word) {
  json out = json::array();
  for (int i : word)
    out.push_back(i + 1);
  return out;
}

void flatten_json(const json &j, const std::string &path,
                  std::vector<std::string> &lines) {
  if (j.is_object()) {
    if (j.empty()) {
      lines.push_back(path + " = {}");
      return;
    }
    for (const auto &item : j.items())
      flatten_json(item.value(), path.empty() ? item.key() : path + "." + item.key(),
                   lines);
  } else if (j.is_array()) {
    if (j.empty()) {
      lines.push_back(path + " = []");
      return;
    }
    std::size_t idx = 0;
    for (const json &e : j)
      flatten_json(e, path + "[" + std::to_string(idx++) + "]", lines);
  } else if (j.is_string()) {
    lines.push_back(path + " = " + j.get<std::string>());
  } else {
    lines.push_back(path + " = " + j.dump());
  }
}

std::string render(const json &j, const std::string &format) {
  if (format == "table") {
    std::vector<std::string> lines;
    flatten_json(j, "", lines);
    std::string out;
    for (const std::string &l : lines)
      out += l + "\n";
    return out;
  }
  return j.dump() + "\n";
}

std::string verdict_str(Certificate::Verdict v) {
  switch (v) {
  case Certificate::Verdict::Accept: return "accept";
  case Certificate::Verdict::AcceptWithWarning: return "accept-with-warning";
  case Certificate::Verdict::Reject: return "reject";
  }
  return "reject";
}

} // namespace

CliResult cli_run(const std::vector<std::string> &args) {
  CLI::App app{"exact root-system combinatorics, parabolic degrees and "
               "semistability bounds"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "json";
  app.add_option("--config", config_path, "JSON file with default type/rank");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  json result;
  bool have_result = false;
  auto emit = [&](json j) {
    result = std::move(j);
    have_result = true;
  };

  // Shared option state. Each subcommand binds the subset it needs.
  SystemChoice sys;
  std::string opt_I, opt_chamber, opt_d;
  std::string opt_quotients, opt_levels, opt_samples;
  std::string opt_input, opt_basis, opt_values;
  std::string opt_Ip, opt_chamber_p, opt_Iq, opt_chamber_q;
  std::string opt_L = "1", opt_mu = "0", opt_eps = "1";
  std::string opt_lmax = "0", opt_lmin = "0", opt_first, opt_second;
  std::string opt_c1sq = "0", opt_c2 = "0";
  std::string opt_deg_e = "0", opt_deg_adj = "0";
  long opt_p = 2;
  std::int64_t opt_r = 1, opt_dim = 2, opt_jh = 0, opt_dim_g = 0, opt_dim_l = 0;
  long opt_ddim = 0;
  int opt_cap = 3;
  bool opt_min = false;

  auto add_system = [&](CLI::App *cmd) {
    cmd->add_option("--type", sys.type, "Cartan type A..G")
        ->each([&](const std::string &) { sys.type_set = true; });
    cmd->add_option("--rank", sys.rank, "rank of the system")
        ->each([&](const std::string &) { sys.rank_set = true; });
  };
  auto current_system = [&]() { return resolve_system(sys, config_path); };
  auto current_facet = [&](const RootSystem &rs) {
    std::vector<int> I =
        to_zero_based(parse_index_list(opt_I, "cli.facet"), "cli.facet");
    std::vector<int> word =
        to_zero_based(parse_index_list(opt_chamber, "cli.facet"), "cli.facet");
    return make_facet(rs, I, weyl_from_word(rs, word));
  };

  // ---- rootsys ----
  CLI::App *rootsys = app.add_subcommand("rootsys", "inspect a root system");
  add_system(rootsys);
  rootsys->callback([&] {
    RootSystem rs = current_system();
    json cartan = json::array();
    for (const auto &row : rs.cartan)
      cartan.push_back(row);
    emit(json{{"cartan", cartan},
              {"dim_g", rs.dim_g()},
              {"name", rs.name()},
              {"positive_roots", rs.positive_roots.size()},
              {"rank", rs.rank},
              {"weyl_order", weyl_order(rs.type, rs.rank)}});
  });

  // ---- facet ----
  CLI::App *facet_cmd = app.add_subcommand("facet", "facet data: dimensions and blocks");
  add_system(facet_cmd);
  facet_cmd->add_option("--I", opt_I, "1-based vertex indices, comma separated")
      ->required();
  facet_cmd->add_option("--chamber", opt_chamber, "chamber word, 1-based letters");
  facet_cmd->add_option("--d", opt_d, "degree covector values on the simple roots");
  facet_cmd->callback([&] {
    RootSystem rs = current_system();
    Facet f = current_facet(rs);
    FacetDims dims = facet_dims(f);
    ShapeDecomposition dec = shape_decomposition(f);
    json blocks = json::array();
    for (const ShapeBlock &b : dec.blocks)
      blocks.push_back(json{{"level", b.level},
                            {"shape", b.shape_on_I},
                            {"size", b.roots.size()}});
    json out{{"I", facet_vertices_1based(f)},
             {"blocks", blocks},
             {"chamber", word_1based(f.chamber.word)},
             {"dim_g", dims.dim_g},
             {"dim_l", dims.dim_l},
             {"dim_p", dims.dim_p},
             {"dim_u", dims.dim_u}};
    if (!opt_d.empty()) {
      RatVec d = parse_rat_list(opt_d, "cli.facet");
      out["degree"] = rv(parabolic_degree(f, d));
      out["invariants"] = invariants_json(numerical_invariants(f, d));
    }
    emit(std::move(out));
  });

  // ---- canonical ----
  CLI::App *canonical = app.add_subcommand("canonical", "canonical destabilizing facet");
  add_system(canonical);
  canonical->add_option("--d", opt_d, "degree covector values on the simple roots")
      ->required();
  canonical->callback([&] {
    RootSystem rs = current_system();
    RatVec d = parse_rat_list(opt_d, "cli.canonical");
    CanonicalResult res = canonical_facet(rs, d);
    emit(json{{"degree", rv(res.degree)},
              {"facet", facet_vertices_1based(res.facet)},
              {"invariants", invariants_json(res.profile)}});
  });

  // ---- bounds ----
  CLI::App *bounds = app.add_subcommand("bounds", "instability and slope bounds");
  bounds->require_subcommand(1);

  CLI::App *bofg = bounds->add_subcommand("b-of-g", "instability constant of the group");
  add_system(bofg);
  bofg->callback([&] {
    RootSystem rs = current_system();
    GroupConstant c = b_of_g(rs);
    json arg = json::array();
    for (int i : c.argmax_I)
      arg.push_back(i + 1);
    emit(json{{"argmax_facet", arg}, {"b_of_G", rv(c.value)}});
  });

  CLI::App *instab = bounds->add_subcommand("instability", "facet instability bounds");
  add_system(instab);
  instab->add_option("--I", opt_I, "1-based vertex indices")->required();
  instab->add_option("--chamber", opt_chamber, "chamber word, 1-based letters");
  instab->add_option("--L", opt_L, "maximal twist slope")->required();
  instab->add_option("--p", opt_p, "characteristic")->required();
  instab->callback([&] {
    RootSystem rs = current_system();
    Facet f = current_facet(rs);
    InstabilityBounds b =
        instability_bound_66(f, rat_parse(opt_L, "cli.bounds"), opt_p);
    emit(json{{"adjoint_bound", rv(b.adjoint_bound)}, {"bound", rv(b.bound)}});
  });

  CLI::App *threshold = bounds->add_subcommand("threshold", "semistability threshold");
  add_system(threshold);
  threshold->add_option("--L", opt_L, "maximal twist slope")->required();
  threshold->add_option("--p", opt_p, "characteristic")->required();
  threshold->callback([&] {
    RootSystem rs = current_system();
    ThresholdReport rep =
        semistable_threshold(rs, rat_parse(opt_L, "cli.bounds"), opt_p);
    emit(json{{"b_of_G", rv(rep.b_of_g)},
              {"product", rv(rep.product)},
              {"satisfied", rep.satisfied}});
  });

  CLI::App *slope = bounds->add_subcommand("slope", "limit slope bound along the tower");
  slope->add_option("--r", opt_r, "rank of the sheaf")->required();
  slope->add_option("--p", opt_p, "characteristic")->required();
  slope->add_option("--mu", opt_mu, "starting extreme slope")->required();
  slope->add_option("--L", opt_L, "maximal twist slope")->required();
  slope->add_flag("--min", opt_min, "bound the minimal slope instead");
  slope->callback([&] {
    Rat mu = rat_parse(opt_mu, "cli.bounds");
    Rat L = rat_parse(opt_L, "cli.bounds");
    Rat b = opt_min ? lmin_bound(opt_r, opt_p, mu, L) : lmax_bound(opt_r, opt_p, mu, L);
    emit(json{{"bound", rv(b)}});
  });

  CLI::App *tensor = bounds->add_subcommand("tensor", "slope ranges add under tensor");
  tensor->add_option("--first", opt_first, "lmax,lmin of the first factor")->required();
  tensor->add_option("--second", opt_second, "lmax,lmin of the second factor")
      ->required();
  tensor->callback([&] {
    RatVec a = parse_rat_list(opt_first, "cli.bounds");
    RatVec b = parse_rat_list(opt_second, "cli.bounds");
    if (a.size() != 2 || b.size() != 2)
      throw ValidationError("cli.bounds", "expected lmax,lmin pairs");
    SlopeRange ra = make_slope_range(a[1], a[0]);
    SlopeRange rb = make_slope_range(b[1], b[0]);
    SlopeRange rc = tensor_range(ra, rb);
    emit(json{{"lmax", rv(rc.lmax)}, {"lmin", rv(rc.lmin)}});
  });

  CLI::App *module_cmd = bounds->add_subcommand("module", "degree window of a module");
  module_cmd->add_option("--jh", opt_jh, "composition degree")->required();
  module_cmd->add_option("--lmax", opt_lmax, "maximal slope")->required();
  module_cmd->add_option("--lmin", opt_lmin, "minimal slope")->required();
  module_cmd->callback([&] {
    auto [lo, hi] = module_bound_82(opt_jh, rat_parse(opt_lmax, "cli.bounds"),
                                    rat_parse(opt_lmin, "cli.bounds"));
    emit(json{{"lower", rv(lo)}, {"upper", rv(hi)}});
  });

  CLI::App *rep = bounds->add_subcommand("rep", "representation instability bound");
  rep->add_option("--dim", opt_dim, "dimension of the representation")->required();
  rep->add_option("--jh", opt_jh, "composition degree")->required();
  rep->add_option("--L", opt_L, "slope gap")->required();
  rep->add_option("--p", opt_p, "characteristic")->required();
  rep->callback([&] {
    emit(json{{"bound",
               rv(rep_bound_83(opt_dim, opt_jh, rat_parse(opt_L, "cli.bounds"),
                               opt_p))}});
  });

  CLI::App *jh = bounds->add_subcommand("jh", "composition degree of a module");
  jh->add_option("--n", opt_dim, "dimension of V")->required();
  jh->add_option("--weights", opt_values,
                 "fundamental-weight multiplicities, '|' separated lists")
      ->required();
  jh->callback([&] {
    std::vector<DominantWeightSL> weights;
    for (const std::string &w : split(opt_values, '|')) {
      std::vector<std::int64_t> m;
      if (!w.empty())
        for (const std::string &entry : split(w, ','))
          m.push_back(parse_int64(entry, "cli.bounds"));
      weights.push_back(make_weight_sl(static_cast<int>(opt_dim), std::move(m)));
    }
    json degrees = json::array();
    for (const DominantWeightSL &w : weights)
      degrees.push_back(weight_degree(w));
    emit(json{{"degrees", degrees}, {"jh_degree", jh_degree(weights)}});
  });

  CLI::App *sandwich = bounds->add_subcommand("sandwich", "adjoint degree sandwich");
  sandwich->add_option("--deg-e", opt_deg_e, "instability degree of the bundle")
      ->required();
  sandwich->add_option("--deg-adj", opt_deg_adj, "instability degree of the adjoint")
      ->required();
  sandwich->add_option("--dim-g", opt_dim_g, "group dimension")->required();
  sandwich->add_option("--dim-l", opt_dim_l, "Levi dimension")->required();
  sandwich->callback([&] {
    SandwichReport r =
        adjoint_sandwich(rat_parse(opt_deg_e, "cli.bounds"),
                         rat_parse(opt_deg_adj, "cli.bounds"), opt_dim_g, opt_dim_l);
    emit(json{{"lower", rv(r.lower)}, {"ok", r.ok}, {"upper", rv(r.upper)}});
  });

  // ---- polygon ----
  CLI::App *polygon = app.add_subcommand("polygon", "slope filtration polygons");
  polygon->require_subcommand(1);

  // Quotient lists also arrive as JSON: {"quotients":[[1,"1"],[1,"0"]]}.
  auto quotients_from_json = [](const json &j, const std::string &loc) {
    std::vector<std::pair<std::int64_t, Rat>> out;
    if (!j.is_array())
      throw ValidationError(loc, "'quotients' must be an array of [rank, degree] pairs");
    for (const json &pair : j) {
      if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number_integer())
        throw ValidationError(loc, "each quotient must be a [rank, degree] pair");
      out.emplace_back(pair.at(0).get<std::int64_t>(), rat_from_json(pair.at(1), loc));
    }
    return out;
  };

  CLI::App *deghn = polygon->add_subcommand("deg-hn", "instability degree of a profile");
  deghn->add_option("--quotients", opt_quotients,
                    "rank:degree pairs, strictly decreasing slopes");
  deghn->add_option("--input", opt_input,
                    "JSON file or '-': {\"quotients\":[[1,\"1\"],[1,\"0\"]]}");
  deghn->callback([&] {
    const std::string loc = "cli.polygon";
    HNData h;
    if (!opt_input.empty()) {
      json in = load_json_input(opt_input);
      h = make_hn(quotients_from_json(require_field(in, "quotients", loc), loc));
    } else if (!opt_quotients.empty()) {
      h = make_hn(parse_quotients(opt_quotients, loc));
    } else {
      throw ValidationError(loc, "provide --quotients or --input");
    }
    emit(json{{"bounds_ok", hn_bounds_check(h)}, {"deg_hn", rv(deg_hn(h))}});
  });

  CLI::App *frob = polygon->add_subcommand("frobenius", "normalized degrees up a tower");
  frob->add_option("--p", opt_p, "characteristic");
  frob->add_option("--levels", opt_levels,
                   "profiles per level, '|' separated rank:degree lists");
  frob->add_option("--input", opt_input,
                   "JSON file or '-': {\"p\":2,\"levels\":[[[2,\"0\"]],...]}");
  frob->callback([&] {
    const std::string loc = "cli.polygon";
    std::vector<HNData> levels;
    long p = opt_p;
    if (!opt_input.empty()) {
      json in = load_json_input(opt_input);
      const json &pfield = require_field(in, "p", loc);
      if (!pfield.is_number_integer())
        throw ValidationError(loc, "field 'p' must be an integer");
      p = pfield.get<long>();
      const json &lv = require_field(in, "levels", loc);
      if (!lv.is_array())
        throw ValidationError(loc, "field 'levels' must be an array");
      for (const json &level : lv)
        levels.push_back(make_hn(quotients_from_json(level, loc)));
    } else if (!opt_levels.empty()) {
      for (const std::string &level : split(opt_levels, '|'))
        levels.push_back(make_hn(parse_quotients(level, loc)));
    } else {
      throw ValidationError(loc, "provide --levels or --input");
    }
    FrobeniusSequence seq = frobenius_sequence(levels, p);
    json vals = json::array();
    for (const Rat &x : seq.normalized)
      vals.push_back(rv(x));
    emit(json{{"monotone", seq.monotone}, {"normalized", vals}});
  });

  CLI::App *hilbert = polygon->add_subcommand("hilbert", "coefficients from samples");
  hilbert->add_option("--d", opt_ddim, "dimension")->required();
  hilbert->add_option("--samples", opt_samples, "m:chi pairs, d+1 of them")->required();
  hilbert->callback([&] {
    SheafNumerics s =
        hilbert_coefficients(parse_rat_pairs(opt_samples, "cli.polygon"), opt_ddim);
    json coeffs = json::array();
    for (const Rat &x : s.a)
      coeffs.push_back(rv(x));
    emit(json{{"coefficients", coeffs}, {"integral", s.integral}});
  });

  CLI::App *disc = polygon->add_subcommand("discriminant", "sheaf discriminant");
  disc->add_option("--r", opt_r, "rank")->required();
  disc->add_option("--c1sq", opt_c1sq, "c1 squared")->required();
  disc->add_option("--c2", opt_c2, "c2")->required();
  disc->callback([&] {
    emit(json{{"discriminant",
               rv(discriminant(opt_r, rat_parse(opt_c1sq, "cli.polygon"),
                               rat_parse(opt_c2, "cli.polygon")))}});
  });

  // ---- certify ----
  CLI::App *certify = app.add_subcommand("certify", "fan angles and contradiction tests");
  certify->require_subcommand(1);

  CLI::App *s0cmd = certify->add_subcommand("s0", "largest fan cosine");
  add_system(s0cmd);
  s0cmd->add_option("--cap", opt_cap, "largest rank accepted");
  s0cmd->callback([&] {
    RootSystem rs = current_system();
    S0Result r = s0_estimate(rs, opt_cap);
    emit(json{{"cos_sq", rv(r.cos_sq)},
              {"cos_sq_exact", r.cos_sq_exact},
              {"exact", r.exact},
              {"sign", r.sign},
              {"value", rv(r.value)},
              {"witness", r.witness}});
  });

  CLI::App *match = certify->add_subcommand("match", "chamber transport between facets");
  add_system(match);
  match->add_option("--I-p", opt_Ip, "first facet vertices")->required();
  match->add_option("--chamber-p", opt_chamber_p, "first chamber word");
  match->add_option("--I-q", opt_Iq, "second facet vertices")->required();
  match->add_option("--chamber-q", opt_chamber_q, "second chamber word");
  match->callback([&] {
    RootSystem rs = current_system();
    Facet fp = make_facet(
        rs, to_zero_based(parse_index_list(opt_Ip, "cli.certify"), "cli.certify"),
        weyl_from_word(rs, to_zero_based(parse_index_list(opt_chamber_p, "cli.certify"),
                                         "cli.certify")));
    Facet fq = make_facet(
        rs, to_zero_based(parse_index_list(opt_Iq, "cli.certify"), "cli.certify"),
        weyl_from_word(rs, to_zero_based(parse_index_list(opt_chamber_q, "cli.certify"),
                                         "cli.certify")));
    auto sigma = match_facets(fp, fq);
    if (sigma)
      emit(json{{"match", true}, {"word", word_1based(sigma->word)}});
    else
      emit(json{{"match", false}});
  });

  CLI::App *run_cert = certify->add_subcommand("run", "evaluate a contradiction certificate");
  run_cert->add_option("--input", opt_input, "JSON file or '-' for stdin")->required();
  run_cert->callback([&] {
    json in = load_json_input(opt_input);
    const std::string loc = "cli.certify";
    RootSystem rs =
        build_root_system(require_field(in, "type", loc).get<std::string>(),
                          require_field(in, "rank", loc).get<int>());
    InvariantProfile pp = profile_from_json(rs, require_field(in, "p", loc), loc);
    InvariantProfile pq = profile_from_json(rs, require_field(in, "q", loc), loc);
    std::vector<int> sigma_word = to_zero_based(
        index_list_from_json(require_field(in, "sigma", loc), loc), loc);
    WeylElement sigma = weyl_from_word(rs, sigma_word);
    Rat epsilon = rat_from_json(require_field(in, "epsilon", loc), loc);
    Rat s0 = in.contains("s0") ? rat_from_json(in.at("s0"), loc)
                               : s0_estimate(rs).value;
    Certificate cert = contradiction_certificate(pp, pq, sigma, epsilon, s0);
    emit(json{{"epsilon", rv(cert.epsilon)},
              {"facets_equal", cert.facets_equal},
              {"growth_ok", cert.growth_ok},
              {"norm_p_sq", rv(cert.norm_p_sq)},
              {"norm_q_sq", rv(cert.norm_q_sq)},
              {"pairing_ok", cert.pairing_ok},
              {"s0", rv(cert.s0)},
              {"verdict", verdict_str(cert.verdict)},
              {"violated", cert.violated},
              {"warning", cert.warning},
              {"window_ok", cert.window_ok}});
  });

  // ---- stabilize ----
  CLI::App *stabilize = app.add_subcommand("stabilize", "detect invariant stabilization");
  stabilize->add_option("--input", opt_input, "JSON file or '-' for stdin")->required();
  stabilize->add_option("--epsilon", opt_eps, "tolerance")->required();
  stabilize->callback([&] {
    json in = load_json_input(opt_input);
    const std::string loc = "cli.stabilize";
    RootSystem rs =
        build_root_system(require_field(in, "type", loc).get<std::string>(),
                          require_field(in, "rank", loc).get<int>());
    const json &entries_json = require_field(in, "entries", loc);
    if (!entries_json.is_array())
      throw ValidationError(loc, "field 'entries' must be an array");
    std::vector<InvariantSequence::Entry> entries;
    for (const json &e : entries_json) {
      InvariantSequence::Entry entry;
      const json &kfield = require_field(e, "k", loc);
      if (!kfield.is_number_integer())
        throw ValidationError(loc, "entry level 'k' must be an integer");
      entry.k = kfield.get<long long>();
      entry.facet = facet_from_json(rs, e, loc);
      const json &narr = require_field(e, "n", loc);
      if (!narr.is_array() || narr.size() != entry.facet.I.size())
        throw ValidationError(loc, "field 'n' must be an array aligned with I");
      for (const json &x : narr)
        entry.n.push_back(rat_from_json(x, loc));
      entries.push_back(std::move(entry));
    }
    const json &pfield = require_field(in, "p", loc);
    if (!pfield.is_number_integer())
      throw ValidationError(loc, "field 'p' must be an integer");
    InvariantSequence seq = make_invariant_sequence(pfield.get<long>(), std::move(entries));
    auto found = detect_stabilization(seq, rat_parse(opt_eps, loc));
    if (found)
      emit(json{{"found", true},
                {"indices", json::array({found->first + 1, found->second + 1})}});
    else
      emit(json{{"found", false}});
  });

  // ---- extend ----
  CLI::App *extend = app.add_subcommand("extend", "extend a sublattice functional");
  extend->add_option("--basis", opt_basis, "columns of the sublattice basis, ':' separated")
      ->required();
  extend->add_option("--values", opt_values, "prescribed values on the basis")
      ->required();
  extend->callback([&] {
    std::vector<std::vector<std::int64_t>> basis;
    for (const std::string &col : split(opt_basis, ':')) {
      std::vector<std::int64_t> column;
      for (const std::string &entry : split(col, ','))
        column.push_back(parse_int64(entry, "cli.extend"));
      basis.push_back(std::move(column));
    }
    std::vector<std::int64_t> values;
    if (!opt_values.empty())
      for (const std::string &entry : split(opt_values, ','))
        values.push_back(parse_int64(entry, "cli.extend"));
    LatticeFunctional f =
        extend_functional(static_cast<int>(basis.size()), basis, values);
    json ext = json::array();
    for (const Rat &x : f.extension)
      ext.push_back(rv(x));
    emit(json{{"extension", ext}, {"index", f.index.get_str()}});
  });

  // ---- parse and render ----
  std::vector<const char *> argv;
  argv.push_back("parastab");
  for (const std::string &a : args)
    argv.push_back(a.c_str());

  CliResult res;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!have_result)
      throw InternalError("cli.run", "no subcommand produced a result");
    res.code = 0;
    res.out = render(result, format);
  } catch (const CLI::Success &) {
    res.code = 0;
    res.out = app.help();
  } catch (const CLI::ParseError &e) {
    json err{{"code", "usage"}, {"location", "cli"}, {"message", e.what()}};
    res.code = 2;
    res.out = err.dump() + "\n";
  } catch (const Error &e) {
    json err{{"code", e.code()}, {"location", e.location()}, {"message", e.what()}};
    res.code = e.code() == "internal" ? 1 : 2;
    res.out = err.dump() + "\n";
  } catch (const std::exception &e) {
    json err{{"code", "internal"}, {"location", "cli"}, {"message", e.what()}};
    res.code = 1;
    res.out = err.dump() + "\n";
  }
  return res;
}

int cli_main(int argc, char **argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  CliResult res = cli_run(args);
  std::cout << res.out;
  return res.code;
}

} // namespace parastab
