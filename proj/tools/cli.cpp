#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idealiser/errors.hpp"
#include "idealiser/noether.hpp"
#include "idealiser/parser.hpp"

namespace idealiser::cli {

using nlohmann::ordered_json;

namespace {

// Error raised while reading user input that is not a ParseError.
class InputError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

MonomialOrder order_named(const std::string& name, std::size_t n) {
  if (name == "grevlex") return MonomialOrder::grevlex(n);
  if (name == "lex") return MonomialOrder::lex(n);
  throw InputError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

PolyRing make_ring(const std::vector<std::string>& vars, const std::string& order) {
  if (vars.empty()) throw InputError("ring needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& v = vars[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("invalid variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InputError("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[j] == v) throw InputError("duplicate variable '" + v + "'");
  }
  return PolyRing(vars, order_named(order, vars.size()));
}

Rational parse_rational(const std::string& text, const std::string& where) {
  try {
    return Rational::parse(trim(text));
  } catch (const Error& e) {
    throw InputError(where + ": " + e.what());
  }
}

// "1,0;0,1": rows separated by ';'.
std::vector<std::vector<Rational>> parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : split(text, ';')) {
    std::vector<Rational> r;
    for (const auto& e : split(row, ',')) r.push_back(parse_rational(e, "--action"));
    m.push_back(std::move(r));
  }
  return m;
}

TranslationAction make_action(const PolyRing& ring, const std::string& text) {
  if (text.empty()) return TranslationAction::standard(ring);
  return TranslationAction(ring, parse_matrix(text));
}

Poly parse_labelled(const std::string& text, const PolyRing& ring, const std::string& label) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    throw ParseError(e.position(), label + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

Ideal make_ideal(const std::vector<std::string>& gens, const PolyRing& ring, IdealFlags flags,
                 const std::string& label) {
  if (gens.empty()) throw InputError(label + ": at least one generator is required");
  std::vector<Poly> polys;
  for (std::size_t k = 0; k < gens.size(); ++k)
    polys.push_back(parse_labelled(gens[k], ring, label + "[" + std::to_string(k) + "]"));
  return Ideal(ring, std::move(polys), flags);
}

Point parse_point_text(const std::string& text, std::size_t n) {
  Point p;
  for (const auto& e : split(text, ',')) p.push_back(parse_rational(e, "--point"));
  if (p.size() != n) throw InputError("point has " + std::to_string(p.size()) + " coordinates, ring has " +
                                      std::to_string(n));
  return p;
}

Lattice parse_sublattice(const std::string& text, std::size_t d) {
  if (text.empty()) return Lattice::full(d);
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<Integer> r;
    for (const auto& e : split(row, ',')) {
      Rational q = parse_rational(e, "--sub");
      if (!q.is_integer()) throw InputError("--sub entries must be integers");
      r.push_back(q.numerator());
    }
    if (r.size() != d) throw InputError("--sub rows must have " + std::to_string(d) + " entries");
    rows.push_back(std::move(r));
  }
  return Lattice::from_generators(d, rows);
}

std::string join(const std::vector<GroupElement>& gs) {
  std::string s;
  for (const auto& g : gs) {
    if (!s.empty()) s += ' ';
    s += g.str();
  }
  return s;
}

void print_set(std::ostream& out, const LatticeSubsetReport& r) {
  out << (r.kind == SetKind::s ? "S" : "T") << "-set, box " << r.box << ", target " << r.target << ": "
      << r.members.size() << " members\n";
  if (!r.members.empty()) out << join(r.members) << "\n";
  out << "K-classes: " << r.cosets.size() << "\n";
}

void print_probe(std::ostream& out, const GrowthProbe& p) {
  out << "probe " << (p.side == Side::right ? "right" : "left") << " J=" << p.j << ":";
  for (std::size_t k = 0; k < p.radii.size(); ++k) out << " " << p.radii[k] << "->" << p.counts[k];
  out << " (" << p.trend << ")\n";
}

// ------------------------------------------------------------ config

struct Problem {
  PolyRing ring{std::vector<std::string>{"x"}};
  std::string order = "grevlex";
  std::vector<std::vector<Rational>> matrix;
  std::vector<std::string> generators;
  IdealFlags flags;
  std::int64_t box = 8;
  std::vector<std::int64_t> probe_radii{2, 4, 8};
  std::optional<std::size_t> pair_limit;
};

std::string json_rational(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_string()) return v.get<std::string>();
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

Problem load_problem(const ordered_json& cfg) {
  if (!cfg.is_object()) throw InputError("config must be a JSON object");
  Problem p;
  const auto& ring = cfg.value("ring", ordered_json::object());
  if (!ring.contains("vars") || !ring["vars"].is_array()) throw InputError("ring.vars: array of names required");
  std::vector<std::string> vars;
  for (const auto& v : ring["vars"]) {
    if (!v.is_string()) throw InputError("ring.vars: names must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (ring.contains("order")) {
    if (!ring["order"].is_string()) throw InputError("ring.order must be a string");
    p.order = ring["order"].get<std::string>();
  }
  p.ring = make_ring(vars, p.order);

  if (cfg.contains("action")) {
    const auto& a = cfg["action"];
    if (!a.is_object() || !a.contains("matrix") || !a["matrix"].is_array())
      throw InputError("action.matrix: array of rows required");
    for (std::size_t r = 0; r < a["matrix"].size(); ++r) {
      const auto& row = a["matrix"][r];
      if (!row.is_array()) throw InputError("action.matrix rows must be arrays");
      std::vector<Rational> out;
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string where = "action.matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
        out.push_back(parse_rational(json_rational(row[c], where), where));
      }
      p.matrix.push_back(std::move(out));
    }
  }

  const auto& ideal = cfg.value("ideal", ordered_json::object());
  if (!ideal.contains("generators") || !ideal["generators"].is_array())
    throw InputError("ideal.generators: array of polynomial strings required");
  for (const auto& g : ideal["generators"]) {
    if (!g.is_string()) throw InputError("ideal.generators entries must be strings");
    p.generators.push_back(g.get<std::string>());
  }
  if (p.generators.empty()) throw InputError("ideal.generators: at least one generator is required");
  if (ideal.contains("flags")) {
    const auto& f = ideal["flags"];
    if (!f.is_object()) throw InputError("ideal.flags must be an object");
    auto flag = [&](const char* key) {
      if (!f.contains(key)) return false;
      if (!f[key].is_boolean()) throw InputError(std::string("ideal.flags.") + key + " must be a boolean");
      return f[key].get<bool>();
    };
    p.flags.prime = flag("prime");
    p.flags.maximal = flag("maximal");
  }

  if (cfg.contains("options")) {
    const auto& o = cfg["options"];
    if (!o.is_object()) throw InputError("options must be an object");
    if (o.contains("box")) {
      if (!o["box"].is_number_integer() || o["box"].get<long long>() < 0)
        throw InputError("options.box must be a non-negative integer");
      p.box = o["box"].get<std::int64_t>();
    }
    if (o.contains("probe_radii")) {
      if (!o["probe_radii"].is_array()) throw InputError("options.probe_radii must be an array");
      p.probe_radii.clear();
      for (const auto& r : o["probe_radii"]) {
        if (!r.is_number_integer() || r.get<long long>() < 0)
          throw InputError("options.probe_radii entries must be non-negative integers");
        p.probe_radii.push_back(r.get<std::int64_t>());
      }
    }
    if (o.contains("pair_limit")) {
      if (!o["pair_limit"].is_number_integer() || o["pair_limit"].get<long long>() <= 0)
        throw InputError("options.pair_limit must be a positive integer");
      p.pair_limit = o["pair_limit"].get<std::size_t>();
    }
  }
  return p;
}

ordered_json echo(const Problem& p, const TranslationAction& act, const Ideal& ideal) {
  ordered_json cfg;
  cfg["ring"]["vars"] = p.ring.names();
  cfg["ring"]["order"] = p.order;
  ordered_json m = ordered_json::array();
  for (const auto& row : act.matrix()) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) r.push_back(e.str());
    m.push_back(r);
  }
  cfg["action"]["matrix"] = m;
  ordered_json gens = ordered_json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.str());
  cfg["ideal"]["generators"] = gens;
  cfg["ideal"]["flags"] = {{"prime", p.flags.prime}, {"maximal", p.flags.maximal}};
  cfg["options"]["box"] = p.box;
  cfg["options"]["probe_radii"] = p.probe_radii;
  cfg["options"]["pair_limit"] = default_pair_limit();
  return cfg;
}

// ------------------------------------------------------------ analyze

struct AnalyzeArgs {
  std::string config;
  bool json = false;
  bool timing = false;
  std::optional<std::int64_t> box;
  std::vector<std::int64_t> probe_radii;
  std::optional<std::size_t> pair_limit;
};

int analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::string stage = "config";
  // The cap is process-wide; drop it again so repeated runs do not inherit it.
  struct PairLimitReset {
    ~PairLimitReset() { set_default_pair_limit(0); }
  } reset;
  try {
    std::ifstream in(a.config);
    if (!in) throw InputError("cannot open config file '" + a.config + "'");
    ordered_json cfg;
    try {
      cfg = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.byte == 0 ? 0 : e.byte - 1, std::string("config JSON: ") + e.what());
    }
    Problem p = load_problem(cfg);
    if (a.box) {
      if (*a.box < 0) throw InputError("--box must be non-negative");
      p.box = *a.box;
    }
    if (!a.probe_radii.empty()) p.probe_radii = a.probe_radii;
    if (a.pair_limit) {
      set_default_pair_limit(*a.pair_limit);
    } else if (!std::getenv("IDEALISER_PAIR_LIMIT") && p.pair_limit) {
      set_default_pair_limit(*p.pair_limit);
    }
    TranslationAction act = p.matrix.empty() ? TranslationAction::standard(p.ring) : TranslationAction(p.ring, p.matrix);
    Ideal ideal = make_ideal(p.generators, p.ring, p.flags, "ideal.generators");

    ordered_json timing = ordered_json::object();
    auto timed = [&](const std::string& name, auto&& fn) {
      stage = name;
      auto t0 = std::chrono::steady_clock::now();
      auto result = fn();
      timing[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return result;
    };

    Lattice k = timed("stabiliser", [&] { return stabiliser(ideal, act); });
    Lattice h = timed("complement", [&] { return complement(k); });
    DecideOptions opts{h, p.box, kernels::Exec::parallel};
    SideVerdict right = timed("decide_right", [&] { return decide_right(ideal, act, opts); });
    SideVerdict left = timed("decide_left", [&] { return decide_left(ideal, act, opts); });
    Ideal j_right = probe_target(ideal, act, right, Side::right);
    Ideal j_left = probe_target(ideal, act, left, Side::left);
    auto sets = timed("sets", [&] {
      std::vector<LatticeSubsetReport> s;
      if (auto pt = rational_point(j_right)) {
        s.push_back(s_set_box(ideal, *pt, act, h, p.box));
      } else {
        s.push_back(s_set_box(ideal, j_right, act, h, p.box));
      }
      s.push_back(t_set_box(ideal, j_left, act, h, p.box));
      return s;
    });
    auto probes = timed("probes", [&] {
      return std::vector<GrowthProbe>{growth_probe(ideal, j_right, act, Side::right, p.probe_radii),
                                      growth_probe(ideal, j_left, act, Side::left, p.probe_radii)};
    });

    bool decided = right.answer != Answer::unknown && left.answer != Answer::unknown;
    if (a.json) {
      ordered_json rep;
      rep["version"] = 1;
      rep["config"] = echo(p, act, ideal);
      rep["stabiliser"] = to_json(k);
      rep["complement"] = to_json(h);
      ordered_json certs = ordered_json::array();
      for (const auto* v : {&right, &left})
        for (const auto& c : v->certificates) certs.push_back(to_json(c));
      rep["verdict"] = {{"right", answer_name(right.answer)}, {"left", answer_name(left.answer)}, {"certificates", certs}};
      ordered_json sj = ordered_json::array();
      for (const auto& s : sets) sj.push_back(to_json(s));
      rep["sets"] = sj;
      ordered_json pj = ordered_json::array();
      for (const auto& pr : probes) pj.push_back(to_json(pr));
      rep["probes"] = pj;
      if (a.timing) rep["timing_ms"] = timing;
      out << rep.dump(2) << "\n";
    } else {
      out << "ideal: " << ideal.str() << "\n";
      out << "stabiliser: " << k.str() << "\n";
      out << "complement: " << h.str() << "\n";
      out << "right: " << answer_name(right.answer) << " [" << rule_name(right.certificates.front().rule) << "]\n";
      out << "left: " << answer_name(left.answer) << " [" << rule_name(left.certificates.front().rule) << "]\n";
      for (const auto* v : {&right, &left})
        for (const auto& c : v->certificates)
          out << "certificate " << (c.side == Side::right ? "right " : "left ") << rule_name(c.rule) << ": "
              << c.payload.dump() << "\n";
      for (const auto& s : sets) print_set(out, s);
      for (const auto& pr : probes) print_probe(out, pr);
      if (a.timing)
        for (const auto& [name, ms] : timing.items()) out << "time " << name << ": " << ms.get<double>() << " ms\n";
    }
    return decided ? ok : unknown;
  } catch (const ResourceLimitError& e) {
    err << "resource limit during " << stage << ": " << e.what() << "\n";
    return resource_limit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

// ------------------------------------------------------------ subcommands

struct Common {
  std::string vars = "x,y";
  std::string order = "grevlex";
  std::string action;
  bool prime = false;
  bool maximal = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--vars", c.vars, "comma-separated variable names")->capture_default_str();
  app->add_option("--order", c.order, "grevlex or lex")->capture_default_str();
  app->add_option("--action", c.action, "action matrix rows 'a,b;c,d' (default identity)");
  app->add_flag("--prime", c.prime, "flag the ideal as prime");
  app->add_flag("--maximal", c.maximal, "flag the ideal as maximal");
}

struct Env {
  PolyRing ring;
  TranslationAction act;
  IdealFlags flags;
};

Env make_env(const Common& c) {
  std::vector<std::string> vars;
  for (const auto& v : split(c.vars, ',')) vars.push_back(trim(v));
  PolyRing ring = make_ring(vars, c.order);
  return {ring, make_action(ring, c.action), {c.prime, c.maximal}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idealiser subrings of skew group rings: construction and noetherianity"};
  app.name("idealiser");
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "full analysis of a JSON problem config");
  an->add_option("-c,--config", aa.config, "config file")->required();
  an->add_flag("--json", aa.json, "machine-readable report");
  an->add_flag("--timing", aa.timing, "include per-stage wall times");
  an->add_option("--box", aa.box, "override options.box")->check(CLI::NonNegativeNumber);
  an->add_option("--probe-radii", aa.probe_radii, "override options.probe_radii")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  an->add_option("--pair-limit", aa.pair_limit, "override the Groebner pair cap")->check(CLI::PositiveNumber);

  Common common;
  std::vector<std::string> gens, jgens;
  std::int64_t box = 8;
  std::string point, sub, side = "right";
  std::vector<std::int64_t> radii{2, 4, 8};
  bool use_complement = false, j_prime = false, general = false;
  std::size_t count = 1;
  std::string pell_n, lhs, rhs, element;

  auto* stab = app.add_subcommand("stab", "stabiliser lattice of an ideal");
  auto* comp = app.add_subcommand("complement", "stabiliser and a complement");
  auto* qt = app.add_subcommand("quotient-table", "(J : I^g) over a box");
  auto* tor = app.add_subcommand("tor", "Tor_1(C/I, C/J)");
  auto* sset = app.add_subcommand("sset", "S-set over a box");
  auto* tset = app.add_subcommand("tset", "T-set over a box");
  auto* pell = app.add_subcommand("pell", "solutions of x^2 - n y^2 = 1");
  auto* mul = app.add_subcommand("skewmul", "product in the skew group ring");
  auto* mem = app.add_subcommand("member", "idealiser membership of a skew element");
  auto* probe = app.add_subcommand("probe", "growth probe over several radii");

  for (auto* s : {stab, comp, qt, tor, sset, tset, mul, mem, probe}) add_common(s, common);
  for (auto* s : {stab, comp, qt, sset, tset, probe})
    s->add_option("generators", gens, "generators of I")->required();
  for (auto* s : {qt, sset, tset, probe}) {
    s->add_option("--box", box, "sup-norm radius")->capture_default_str();
    s->add_option("--j", jgens, "generators of J (repeatable)");
  }
  for (auto* s : {qt, probe}) s->add_flag("--j-prime", j_prime, "flag J as prime");
  qt->add_flag("--general", general, "always use the colon-ideal computation");
  for (auto* s : {sset, probe}) s->add_option("--point", point, "point 'a,b' (J = its ideal)");
  for (auto* s : {sset, tset}) {
    s->add_option("--sub", sub, "sublattice rows 'a,b;c,d' (default the full group)");
    s->add_flag("--complement", use_complement, "use the computed complement of the stabiliser");
  }
  tor->add_option("--i", gens, "generators of I")->required();
  tor->add_option("--j", jgens, "generators of J")->required();
  tor->add_flag("--j-prime", j_prime, "flag J as prime");
  pell->add_option("n", pell_n, "positive nonsquare integer")->required();
  pell->add_option("--count", count, "number of solutions")->capture_default_str();
  mul->add_option("a", lhs, "left factor")->required();
  mul->add_option("b", rhs, "right factor")->required();
  mem->add_option("element", element, "skew element")->required();
  mem->add_option("generators", gens, "generators of I")->required();
  probe->add_option("--side", side, "right or left")->capture_default_str();
  probe->add_option("--radii", radii, "comma-separated radii")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  if (an->parsed()) return analyze(aa, out, err);

  try {
    if (pell->parsed()) {
      Integer n;
      if (n.set_str(trim(pell_n), 10) != 0) throw InputError("pell: '" + pell_n + "' is not an integer");
      if (count == 0) throw InputError("pell: --count must be positive");
      auto sols = pell_enumerate(n, count);
      for (std::size_t k = 0; k < sols.size(); ++k)
        out << (k ? " " : "") << "(" << sols[k].x.get_str() << "," << sols[k].y.get_str() << ")";
      out << "\n";
      return ok;
    }

    Env env = make_env(common);
    const auto& ring = env.ring;
    const auto& act = env.act;
    if (mul->parsed()) {
      out << skew_mul(parse_skew(lhs, act), parse_skew(rhs, act)).str() << "\n";
      return ok;
    }
    if (tor->parsed()) {
      Ideal i = make_ideal(gens, ring, env.flags, "--i");
      Ideal j = make_ideal(jgens, ring, {.prime = j_prime}, "--j");
      Tor1Module t = tor1(i, j);
      out << "Tor1: " << (t.is_zero ? "zero" : "nonzero") << "\n";
      out << "method: " << t.method << "\n";
      out << "dimension probe:";
      for (auto d : t.dimension_probe) out << " " << d;
      out << "\n";
      return ok;
    }

    Ideal i = make_ideal(gens, ring, env.flags, "generators");
    if (stab->parsed()) {
      out << "lattice basis: " << stabiliser(i, act).str() << "\n";
      return ok;
    }
    if (comp->parsed()) {
      Lattice k = stabiliser(i, act);
      out << "stabiliser basis: " << k.str() << "\n";
      out << "complement basis: " << complement(k).str() << "\n";
      return ok;
    }
    if (mem->parsed()) {
      out << (idealiser_membership(parse_skew(element, act), i) ? "true" : "false") << "\n";
      return ok;
    }

    std::optional<Point> pt;
    if (!point.empty()) pt = parse_point_text(point, ring.nvars());
    auto j_ideal = [&]() -> Ideal {
      if (pt) return point_ideal(ring, *pt);
      if (jgens.empty()) return i;
      return make_ideal(jgens, ring, {.prime = j_prime}, "--j");
    };
    auto sublattice = [&]() {
      if (use_complement) return complement(stabiliser(i, act));
      return parse_sublattice(sub, act.d());
    };
    if (box < 0) throw InputError("--box must be non-negative");

    if (qt->parsed()) {
      Ideal j = j_ideal();
      auto table = quotient_table(j, i, act, box, general ? QuotientMethod::general : QuotientMethod::automatic);
      for (const auto& e : table) out << e.g.str() << ": " << e.ideal.str() << "\n";
      return ok;
    }
    if (sset->parsed()) {
      Lattice s = sublattice();
      print_set(out, pt ? s_set_box(i, *pt, act, s, box) : s_set_box(i, j_ideal(), act, s, box));
      return ok;
    }
    if (tset->parsed()) {
      if (jgens.empty()) throw InputError("tset: --j is required");
      print_set(out, t_set_box(i, j_ideal(), act, sublattice(), box));
      return ok;
    }
    if (probe->parsed()) {
      if (side != "right" && side != "left") throw InputError("--side must be right or left");
      print_probe(out, growth_probe(i, j_ideal(), act, side == "right" ? Side::right : Side::left, radii));
      return ok;
    }
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return resource_limit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace idealiser::cli
