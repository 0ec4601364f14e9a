#include "iwahori/cli.hpp"

#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "iwahori/bernoulli.hpp"
#include "iwahori/chevalley.hpp"
#include "iwahori/error.hpp"
#include "iwahori/galois.hpp"
#include "iwahori/generators.hpp"
#include "iwahori/json_io.hpp"
#include "iwahori/reps.hpp"
#include "iwahori/verify.hpp"

namespace iwahori {

namespace {

struct Flags {
  std::string type;
  std::optional<int> rank;
  std::string group;
  std::optional<int> p;
  int level = 2;
  std::string format = "text";
  bool json_flag = false;
  std::size_t bound = 5'000'000;
  std::uint64_t seed = 1;
  // chevalley
  std::string alpha, beta;
  int samples = 0;
  // verify
  std::optional<std::size_t> drop;
  bool no_drop = false;
  bool no_frattini = false;
  std::string experiment;
  // galois
  bool check_regular = false;

  bool json() const { return json_flag || format == "json"; }
};

std::string vec(const std::vector<int>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

std::string vec(const std::vector<long>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

std::vector<int> parse_coeffs(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("bad coefficient list '" + s + "'");
    }
  }
  return out;
}

std::vector<SimpleType> parse_types(const Flags& f) {
  require(!f.type.empty(), "--type is required for this group");
  std::vector<SimpleType> out;
  std::stringstream in(f.type);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_simple_type(item, f.rank));
  require(!out.empty(), "empty --type");
  require(out.size() == 1 || !f.rank, "--rank applies to a single --type only");
  return out;
}

// SL, PGL and GL take --rank as the matrix size n; Sp takes l for Sp_2l;
// sc and adjoint (the default) take a Cartan type.
RootDatum resolve_datum(const Flags& f) {
  const std::string& g = f.group;
  if (g == "SL" || g == "PGL" || g == "GL") {
    require(f.type.empty() || f.type == "A", "--type does not apply to --group " + g);
    require(f.rank && *f.rank >= 2, "--group " + g + " needs --rank n >= 2 (the matrix size)");
    if (g == "GL") return RootDatum::general_linear(*f.rank);
    auto rs = build_root_system(CartanType::A, *f.rank - 1);
    return g == "SL" ? RootDatum::simply_connected(std::move(rs)) : RootDatum::adjoint(std::move(rs));
  }
  if (g == "Sp") {
    require(f.type.empty() || f.type == "C", "--type does not apply to --group Sp");
    require(f.rank && *f.rank >= 1, "--group Sp needs --rank l (for Sp_2l)");
    if (*f.rank == 1) return RootDatum::simply_connected(build_root_system(CartanType::A, 1));
    return RootDatum::simply_connected(build_root_system(CartanType::C, *f.rank));
  }
  auto rs = RootSystem::build(parse_types(f));
  return g == "sc" ? RootDatum::simply_connected(std::move(rs)) : RootDatum::adjoint(std::move(rs));
}

std::string label(const RootDatum& rd) {
  std::string s;
  for (const auto& c : rd.system().components()) s += (s.empty() ? "" : "x") + to_string(c.type);
  return s + " (" + to_string(rd.preset()) + ")";
}

int require_p(const Flags& f) {
  require(f.p.has_value(), "--p is required");
  require(*f.p >= 3 && *f.p % 2 == 1 && is_prime(*f.p), "--p must be an odd prime");
  return *f.p;
}

// ---------------------------------------------------------------------------

int cmd_roots(const Flags& f, std::ostream& out) {
  const auto rd = resolve_datum(f);
  if (f.p) require_p(f);
  if (f.json()) {
    out << to_json(rd, f.p).dump(2) << '\n';
    return 0;
  }
  const auto& rs = rd.system();
  out << label(rd) << ": rank " << rs.rank() << ", lattice rank " << rd.lattice_rank() << ", " << rs.num_roots()
      << " roots\n";
  for (int c = 0; c < rs.num_components(); ++c)
    out << "component " << c << ": " << to_string(rs.components()[static_cast<std::size_t>(c)].type)
        << ", highest root " << vec(rs.root(rs.highest_root(c)).coeffs) << '\n';
  out << "positive roots:\n";
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& r = rs.root(i);
    out << "  " << vec(r.coeffs) << "  height " << r.height << "  " << (r.length == LengthClass::Long ? "long" : "short")
        << '\n';
  }
  if (f.p) {
    const auto S = pro_p_basis_S(rd, *f.p);
    out << "S (p = " << *f.p << "):";
    if (S.S.empty()) out << " empty";
    for (const auto& s : S.S) out << ' ' << vec(s);
    out << '\n';
  }
  return 0;
}

std::string term_text(const CommutatorTerm& t, const RootSystem& rs) {
  std::ostringstream s;
  s << "x_" << vec(rs.root(t.root).coeffs) << '(' << t.coeff;
  if (t.i) s << " u" << (t.i > 1 ? "^" + std::to_string(t.i) : "");
  if (t.j) s << " v" << (t.j > 1 ? "^" + std::to_string(t.j) : "");
  return s.str() + ')';
}

int cmd_chevalley(const Flags& f, std::ostream& out) {
  const auto rd = resolve_datum(f);
  const auto& rs = rd.system();
  const auto sc = StructureConstants::compute(rs);

  std::vector<CommutatorExpansion> expansions;
  if (!f.alpha.empty() || !f.beta.empty()) {
    require(!f.alpha.empty() && !f.beta.empty(), "--alpha and --beta go together");
    const auto a = rs.find(parse_coeffs(f.alpha)), b = rs.find(parse_coeffs(f.beta));
    require(a && b, "--alpha and --beta must be roots");
    expansions.push_back(commutator_expansion(sc, *a, *b));
  } else {
    // Every oriented pair of positive roots whose commutator is nontrivial.
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        if (a == b || !rs.sum(a, b)) continue;
        if (rs.norm2(a) > rs.norm2(b) || (rs.norm2(a) == rs.norm2(b) && a > b)) continue;
        expansions.push_back(commutator_expansion(sc, a, b));
      }
  }

  json check = nullptr;
  if (f.samples > 0) {
    const int p = require_p(f);
    require(f.level >= 1, "--level must be >= 1");
    const AdjointRep rep(rd, p, f.level);
    const UnipotentGroup u(sc, p, f.level);
    std::mt19937_64 rng(f.seed);
    std::uniform_int_distribution<int> root(0, rs.num_positive() - 1);
    std::uniform_int_distribution<long> arg(0, u.modulus() - 1);
    int agree = 0;
    for (int s = 0; s < f.samples; ++s) {
      std::vector<Letter> letters(6);
      ModMatrix direct = ModMatrix::identity(rep.dimension(), rep.modulus());
      for (auto& l : letters) {
        l = {root(rng), arg(rng)};
        direct = direct * rep.x(l.root, l.t);
      }
      agree += rep.evaluate(u.collect(letters)) == direct;
    }
    check = {{"samples", f.samples}, {"agree", agree}, {"seed", f.seed}, {"p", p}, {"level", f.level}};
    ensure(agree == f.samples, "collection disagrees with the adjoint representation");
  }

  if (f.json()) {
    json j;
    j["datum"] = label(rd);
    j["expansions"] = json::array();
    for (const auto& e : expansions) j["expansions"].push_back(to_json(e, rs));
    if (!check.is_null()) j["collection_check"] = check;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << label(rd) << ": " << expansions.size() << " commutator expansion(s)\n";
  for (const auto& e : expansions) {
    out << "[x_" << vec(rs.root(e.beta).coeffs) << "(v) : x_" << vec(rs.root(e.alpha).coeffs) << "(u)]  (r,s) = ("
        << e.chain.r << ',' << e.chain.s << ") =";
    if (e.terms.empty()) out << " 1";
    for (const auto& t : e.terms) out << ' ' << term_text(t, rs);
    out << '\n';
  }
  if (!check.is_null())
    out << "collection check: " << check["agree"] << '/' << f.samples << " random words agree (seed " << f.seed << ")\n";
  return 0;
}

int cmd_gens(const Flags& f, std::ostream& out) {
  const auto rd = resolve_datum(f);
  const int p = require_p(f);
  const auto g = theorem_generators(rd, p);
  if (f.json()) {
    out << to_json(g, rd.system()).dump(2) << '\n';
    return 0;
  }
  out << label(rd) << ", p = " << p << ": " << g.size() << " generators\n";
  for (const auto& x : g.generators) out << "  " << describe(x, rd.system()) << "  [" << to_string(x.family) << "]\n";
  return 0;
}

int cmd_frattini(const Flags& f, std::ostream& out) {
  const auto rd = resolve_datum(f);
  const int p = require_p(f);
  const auto m = frattini_module(rd, p);
  std::optional<bool> free;
  if (rd.system().num_components() == 1) free = is_multiplicity_free(rd, p);
  if (f.json()) {
    auto j = to_json(m);
    j["multiplicity_free"] = free ? json(*free) : json(nullptr);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << label(rd) << ", p = " << p << ": dimension " << m.dimension() << ", trivial rank " << m.trivial_rank << '\n';
  out << "characters (mod p-1):";
  for (const auto& c : m.characters) out << ' ' << vec(c);
  out << '\n';
  if (free) out << "multiplicity_free=" << (*free ? "true" : "false") << '\n';
  return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  require(f.level >= 1, "--level must be >= 1");
  if (f.experiment == "hasse") {
    const auto types = parse_types(f);
    json arr = json::array();
    bool all = true;
    for (auto t : types) {
      const auto h = hasse_experiment(t);
      all = all && h.holds();
      const auto rs = build_root_system(t);
      json ce = json::array();
      for (int r : h.counterexamples) ce.push_back(rs.root(r).coeffs);
      arr.push_back({{"type", to_string(t)}, {"checked", h.checked}, {"holds", h.holds()}, {"counterexamples", ce}});
      if (!f.json())
        out << to_string(t) << ": " << h.checked << " positive roots checked, "
            << (h.holds() ? "every non-highest root is raised by a simple root"
                          : std::to_string(h.counterexamples.size()) + " counterexample(s)")
            << '\n';
    }
    if (f.json()) out << json{{"experiment", "hasse"}, {"results", arr}, {"holds", all}}.dump(2) << '\n';
    return 0;
  }
  if (f.experiment == "g2-span") {
    const int p = require_p(f);
    const auto r = verify_g2_span(p, f.level);
    json ids = json::array();
    for (const auto& i : r.identities) ids.push_back({{"name", i.name}, {"holds", i.holds}, {"coefficients", i.coefficients}});
    json j = {{"experiment", "g2-span"},
              {"p", r.p},
              {"level", r.k},
              {"unipotent_order", r.unipotent_order},
              {"simple_span_order", r.simple_span_order},
              {"index", r.index},
              {"with_delta_order", r.with_delta_order ? json(*r.with_delta_order) : json(nullptr)},
              {"identities", ids},
              {"erratum_support_ok", r.erratum_support_ok},
              {"pass", r.pass}};
    if (f.json()) {
      out << j.dump(2) << '\n';
    } else {
      out << "G2, p = " << p << ": |U(F_p)| = " << r.unipotent_order << ", |<x_a(1), x_b(1)>| = " << r.simple_span_order
          << ", index " << r.index << '\n';
      if (r.with_delta_order) out << "with x_(1,1)(1): " << *r.with_delta_order << '\n';
      for (const auto& i : r.identities) out << "  " << i.name << ": " << (i.holds ? "holds" : "FAILS") << '\n';
      out << "pass=" << (r.pass ? "true" : "false") << '\n';
    }
    return 0;
  }
  if (f.experiment == "torus") {
    const int p = require_p(f);
    require(f.level >= 2, "the torus identity needs --level >= 2");
    const bool ok = verify_torus_identity(p, f.level);
    if (f.json())
      out << json{{"experiment", "torus"}, {"p", p}, {"level", f.level}, {"holds", ok}}.dump(2) << '\n';
    else
      out << "torus identity mod " << p << "^" << f.level << ": " << (ok ? "holds" : "FAILS") << '\n';
    return 0;
  }
  require(f.experiment.empty(), "unknown --experiment '" + f.experiment + "'");

  const auto rd = resolve_datum(f);
  const int p = require_p(f);
  VerifyOptions opts;
  opts.bound = f.bound;
  opts.drop_one = !f.no_drop;
  opts.frattini = !f.no_frattini;
  opts.only_drop = f.drop;
  const auto r = verify_generation(rd, p, f.level, opts);
  if (f.json()) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << label(rd) << ", p = " << p << ", level " << r.k << ", " << r.representation << " representation\n";
    out << "generators: " << r.generator_count << '\n';
    out << "order: " << r.achieved_order;
    if (r.expected_order) out << " (expected " << *r.expected_order << ')';
    out << '\n';
    for (const auto& d : r.drop_one)
      out << "  drop " << d.dropped << " " << d.generator << ": "
          << (d.conclusive ? "order " + std::to_string(d.order) + ", index " + std::to_string(d.index) +
                                 (d.proper ? ", proper" : ", NOT proper")
                           : std::string("inconclusive"))
          << '\n';
    if (r.frattini_rank) out << "Frattini rank: " << *r.frattini_rank << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    out << "pass=" << (r.pass ? "true" : "false") << '\n';
  }
  return r.conclusive ? 0 : 2;
}

int cmd_galois(const Flags& f, std::ostream& out) {
  require(f.group.empty() || f.group == "adjoint", "galois works with the adjoint datum");
  const auto rd = resolve_datum(f);
  const int p = require_p(f);
  CriterionOptions opts;
  opts.check_regular = f.check_regular;
  const auto r = criterion(rd, p, opts);
  if (f.json()) {
    out << to_json(r).dump(2) << '\n';
    return 0;
  }
  out << to_string(r.type) << ", p = " << p << '\n';
  out << "B(G): " << (r.bg_holds ? "holds" : "fails") << '\n';
  out << "S empty: " << (r.s_empty ? "yes" : "no") << '\n';
  out << "threshold: " << threshold_for(r.type, p) << '\n';
  if (r.regular) out << "regular: " << (*r.regular ? "yes" : "no") << '\n';
  if (r.witness && r.holds) {
    std::vector<long> head(r.witness->phi.begin(), r.witness->phi.end() - 1);
    out << "witness (" << r.method << "): phi = " << vec(head) << ", phi_last = " << r.witness->phi.back() << '\n';
  } else if (r.bg_holds && r.impossible) {
    out << "no assignment exists\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  out << "criterion=" << (r.holds ? "true" : "false") << '\n';
  return 0;
}

void add_datum_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--type", f.type, "Cartan type: B, B3, or a comma list such as A2,G2");
  sub->add_option("--rank", f.rank, "rank (matrix size n for SL/PGL/GL, l for Sp_2l)");
  sub->add_option("--group", f.group, "preset: SL, PGL, GL, Sp, sc or adjoint (default adjoint)")
      ->check(CLI::IsMember({"SL", "PGL", "GL", "Sp", "sc", "adjoint"}));
}

void add_output_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--json", f.json_flag, "same as --format json");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Pro-p Iwahori generators, verification and the Galois criterion", "iwahori"};
  app.require_subcommand(1, 1);

  auto* roots = app.add_subcommand("roots", "root system, highest roots and S");
  add_datum_flags(roots, f);
  roots->add_option("--p", f.p, "odd prime for S");
  add_output_flags(roots, f);

  auto* chev = app.add_subcommand("chevalley", "commutator expansions from the structure constants");
  add_datum_flags(chev, f);
  chev->add_option("--alpha", f.alpha, "short root, e.g. 1,0");
  chev->add_option("--beta", f.beta, "long root, e.g. 0,1");
  chev->add_option("--samples", f.samples, "random collection checks against the adjoint representation")
      ->check(CLI::NonNegativeNumber);
  chev->add_option("--p", f.p, "odd prime for --samples");
  chev->add_option("--level", f.level, "work mod p^level");
  chev->add_option("--seed", f.seed, "random seed");
  add_output_flags(chev, f);

  auto* gens = app.add_subcommand("gens", "minimal topological generators of I(1)");
  add_datum_flags(gens, f);
  gens->add_option("--p", f.p, "odd prime")->required();
  add_output_flags(gens, f);

  auto* frat = app.add_subcommand("frattini-module", "characters of the Frattini quotient");
  add_datum_flags(frat, f);
  frat->add_option("--p", f.p, "odd prime")->required();
  add_output_flags(frat, f);

  auto* ver = app.add_subcommand("verify", "finite-level generation and minimality checks");
  add_datum_flags(ver, f);
  ver->add_option("--p", f.p, "odd prime");
  ver->add_option("--level", f.level, "work mod p^level (default 2)");
  ver->add_option("--bound", f.bound, "element bound for closures");
  ver->add_option("--drop", f.drop, "only test dropping generator i");
  ver->add_flag("--no-drop-one", f.no_drop, "skip the drop-one tests");
  ver->add_flag("--no-frattini", f.no_frattini, "skip the Frattini rank");
  ver->add_option("--experiment", f.experiment, "hasse, g2-span or torus")
      ->check(CLI::IsMember({"hasse", "g2-span", "torus"}));
  ver->add_option("--seed", f.seed, "accepted for uniformity; verification is deterministic");
  add_output_flags(ver, f);

  auto* gal = app.add_subcommand("galois", "character criterion for K = Q(mu_p)");
  add_datum_flags(gal, f);
  gal->add_option("--p", f.p, "odd prime")->required();
  gal->add_flag("--check-regular", f.check_regular, "also test whether p is regular");
  add_output_flags(gal, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (roots->parsed()) return cmd_roots(f, out);
    if (chev->parsed()) return cmd_chevalley(f, out);
    if (gens->parsed()) return cmd_gens(f, out);
    if (frat->parsed()) return cmd_frattini(f, out);
    if (ver->parsed()) return cmd_verify(f, out);
    if (gal->parsed()) return cmd_galois(f, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (reached " << e.reached() << ")\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace iwahori
