#include "iwahori/json_io.hpp"

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

// nlohmann reports schema problems as json::exception; surface them as
// domain errors like every other malformed input.
template <class F>
auto decode(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

int root_index(const json& coeffs, const RootSystem& rs) {
  const auto v = coeffs.get<std::vector<int>>();
  const auto i = rs.find(v);
  require(i.has_value(), "not a root: " + coeffs.dump());
  return *i;
}

GeneratorFamily family_from_string(const std::string& s) {
  for (auto f : {GeneratorFamily::Semisimple, GeneratorFamily::SimpleUnipotent, GeneratorFamily::LowestUnipotent,
                 GeneratorFamily::G2Extra})
    if (to_string(f) == s) return f;
  throw DomainError("unknown generator family '" + s + "'");
}

}  // namespace

json to_json(const RootDatum& rd, std::optional<int> p) {
  const auto& rs = rd.system();
  json j;
  j["preset"] = to_string(rd.preset());
  j["lattice_rank"] = rd.lattice_rank();
  j["components"] = json::array();
  for (int c = 0; c < rs.num_components(); ++c) {
    const auto& comp = rs.components()[static_cast<std::size_t>(c)];
    j["components"].push_back({{"type", to_string(comp.type)},
                               {"offset", comp.offset},
                               {"highest_root", rs.root(rs.highest_root(c)).coeffs}});
  }
  j["roots"] = json::array();
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& r = rs.root(i);
    j["roots"].push_back({{"coeffs", r.coeffs},
                          {"height", r.height},
                          {"length", r.length == LengthClass::Long ? "long" : "short"},
                          {"component", r.component}});
  }
  j["num_roots"] = rs.num_roots();
  if (p) {
    j["p"] = *p;
    j["S"] = pro_p_basis_S(rd, *p).S;
  }
  return j;
}

RootSystem root_system_from_json(const json& j) {
  return decode("root system", [&] {
    std::vector<SimpleType> comps;
    for (const auto& c : j.at("components")) comps.push_back(parse_simple_type(c.at("type").get<std::string>()));
    auto rs = RootSystem::build(comps);
    const auto& roots = j.at("roots");
    require(roots.size() == static_cast<std::size_t>(rs.num_positive()), "root count does not match the components");
    for (int i = 0; i < rs.num_positive(); ++i) {
      const auto& r = roots[static_cast<std::size_t>(i)];
      require(r.at("coeffs").get<std::vector<int>>() == rs.root(i).coeffs, "root list does not match the components");
      require(r.at("height").get<int>() == rs.root(i).height, "height mismatch");
    }
    return rs;
  });
}

json to_json(const CommutatorExpansion& e, const RootSystem& rs) {
  json j;
  j["pair"] = {rs.root(e.alpha).coeffs, rs.root(e.beta).coeffs};
  j["rs"] = {e.chain.r, e.chain.s};
  j["terms"] = json::array();
  for (const auto& t : e.terms)
    j["terms"].push_back({{"root", rs.root(t.root).coeffs}, {"coeff", t.coeff}, {"deg", {t.i, t.j}}});
  return j;
}

CommutatorExpansion commutator_from_json(const json& j, const RootSystem& rs) {
  return decode("commutator", [&] {
    CommutatorExpansion e;
    e.alpha = root_index(j.at("pair").at(0), rs);
    e.beta = root_index(j.at("pair").at(1), rs);
    e.chain = {j.at("rs").at(0).get<int>(), j.at("rs").at(1).get<int>()};
    for (const auto& t : j.at("terms"))
      e.terms.push_back({root_index(t.at("root"), rs), t.at("deg").at(0).get<int>(), t.at("deg").at(1).get<int>(),
                         t.at("coeff").get<long>()});
    return e;
  });
}

json to_json(const ModMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    std::vector<long> row(m.a.begin() + i * m.n, m.a.begin() + (i + 1) * m.n);
    rows.push_back(row);
  }
  return {{"modulus", m.modulus}, {"n", m.n}, {"rows", rows}};
}

ModMatrix mod_matrix_from_json(const json& j) {
  return decode("matrix", [&] {
    ModMatrix m = ModMatrix::zero(j.at("n").get<int>(), j.at("modulus").get<long>());
    const auto& rows = j.at("rows");
    require(rows.size() == static_cast<std::size_t>(m.n), "row count does not match n");
    for (int i = 0; i < m.n; ++i) {
      const auto row = rows[static_cast<std::size_t>(i)].get<std::vector<long>>();
      require(row.size() == static_cast<std::size_t>(m.n), "row length does not match n");
      for (int c = 0; c < m.n; ++c) m(i, c) = mod_reduce(row[static_cast<std::size_t>(c)], m.modulus);
    }
    return m;
  });
}

json to_json(const Generator& g, const RootSystem& rs) {
  if (!g.is_unipotent()) return {{"kind", "semisimple"}, {"cochar", g.cochar}, {"arg", "1+p"}};
  return {{"kind", "unipotent"},
          {"family", to_string(g.family)},
          {"component", g.component},
          {"root", rs.root(g.root).coeffs},
          {"arg", g.arg_is_p ? "p" : "1"}};
}

Generator generator_from_json(const json& j, const RootSystem& rs) {
  return decode("generator", [&] {
    Generator g{GeneratorFamily::Semisimple, -1, -1, false, {}};
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "semisimple") {
      require(j.at("arg") == "1+p", "semisimple generators take the argument 1+p");
      g.cochar = j.at("cochar").get<std::vector<long>>();
      return g;
    }
    require(kind == "unipotent", "unknown generator kind '" + kind + "'");
    g.family = family_from_string(j.at("family").get<std::string>());
    g.component = j.at("component").get<int>();
    g.root = root_index(j.at("root"), rs);
    const auto arg = j.at("arg").get<std::string>();
    require(arg == "1" || arg == "p", "unipotent argument must be \"1\" or \"p\"");
    g.arg_is_p = arg == "p";
    return g;
  });
}

json to_json(const GeneratorSpec& g, const RootSystem& rs) {
  json gens = json::array();
  for (const auto& x : g.generators) gens.push_back(to_json(x, rs));
  return {{"p", g.p}, {"count", g.size()}, {"generators", gens}};
}

GeneratorSpec generator_spec_from_json(const json& j, const RootSystem& rs) {
  return decode("generator list", [&] {
    GeneratorSpec g;
    g.p = j.at("p").get<int>();
    for (const auto& x : j.at("generators")) g.generators.push_back(generator_from_json(x, rs));
    return g;
  });
}

json to_json(const FrattiniModule& m) {
  return {{"p", m.p}, {"trivial_rank", m.trivial_rank}, {"characters", m.characters}, {"dimension", m.dimension()}};
}

FrattiniModule frattini_module_from_json(const json& j) {
  return decode("Frattini module", [&] {
    FrattiniModule m;
    m.p = j.at("p").get<int>();
    m.trivial_rank = j.at("trivial_rank").get<std::size_t>();
    m.characters = j.at("characters").get<std::vector<std::vector<long>>>();
    return m;
  });
}

json to_json(const VerificationReport& r) {
  json j;
  j["representation"] = r.representation;
  j["p"] = r.p;
  j["level"] = r.k;
  j["generator_count"] = r.generator_count;
  j["expected_order"] = r.expected_order ? json(*r.expected_order) : json(nullptr);
  j["achieved_order"] = r.achieved_order;
  j["faithful"] = r.faithful;
  j["conclusive"] = r.conclusive;
  j["drop_one"] = json::array();
  for (const auto& d : r.drop_one)
    j["drop_one"].push_back({{"dropped", d.dropped},
                             {"generator", d.generator},
                             {"conclusive", d.conclusive},
                             {"order", d.order},
                             {"proper", d.proper},
                             {"index", d.index}});
  j["frattini_rank"] = r.frattini_rank ? json(*r.frattini_rank) : json(nullptr);
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  return j;
}

VerificationReport verification_report_from_json(const json& j) {
  return decode("verification report", [&] {
    VerificationReport r;
    r.representation = j.at("representation").get<std::string>();
    r.p = j.at("p").get<int>();
    r.k = j.at("level").get<int>();
    r.generator_count = j.at("generator_count").get<std::size_t>();
    if (!j.at("expected_order").is_null()) r.expected_order = j.at("expected_order").get<std::size_t>();
    r.achieved_order = j.at("achieved_order").get<std::size_t>();
    r.faithful = j.at("faithful").get<bool>();
    r.conclusive = j.at("conclusive").get<bool>();
    for (const auto& d : j.at("drop_one"))
      r.drop_one.push_back({d.at("dropped").get<std::size_t>(), d.at("generator").get<std::string>(),
                            d.at("conclusive").get<bool>(), d.at("order").get<std::size_t>(),
                            d.at("proper").get<bool>(), d.at("index").get<std::size_t>()});
    if (!j.at("frattini_rank").is_null()) r.frattini_rank = j.at("frattini_rank").get<int>();
    r.pass = j.at("pass").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

json to_json(const CharacterAssignment& a) {
  return {{"modulus", a.modulus},
          {"phi", a.phi},
          {"n", a.n},
          {"phi_last", a.phi.empty() ? json(nullptr) : json(a.phi.back())}};
}

CharacterAssignment assignment_from_json(const json& j) {
  return decode("character assignment", [&] {
    CharacterAssignment a;
    a.modulus = j.at("modulus").get<long>();
    a.phi = j.at("phi").get<std::vector<long>>();
    a.n = j.at("n").get<std::vector<int>>();
    return a;
  });
}

json to_json(const CriterionReport& r) {
  json j;
  j["type"] = to_string(r.type);
  j["p"] = r.p;
  j["bg_holds"] = r.bg_holds;
  j["s_empty"] = r.s_empty;
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  j["method"] = r.method;
  j["impossible"] = r.impossible;
  j["regular"] = r.regular ? json(*r.regular) : json(nullptr);
  j["threshold"] = {{"p_1_mod_4", r.threshold.p_1_mod_4},
                    {"p_3_mod_4", r.threshold.p_3_mod_4},
                    {"exceptional", r.threshold.exceptional}};
  j["holds"] = r.holds;
  j["notes"] = r.notes;
  return j;
}

CriterionReport criterion_report_from_json(const json& j) {
  return decode("criterion report", [&] {
    CriterionReport r;
    r.type = parse_simple_type(j.at("type").get<std::string>());
    r.p = j.at("p").get<long>();
    r.bg_holds = j.at("bg_holds").get<bool>();
    r.s_empty = j.at("s_empty").get<bool>();
    if (!j.at("witness").is_null()) r.witness = assignment_from_json(j.at("witness"));
    r.method = j.at("method").get<std::string>();
    r.impossible = j.at("impossible").get<bool>();
    if (!j.at("regular").is_null()) r.regular = j.at("regular").get<bool>();
    const auto& t = j.at("threshold");
    r.threshold = {t.at("p_1_mod_4").get<long>(), t.at("p_3_mod_4").get<long>(), t.at("exceptional").get<bool>()};
    r.holds = j.at("holds").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

}  // namespace iwahori
