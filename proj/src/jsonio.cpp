#include "thetap/jsonio.hpp"

#include <istream>
#include <ostream>

namespace thetap {

using nlohmann::json;

namespace {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect_keys(const json& j, const std::string& where,
                 std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw SchemaError("unknown field '" + it.key() + "' in " + where);
  }
}

int int_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + " must be an integer");
  return j.get<int>();
}

int sign_field(const json& j, const std::string& where) {
  const int v = int_field(j, where);
  if (v != 1 && v != -1) throw SchemaError(where + " must be +1 or -1");
  return v;
}

Rat rat_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer())
    return Rat(j[0].get<long long>(), j[1].get<long long>());
  throw SchemaError(where + " must be an integer or a [num,den] pair");
}

GroupId group_from_json(const json& j) {
  expect_keys(j, "group", {"Sp", "O"});
  if (j.contains("Sp") == j.contains("O"))
    throw SchemaError("group needs exactly one of Sp / O");
  if (j.contains("Sp")) return GroupId::sp(int_field(j["Sp"], "group.Sp"));
  const json& o = j["O"];
  if (!o.is_array() || o.size() != 2)
    throw SchemaError("group.O must be [p, q]");
  return GroupId::o(int_field(o[0], "group.O[0]"), int_field(o[1], "group.O[1]"));
}

Root root_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw SchemaError("root must be an integer array of the ambient rank");
  Root r(rank);
  for (int i = 0; i < rank; ++i) r[i] = int_field(j[i], "root coordinate");
  return r;
}

std::vector<Root> psi_from_json(const json& j, int rank) {
  if (!j.is_array()) throw SchemaError("psi must be an array of roots");
  std::vector<Root> psi;
  for (const json& r : j) psi.push_back(root_from_json(r, rank));
  sort_roots(psi);
  return psi;
}

LParameter phi_from_json(const json& j, GroupKind kind) {
  expect_keys(j, "phi", {"blocks", "z", "other"});
  if (!j.contains("blocks") || !j.contains("z"))
    throw SchemaError("phi needs blocks and z");
  LParameter phi;
  phi.group = kind;
  if (!j["blocks"].is_array()) throw SchemaError("phi.blocks must be an array");
  for (const json& b : j["blocks"]) {
    if (!b.is_array() || b.size() != 2)
      throw SchemaError("phi.blocks entries must be [lambda, c]");
    phi.blocks.push_back(
        {int_field(b[0], "block lambda"), int_field(b[1], "block c")});
  }
  const int z = int_field(j["z"], "phi.z");
  if (z < 0) throw SchemaError("phi.z must be >= 0");
  phi.trivial_mult = kind == GroupKind::Sp ? 2 * z + 1 : 2 * z;
  if (j.contains("other")) {
    if (!j["other"].is_array()) throw SchemaError("phi.other must be an array");
    for (const json& s : j["other"]) {
      expect_keys(s, "phi.other[]", {"dim", "eps", "m", "s"});
      WRSummand w;
      const int dim = int_field(s.at("dim"), "summand dim");
      if (dim == 1) {
        w.two_dim = false;
        w.eps = sign_field(s.at("eps"), "summand eps");
      } else if (dim == 2) {
        w.two_dim = true;
        w.m = int_field(s.at("m"), "summand m");
      } else {
        throw SchemaError("summand dim must be 1 or 2");
      }
      w.s = s.contains("s") ? rat_field(s["s"], "summand s") : Rat(0);
      phi.other.push_back(w);
    }
  }
  return phi;
}

EtaCharacter eta_from_json(const json& j) {
  expect_keys(j, "eta", {"a", "b"});
  EtaCharacter eta;
  if (!j.contains("a") || !j["a"].is_array())
    throw SchemaError("eta needs an array a of +-1");
  for (const json& v : j["a"]) eta.a_vals.push_back(sign_field(v, "eta.a"));
  if (j.contains("b")) eta.b_val = sign_field(j["b"], "eta.b");
  return eta;
}

HCParam hc_from_json(const json& j, const GroupId& g) {
  expect_keys(j, "hc", {"lambda", "psi", "xi"});
  if (!j.contains("lambda") || !j.contains("psi"))
    throw SchemaError("hc needs lambda and psi");
  HCParam h;
  h.group = g;
  const json& lam = j["lambda"];
  if (!lam.is_array()) throw SchemaError("hc.lambda must be an array");
  for (const json& c : lam) h.lambda.push_back(rat_field(c, "hc.lambda"));
  h.psi = psi_from_json(j["psi"], static_cast<int>(h.lambda.size()));
  h.xi = j.contains("xi") ? sign_field(j["xi"], "hc.xi") : 1;
  return h;
}

json eta_to_json(const EtaCharacter& eta) {
  json j;
  j["a"] = eta.a_vals;
  if (eta.b_val != 0) j["b"] = eta.b_val;
  return j;
}

json phi_to_json(const LParameter& phi) {
  json j;
  json blocks = json::array();
  for (auto& [l, c] : phi.blocks) blocks.push_back({l, c});
  j["blocks"] = blocks;
  j["z"] = phi.z();
  return j;
}

json group_to_json(const GroupId& g) {
  json j;
  if (g.kind == GroupKind::Sp) j["Sp"] = g.n;
  else j["O"] = {g.p, g.q};
  return j;
}

json violations_to_json(const std::vector<HCViolation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json e;
    e["what"] = v.what;
    if (v.root) e["root"] = *v.root;
    arr.push_back(e);
  }
  return arr;
}

json handle(const json& req, const CliOptions& opt) {
  expect_keys(req, "request",
              {"cmd", "group", "phi", "eta", "lv", "hc", "invariant", "lambda",
               "x", "gl1", "gl2"});
  if (!req.contains("cmd") || !req["cmd"].is_string())
    throw SchemaError("request needs a cmd string");
  const std::string cmd = req["cmd"].get<std::string>();
  if (!req.contains("group")) throw SchemaError("request needs a group");
  const GroupId g = group_from_json(req["group"]);

  auto lv_payload = [&](GroupKind kind) {
    if (!req.contains("lv")) throw SchemaError(cmd + " needs an lv payload");
    expect_keys(req["lv"], "lv", {"blocks", "z", "eta", "other"});
    json phij = req["lv"];
    json etaj = phij.contains("eta") ? phij["eta"] : json::object({{"a", json::array()}});
    phij.erase("eta");
    LVParam lv;
    lv.phi = phi_from_json(phij, kind);
    lv.eta = eta_from_json(etaj);
    const ComponentGroup cg = component_group(lv.phi);
    if (static_cast<int>(lv.eta.a_vals.size()) != cg.k)
      throw DomainError("GENERATOR_MISMATCH", "eta.a has wrong length");
    if (cg.has_b && lv.eta.b_val == 0)
      throw DomainError("GENERATOR_MISMATCH", "eta needs a b value");
    if (!cg.has_b) lv.eta.b_val = 0;
    return lv;
  };

  auto factors_payload = [&](const char* key) {
    std::vector<std::pair<int, Rat>> fs;
    if (!req.contains(key)) return fs;
    if (!req[key].is_array())
      throw SchemaError(std::string(key) + " must be an array of pairs");
    for (const json& f : req[key]) {
      if (!f.is_array() || f.size() != 2)
        throw SchemaError(std::string(key) + " entries must be pairs");
      fs.push_back({int_field(f[0], key), rat_field(f[1], key)});
    }
    return fs;
  };

  json out;
  if (cmd == "basepoint") {
    const BasedRootDatum d = build_datum(g);
    if (!req.contains("x")) {
      out["exps"] = basepoint(d).exps;
    } else {
      // inspect an arbitrary torsion point instead
      TorusTorsion x;
      for (const json& e : req["x"]) x.exps.push_back(int_field(e, "x") & 3);
      if (static_cast<int>(x.exps.size()) != d.rank)
        throw DomainError("LENGTH_MISMATCH", "x must have one entry per rank");
      out["exps"] = x.exps;
      const CentralInv inv = central_invariant(x);
      out["invariant"] = central_inv_str(inv);
      out["generic"] = is_generic_point(d, x);
      StrongFormClass cls;
      cls.rep = canonical_orbit_rep(d, x);
      cls.invariant = inv;
      out["class_rep"] = cls.rep.exps;
      out["label"] = real_form_label(d, cls);
    }
  } else if (cmd == "strong-forms") {
    if (!req.contains("invariant") || !req["invariant"].is_string())
      throw SchemaError("strong-forms needs invariant \"+I\" or \"-I\"");
    const std::string inv = req["invariant"].get<std::string>();
    CentralInv z;
    if (inv == "+I") z = CentralInv::PlusI;
    else if (inv == "-I") z = CentralInv::MinusI;
    else throw SchemaError("invariant must be \"+I\" or \"-I\"");
    json classes = json::array();
    for (const auto& c : enumerate_strong_forms(build_datum(g), z, opt.max_rank)) {
      json e;
      e["rep"] = c.rep.exps;
      e["invariant"] = central_inv_str(c.invariant);
      e["label"] = c.label;
      if (c.tag) e["tag"] = c.tag;
      classes.push_back(e);
    }
    out["classes"] = classes;
  } else if (cmd == "classify") {
    if (!req.contains("phi")) throw SchemaError("classify needs a phi payload");
    const LParameter phi = phi_from_json(req["phi"], g.kind);
    out["class"] = param_class_str(classify(phi));
    out["dim"] = phi.dim();
    out["parity_mixed"] = mixed_parity(phi);
    if (classify(phi) != ParamClass::General) {
      const ComponentGroup cg = component_group(phi);
      out["component_group"] = {{"a", cg.k}, {"b", cg.has_b}};
    }
  } else if (cmd == "validate") {
    if (!req.contains("hc")) throw SchemaError("validate needs an hc payload");
    const BasedRootDatum d = build_datum(g);
    const HCParam h = hc_from_json(req["hc"], g);
    const auto vs = validate_hc(d, h);
    out["ok"] = vs.empty();
    if (!vs.empty()) out["violations"] = violations_to_json(vs);
    else {
      out["minimal_ktype"] = weight_to_json(minimal_ktype(d, h));
    }
  } else if (cmd == "convert") {
    if (req.contains("lv") == req.contains("hc"))
      throw SchemaError("convert needs exactly one of lv / hc");
    if (req.contains("lv")) {
      const LVParam lv = lv_payload(g.kind);
      const BasedRootDatum qs =
          build_datum(quasi_split_group(g.kind, lv.phi.rank()));
      const HCParam h = lv_to_hc(qs, lv, opt.max_rank);
      out["group"] = group_to_json(h.group);
      out["hc"] = hc_to_json(h);
    } else {
      const HCParam h = hc_from_json(req["hc"], g);
      const LVParam lv = hc_to_lv(h, opt.max_rank);
      out["lv"] = lv_to_json(lv);
    }
  } else if (cmd == "theta") {
    if (req.contains("hc")) {
      // HC-level lift: all Moeglin/Paul candidates plus the selected one.
      if (g.kind != GroupKind::Sp)
        throw DomainError("MALFORMED", "HC-level theta starts from Sp");
      const BasedRootDatum d = build_datum(g);
      const HCParam h = hc_from_json(req["hc"], g);
      const auto cands = theta_hc_candidates(d, h);
      json arr = json::array();
      for (const auto& c : cands) {
        json e;
        e["signature"] = {c.p, c.q};
        e["case"] = c.case_tag;
        e["hc"] = hc_to_json(c.param);
        arr.push_back(e);
      }
      out["candidates"] = arr;
      const auto sel = select_lds_lift(g.n, cands);
      out["signature"] = {sel.p, sel.q};
      out["hc"] = hc_to_json(sel.param);
    } else {
      const LVParam lv = lv_payload(GroupKind::Sp);
      if (g.kind != GroupKind::Sp || lv.phi.rank() != g.n)
        throw DomainError("MALFORMED",
                          "theta needs group {\"Sp\": n} matching the parameter");
      if (req.contains("gl1") || req.contains("gl2")) {
        TemperedParam tp;
        tp.core = lv;
        tp.gl1 = factors_payload("gl1");
        tp.gl2 = factors_payload("gl2");
        const auto [sig, lifted] = theta_tempered(tp, opt.max_rank);
        out["signature"] = {sig.p, sig.q};
        out["phi"] = phi_to_json(lifted.core.phi);
        out["eta"] = eta_to_json(lifted.core.eta);
        json gl1 = json::array();
        for (auto& [e, ka] : lifted.gl1) gl1.push_back({e, ka.num()});
        out["gl1"] = gl1;
        json gl2 = json::array();
        for (auto& [m, s] : lifted.gl2) gl2.push_back({m, s.num()});
        out["gl2"] = gl2;
      } else {
        const auto [sig, lifted] = theta_lv(lv, opt.max_rank);
        out["signature"] = {sig.p, sig.q};
        out["phi"] = phi_to_json(lifted.phi);
        out["eta"] = eta_to_json(lifted.eta);
      }
    }
  } else if (cmd == "theta-inverse") {
    if (g.kind != GroupKind::O)
      throw DomainError("MALFORMED", "theta-inverse needs group {\"O\": [p,q]}");
    if (req.contains("hc")) {
      const HCParam h = hc_from_json(req["hc"], g);
      const HCParam back = theta_hc_inverse(g.p, g.q, h);
      out["group"] = group_to_json(back.group);
      out["hc"] = hc_to_json(back);
    } else {
      const LVParam lvp = lv_payload(GroupKind::O);
      if (lvp.phi.rank() != g.rank())
        throw DomainError("MALFORMED",
                          "theta-inverse parameter does not match the group");
      const LVParam lv = theta_lv_inverse(Signature{g.p, g.q}, lvp);
      out["phi"] = phi_to_json(lv.phi);
      out["eta"] = eta_to_json(lv.eta);
    }
  } else if (cmd == "packet") {
    if (!req.contains("lambda")) throw SchemaError("packet needs lambda");
    const BasedRootDatum d = build_datum(g);
    Weight lam;
    for (const json& c : req["lambda"]) lam.push_back(rat_field(c, "lambda"));
    TorusTorsion x = basepoint(d);
    if (req.contains("x")) {
      x.exps.clear();
      for (const json& e : req["x"]) x.exps.push_back(int_field(e, "x"));
    }
    json params = json::array();
    for (const HCParam& h : enumerate_packet(d, x, lam, opt.max_rank))
      params.push_back(hc_to_json(h));
    out["params"] = params;
  } else {
    throw SchemaError("unknown cmd '" + cmd + "'");
  }
  return out;
}

}  // namespace

json weight_to_json(const Weight& w) {
  json arr = json::array();
  for (const Rat& c : w) {
    if (c.is_integer()) arr.push_back(c.num());
    else arr.push_back({c.num(), c.den()});
  }
  return arr;
}

Weight weight_from_json(const json& j) {
  Weight w;
  for (const json& c : j) w.push_back(rat_field(c, "weight"));
  return w;
}

json hc_to_json(const HCParam& h) {
  json j;
  j["lambda"] = weight_to_json(h.lambda);
  json psi = json::array();
  for (const Root& r : h.psi) psi.push_back(r);
  j["psi"] = psi;
  if (h.group.kind == GroupKind::O) j["xi"] = h.xi;
  return j;
}

json lv_to_json(const LVParam& lv) {
  json j;
  j["phi"] = phi_to_json(lv.phi);
  j["eta"] = eta_to_json(lv.eta);
  return j;
}

Response run_line(const std::string& line, const CliOptions& opt) {
  json req;
  try {
    req = json::parse(line);
  } catch (const json::parse_error& e) {
    return {json{{"error", "PARSE_ERROR"}, {"detail", e.what()}}, 2};
  }
  try {
    return {handle(req, opt), 0};
  } catch (const SchemaError& e) {
    return {json{{"error", "SCHEMA_ERROR"}, {"detail", e.what()}}, 2};
  } catch (const json::exception& e) {
    return {json{{"error", "SCHEMA_ERROR"}, {"detail", e.what()}}, 2};
  } catch (const DomainError& e) {
    return {json{{"error", e.code()},
                 {"detail", std::string(e.what()).substr(e.code().size() + 2)}},
            1};
  }
}

int run_stream(std::istream& in, std::ostream& out, const CliOptions& opt) {
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Response r = run_line(line, opt);
    out << r.doc.dump() << "\n";
    worst = std::max(worst, r.status);
  }
  return worst;
}

}  // namespace thetap
