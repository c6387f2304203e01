// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/serialize.hpp"

#include "hmodlab/errors.hpp"

namespace hmod {

namespace {

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a \"num/den\" string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

std::vector<Breakpoint> points_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [t, v] pairs");
  std::vector<Breakpoint> pts;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("expected a [t, v] pair, got " + p.dump());
    pts.push_back({rational_from(p[0]), rational_from(p[1])});
  }
  return pts;
}

FuncLin atom_value(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("atom must be an object with a kind");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "pwl") return FuncLin::from_pwl(PwlFunc::from_points(points_from(j.at("points"))));
    if (kind == "sqrt") return FuncLin::sqrt_of(PwlFunc::from_points(points_from(j.at("points"))));
    if (kind == "product") {
      FuncLin acc = FuncLin::constant(Rational(1));
      for (const Json& f : j.at("factors")) acc = lin_mul(acc, atom_value(f));
      return acc;
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid atom: ") + e.what());
  }
  throw ParseError("unknown atom kind '" + kind + "'");
}

}  // namespace

Json to_json(const PwlFunc& f) {
  Json out = Json::array();
  for (const Breakpoint& p : f.breakpoints()) out.push_back(Json::array({p.t.str(), p.v.str()}));
  return out;
}

PwlFunc pwl_from_json(const Json& j) {
  try {
    return PwlFunc::from_points(points_from(j));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid PWL function: ") + e.what());
  }
}

Json to_json(const Atom& a) {
  Json out = Json::object();
  switch (a.kind()) {
    case Atom::Kind::Pwl:
      out["kind"] = "pwl";
      out["points"] = to_json(a.function());
      break;
    case Atom::Kind::SqrtPwl:
      out["kind"] = "sqrt";
      out["points"] = to_json(a.function());
      break;
    case Atom::Kind::Product: {
      out["kind"] = "product";
      Json fs = Json::array();
      for (const Atom& f : a.factors()) fs.push_back(to_json(f));
      out["factors"] = std::move(fs);
      break;
    }
  }
  return out;
}

Json to_json(const FuncLin& x) {
  Json out = Json::array();
  for (const auto& [atom, c] : x.terms()) out.push_back(Json{{"coefficient", c.str()}, {"atom", to_json(atom)}});
  return out;
}

FuncLin funclin_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("FuncLin must be a JSON array");
  std::vector<FuncTerm> terms;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("coefficient") || !t.contains("atom"))
      throw ParseError("FuncLin term needs coefficient and atom");
    terms.emplace_back(rational_from(t.at("coefficient")), atom_value(t.at("atom")));
  }
  return lin_combine(terms);
}

Json to_json(const ModuleElement& x) {
  Json out = Json::object();
  for (const auto& [s, v] : x.entries()) out[s.str()] = to_json(v);
  return out;
}

ModuleElement module_element_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("module element must be a JSON object");
  ModuleElement x;
  for (const auto& [key, value] : j.items()) x.set(Index::parse(key), funclin_from_json(value));
  return x;
}

Json interval_to_json(const Interval& i, unsigned digits) {
  return Json::array({to_decimal(i.lo(), digits, false), to_decimal(i.hi(), digits, true)});
}

}  // namespace hmod
