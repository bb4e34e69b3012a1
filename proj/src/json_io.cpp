#include "stackzeta/json_io.hpp"

namespace stackzeta {

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) { return Rat::parse(j.get<std::string>()); }

json algnum_to_json(const AlgNum& x) {
  json j;
  j["field"] = x.field() ? x.field()->str() : "Q";
  j["c0"] = x.c0().str();
  j["c1"] = x.c1().str();
  return j;
}

AlgNum algnum_from_json(const json& j) {
  std::string field = j.at("field").get<std::string>();
  Rat c0 = Rat::parse(j.at("c0").get<std::string>());
  Rat c1 = Rat::parse(j.at("c1").get<std::string>());
  if (field == "Q") {
    if (!c1.is_zero())
      throw std::domain_error("AlgNum json: rational element with c1 != 0");
    return AlgNum(c0);
  }
  // "x^2-<a>x+<q>"
  auto xpos = field.find("x^2-");
  auto mid = field.find("x+", 4);
  if (xpos != 0 || mid == std::string::npos)
    throw std::domain_error("AlgNum json: bad field string '" + field + "'");
  long a = std::stol(field.substr(4, mid - 4));
  long q = std::stol(field.substr(mid + 2));
  return AlgNum(QuadField(a, q), c0, c1);
}

json weil_to_json(const WeilNum& w) {
  json j = algnum_to_json(w.value);
  j["weight"] = w.weight.str();
  return j;
}

WeilNum weil_from_json(const json& j) {
  return WeilNum(algnum_from_json(j), Rat::parse(j.at("weight").get<std::string>()));
}

json series_to_json(const PowerSeries& f) {
  json j;
  j["order"] = f.order();
  json coeffs = json::array();
  for (int k = 0; k <= f.order(); ++k) coeffs.push_back(algnum_to_json(f.coeff(k)));
  j["coeffs"] = coeffs;
  return j;
}

json spectrum_to_json(const FrobSpectrum& s) {
  json arr = json::array();
  for (auto it = s.entries().rbegin(); it != s.entries().rend(); ++it) {
    json row;
    row["degree"] = it->first;
    json evs = json::array();
    for (const auto& ev : it->second) evs.push_back(weil_to_json(ev));
    row["eigenvalues"] = evs;
    arr.push_back(row);
  }
  return arr;
}

json rationalfn_to_json(const RationalFn& f) {
  json j;
  json num = json::array(), den = json::array();
  for (const auto& c : f.num) num.push_back(c.str());
  for (const auto& c : f.den) den.push_back(c.str());
  j["num"] = num;
  j["den"] = den;
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["check"] = r.check;
  j["stack"] = r.stack;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  return j;
}

json weight_audit_to_json(const WeightAuditReport& r) {
  json j;
  j["pass"] = r.pass;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json row;
    row["degree"] = e.degree;
    row["slack"] = e.min_slack.str();
    row["sharp"] = e.sharp;
    row["violation"] = e.violation;
    entries.push_back(row);
  }
  j["degrees"] = entries;
  return j;
}

json pole_catalog_to_json(const std::vector<PoleEntry>& poles) {
  json arr = json::array();
  for (const auto& p : poles) {
    json row;
    row["location"] = weil_to_json(p.location);
    row["degree"] = p.degree;
    row["multiplicity"] = p.multiplicity;
    arr.push_back(row);
  }
  return arr;
}

json zeta_result_to_json(const ZetaResult& z) {
  json j;
  j["stack"] = z.stack.name();
  j["q"] = z.stack.q();
  j["order"] = z.order;
  j["depth"] = z.depth;
  j["counts_side"] = series_to_json(z.counts_side);
  if (z.spectrum_side) {
    j["spectrum_side"] = series_to_json(*z.spectrum_side);
    json gap = json::array();
    for (const auto& g : z.gap) gap.push_back(g.str());
    j["gap"] = gap;
  }
  return j;
}

json existence_to_json(const PointExistenceResult& r) {
  json j;
  j["stack"] = r.kind == ExistenceKind::FormOfBGm ? "FormOfBGm" : "QuotientP1Gm";
  j["q"] = r.q;
  j["verdict"] = to_string(r.verdict);
  j["lower_bound"] = r.lower_bound.str();
  if (r.kind == ExistenceKind::QuotientP1Gm)
    j["closed_orbit_cap"] = r.closed_orbit_cap.str();
  j["exact_c1"] = r.exact_c1.str();
  return j;
}

GroupTable group_table_from_json(const json& j) {
  GroupTable t;
  t.n = j.at("n").get<int>();
  t.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  if (j.contains("sigma")) t.sigma = j.at("sigma").get<std::vector<int>>();
  t.validate();
  return t;
}

}  // namespace stackzeta
