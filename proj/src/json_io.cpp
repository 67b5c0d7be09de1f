#include "opfp/json_io.hpp"

#include <fstream>

namespace opfp {

json scalar_json(const Scalar& s) { return s.str(); }

json diag_json(const DiagElement& b) {
  json out = json::array();
  for (int i = 0; i < b.dim(); ++i) out.push_back(b[i].str());
  return out;
}

json matrix_json(const LinearMapD& m) {
  json out = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    out.push_back(row);
  }
  return out;
}

json partition_json(const NCPartition& p) {
  json out = json::array();
  for (const auto& blk : p.blocks) out.push_back(blk);
  return out;
}

json polynomial_json(const Polynomial& p) {
  json out = json::array();
  // Leading terms first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json vars = json::object();
    for (std::size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] > 0) vars[VarPool::instance().name(static_cast<int>(i))] = it->first[i];
    out.push_back(json::array({rational_str(it->second), vars}));
  }
  return out;
}

json family_json(const CumulantFamily& fam) {
  json maps = json::object();
  for (const auto& [word, m] : fam.maps()) {
    std::string key;
    for (auto l : word) key += ('0' + l);
    if (m.order() == 1) {
      json rows = json::array();
      for (int i = 0; i < fam.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < fam.dim(); ++j) row.push_back(m.at(i, {j}).str());
        rows.push_back(row);
      }
      maps[key] = rows;
    } else {
      // Flat tensor listing for higher orders.
      json entries = json::array();
      std::vector<int> idx(m.order(), 0);
      bool done = false;
      while (!done) {
        for (int i = 0; i < fam.dim(); ++i) entries.push_back(m.at(i, idx).str());
        int p = m.order() - 1;
        while (p >= 0 && idx[p] == fam.dim() - 1) idx[p--] = 0;
        if (p < 0)
          done = true;
        else
          ++idx[p];
        if (m.order() == 0) done = true;
      }
      maps[key] = entries;
    }
  }
  return json{{"d", fam.dim()}, {"maps", maps}};
}

json group_element_json(const GroupAlgebraElement& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back(json{{"g", g}, {"c", c.str()}});
  return json{{"k", x.rank()}, {"terms", terms}};
}

json check_report_json(const CheckReport& r) {
  json out{{"pass", r.pass}};
  if (r.witness) {
    json w{{"kind", r.witness->kind}, {"word", word_str(r.witness->eps)}};
    json coeffs = json::array();
    for (const auto& c : r.witness->coeffs) coeffs.push_back(diag_json(c));
    w["coeffs"] = coeffs;
    w["value"] = diag_json(r.witness->value);
    out["witness"] = w;
  }
  return out;
}

namespace {
json triple_json(const std::array<int, 3>& t) { return json::array({t[0], t[1], t[2]}); }
} // namespace

json subcase_report_json(const SubcaseReport& r) {
  json out{{"subcase", r.id},
           {"substitutions", r.substitutions},
           {"identities_ok", r.identities_ok},
           {"refutation_ok", r.refutation_ok},
           {"ok", r.ok}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  json solves = json::array();
  for (const auto& s : r.solves)
    solves.push_back(json{{"triple", triple_json(s.triple)},
                          {"target", s.target},
                          {"linear", s.linear},
                          {"component", s.solved_from_component},
                          {"solution", s.solution},
                          {"expected", s.expected},
                          {"matches_expected", s.matches_expected},
                          {"annihilates_residual", s.annihilates}});
  out["solves"] = solves;
  json branches = json::array();
  for (const auto& b : r.branches)
    branches.push_back(json{{"triple", triple_json(b.triple)},
                            {"substitution", b.substitution},
                            {"annihilates_residual", b.annihilates},
                            {"factor_divides", b.factor_divides},
                            {"note", b.note}});
  out["branches"] = branches;
  json grids = json::array();
  for (const auto& g : r.grids)
    grids.push_back(json{{"triple", triple_json(g.triple)},
                         {"free_vars", g.free_vars},
                         {"identically_zero", g.identically_zero},
                         {"points", g.points},
                         {"admissible", g.admissible},
                         {"denominator_hits", g.denominator_hits},
                         {"zeros", g.zeros},
                         {"zero_points", g.zero_points}});
  out["grids"] = grids;
  return out;
}

json coverage_report_json(const CoverageReport& r) {
  return json{{"seed", r.seed},
              {"samples", r.samples},
              {"auto_skipped", r.auto_skipped},
              {"degenerate", r.degenerate},
              {"satisfiers", r.satisfiers},
              {"case_I", r.case_i},
              {"case_II", r.case_ii},
              {"case_III", r.case_iii},
              {"nocase", r.nocase},
              {"nocase_points", r.nocase_points}};
}

json lin_constraints_json(const LinConstraints& c) {
  json polys = json::array();
  for (const auto& p : c.polys) polys.push_back(polynomial_json(p));
  json dens = json::array();
  for (const auto& p : c.denominator_factors) dens.push_back(polynomial_json(p));
  return json{{"n", c.n}, {"polys", polys}, {"denominator_factors", dens}};
}

CircularParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("params: expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "q" && key != "r") throw ParseError("params: unknown key '" + key + "'");
  if (!j.contains("q") || !j.contains("r")) throw ParseError("params: need keys q and r");
  const Scalar q = Scalar::parse(j.at("q").get<std::string>());
  const Rational& qv = q.rational_value();
  if (qv <= 0 || qv >= 1) throw DomainError("params: q must lie strictly inside (0,1)");
  const auto& rows = j.at("r");
  if (!rows.is_array() || rows.size() != 2) throw ParseError("params: r must be a 2x2 array");
  LinearMapD R(2);
  for (int i = 0; i < 2; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 2) throw ParseError("params: r must be 2x2");
    for (int k = 0; k < 2; ++k) {
      const Scalar entry = Scalar::parse(rows[i][k].get<std::string>());
      if (entry.rational_value() < 0)
        throw DomainError("params: cumulant entries must be nonnegative");
      R.at(i, k) = entry;
    }
  }
  return CircularParams::make(q, R);
}

CircularParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open params file: " + path);
  json j;
  in >> j;
  return params_from_json(j);
}

DiagElement diag_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("element: expected a nonempty array");
  std::vector<Scalar> entries;
  for (const auto& e : j) entries.push_back(Scalar::parse(e.get<std::string>()));
  return DiagElement(std::move(entries));
}

} // namespace opfp
