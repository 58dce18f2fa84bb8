#include "sutwist/json_io.hpp"

#include "sutwist/error.hpp"

namespace sutwist::json_io {

using classify::ParamTuple;
using classify::SkewBicharacter;
using cohomology::Cochain;
using cohomology::FiniteAbelianGroup;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, where + ": " + what);
}

UnitAngle angle_field(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected an angle string \"p/q\"");
  try {
    return UnitAngle::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

}  // namespace

json to_json(const ParamTuple& p) {
  json tau = json::array();
  for (const auto& t : p.tau.entries()) tau.push_back(t.str());
  json omega = json::array();
  for (int i = 1; i <= p.n; ++i) {
    json row = json::array();
    for (int k = 1; k <= p.n; ++k) row.push_back(p.omega(i, k).str());
    omega.push_back(row);
  }
  return {{"n", p.n}, {"q", p.q.str()}, {"tau", tau}, {"omega", omega}};
}

ParamTuple param_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) bad(where + ".n", "expected an integer");
  const int n = j["n"].get<int>();
  if (n < 2 || n > 64) bad(where + ".n", "rank must lie in [2, 64]");
  if (!j.contains("q") || !j["q"].is_string()) bad(where + ".q", "expected a string \"p/q\"");
  Rational q;
  try {
    q = Rational::parse(j["q"].get<std::string>());
  } catch (const Error& e) {
    bad(where + ".q", e.what());
  }
  if (!j.contains("tau") || !j["tau"].is_array()) bad(where + ".tau", "expected an array");
  std::vector<UnitAngle> tau;
  for (std::size_t i = 0; i < j["tau"].size(); ++i)
    tau.push_back(angle_field(j["tau"][i], where + ".tau[" + std::to_string(i) + "]"));
  std::vector<UnitAngle> omega;
  if (j.contains("omega")) {
    const auto& w = j["omega"];
    if (!w.is_array() || w.size() != std::size_t(n))
      bad(where + ".omega", "expected an n x n array");
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (!w[r].is_array() || w[r].size() != std::size_t(n))
        bad(where + ".omega[" + std::to_string(r) + "]", "expected a row of length n");
      for (std::size_t c = 0; c < w[r].size(); ++c)
        omega.push_back(angle_field(
            w[r][c], where + ".omega[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }
  try {
    auto om = omega.empty() ? SkewBicharacter::zero(n) : SkewBicharacter(n, std::move(omega));
    return ParamTuple(n, q, lattice::TauVector(n, std::move(tau)), std::move(om));
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
}

std::vector<ParamTuple> params_from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("input", e.what());
  }
  std::vector<ParamTuple> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      out.push_back(param_from_json(doc[i], "params[" + std::to_string(i) + "]"));
  } else {
    out.push_back(param_from_json(doc));
  }
  return out;
}

json to_json(const Cochain& c) {
  json table = json::array();
  for (const auto& a : c.table()) table.push_back(a.str());
  return {{"factors", c.group().factors()}, {"degree", c.degree()}, {"table", table}};
}

Cochain cochain_from_json(const json& j) {
  try {
    FiniteAbelianGroup g(j.at("factors").get<std::vector<int>>());
    std::vector<UnitAngle> table;
    for (std::size_t i = 0; i < j.at("table").size(); ++i)
      table.push_back(angle_field(j["table"][i], "cochain.table[" + std::to_string(i) + "]"));
    return Cochain(std::move(g), j.at("degree").get<int>(), std::move(table));
  } catch (const json::exception& e) {
    bad("cochain", e.what());
  }
}

json to_json(const HalfLaurent& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({c, e});
  return arr;
}

HalfLaurent half_laurent_from_json(const json& j) {
  std::vector<std::pair<std::int64_t, int>> pairs;
  try {
    for (const auto& t : j) pairs.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<int>()});
  } catch (const json::exception& e) {
    bad("laurent", e.what());
  }
  return HalfLaurent::from_terms(pairs);
}

}  // namespace sutwist::json_io
