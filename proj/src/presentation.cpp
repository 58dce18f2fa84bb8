#include "sutwist/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sutwist/error.hpp"

namespace sutwist::presentation {

using classify::ParamTuple;
using classify::SkewBicharacter;
using nlohmann::json;

namespace {

UnitAngle tau_range(const ParamTuple& p, int from, int to_exclusive) {
  UnitAngle s;
  for (int k = from; k < to_exclusive; ++k) s += p.tau[k];
  return s;
}

RelationTerm term(std::int64_t mult, const UnitAngle& angle, int exp2, Word w) {
  return {CycloLaurent::term(mult, angle, exp2), std::move(w)};
}

int inversions(const std::vector<int>& sigma) {
  int c = 0;
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) ++c;
  return c;
}

}  // namespace

RelationPoly RelationPoly::normalized() const {
  std::map<Word, CycloLaurent> merged;
  for (const auto& t : terms) merged[t.word] += t.coeff;
  RelationPoly out{family, {}};
  for (auto& [w, c] : merged)
    if (!c.is_zero()) out.terms.push_back({c, w});
  return out;
}

BiDegree BiDegree::of(const GenSymbol& g, int n) {
  BiDegree d{std::vector<long>(std::size_t(n)), std::vector<long>(std::size_t(n))};
  d.left[std::size_t(g.row - 1)] = 1;
  d.right[std::size_t(g.col - 1)] = 1;
  return d;
}

BiDegree BiDegree::of(const Word& w, int n) {
  BiDegree d{std::vector<long>(std::size_t(n)), std::vector<long>(std::size_t(n))};
  for (const auto& g : w) d += of(g, n);
  return d;
}

BiDegree& BiDegree::operator+=(const BiDegree& o) {
  if (o.left.size() != left.size())
    throw Error(ErrorKind::RankMismatch, "bidegrees of different rank");
  for (std::size_t i = 0; i < left.size(); ++i) {
    left[i] += o.left[i];
    right[i] += o.right[i];
  }
  return *this;
}

std::vector<long> det_multi_index(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<long> m(std::size_t(std::max(n - 1, 0)));
  for (int i = 1; i <= n - 1; ++i) {
    long s = 0;
    for (int k = 2; k <= n; ++k) {
      const int j = sigma[std::size_t(k - 1)];
      int e = 0;
      if (k <= i && i < j)
        e = 1;
      else if (j <= i && i < k)
        e = -1;
      s += (k - 1) * e;
    }
    m[std::size_t(i - 1)] = s;
  }
  return m;
}

RelationPoly quantum_det_relation(const ParamTuple& p) {
  const int n = p.n;
  if (n > 8)
    throw Error(ErrorKind::InvalidInput, "determinant enumeration supports n <= 8");
  UnitAngle base;  // conj(omega(1, ..., n))
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) base -= p.omega(k, l);

  RelationPoly rel{"determinant", {}};
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    UnitAngle a = base;
    const auto m = det_multi_index(sigma);
    for (int i = 1; i <= n - 1; ++i) a += p.tau[i].scaled(m[std::size_t(i - 1)]);
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        a += p.omega(sigma[std::size_t(k)], sigma[std::size_t(l)]);
    const int inv = inversions(sigma);
    Word w;
    for (int r = 1; r <= n; ++r) w.push_back({r, sigma[std::size_t(r - 1)]});
    rel.terms.push_back(term(inv % 2 == 0 ? 1 : -1, a, 2 * inv, std::move(w)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  rel.terms.push_back(term(-1, UnitAngle(), 0, {}));
  return rel;
}

std::vector<RelationPoly> generate_relations(const ParamTuple& p) {
  const int n = p.n;
  const auto& w = p.omega;
  std::vector<RelationPoly> out;

  // v_ij v_il = (prod_{j<=p<l} tau_p^-1) q conj(omega_jl)^2 v_il v_ij, j < l
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) {
        UnitAngle a = -tau_range(p, j, l) - w(j, l).scaled(2);
        out.push_back({"same-row",
                       {term(1, {}, 0, {{i, j}, {i, l}}),
                        term(-1, a, 2, {{i, l}, {i, j}})}});
      }
  // v_ij v_kj = (prod_{i<=p<k} tau_p) q omega_ik^2 v_kj v_ij, i < k
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) {
        UnitAngle a = tau_range(p, i, k) + w(i, k).scaled(2);
        out.push_back({"same-column",
                       {term(1, {}, 0, {{i, j}, {k, j}}),
                        term(-1, a, 2, {{k, j}, {i, j}})}});
      }
  // v_ij v_kl = (prod_{k<=p<i} tau_p^-1)(prod_{j<=p<l} tau_p^-1)
  //             omega_ik^2 conj(omega_jl)^2 v_kl v_ij, i > k, j < l
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k < i; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          UnitAngle a = -tau_range(p, k, i) - tau_range(p, j, l) +
                        w(i, k).scaled(2) - w(j, l).scaled(2);
          out.push_back({"crossing",
                         {term(1, {}, 0, {{i, j}, {k, l}}),
                          term(-1, a, 0, {{k, l}, {i, j}})}});
        }
  // (prod_{j<=p<l} tau_p) omega_jl^2 v_ij v_kl
  //   - (prod_{i<=p<k} tau_p) conj(omega_ki)^2 v_kl v_ij
  //   = (q - q^-1) v_il v_kj, i < k, j < l
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          UnitAngle a = tau_range(p, j, l) + w(j, l).scaled(2);
          UnitAngle b = tau_range(p, i, k) - w(k, i).scaled(2);
          RelationPoly r{"exchange",
                         {term(1, a, 0, {{i, j}, {k, l}}),
                          term(-1, b, 0, {{k, l}, {i, j}})}};
          RelationTerm t{CycloLaurent::term(-1, {}, 2) + CycloLaurent::term(1, {}, -2),
                         {{i, l}, {k, j}}};
          r.terms.push_back(std::move(t));
          out.push_back(std::move(r));
        }
  out.push_back(quantum_det_relation(p));
  return out;
}

TorusPolynomial torus_character_residue(const RelationPoly& r, int n) {
  TorusPolynomial out;
  for (const auto& t : r.terms) {
    std::vector<int> mono(std::size_t(n), 0);
    bool vanishes = false;
    for (const auto& g : t.word) {
      if (g.row != g.col) {
        vanishes = true;
        break;
      }
      ++mono[std::size_t(g.row - 1)];
    }
    if (vanishes) continue;
    const int last = mono.back();
    for (auto& e : mono) e -= last;
    auto& slot = out[mono];
    slot += t.coeff;
    if (slot.is_zero()) out.erase(mono);
  }
  return out;
}

UnitAngle twisted_product_coeff(const SkewBicharacter& omega, const BiDegree& x,
                                const BiDegree& y) {
  const std::size_t n = std::size_t(omega.n());
  if (x.left.size() != n || y.left.size() != n)
    throw Error(ErrorKind::RankMismatch, "bidegree rank differs from omega");
  UnitAngle s;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& w = omega(int(a + 1), int(b + 1));
      s += w.scaled(x.left[a] * y.left[b] - x.right[a] * y.right[b]);
    }
  return s;
}

namespace {

json coeff_json(const CycloLaurent& c) {
  json arr = json::array();
  for (const auto& [k, m] : c.terms())
    arr.push_back({{"angle", k.angle.str()}, {"exp2", k.doubled_exp}, {"mult", m}});
  return arr;
}

std::string sym_latex(const GenSymbol& g, int width) {
  if (width < 10)
    return "v_{" + std::to_string(g.row) + std::to_string(g.col) + "}";
  return "v_{" + std::to_string(g.row) + "," + std::to_string(g.col) + "}";
}

std::string exp_latex(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return "\\frac{" + std::to_string(e2) + "}{2}";
}

// Renders one coefficient term without its sign.
std::string mono_latex(std::int64_t mag, const CycloLaurent::Key& k) {
  std::string s;
  if (mag != 1) s += std::to_string(mag);
  if (!k.angle.is_zero()) {
    if (!s.empty()) s += " ";
    s += "e^{2\\pi i \\cdot " + k.angle.str() + "}";
  }
  if (k.doubled_exp != 0) {
    if (!s.empty()) s += " ";
    s += "q";
    if (k.doubled_exp != 2) s += "^{" + exp_latex(k.doubled_exp) + "}";
  }
  return s;
}

std::string relation_latex(const RelationPoly& r, int width) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : r.terms) {
    std::string word;
    for (const auto& g : t.word) {
      if (!word.empty()) word += " ";
      word += sym_latex(g, width);
    }
    const auto& terms = t.coeff.terms();
    if (terms.size() == 1) {
      const auto& [k, m] = *terms.begin();
      std::string body = mono_latex(m < 0 ? -m : m, k);
      if (body.empty() && word.empty()) body = "1";
      os << (first ? (m < 0 ? "-" : "") : (m < 0 ? " - " : " + "));
      os << body;
      if (!body.empty() && !word.empty()) os << " ";
      os << word;
    } else {
      os << (first ? "" : " + ") << "(";
      bool inner_first = true;
      for (const auto& [k, m] : terms) {
        std::string body = mono_latex(m < 0 ? -m : m, k);
        if (body.empty()) body = "1";
        os << (inner_first ? (m < 0 ? "-" : "") : (m < 0 ? " - " : " + ")) << body;
        inner_first = false;
      }
      os << ")";
      if (!word.empty()) os << " " << word;
    }
    first = false;
  }
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

}  // namespace

std::string serialize(const std::vector<RelationPoly>& rels, Format format) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& r : rels) {
      json terms = json::array();
      for (const auto& t : r.terms) {
        json word = json::array();
        for (const auto& g : t.word) word.push_back({g.row, g.col});
        terms.push_back({{"coeff", coeff_json(t.coeff)}, {"word", word}});
      }
      arr.push_back({{"family", r.family}, {"terms", terms}});
    }
    return arr.dump();
  }
  int width = 0;
  for (const auto& r : rels)
    for (const auto& t : r.terms)
      for (const auto& g : t.word) width = std::max({width, g.row, g.col});
  std::ostringstream os;
  os << "% " << kStarStructureNote << "\n";
  os << "\\begin{gather*}\n";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    os << "  " << relation_latex(rels[i], width);
    os << (i + 1 < rels.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{gather*}\n";
  return os.str();
}

std::vector<RelationPoly> parse_relations_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("relations JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw Error(ErrorKind::InvalidInput, "relations JSON must be an array");
  std::vector<RelationPoly> out;
  try {
    for (const auto& r : doc) {
      RelationPoly rel{r.at("family").get<std::string>(), {}};
      for (const auto& t : r.at("terms")) {
        RelationTerm term;
        for (const auto& c : t.at("coeff"))
          term.coeff.add(UnitAngle::parse(c.at("angle").get<std::string>()),
                         c.at("exp2").get<int>(), c.at("mult").get<std::int64_t>());
        for (const auto& g : t.at("word"))
          term.word.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
        rel.terms.push_back(std::move(term));
      }
      out.push_back(std::move(rel));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("relations JSON: ") + e.what());
  }
  return out;
}

}  // namespace sutwist::presentation
