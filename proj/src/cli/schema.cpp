#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include "algact/cli.hpp"

namespace algact::cli {

using nlohmann::json;

namespace {

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& ptr, const std::string& key) {
  if (!j.contains(key)) throw InputError(ptr, "missing field '" + key + "'");
  return j.at(key);
}

void check_header(const json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  const json& v = field(j, "", "schema");
  if (!v.is_number_integer() || v.get<long>() != kSchemaVersion)
    throw InputError("/schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

BigInt integer(const json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto s = j.get<std::string>();
    if (std::regex_match(s, digits)) return BigInt(s);
  }
  throw InputError(ptr, "expected an integer");
}

json integer_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw InputError(ptr, "expected an array");
  return j;
}

std::vector<BigInt> integers(const json& j, const std::string& ptr) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) out.push_back(integer(j[i], at(ptr, i)));
  return out;
}

long positive(const json& j, const std::string& ptr, long max) {
  if (!j.is_number_integer() || j.get<long>() < 1 || j.get<long>() > max)
    throw InputError(ptr, "expected an integer in [1, " + std::to_string(max) + "]");
  return j.get<long>();
}

std::string text(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw InputError(ptr, "expected a string");
  return j.get<std::string>();
}

ZMat matrix(const json& j, const std::string& ptr, long n) {
  ZMat m(n, n);
  array(j, ptr);
  if (!j.empty() && j[0].is_array()) {
    if (static_cast<long>(j.size()) != n) throw InputError(ptr, "expected " + std::to_string(n) + " rows");
    for (long r = 0; r < n; ++r) {
      const std::string rp = at(ptr, static_cast<std::size_t>(r));
      const json& row = array(j[static_cast<std::size_t>(r)], rp);
      if (static_cast<long>(row.size()) != n) throw InputError(rp, "expected " + std::to_string(n) + " entries");
      for (long c = 0; c < n; ++c) m(r, c) = integer(row[static_cast<std::size_t>(c)], at(rp, static_cast<std::size_t>(c)));
    }
    return m;
  }
  if (static_cast<long>(j.size()) != n * n) throw InputError(ptr, "expected " + std::to_string(n * n) + " entries");
  for (long k = 0; k < n * n; ++k) m(k / n, k % n) = integer(j[static_cast<std::size_t>(k)], at(ptr, static_cast<std::size_t>(k)));
  return m;
}

constexpr long kMaxRank = 64;

std::string kind_of(const json& j) {
  if (j.contains("generators")) return "action";
  if (j.contains("vars") || j.contains("gens")) return "ideal";
  if (j.contains("constants") || j.contains("preset") || j.contains("polynomial")) return "ring";
  return "";
}

void expect_kind(const json& j, const std::string& kind) {
  const std::string k = kind_of(j);
  if (!k.empty() && k != kind) throw InputError("", "expected " + kind + " input, got " + k + " input");
}

}  // namespace

json read_json(const std::string& path) {
  std::string content;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    content = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
}

AlgebraicAction parse_action(const json& j) {
  check_header(j);
  expect_kind(j, "action");
  const long n = positive(field(j, "", "rank"), "/rank", kMaxRank);
  MonoidKind kind = MonoidKind::FreeAbelian;
  if (j.contains("monoid")) {
    const std::string m = text(j["monoid"], "/monoid");
    if (m == "free") kind = MonoidKind::Free;
    else if (m != "free-abelian") throw InputError("/monoid", "expected \"free-abelian\" or \"free\"");
  }
  const json& gens = array(field(j, "", "generators"), "/generators");
  if (gens.empty()) throw InputError("/generators", "need at least one generator");
  std::vector<Generator> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gp = at("/generators", i);
    if (!gens[i].is_object()) throw InputError(gp, "expected an object");
    const std::string name = text(field(gens[i], gp, "name"), at(gp, "name"));
    if (name.empty() || !names.insert(name).second) throw InputError(at(gp, "name"), "names must be non-empty and distinct");
    out.push_back({name, matrix(field(gens[i], gp, "matrix"), at(gp, "matrix"), n)});
  }
  try {
    return AlgebraicAction(n, std::move(out), kind);
  } catch (const DomainError& e) {
    throw InputError("/generators", e.what());
  }
}

json action_to_json(const AlgebraicAction& a) {
  json gens = json::array();
  for (const Generator& g : a.generators()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) row.push_back(integer_to_json(g.matrix(r, c)));
      rows.push_back(row);
    }
    gens.push_back({{"name", g.name}, {"matrix", rows}});
  }
  return {{"schema", kSchemaVersion}, {"rank", a.rank()}, {"generators", gens}, {"monoid", to_string(a.kind())}};
}

IdealSpec parse_ideal(const json& j) {
  check_header(j);
  expect_kind(j, "ideal");
  IdealSpec s;
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  const json& vars = array(field(j, "", "vars"), "/vars");
  if (vars.empty()) throw InputError("/vars", "need at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string v = text(vars[i], at("/vars", i));
    if (!std::regex_match(v, ident)) throw InputError(at("/vars", i), "not an identifier");
    if (std::find(s.vars.begin(), s.vars.end(), v) != s.vars.end()) throw InputError(at("/vars", i), "duplicate variable");
    s.vars.push_back(v);
  }
  const json& gens = array(field(j, "", "gens"), "/gens");
  if (gens.empty()) throw InputError("/gens", "need at least one generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      s.gens.push_back(parse_poly(text(gens[i], at("/gens", i)), s.vars));
    } catch (const ParseError& e) {
      throw InputError(at("/gens", i), e.what());
    }
  }
  if (j.contains("order")) {
    try {
      s.order = parse_order(text(j["order"], "/order"));
    } catch (const DomainError& e) {
      throw InputError("/order", e.what());
    }
  }
  return s;
}

json ideal_to_json(const IdealSpec& s) {
  json gens = json::array();
  for (const MPoly& g : s.gens) gens.push_back(g.to_string(s.vars));
  return {{"schema", kSchemaVersion}, {"vars", s.vars}, {"gens", gens}, {"order", to_string(s.order)}};
}

StructureRing parse_ring(const json& j) {
  check_header(j);
  expect_kind(j, "ring");
  try {
    if (j.contains("preset")) return ring_preset(text(j["preset"], "/preset"));
  } catch (const DomainError& e) {
    throw InputError("/preset", e.what());
  }
  if (j.contains("polynomial")) {
    std::vector<BigInt> c = integers(j["polynomial"], "/polynomial");
    const ZPoly f(std::move(c));
    if (f.degree() < 1 || !f.is_monic() || f.degree() > kMaxRank)
      throw InputError("/polynomial", "expected a monic non-constant polynomial, constant term first");
    return ring_from_poly(f);
  }
  if (!j.contains("rank")) throw InputError("", "expected a ring: 'preset', 'polynomial' or 'rank'");
  const long n = positive(j["rank"], "/rank", 16);
  std::vector<BigInt> c = integers(field(j, "", "constants"), "/constants");
  if (static_cast<long>(c.size()) != n * n * n)
    throw InputError("/constants", "expected " + std::to_string(n * n * n) + " entries");
  const std::vector<BigInt> u = integers(field(j, "", "unit"), "/unit");
  if (static_cast<long>(u.size()) != n) throw InputError("/unit", "expected " + std::to_string(n) + " entries");
  ZVec one(n);
  for (long i = 0; i < n; ++i) one(i) = u[static_cast<std::size_t>(i)];
  StructureRing r(n, std::move(c), std::move(one));
  const RingValidation v = validate(r);
  if (!v.valid()) throw InputError("/constants", v.failure);
  return r;
}

json ring_to_json(const StructureRing& r) {
  json c = json::array(), u = json::array();
  for (const BigInt& x : r.constants()) c.push_back(integer_to_json(x));
  for (Eigen::Index i = 0; i < r.rank(); ++i) u.push_back(integer_to_json(r.one()(i)));
  return {{"schema", kSchemaVersion}, {"rank", r.rank()}, {"constants", c}, {"unit", u}};
}

Lattice parse_level(const std::string& text, Eigen::Index rank) {
  static const std::regex number("\\s*(-?[0-9]+)\\s*");
  std::vector<std::vector<BigInt>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<BigInt> entries;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      std::smatch m;
      if (!std::regex_match(e, m, number)) throw InputError("--level", "expected integers, got '" + e + "'");
      entries.emplace_back(m[1].str());
    }
    rows.push_back(std::move(entries));
  }
  if (rows.size() == 1 && rows[0].size() == 1) {
    if (rows[0][0] == 0) throw InputError("--level", "the level must have full rank");
    return Lattice::scaled(rank, abs(rows[0][0]));
  }
  std::vector<ZVec> gens;
  for (const auto& r : rows) {
    if (static_cast<Eigen::Index>(r.size()) != rank)
      throw InputError("--level", "each row needs " + std::to_string(rank) + " entries");
    ZVec v(rank);
    for (Eigen::Index i = 0; i < rank; ++i) v(i) = r[static_cast<std::size_t>(i)];
    gens.push_back(v);
  }
  try {
    return Lattice::from_generators(rank, gens);
  } catch (const DomainError& e) {
    throw InputError("--level", e.what());
  }
}

}  // namespace algact::cli
