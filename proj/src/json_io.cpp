#include "hilfrac/json_io.hpp"

#include <limits>
#include <string>

namespace hilfrac::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidArgument("JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::size_t>();
    bad(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<unsigned> exponents(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<unsigned> out;
  for (const auto& e : j) {
    const std::size_t v = natural(e, what);
    if (v > std::numeric_limits<unsigned>::max()) bad(std::string(what) + " exponent too large");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

json rank_value(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

}  // namespace

json encode(const Monomial& u) { return {{"exps", u.exps}}; }

Monomial decode_monomial(const json& j) { return Monomial{exponents(field(j, "exps"), "exps")}; }

json encode(const MonomialIdealDoc& doc) {
  json gens = json::array();
  for (const auto& g : doc.generators) gens.push_back(encode(g));
  return {{"n", doc.n}, {"generators", gens}};
}

MonomialIdealDoc decode_monomial_ideal(const json& j) {
  MonomialIdealDoc doc;
  doc.n = natural(field(j, "n"), "n");
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  for (const auto& g : gens) {
    doc.generators.push_back(decode_monomial(g));
    if (doc.generators.back().vars() != doc.n) bad("generator length differs from n");
  }
  return doc;
}

json encode(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, rank] : table.entries()) {
    entries.push_back({{"i", key.first}, {"degree", key.second}, {"rank", rank_value(rank)}});
  }
  return {{"entries", entries}};
}

BettiTable decode_betti(const json& j) {
  BettiTable table;
  const auto& entries = field(j, "entries");
  if (!entries.is_array()) bad("entries must be an array");
  for (const auto& e : entries) {
    const auto& r = field(e, "rank");
    BigInt rank;
    if (r.is_string()) {
      try {
        rank = BigInt(r.get<std::string>());
      } catch (const std::exception&) {
        bad("rank string is not an integer");
      }
    } else {
      rank = natural(r, "rank");
    }
    table.add(natural(field(e, "i"), "i"), natural(field(e, "degree"), "degree"), rank);
  }
  return table;
}

json encode(const BigradedTable& table) {
  return {{"n", table.n()},       {"m", table.m()},        {"rows", table.rows()},
          {"cols", table.cols()}, {"values", table.values()}};
}

BigradedTable decode_table(const json& j) {
  const std::size_t n = natural(field(j, "n"), "n");
  const std::size_t m = natural(field(j, "m"), "m");
  const auto& raw = field(j, "values");
  if (!raw.is_array()) bad("values must be an array of rows");
  std::vector<std::vector<std::size_t>> values;
  for (const auto& row : raw) {
    if (!row.is_array()) bad("values must be an array of rows");
    auto& out = values.emplace_back();
    for (const auto& v : row) out.push_back(natural(v, "value"));
  }
  if (j.contains("rows") && natural(j["rows"], "rows") != values.size()) {
    bad("rows does not match the number of value rows");
  }
  if (j.contains("cols")) {
    const std::size_t cols = natural(j["cols"], "cols");
    for (const auto& row : values) {
      if (row.size() != cols) bad("cols does not match a value row");
    }
  }
  return BigradedTable(n, m, std::move(values));
}

json encode(const Certificate& cert) {
  json out = json::array();
  for (std::size_t i = 0; i < cert.rows(); ++i) {
    for (std::size_t j = 0; j < cert.cols(); ++j) {
      out.push_back({{"i", i}, {"j", j}, {"row_lengths", cert.at(i, j).partition()}});
    }
  }
  return out;
}

Certificate decode_certificate(const json& j, const BigradedTable& table) {
  if (!j.is_array()) bad("certificate must be an array of positions");
  Certificate cert{table.n(), table.m(), {}};
  std::vector<std::vector<std::optional<FerrersMatrix>>> grid(
      table.rows(), std::vector<std::optional<FerrersMatrix>>(table.cols()));
  for (const auto& entry : j) {
    const std::size_t i = natural(field(entry, "i"), "i");
    const std::size_t jj = natural(field(entry, "j"), "j");
    if (i >= table.rows() || jj >= table.cols()) bad("certificate position outside the table");
    if (grid[i][jj]) bad("certificate lists a position twice");
    const auto& raw = field(entry, "row_lengths");
    if (!raw.is_array()) bad("row_lengths must be an array");
    std::vector<std::size_t> lengths;
    for (const auto& v : raw) lengths.push_back(natural(v, "row length"));
    grid[i][jj] = FerrersMatrix(table.alpha(i), table.beta(jj), std::move(lengths));
  }
  for (std::size_t i = 0; i < table.rows(); ++i) {
    auto& row = cert.grid.emplace_back();
    for (std::size_t jj = 0; jj < table.cols(); ++jj) {
      if (!grid[i][jj]) {
        bad("certificate misses position (" + std::to_string(i) + "," + std::to_string(jj) + ")");
      }
      row.push_back(std::move(*grid[i][jj]));
    }
  }
  return cert;
}

json encode(const BigradedMonomial& u) { return {{"x", u.x.exps}, {"y", u.y.exps}}; }

BigradedMonomial decode_bigraded_monomial(const json& j) {
  return {Monomial{exponents(field(j, "x"), "x")}, Monomial{exponents(field(j, "y"), "y")}};
}

json encode(const BigradedMonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.minimal_generators()) gens.push_back(encode(g));
  return {{"n", ideal.n()},       {"m", ideal.m()},     {"rows", ideal.rows()},
          {"cols", ideal.cols()}, {"generators", gens}};
}

BigradedIdealDoc decode_bigraded_ideal(const json& j) {
  BigradedIdealDoc doc;
  doc.n = natural(field(j, "n"), "n");
  doc.m = natural(field(j, "m"), "m");
  doc.rows = natural(field(j, "rows"), "rows");
  doc.cols = natural(field(j, "cols"), "cols");
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  for (const auto& g : gens) {
    doc.generators.push_back(decode_bigraded_monomial(g));
    if (doc.generators.back().x.vars() != doc.n || doc.generators.back().y.vars() != doc.m) {
      bad("generator length differs from n or m");
    }
  }
  return doc;
}

}  // namespace hilfrac::json_io
