#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "hilfrac/bigraded.hpp"
#include "hilfrac/lex_ideal.hpp"

// JSON encodings used by the CLI. Decoders throw InvalidArgument on any
// schema violation.
namespace hilfrac::json_io {

using nlohmann::json;

/// {"exps":[e1,...,en]}
json encode(const Monomial& u);
Monomial decode_monomial(const json& j);

/// {"n":N,"generators":[Monomial,...]}
struct MonomialIdealDoc {
  std::size_t n = 0;
  std::vector<Monomial> generators;
};
json encode(const MonomialIdealDoc& doc);
MonomialIdealDoc decode_monomial_ideal(const json& j);

/// {"entries":[{"i":..,"degree":..,"rank":..}]}; ranks too large for a
/// 64-bit integer are written as decimal strings.
json encode(const BettiTable& table);
BettiTable decode_betti(const json& j);

/// {"n":2,"m":2,"rows":4,"cols":4,"values":[[...],...]}
json encode(const BigradedTable& table);
BigradedTable decode_table(const json& j);

/// [{"i":..,"j":..,"row_lengths":[...]}, ...]; matrix sizes come from the
/// table, zero padding of row_lengths is optional.
json encode(const Certificate& cert);
Certificate decode_certificate(const json& j, const BigradedTable& table);

/// {"x":[...],"y":[...]}
json encode(const BigradedMonomial& u);
BigradedMonomial decode_bigraded_monomial(const json& j);

/// {"n":..,"m":..,"rows":..,"cols":..,"generators":[...]}
json encode(const BigradedMonomialIdeal& ideal);
struct BigradedIdealDoc {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigradedMonomial> generators;
};
BigradedIdealDoc decode_bigraded_ideal(const json& j);

}  // namespace hilfrac::json_io
