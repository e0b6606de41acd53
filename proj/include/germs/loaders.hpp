#pragma once

#include <string>
#include <vector>

#include "germs/germ_family.hpp"
#include "germs/germs_category.hpp"
#include "germs/sections_glue.hpp"
#include "germs/textfile.hpp"

namespace germs::io {

/// `ring`: vars, field ("QQ" or "GF(p)"), engine ("monomial" or
/// "univariate"; default univariate for one variable), order ("grevlex" or
/// "lex"), local.
RingContext load_ring(const text::Value& root);

/// {vars: [...]}, {poly: "..."} or {zero: true}.
PrimeIdeal parse_prime(const RingContext& ctx, const text::Value& v);
/// "x,y", "poly:t-3" or "zero".
PrimeIdeal parse_prime_arg(const RingContext& ctx, const std::string& arg);

Polynomial parse_poly(const RingPtr& ring, const text::Value& v);
/// A string (rank one) or an array of `rank` strings.
ModuleElement parse_element(const RingPtr& ring, std::size_t rank, const text::Value& v);
std::vector<ModuleElement> parse_elements(const RingPtr& ring, std::size_t rank, const text::Value& v);
/// Array of rows.
Matrix parse_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, const text::Value& v);

/// rank, ring, entries [{prime, stalk}], generic {rule, submodule}.
GermFamily load_family(const text::Value& root);
/// module {generators, relations}.
ModulePresentation load_module(const RingContext& ctx, const text::Value& root);
/// germs [{prime, numerator, denominator}].
std::vector<Germ> load_germs(const RingContext& ctx, const ModulePresentation& m, const text::Value& root);
/// germs [{prime, matrix, denominator}].
std::vector<MapGerm> load_map_germs(const RingContext& ctx, const ModulePresentation& e,
                                    const ModulePresentation& f, const text::Value& root);
/// ring, stalks [{prime, generators, relations}], sigma [{from, to, matrix,
/// denominator}], optional pattern.
GermsCohObject load_object(const text::Value& root);

}  // namespace germs::io
