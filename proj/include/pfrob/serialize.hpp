#ifndef PFROB_SERIALIZE_HPP
#define PFROB_SERIALIZE_HPP

#include <json.hpp>

#include <pfrob/counting.hpp>
#include <pfrob/disc.hpp>
#include <pfrob/interval.hpp>
#include <pfrob/polygon.hpp>

namespace pfrob
{

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer &z);
// Accepts a JSON integer or a decimal string; throws InputError otherwise.
Integer integer_from_json(const Json &j);
// Integral rationals become integers, the rest "num/den" strings.
Json rational_to_json(const Rational &q);

// {"p", "N", "weights": [...], "type": [...]}; throws InputError on malformed input.
LocalParabolicDatum parabolic_from_json(const Json &j);
Json to_json(const LocalParabolicDatum &e);

// {"p", "N", "atoms": [{"exponent", "multiplicity"}], "flag": [{"exponent", "kernel_rank", "cumulative_rank"}]}.
// Without "flag", the flag with one step per distinct exponent is used.
ParabolicFlatDatum flat_from_json(const Json &j);
bool has_flag(const Json &j);
Json to_json(const LocalFlatDatum &f);
Json to_json(const ParabolicFlatDatum &f);

Json to_json(const DeterminantData &d);
Json to_json(const ConvexPolygon &polygon);
Json to_json(const SlopeGapReport &report);
Json to_json(const HypothesisReport &report);
// {"lo", "hi", "width", "bits"} in decimal scientific notation, rounded outward.
Json to_json(const Interval &interval);

} // namespace pfrob

#endif
