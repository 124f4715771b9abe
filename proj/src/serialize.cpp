#include <pfrob/serialize.hpp>

#include <limits>
#include <string>

#include <pfrob/errors.hpp>

namespace pfrob
{

namespace
{

const Json &field(const Json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw InputError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

template <typename T> T unsigned_field(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw InputError(std::string("field \"") + name + "\" must be a non-negative integer");
    }
    const auto raw = v.get<unsigned long long>();
    if (raw > std::numeric_limits<T>::max()) {
        throw InputError(std::string("field \"") + name + "\" is out of range");
    }
    return static_cast<T>(raw);
}

const Json &array_field(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_array()) {
        throw InputError(std::string("field \"") + name + "\" must be an array");
    }
    return v;
}

Rank rank_from_json(const Json &v)
{
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError("ranks must be non-negative integers");
    }
    return v.get<Rank>();
}

DigitContext context_from_json(const Json &j)
{
    return DigitContext(unsigned_field<std::uint32_t>(j, "p"), unsigned_field<unsigned>(j, "N"));
}

Json bound(const BigFloat &x, mpfr_rnd_t rounding) { return x.to_string(30, rounding); }

} // namespace

Json integer_to_json(const Integer &z)
{
    if (mpz_fits_slong_p(z.get_mpz_t()) != 0) {
        return static_cast<std::int64_t>(z.get_si());
    }
    return z.get_str();
}

Integer integer_from_json(const Json &j)
{
    if (j.is_number_unsigned()) {
        return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    }
    if (j.is_number_integer()) {
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
            throw InputError("not a decimal integer: \"" + j.get<std::string>() + "\"");
        }
        return z;
    }
    throw InputError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational &value)
{
    Rational q = value;
    q.canonicalize();
    if (is_integral(q)) {
        return integer_to_json(q.get_num());
    }
    return q.get_str();
}

LocalParabolicDatum parabolic_from_json(const Json &j)
{
    const DigitContext ctx = context_from_json(j);
    std::vector<Integer> weights;
    for (const auto &w : array_field(j, "weights")) {
        weights.push_back(integer_from_json(w));
    }
    std::vector<Rank> type;
    for (const auto &l : array_field(j, "type")) {
        type.push_back(rank_from_json(l));
    }
    return LocalParabolicDatum(ExponentTuple(std::move(weights), ctx, false), std::move(type));
}

Json to_json(const LocalParabolicDatum &e)
{
    Json out;
    out["p"] = e.context().p();
    out["N"] = e.context().N();
    out["weights"] = Json::array();
    for (const auto &a : e.weights().entries()) {
        out["weights"].push_back(integer_to_json(a));
    }
    out["type"] = e.type();
    return out;
}

bool has_flag(const Json &j) { return j.is_object() && j.contains("flag"); }

ParabolicFlatDatum flat_from_json(const Json &j)
{
    const DigitContext ctx = context_from_json(j);
    std::vector<FlatAtom> atoms;
    for (const auto &a : array_field(j, "atoms")) {
        atoms.push_back({integer_from_json(field(a, "exponent")), rank_from_json(field(a, "multiplicity"))});
    }
    LocalFlatDatum flat(ctx, std::move(atoms));
    std::vector<FlagStep> flag;
    Rank cumulative = 0;
    if (has_flag(j)) {
        for (const auto &s : array_field(j, "flag")) {
            const Rank kernel = rank_from_json(field(s, "kernel_rank"));
            cumulative += kernel;
            const Rank stated = s.contains("cumulative_rank") ? rank_from_json(s.at("cumulative_rank")) : cumulative;
            flag.push_back({integer_from_json(field(s, "exponent")), kernel, stated});
        }
    } else {
        for (const auto &atom : flat.atoms()) {
            cumulative += atom.multiplicity;
            flag.push_back({atom.exponent, atom.multiplicity, cumulative});
        }
    }
    return {std::move(flat), std::move(flag)};
}

Json to_json(const LocalFlatDatum &f)
{
    Json out;
    out["p"] = f.context().p();
    out["N"] = f.context().N();
    out["atoms"] = Json::array();
    for (const auto &atom : f.atoms()) {
        out["atoms"].push_back({{"exponent", integer_to_json(atom.exponent)}, {"multiplicity", atom.multiplicity}});
    }
    return out;
}

Json to_json(const ParabolicFlatDatum &f)
{
    Json out = to_json(f.flat);
    out["flag"] = Json::array();
    for (const auto &s : f.flag) {
        out["flag"].push_back({{"exponent", integer_to_json(s.exponent)},
                               {"kernel_rank", s.kernel_rank},
                               {"cumulative_rank", s.cumulative_rank}});
    }
    return out;
}

Json to_json(const DeterminantData &d)
{
    return {{"twist", integer_to_json(d.twist)}, {"exponent", integer_to_json(d.exponent)}};
}

Json to_json(const ConvexPolygon &polygon)
{
    Json vertices = Json::array();
    for (const auto &v : polygon.vertices()) {
        vertices.push_back(Json::array({integer_to_json(v.x), rational_to_json(v.y)}));
    }
    return {{"vertices", vertices}};
}

Json to_json(const SlopeGapReport &report)
{
    Json gaps = Json::array();
    for (const auto &g : report.gaps) {
        gaps.push_back(rational_to_json(g));
    }
    return {{"gaps", gaps},
            {"gaps_within_bound", report.gaps_within_bound},
            {"spread", rational_to_json(report.spread)},
            {"spread_within_bound", report.spread_within_bound}};
}

Json to_json(const HypothesisReport &report)
{
    return {{"parity_ok", report.parity},
            {"gap_ok", report.gap},
            {"bound_ok", report.prime_bound},
            {"degL_even", report.degL_even},
            {"validated", report.all_ok()}};
}

Json to_json(const Interval &interval)
{
    return {{"lo", bound(interval.lo(), MPFR_RNDD)},
            {"hi", bound(interval.hi(), MPFR_RNDU)},
            {"width", bound(interval.width(), MPFR_RNDU)},
            {"bits", static_cast<long>(interval.precision())}};
}

} // namespace pfrob
