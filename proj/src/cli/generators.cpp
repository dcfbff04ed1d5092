#include "hessen/cli.hpp"
#include "hessen/io.hpp"

namespace hessen::cli {

Family parse_family(std::string_view name) {
    if (name == "constant") return Family::Constant;
    if (name == "periodic") return Family::Periodic;
    if (name == "random") return Family::Random;
    throw Error(ErrorCode::InvalidParams, "unknown family \"" + std::string(name) + "\" (constant|periodic|random)");
}

namespace {

// mt19937_64 is fully specified, so raw draws (unlike std distributions) are
// identical across standard libraries.
std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <FieldScalar S>
S draw_scalar(std::mt19937_64& rng, bool nonzero) {
    if constexpr (ScalarTraits<S>::exact) {
        std::int64_t num = draw_int(rng, -9, 9);
        while (nonzero && num == 0) num = draw_int(rng, -9, 9);
        const std::int64_t den = draw_int(rng, 1, 9);
        return S(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))), mpq_class(0));
    } else {
        double value = 2.0 * draw_unit(rng) - 1.0;
        while (nonzero && value == 0.0) value = 2.0 * draw_unit(rng) - 1.0;
        return S(value, 0.0);
    }
}

template <FieldScalar S>
std::vector<S> random_row(std::mt19937_64& rng, std::size_t length) {
    std::vector<S> row;
    row.reserve(length);
    for (std::size_t i = 0; i + 1 < length; ++i) row.push_back(draw_scalar<S>(rng, false));
    row.push_back(draw_scalar<S>(rng, true));
    return row;
}

template <FieldScalar S>
LdevcSpec<S> constant_spec(const GenParams& params) {
    std::vector<S> band;
    if (!params.alpha.empty()) {
        if (params.index_n != 1) throw Error(ErrorCode::InvalidParams, "--alpha requires N = 1");
        if (!params.coeffs.empty()) throw Error(ErrorCode::InvalidParams, "use either --alpha or --coeffs");
        band = {S(-io::parse_scalar_text<S>(params.alpha)), S(1L)};
    } else {
        band = io::parse_scalar_list<S>(params.coeffs);
    }
    if (band.size() != params.index_n + 1) {
        throw Error(ErrorCode::InvalidParams, "constant family needs N+1 = " + std::to_string(params.index_n + 1)
                                                  + " coefficients, got " + std::to_string(band.size()));
    }
    if (is_zero(band.back())) throw Error(ErrorCode::InvalidParams, "leading coefficient must be nonzero");
    const S forcing = params.forcing.empty() ? S(0L) : io::parse_scalar_text<S>(params.forcing);

    std::vector<std::vector<S>> coeffs;
    for (std::size_t n = 0; n <= params.horizon; ++n) {
        std::vector<S> row(params.index_n + n + 1, S(0L));
        for (std::size_t k = 0; k <= params.index_n; ++k) row[n + k] = band[k];
        coeffs.push_back(std::move(row));
    }
    return LdevcSpec<S>::create(params.index_n, std::move(coeffs), std::vector<S>(params.horizon + 1, forcing));
}

template <FieldScalar S>
LdevcSpec<S> periodic_spec(const GenParams& params, std::mt19937_64& rng) {
    const std::size_t p = params.period;
    if (p == 0) throw Error(ErrorCode::InvalidParams, "period must be positive");
    std::vector<std::vector<S>> base;
    std::vector<S> base_forcing;
    for (std::size_t s = 0; s < p; ++s) {
        base.push_back(random_row<S>(rng, params.index_n + s + 1));
        base_forcing.push_back(draw_scalar<S>(rng, false));
    }
    // row n = q p + s repeats base row s shifted right by q p; older terms are zero
    std::vector<std::vector<S>> coeffs;
    std::vector<S> forcing;
    for (std::size_t n = 0; n <= params.horizon; ++n) {
        const std::size_t q = n / p;
        const std::size_t s = n % p;
        std::vector<S> row(params.index_n + n + 1, S(0L));
        for (std::size_t i = 0; i < base[s].size(); ++i) row[i + q * p] = base[s][i];
        coeffs.push_back(std::move(row));
        forcing.push_back(base_forcing[s]);
    }
    return LdevcSpec<S>::create(params.index_n, std::move(coeffs), std::move(forcing));
}

template <FieldScalar S>
LdevcSpec<S> random_spec(const GenParams& params, std::mt19937_64& rng) {
    std::vector<std::vector<S>> coeffs;
    std::vector<S> forcing;
    for (std::size_t n = 0; n <= params.horizon; ++n) {
        coeffs.push_back(random_row<S>(rng, params.index_n + n + 1));
        forcing.push_back(draw_scalar<S>(rng, false));
    }
    return LdevcSpec<S>::create(params.index_n, std::move(coeffs), std::move(forcing));
}

} // namespace

template <FieldScalar S>
LdevcSpec<S> generate_spec(const GenParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (params.family) {
    case Family::Constant: return constant_spec<S>(params);
    case Family::Periodic: return periodic_spec<S>(params, rng);
    case Family::Random: return random_spec<S>(params, rng);
    }
    throw Error(ErrorCode::InvalidParams, "unknown family");
}

template LdevcSpec<ComplexRational> generate_spec<ComplexRational>(const GenParams&, std::uint64_t);
template LdevcSpec<ComplexDouble> generate_spec<ComplexDouble>(const GenParams&, std::uint64_t);

std::string cmd_gen(const GenParams& params, const RunConfig& config) {
    config.validate();
    const auto doc = config.backend == Backend::Exact
                         ? io::to_json(generate_spec<ComplexRational>(params, config.seed))
                         : io::to_json(generate_spec<ComplexDouble>(params, config.seed));
    return doc.dump() + "\n";
}

HessenbergMatrix<ComplexDouble> random_unit_square_matrix(std::size_t order, std::mt19937_64& rng) {
    return HessenbergMatrix<ComplexDouble>::generate(order, [&](std::size_t, std::size_t) {
        const double re = draw_unit(rng);
        const double im = draw_unit(rng);
        return ComplexDouble(re, im);
    });
}

} // namespace hessen::cli
