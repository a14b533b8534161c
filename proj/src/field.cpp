#include "crf/field.hpp"

#include <charconv>

namespace crf {

FieldSpec FieldSpec::padic(long p, int n) {
    if (!is_prime(p)) throw MathError(ErrorCode::InvalidArgument, "not a prime: " + std::to_string(p));
    if (n < 1) throw MathError(ErrorCode::InvalidArgument, "p-adic precision must be positive");
    return {Kind::Padic, p, n};
}

FieldSpec FieldSpec::parse(const std::string& text, int default_precision) {
    if (text == "real") return real();
    const std::string prefix = "padic:";
    if (text.rfind(prefix, 0) != 0)
        throw MathError(ErrorCode::InvalidArgument, "field must be 'real' or 'padic:p[:N]', got '" + text + "'");
    std::string rest = text.substr(prefix.size());
    auto parse_long = [&](const std::string& s) {
        long value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw MathError(ErrorCode::InvalidArgument, "bad number '" + s + "' in field '" + text + "'");
        return value;
    };
    auto colon = rest.find(':');
    long p = parse_long(rest.substr(0, colon));
    long n = colon == std::string::npos ? default_precision : parse_long(rest.substr(colon + 1));
    return padic(p, static_cast<int>(n));
}

std::string FieldSpec::to_string() const {
    if (is_real()) return "real";
    return "padic:" + std::to_string(prime) + ":" + std::to_string(precision);
}

Rational random_rational(std::mt19937_64& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    long n = num(rng);
    long d = den(rng);
    return Rational(n, d);
}

std::vector<Rational> random_rational_point(std::mt19937_64& rng, std::size_t dim, long height) {
    std::vector<Rational> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(random_rational(rng, height));
    return out;
}

std::vector<PadicNumber> random_padic_point(std::mt19937_64& rng, std::size_t dim, long prime, int precision,
                                            long min_val, long max_val) {
    std::vector<PadicNumber> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(random_padic(prime, precision, rng, min_val, max_val));
    return out;
}

std::vector<PadicNumber> to_padic(const std::vector<Rational>& point, long prime, int precision) {
    std::vector<PadicNumber> out;
    out.reserve(point.size());
    for (const auto& x : point) out.push_back(PadicNumber::from_rational(x, prime, precision));
    return out;
}

} // namespace crf
