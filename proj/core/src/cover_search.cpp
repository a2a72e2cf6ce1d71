#include "kdescent/cover_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kdescent/parallel.hpp"

namespace kdescent {

mpz_class height(const mpq_class& q) {
    mpz_class p = abs(q.get_num());
    return std::max(p, q.get_den());
}

std::vector<mpq_class> enumerate_rationals(unsigned long max_height) {
    if (max_height < 1)
        throw std::invalid_argument("height bound must be at least 1");
    std::vector<mpq_class> out;
    out.emplace_back(0);
    for (unsigned long h = 1; h <= max_height; ++h) {
        // height exactly h: q < h with p = +-h, or q = h with |p| <= h
        for (unsigned long q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1)
                continue;
            out.emplace_back(mpz_class(-static_cast<long>(h)), mpz_class(q));
            out.emplace_back(mpz_class(h), mpz_class(q));
        }
        for (long p = -static_cast<long>(h); p <= static_cast<long>(h); ++p) {
            if (p == 0 || std::gcd(static_cast<unsigned long>(std::labs(p)), h) != 1)
                continue;
            out.emplace_back(mpz_class(p), mpz_class(h));
        }
    }
    return out;
}

SearchReport search(const Polynomial& f, unsigned long max_height, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<mpq_class> points = enumerate_rationals(max_height);

    std::vector<DescentClassification> results(points.size(), {DescentKind::Undefined, std::nullopt});
    std::vector<EisensteinRational> values(points.size());
    parallel_chunks(points.size(), jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const Point z0 = EisensteinRational(points[i]);
            values[i] = *specialization_value(f, z0);
            results[i] = classify(values[i]);
        }
    });

    SearchReport report{max_height, f.coeffs(), points.size() + 1, {}, {}, DescentKind::Undefined, std::nullopt, {}};
    for (auto kind : {DescentKind::Descends, DescentKind::Disconnected, DescentKind::NoDescent, DescentKind::Undefined})
        report.counts[kind] = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        ++report.counts[results[i].kind];
        if (results[i].kind == DescentKind::Descends) {
            const auto& w = *results[i].witness;
            report.descends.push_back({EisensteinRational(points[i]), values[i], w, verify_galois_commute(values[i], w)});
        }
    }

    report.infinity_value = specialization_value(f, Infinity{});
    const auto at_infinity = specialize(f, Infinity{});
    report.infinity_kind = at_infinity.kind;
    ++report.counts[at_infinity.kind];
    if (at_infinity.kind == DescentKind::Descends) {
        const auto& a = *report.infinity_value;
        report.descends.push_back({Infinity{}, a, *at_infinity.witness, verify_galois_commute(a, *at_infinity.witness)});
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace kdescent
