#include "kdescent/lemma_verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "kdescent/parallel.hpp"

namespace kdescent {

namespace {

using Clock = std::chrono::steady_clock;

ResidueRing checked_ring(unsigned k) {
    if (k < 1 || k > VerificationReport::kMaxExponent)
        throw std::out_of_range("k must be in [1, 8]");
    return ResidueRing(k);
}

ResidueElement rational_residue(std::uint64_t v, const ResidueRing& ring) {
    return {v, 0, ring};
}

// Each value's lexicographically first preimage, in preimage order.
template <typename Map>
std::vector<detail::Labeled> first_preimages(const ResidueRing& ring, std::uint64_t domain, Map&& map) {
    ResidueSet seen(ring);
    std::vector<detail::Labeled> out;
    for (std::uint64_t i = 0; i < domain; ++i) {
        const std::uint64_t v = map(i);
        if (seen.contains(v))
            continue;
        seen.insert(v);
        out.push_back({i, v});
    }
    return out;
}

} // namespace

std::string_view to_string(LemmaId id) {
    return id == LemmaId::CubeClosure ? "cube-closure" : "no-solution";
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
    if (text == "cube-closure")
        return LemmaId::CubeClosure;
    if (text == "no-solution")
        return LemmaId::NoSolution;
    return std::nullopt;
}

namespace detail {

ClosureFailures closure_failures(const ResidueRing& ring, const std::vector<Labeled>& multipliers,
                                 const std::vector<Labeled>& members, const ResidueSet& target,
                                 unsigned jobs) {
    std::vector<ClosureFailures> partial(resolve_jobs(jobs));
    parallel_chunks(multipliers.size(), jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        ClosureFailures& local = partial[worker];
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto u = ResidueElement::from_index(ring, multipliers[i].value);
            for (const auto& s : members) {
                if (target.contains((u * ResidueElement::from_index(ring, s.value)).index()))
                    continue;
                ++local.count;
                if (local.first.size() < VerificationReport::kMaxListed)
                    local.first.emplace_back(multipliers[i].label, s.label);
            }
        }
    });
    ClosureFailures out;
    for (auto& p : partial) {
        out.count += p.count;
        for (auto& f : p.first)
            if (out.first.size() < VerificationReport::kMaxListed)
                out.first.push_back(f);
    }
    return out;
}

} // namespace detail

VerificationReport verify_cube_closure(unsigned k, unsigned jobs) {
    const auto start = Clock::now();
    const ResidueRing ring = checked_ring(k);
    const std::uint64_t m = ring.modulus();

    const ResidueSet image = image_of_g(ring, jobs);
    auto cubes = first_preimages(ring, ring.size(), [&](std::uint64_t c) {
        const auto z = ResidueElement::from_index(ring, c);
        return (z * z * z).index();
    });
    auto members = first_preimages(ring, ring.size(),
                                   [&](std::uint64_t xy) { return g_residue(xy / m, xy % m, ring).index(); });

    const auto failures = detail::closure_failures(ring, cubes, members, image, jobs);

    VerificationReport report{LemmaId::CubeClosure, k, ring.size(), failures.count == 0, failures.count, {}, {}, {}};
    for (const auto& [c, xy] : failures.first) {
        report.counterexamples.push_back({
            {"c", ResidueElement::from_index(ring, c)},
            {"x", rational_residue(xy / m, ring)},
            {"y", rational_residue(xy % m, ring)},
        });
    }
    report.set_sizes = {{"cubes", cubes.size()}, {"image_g", image.size()}};
    report.elapsed = Clock::now() - start;
    return report;
}

VerificationReport verify_no_solution(unsigned k, unsigned jobs) {
    const auto start = Clock::now();
    const ResidueRing ring = checked_ring(k);
    const std::uint64_t m = ring.modulus();

    const ResidueSet image = image_of_g(ring, jobs);
    const ResidueSet rhs = rhs_set(ring, jobs);
    ResidueSet common = image;
    common &= rhs;

    VerificationReport report{LemmaId::NoSolution, k, ring.size(), common.empty(), 0, {}, {}, {}};
    report.set_sizes = {{"image_g", image.size()}, {"intersection", common.size()}, {"rhs", rhs.size()}};

    if (!common.empty()) {
        // z-solutions per common value: total count and the first kMaxListed in order
        struct Solutions {
            std::uint64_t count = 0;
            std::vector<std::uint64_t> first;
        };
        std::unordered_map<std::uint64_t, Solutions> by_value;
        for (std::uint64_t z = 0; z < ring.size(); ++z) {
            const std::uint64_t v = rhs_residue(ResidueElement::from_index(ring, z)).index();
            if (!common.contains(v))
                continue;
            auto& s = by_value[v];
            ++s.count;
            if (s.first.size() < VerificationReport::kMaxListed)
                s.first.push_back(z);
        }
        for (std::uint64_t x = 0; x < m; ++x) {
            for (std::uint64_t y = 0; y < m; ++y) {
                const std::uint64_t v = g_residue(x, y, ring).index();
                if (!common.contains(v))
                    continue;
                const auto& s = by_value.at(v);
                report.counterexample_count += s.count;
                for (std::uint64_t z : s.first) {
                    if (report.counterexamples.size() >= VerificationReport::kMaxListed)
                        break;
                    report.counterexamples.push_back({
                        {"x", rational_residue(x, ring)},
                        {"y", rational_residue(y, ring)},
                        {"z", ResidueElement::from_index(ring, z)},
                    });
                }
            }
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

std::optional<unsigned> minimal_modulus(unsigned max_k, unsigned jobs) {
    if (max_k < 1 || max_k > VerificationReport::kMaxExponent)
        throw std::out_of_range("max_k must be in [1, 8]");
    for (unsigned k = 1; k <= max_k; ++k)
        if (verify_no_solution(k, jobs).holds)
            return k;
    return std::nullopt;
}

} // namespace kdescent
