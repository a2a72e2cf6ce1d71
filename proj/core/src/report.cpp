#include "kdescent/report.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

#include "kdescent/element_text.hpp"

namespace kdescent {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

std::string format_residue(const ResidueElement& x) {
    return format_element(EisensteinRational(x.lift()));
}

std::string format_point(const Point& p) {
    if (std::holds_alternative<Infinity>(p))
        return "inf";
    return format_element(std::get<EisensteinRational>(p));
}

namespace {

nlohmann::json witness_json(const DescentWitness& w) {
    return {{"x", w.x().get_str()}, {"y", w.y().get_str()}};
}

} // namespace

nlohmann::json to_json(const DescentClassification& c) {
    nlohmann::json out = {{"classification", std::string(to_string(c.kind))}};
    if (c.witness)
        out["witness"] = witness_json(*c.witness);
    return out;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json params = {{"k", report.k}, {"lemma", std::string(to_string(report.lemma))}};
    nlohmann::json list = nlohmann::json::array();
    for (const auto& assignment : report.counterexamples) {
        nlohmann::json entry = nlohmann::json::object();
        for (const auto& [name, value] : assignment)
            entry[name] = format_residue(value);
        list.push_back(std::move(entry));
    }
    nlohmann::json result = {
        {"counterexample_count", report.counterexample_count},
        {"counterexamples", std::move(list)},
        {"holds", report.holds},
        {"modulus", ResidueRing(report.k).modulus()},
        {"ring_size", report.ring_size},
        {"set_sizes", report.set_sizes},
    };
    return make_certificate(std::move(params), std::move(result), report.elapsed.count());
}

nlohmann::json to_json(const SearchReport& report) {
    nlohmann::json cover = nlohmann::json::array();
    for (const auto& c : report.cover)
        cover.push_back(format_element(c));
    nlohmann::json params = {{"cover", std::move(cover)}, {"height", report.max_height}};

    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [kind, n] : report.counts)
        counts[std::string(to_string(kind))] = n;
    nlohmann::json findings = nlohmann::json::array();
    for (const auto& f : report.descends) {
        findings.push_back({{"a", format_element(f.a)},
                            {"galois_commutes", f.galois_commutes},
                            {"witness", witness_json(f.witness)},
                            {"z0", format_point(f.z0)}});
    }
    nlohmann::json infinity = {{"classification", std::string(to_string(report.infinity_kind))}};
    infinity["a"] = report.infinity_value ? nlohmann::json(format_element(*report.infinity_value)) : nlohmann::json(nullptr);

    nlohmann::json result = {
        {"counts", std::move(counts)},
        {"descends", std::move(findings)},
        {"infinity", std::move(infinity)},
        {"points_tested", report.points_tested},
    };
    return make_certificate(std::move(params), std::move(result), report.elapsed.count());
}

nlohmann::json make_certificate(nlohmann::json parameters, nlohmann::json result, double elapsed_seconds) {
    const std::string fingerprint = sha256_hex(parameters.dump());
    return {
        {"elapsed_seconds", elapsed_seconds},
        {"fingerprint", fingerprint},
        {"parameters", std::move(parameters)},
        {"result", std::move(result)},
    };
}

} // namespace kdescent
