#pragma once

// Certificates: JSON documents of the form
//
//   { "elapsed_seconds": ..., "fingerprint": "<sha256 of parameters>",
//     "parameters": {...}, "result": {...} }
//
// Keys are sorted and lists are in enumeration order, so "parameters" and
// "result" are byte-stable for fixed inputs; elapsed time lives outside them.

#include <string>
#include <string_view>

#include <json.hpp>

#include "kdescent/cover_search.hpp"
#include "kdescent/lemma_verifier.hpp"

namespace kdescent {

std::string sha256_hex(std::string_view data);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const DescentClassification& c);

/// Wraps parameters and result into a certificate, fingerprinting the parameters.
nlohmann::json make_certificate(nlohmann::json parameters, nlohmann::json result, double elapsed_seconds);

std::string format_residue(const ResidueElement& x);
std::string format_point(const Point& p);

} // namespace kdescent
