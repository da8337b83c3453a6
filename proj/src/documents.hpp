#pragma once

#include "json_io.hpp"
#include "verify.hpp"

namespace qch {

// Deterministic result documents behind each command; no timing fields, the
// caller wraps them. Keys come out sorted by the JSON library.
Json charpoly_document(const Arrangement& a, const Limits& limits);
Json coboundary_document(const Arrangement& a, const Limits& limits);
Json layers_document(const Arrangement& a, const Limits& limits);
std::string layers_dot(const Arrangement& a, const Limits& limits);
Json tutte_document(const Arrangement& a, const Limits& limits);
Json eval_document(const Arrangement& a, const Ideal& ideal, const Limits& limits);
Json codes_document(const Arrangement& a, const Ideal& ideal, const std::string& mode,
                    const Limits& limits);
Json verify_document(const Arrangement& a, long long qmax, const Limits& limits, bool* all_passed);
Json section4_document(const Limits& limits);

}  // namespace qch
