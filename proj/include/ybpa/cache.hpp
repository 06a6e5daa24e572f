#pragma once

// On-disk cache for levels of presented towers. One JSON file per level:
//
//   { "format": "ybpa-basis-table", "version": 1,
//     "algebra": name, "n": n, "key": presentation hash,
//     "alphabet": [{"name", "reality"}], "labels": [...], "unit": k,
//     "generators": {name: sparse}, "table": [[sparse]], "star": [sparse],
//     "include_below", "shift_below", "ptrace_down": [sparse],
//     "content_hash": hash of everything else }
//
// sparse is [[index, coeff]], coeff is {"num": poly, "den": poly} and a
// poly is a list of [exponents, re, im]. The key hashes the presentations
// of levels n and n-1 together with the completion caps, so any change to
// relations or parameters selects a different file.

#include <cstdint>
#include <string>

#include "ybpa/presented.hpp"

namespace ybpa {

constexpr int kCacheVersion = 1;

// Canonical text of a presentation: name, strands, families, alphabet,
// relations, closure values, star images and caps.
std::string presentation_fingerprint(const Presentation& p, int overlap_cap, int length_cap);
// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace ybpa
