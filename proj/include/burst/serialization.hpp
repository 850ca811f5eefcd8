#ifndef BURST_SERIALIZATION_HPP
#define BURST_SERIALIZATION_HPP

#include <cstddef>

#include "json.hpp"

#include "burst/codebook.hpp"
#include "burst/component_codes.hpp"
#include "burst/construction_31.hpp"
#include "burst/construction_ts.hpp"
#include "burst/error_model.hpp"
#include "burst/params.hpp"

namespace burst {

/// {"center", "t", "s", "size", "members": [bitstrings]}
nlohmann::json to_json(const Ball& ball);

/// Residues of each family, e.g. {"a": 1, "b": 3}; cts adds n, t, s, f, P and
/// a "rows" array of {"row", "c", "d"}.
nlohmann::json to_json(const SyndromeParams& params);

/// {"family", "n", "t", "s", "params", "size", "redundancy", "members"?}.
/// Members are listed only when size <= member_limit.
nlohmann::json to_json(const Codebook& book, std::size_t member_limit = 4096);

/// {"codeword", "classification", "location": [lo, hi] | null}
nlohmann::json to_json(const DecodeOutcome& outcome);

/// {"codeword", "received_rows", "first_row", "windows", "decoded_rows"}
nlohmann::json to_json(const CtsDecodeTrace& trace);

/// {"codeword", "delta_odd", "delta_even", "delta_runs", "classification",
///  "candidates", "survivors_without_runs", "survivors"}
nlohmann::json to_json(const C31DecodeTrace& trace);

}  // namespace burst

#endif  // BURST_SERIALIZATION_HPP
