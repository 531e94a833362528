#pragma once

// JSON forms of the library objects. Rationals are "p/q" strings, matrices are
// arrays of rows, subspaces are lists of canonical basis vectors.

#include "geocrystal/crystal.hpp"
#include "geocrystal/flag.hpp"
#include "geocrystal/maffei.hpp"
#include "geocrystal/quiver.hpp"
#include "geocrystal/repalg.hpp"

#include <json.hpp>

namespace geocrystal {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const RatMat& m);
/// Accepts "p/q" strings or JSON integers; checks the expected shape.
RatMat matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols);

Json to_json(const RatSubspace& s);
Json to_json(const Flag& flag);
Json to_json(const Composition& a);
Json to_json(const Partition& lambda);

Json to_json(const QuiverRep& r);
/// Missing maps default to zero; throws ErrorKind::Parse on malformed input.
QuiverRep quiver_from_json(const Json& j);

Json to_json(const CrystalGraph& g);
Json to_json(const CheckResult& c);
Json to_json(const Fact& f);

/// Parses text, mapping parser failures to ErrorKind::Parse.
Json parse_json(const std::string& text);

}  // namespace geocrystal
