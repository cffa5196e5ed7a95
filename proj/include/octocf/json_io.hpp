#pragma once

// JSON forms of the exact types. Field numbers are strings "p/q" so nothing
// is rounded; permutations are 1-based image lists.

#include "json.hpp"

#include "octocf/diagch.hpp"
#include "octocf/farey.hpp"
#include "octocf/h2moves.hpp"
#include "octocf/intmatrix.hpp"
#include "octocf/octagon.hpp"

namespace octocf::json_io {

using nlohmann::json;

/// Thrown on malformed input; carries the offending path when known.
class JsonError : public ParseError {
 public:
  using ParseError::ParseError;
};

json to_json(const Rational& r);
json to_json(const QuadNum& q);
json to_json(const Vec2& v);
json to_json(const Mat2& m);
json to_json(const farey::Direction& d);
json to_json(const farey::FareyExpansion& e);
json to_json(const farey::RP1Interval& i);
json to_json(const IntMatrix& m);
json to_json(const Permutation& p);
json to_json(const diagch::LabeledQuadrangulation& q);
json to_json(const diagch::StaircaseMove& m);
json to_json(const octagon::SectorReport& r);
json to_json(const octagon::WordIdentity& w);
json to_json(const octagon::TheoremReport& r);

Rational rational_from_json(const json& j);
QuadNum quadnum_from_json(const json& j);
Vec2 vec_from_json(const json& j);
farey::FareyExpansion expansion_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
Permutation permutation_from_json(const json& j);
diagch::LabeledQuadrangulation quadrangulation_from_json(const json& j);

/// Renderable trace: {"panels": [{"caption": str, "quadrangulation": Q}]}.
json sector_trace(const octagon::SectorRun& run);
json expansion_trace(const octagon::ExpansionTrace& t);

}  // namespace octocf::json_io
