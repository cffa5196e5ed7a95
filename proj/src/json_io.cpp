#include "octocf/json_io.hpp"

namespace octocf::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json mismatch_json(const std::optional<MatrixMismatch>& m) {
  if (!m) return nullptr;
  return {{"row", m->row + 1}, {"col", m->col + 1}, {"expected", m->expected}, {"actual", m->actual}};
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const QuadNum& q) { return {{"a", q.a().str()}, {"b", q.b().str()}}; }

json to_json(const Vec2& v) { return {{"x", to_json(v.x)}, {"y", to_json(v.y)}}; }

json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json to_json(const farey::Direction& d) { return to_json(d.vec()); }

json to_json(const farey::FareyExpansion& e) {
  return {{"entries", e.entries}, {"boundary_hit", e.boundary_hit}, {"terminating", e.terminating}};
}

json to_json(const farey::RP1Interval& i) {
  return {{"start", to_json(i.start)}, {"end", to_json(i.end)}, {"u_lo", i.u_lo().str()}, {"u_hi", i.u_hi().str()}};
}

json to_json(const IntMatrix& m) { return m.rows(); }

json to_json(const Permutation& p) { return p.to_one_based(); }

json to_json(const diagch::LabeledQuadrangulation& q) {
  json wedges = json::array();
  for (std::size_t i = 0; i < q.k(); ++i) wedges.push_back({{"l", to_json(q.left(i))}, {"r", to_json(q.right(i))}});
  return {{"k", q.k()},
          {"pi_l", to_json(q.comb().pi_l)},
          {"pi_r", to_json(q.comb().pi_r)},
          {"wedges", std::move(wedges)},
          {"ref_dir", to_json(q.ref_dir())}};
}

json to_json(const diagch::StaircaseMove& m) {
  std::vector<std::size_t> cycle;
  for (std::size_t i : m.cycle) cycle.push_back(i + 1);
  return {{"side", diagch::to_string(m.side)}, {"cycle", cycle}, {"matrix", to_json(m.matrix)}};
}

json to_json(const octagon::SectorReport& r) {
  return {{"sector", r.sector},
          {"theta", to_json(r.theta)},
          {"u", r.theta.u().str()},
          {"ok", r.ok()},
          {"moves_ok", r.moves_ok},
          {"move_error", r.move_error},
          {"matrix", to_json(r.matrix)},
          {"matrix_ok", r.matrix_ok},
          {"first_mismatch", mismatch_json(r.mismatch)},
          {"parity", r.parity},
          {"parity_ok", r.parity_ok},
          {"closure_ok", r.closure_ok},
          {"closure_detail", r.closure_detail},
          {"direction_ok", r.direction_ok}};
}

json to_json(const octagon::WordIdentity& w) {
  return {{"sector", w.sector},
          {"ok", w.ok},
          {"matrix", to_json(w.matrix)},
          {"parity", w.parity},
          {"end", h2moves::to_string(w.end)},
          {"first_mismatch", mismatch_json(w.mismatch)}};
}

json to_json(const octagon::TheoremReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  json ids = json::array();
  for (const auto& w : r.identities) ids.push_back(to_json(w));
  return {{"ok", r.ok()}, {"samples", std::move(samples)}, {"word_identities", std::move(ids)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw JsonError("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

QuadNum quadnum_from_json(const json& j) {
  if (j.is_string()) return parse_quadnum(j.get<std::string>());
  if (j.is_number_integer()) return QuadNum(Rational(j.get<long long>()));
  return {rational_from_json(field(j, "a")), rational_from_json(field(j, "b"))};
}

Vec2 vec_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {quadnum_from_json(j[0]), quadnum_from_json(j[1])};
  return {quadnum_from_json(field(j, "x")), quadnum_from_json(field(j, "y"))};
}

farey::FareyExpansion expansion_from_json(const json& j) {
  farey::FareyExpansion e;
  try {
    e.entries = field(j, "entries").get<std::vector<int>>();
    e.boundary_hit = j.value("boundary_hit", false);
    e.terminating = j.value("terminating", false);
  } catch (const json::exception& ex) {
    throw JsonError(std::string("bad expansion: ") + ex.what());
  }
  return e;
}

IntMatrix matrix_from_json(const json& j) {
  try {
    return IntMatrix::from_rows(j.get<std::vector<std::vector<IntMatrix::Entry>>>());
  } catch (const json::exception& ex) {
    throw JsonError(std::string("bad matrix: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw JsonError(std::string("bad matrix: ") + ex.what());
  }
}

Permutation permutation_from_json(const json& j) {
  try {
    return Permutation::from_one_based(j.get<std::vector<int>>());
  } catch (const json::exception& ex) {
    throw JsonError(std::string("bad permutation: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw JsonError(std::string("bad permutation: ") + ex.what());
  }
}

diagch::LabeledQuadrangulation quadrangulation_from_json(const json& j) {
  diagch::CombDatum comb{permutation_from_json(field(j, "pi_l")), permutation_from_json(field(j, "pi_r"))};
  const json& w = field(j, "wedges");
  if (!w.is_array()) throw JsonError("wedges must be an array");
  if (j.contains("k") && j.at("k").get<std::size_t>() != w.size()) throw JsonError("k disagrees with wedge count");
  std::vector<diagch::Wedge> wedges;
  for (const json& x : w) wedges.push_back({vec_from_json(field(x, "l")), vec_from_json(field(x, "r"))});
  farey::Direction ref = j.contains("ref_dir") ? farey::Direction(vec_from_json(j.at("ref_dir")))
                                               : farey::Direction(Vec2{0, 1});
  return diagch::LabeledQuadrangulation(std::move(comb), std::move(wedges), std::move(ref));
}

json sector_trace(const octagon::SectorRun& run) {
  json panels = json::array();
  panels.push_back({{"caption", "Q' along u = " + run.theta.u().str()},
                    {"quadrangulation", to_json(octagon::qprime(run.theta))}});
  const auto& word = h2moves::sector_raw_word(run.sector);
  for (std::size_t j = 0; j < run.snapshots.size(); ++j) {
    panels.push_back({{"caption", word[j].str()}, {"quadrangulation", to_json(run.snapshots[j])}});
  }
  json events = json::array();
  for (const auto& ev : run.events) {
    json e = {{"label", ev.label}, {"matrix", to_json(ev.matrix)}};
    if (ev.move) e["move"] = to_json(*ev.move);
    events.push_back(std::move(e));
  }
  return {{"kind", "sector"},
          {"sector", run.sector},
          {"theta", to_json(run.theta)},
          {"panels", std::move(panels)},
          {"events", std::move(events)},
          {"matrix", to_json(run.final_state.labels)},
          {"parity", run.final_state.parity},
          {"implicit_symmetry", run.implicit_symmetry},
          {"final", to_json(run.final_state.q)}};
}

json expansion_trace(const octagon::ExpansionTrace& t) {
  json panels = json::array();
  if (t.original_start) {
    panels.push_back({{"caption", "start"}, {"quadrangulation", to_json(*t.original_start)}});
  }
  json steps = json::array();
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    if (s.original) {
      panels.push_back({{"caption", "step " + std::to_string(k + 1) + ": sector " + std::to_string(s.sector)},
                        {"quadrangulation", to_json(*s.original)}});
    }
    steps.push_back({{"sector", s.sector},
                     {"direction", to_json(s.direction)},
                     {"frame", to_json(s.frame)},
                     {"conjugation_ok", s.conjugation_ok},
                     {"nested_ok", s.nested_ok},
                     {"area_ok", s.area_ok}});
  }
  json out = {{"kind", "expansion"},
              {"theta", to_json(t.theta)},
              {"expansion", to_json(t.expansion)},
              {"ok", t.ok()},
              {"hit_singularity", t.hit_singularity},
              {"halt", t.halt_detail},
              {"error", t.error},
              {"steps", std::move(steps)},
              {"panels", std::move(panels)}};
  return out;
}

}  // namespace octocf::json_io
