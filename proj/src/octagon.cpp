#include "octocf/octagon.hpp"

#include <algorithm>
#include <exception>

namespace octocf::octagon {

namespace {

using diagch::CombDatum;
using h2moves::NodeId;

const Mat2& rho() {
  static const Mat2 m{QuadNum(-1), QuadNum(0), QuadNum(0), QuadNum(1)};
  return m;
}

QuadNum half_root2() { return QuadNum(Rational(0), Rational(1, 2)); }

// Direction along a sector boundary, where some saddle connection of Q' or
// some diagonal is parallel to it.
std::optional<int> boundary_index(const Direction& d) {
  for (int j = 0; j <= 8; ++j) {
    if (d.same_as(farey::boundary_direction(j))) return j;
  }
  return std::nullopt;
}

bool interior_of(int i, const Direction& theta) {
  if (boundary_index(theta)) return false;
  const auto c = farey::classify(theta);
  return c.size() == 1 && c.front() == i;
}

// Every wedge changed by a staircase move lies in the cone it replaced.
bool nested(const LabeledQuadrangulation& before, const h2moves::RawEvent& ev) {
  if (!ev.move) return true;
  return std::all_of(ev.move->cycle.begin(), ev.move->cycle.end(), [&](std::size_t i) {
    return diagch::cone_contains(before.wedge(i), ev.after.wedge(i));
  });
}

}  // namespace

QuadNum octagon_area() { return QuadNum(Rational(2), Rational(2)); }

const std::vector<Vec2>& qprime_vectors() {
  static const std::vector<Vec2> v = [] {
    const QuadNum h = half_root2();
    const QuadNum one(1);
    const QuadNum silver = one + QuadNum::root();
    return std::vector<Vec2>{
        {-one, QuadNum(0)}, {one + h, h},           // 1
        {-silver, QuadNum(0)}, {one + h, h},        // 2
        {-silver, QuadNum(0)}, {silver, one},       // 3
    };
  }();
  return v;
}

LabeledQuadrangulation qprime(const Direction& ref) {
  return LabeledQuadrangulation::from_vectors(h2moves::node_comb(NodeId::Left), qprime_vectors(), ref);
}

LabeledQuadrangulation q0() {
  const QuadNum h = half_root2();
  const QuadNum one(1);
  const QuadNum silver = one + QuadNum::root();
  std::vector<Vec2> v{
      {silver, one}, {silver, QuadNum(0)},  // 1
      {one + h, h}, {silver, QuadNum(0)},   // 2
      {one + h, h}, {one, QuadNum(0)},      // 3
  };
  return LabeledQuadrangulation::from_vectors(h2moves::node_comb(NodeId::Left), std::move(v),
                                              Direction(Vec2{QuadNum(4), QuadNum(1)}));
}

LabeledQuadrangulation initial_quadrangulation(farey::SectorIndex s0) {
  if (s0 < 0 || s0 > 7) throw std::out_of_range("sector index must be in 0..7");
  return diagch::transform(q0(), farey::nu(s0).inverse());
}

SectorRun run_sector_word(int i, const Direction& theta) {
  std::vector<h2moves::RawEvent> events;
  h2moves::RawState st = h2moves::start_state(qprime(theta));
  std::vector<LabeledQuadrangulation> snapshots;
  for (const h2moves::RawMove& m : h2moves::sector_raw_word(i)) {
    st = h2moves::execute_raw_move(st, m, &events);
    snapshots.push_back(st.q);
  }
  const Mat2& f = farey::branch(i);
  bool implicit = false;
  if (qsign(f.det()) < 0 && st.parity == 0) {
    st = h2moves::apply_symmetry(st, &events);
    implicit = true;
  }
  std::optional<Permutation> closing = diagch::relabeling_to(st.q.comb(), h2moves::node_comb(NodeId::Left));
  if (closing) st = h2moves::relabel_state(st, *closing, &events);
  const Mat2 g = st.parity ? f * rho() : f;
  std::vector<Vec2> back;
  for (const Vec2& w : st.q.vectors()) back.push_back(g * w);
  Direction dir(g * st.q.ref_dir().vec());
  return SectorRun{i, theta, std::move(events), std::move(snapshots), std::move(st), implicit, std::move(closing), std::move(back),
                   std::move(dir)};
}

SectorReport verify_sector(int i, const Direction& theta, const IntMatrix* expected) {
  if (i < 1 || i > 7) throw std::out_of_range("sector index must be in 1..7");
  if (!interior_of(i, theta)) {
    throw std::invalid_argument(theta.str() + " is not interior to sector " + std::to_string(i));
  }
  SectorReport r;
  r.sector = i;
  r.theta = theta;
  std::optional<SectorRun> run;
  try {
    run = run_sector_word(i, theta);
    r.moves_ok = true;
  } catch (const diagch::MoveUnavailable& e) {
    r.move_error = e.what();
  } catch (const h2moves::InvalidWord& e) {
    r.move_error = e.what();
  } catch (const diagch::InvalidQuadrangulation& e) {
    r.move_error = e.what();
  }
  if (!run) return r;

  r.parity = run->final_state.parity;
  r.parity_ok = (r.parity == 1) == (qsign(farey::branch(i).det()) < 0);
  r.matrix = run->final_state.labels;
  const IntMatrix& want = expected ? *expected : h2moves::sector_matrix(i);
  r.mismatch = first_difference(want, r.matrix);
  r.matrix_ok = run->closing.has_value() && !r.mismatch;

  if (!run->closing) {
    r.closure_detail = "final datum " + run->final_state.q.comb().str() + " is not a relabeling of the left node";
  } else {
    const auto& target = qprime_vectors();
    r.closure_ok = run->renormalized == target;
    for (std::size_t j = 0; j < target.size() && !r.closure_ok; ++j) {
      if (!(run->renormalized[j] == target[j])) {
        r.closure_detail = "vector " + std::to_string(j + 1) + " renormalizes to " + run->renormalized[j].str() +
                           ", expected " + target[j].str();
        break;
      }
    }
  }
  r.direction_ok = run->renormalized_direction.same_as(farey::farey_step(theta).image);
  return r;
}

std::vector<Direction> default_samples(int i, std::size_t count) {
  if (i < 1 || i > 7) throw std::out_of_range("sector index must be in 1..7");
  std::vector<Direction> out;
  if (i == 7) {
    const QuadNum edge = -(QuadNum(1) + QuadNum::root());
    for (std::size_t j = 1; j <= count; ++j) {
      Rational step = j >= 2 ? Rational(Integer(Integer(1) << static_cast<unsigned>(j - 2))) : Rational(1, 2);
      out.push_back(Direction::from_u(edge - QuadNum(step)));
    }
    return out;
  }
  const QuadNum hi = farey::boundary_direction(i).u().value();
  const QuadNum lo = farey::boundary_direction(i + 1).u().value();
  for (std::size_t j = 1; j <= count; ++j) {
    const QuadNum t(Rational(static_cast<long>(j), static_cast<long>(count + 1)));
    out.push_back(Direction::from_u(lo + t * (hi - lo)));
  }
  return out;
}

bool TheoremReport::ok() const {
  return std::all_of(samples.begin(), samples.end(), [](const SectorReport& s) { return s.ok(); }) &&
         std::all_of(identities.begin(), identities.end(), [](const WordIdentity& w) { return w.ok; });
}

namespace {

std::vector<WordIdentity> word_identities(const TheoremOptions& opt) {
  std::vector<WordIdentity> out;
  for (int i : opt.sectors) {
    const auto word = h2moves::sector_word(i);
    if (!word) continue;
    const h2moves::Composition c = h2moves::compose_word(*word);
    const IntMatrix& want = opt.expected ? (*opt.expected)[static_cast<std::size_t>(i - 1)] : h2moves::sector_matrix(i);
    WordIdentity w{i, c.matrix, c.parity, c.end, false, first_difference(want, c.matrix)};
    w.ok = !w.mismatch && c.end == NodeId::Left && (c.parity == 1) == (qsign(farey::branch(i).det()) < 0);
    out.push_back(std::move(w));
  }
  return out;
}

struct SampleJob {
  int sector;
  Direction theta;
};

std::vector<SampleJob> sample_jobs(const TheoremOptions& opt) {
  std::vector<SampleJob> jobs;
  for (int i : opt.sectors) {
    for (Direction& d : default_samples(i, opt.samples)) jobs.push_back({i, std::move(d)});
  }
  return jobs;
}

SectorReport run_job(const SampleJob& job, const TheoremOptions& opt) {
  const IntMatrix* expected = opt.expected ? &(*opt.expected)[static_cast<std::size_t>(job.sector - 1)] : nullptr;
  return verify_sector(job.sector, job.theta, expected);
}

template <class Out, class In, class F>
std::vector<Out> parallel_map(const std::vector<In>& in, F f) {
  std::vector<std::optional<Out>> slots(in.size());
  std::vector<std::exception_ptr> errors(in.size());
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < n; ++j) {
    try {
      slots[static_cast<std::size_t>(j)] = f(in[static_cast<std::size_t>(j)]);
    } catch (...) {
      errors[static_cast<std::size_t>(j)] = std::current_exception();
    }
  }
  std::vector<Out> out;
  out.reserve(in.size());
  for (std::size_t j = 0; j < in.size(); ++j) {
    if (errors[j]) std::rethrow_exception(errors[j]);
    out.push_back(std::move(*slots[j]));
  }
  return out;
}

}  // namespace

TheoremReport verify_theorem(const TheoremOptions& opt) {
  TheoremReport r;
  r.samples = parallel_map<SectorReport>(sample_jobs(opt), [&](const SampleJob& j) { return run_job(j, opt); });
  r.identities = word_identities(opt);
  return r;
}

TheoremReport verify_theorem_serial(const TheoremOptions& opt) {
  TheoremReport r;
  for (const SampleJob& j : sample_jobs(opt)) r.samples.push_back(run_job(j, opt));
  r.identities = word_identities(opt);
  return r;
}

bool ExpansionTrace::ok() const {
  return error.empty() && std::all_of(steps.begin(), steps.end(), [](const ExpansionStep& s) {
           return s.conjugation_ok && s.nested_ok && s.area_ok && s.original.has_value();
         });
}

ExpansionTrace run_expansion(const Direction& theta, std::size_t n, farey::TiePolicy policy) {
  ExpansionTrace t;
  t.theta = theta;
  t.expansion = farey::expand(theta, n + 1, policy);
  Mat2 frame = farey::branch(t.expansion.entries.front());
  t.frame0 = frame;
  Direction phi(frame * theta.vec());
  if (auto j = boundary_index(phi)) {
    t.hit_singularity = true;
    t.halt_detail = "renormalized direction is the boundary j = " + std::to_string(*j) + " before step 1";
    return t;
  }
  t.start = qprime(phi);
  t.original_start = diagch::transform(*t.start, frame.inverse());
  // transform() exchanges sides under reflections; the raw tuple does not.
  auto raw_original = [](const Mat2& inv) {
    std::vector<Vec2> v;
    for (const Vec2& w : qprime_vectors()) v.push_back(inv * w);
    return v;
  };
  std::vector<Vec2> prev = raw_original(frame.inverse());

  for (std::size_t k = 1; k <= n && k < t.expansion.entries.size(); ++k) {
    if (auto j = boundary_index(phi)) {
      t.hit_singularity = true;
      t.halt_detail = "renormalized direction is the boundary j = " + std::to_string(*j) + " before step " +
                      std::to_string(k);
      break;
    }
    const int s = t.expansion.entries[k];
    std::optional<SectorRun> run;
    try {
      run = run_sector_word(s, phi);
    } catch (const std::exception& e) {
      t.error = "step " + std::to_string(k) + ": " + e.what();
      break;
    }
    if (!run->closing || run->renormalized != qprime_vectors()) {
      t.error = "step " + std::to_string(k) + ": sector " + std::to_string(s) + " word does not close up on Q'";
      break;
    }
    const Mat2 next_frame = farey::branch(s) * frame;
    const Mat2 back = next_frame.inverse();
    const Direction next_phi = run->renormalized_direction;

    bool area_ok = true;
    bool nested_ok = true;
    const LabeledQuadrangulation start = qprime(phi);
    const LabeledQuadrangulation* before = &start;
    for (const auto& ev : run->events) {
      if (diagch::total_area(ev.after) != octagon_area()) area_ok = false;
      if (!nested(*before, ev)) nested_ok = false;
      before = &ev.after;
    }
    std::optional<LabeledQuadrangulation> original;
    try {
      original = diagch::transform(qprime(next_phi), back);
    } catch (const diagch::InvalidQuadrangulation& e) {
      t.error = "step " + std::to_string(k) + ": " + e.what();
    }
    const std::vector<Vec2> now = raw_original(back);
    const bool conjugation_ok = diagch::apply_matrix(h2moves::sector_matrix(s), prev) == now;
    if (original && !original->ref_dir().same_as(theta)) {
      t.error = "step " + std::to_string(k) + ": frame transport lost the direction";
    }
    t.steps.push_back(
        ExpansionStep{s, phi, std::move(*run), next_frame, std::move(original), conjugation_ok, nested_ok, area_ok});
    if (!t.error.empty()) break;
    prev = now;
    frame = next_frame;
    phi = next_phi;
  }
  return t;
}

std::vector<ExpansionTrace> run_expansions(const std::vector<Direction>& thetas, std::size_t n) {
  return parallel_map<ExpansionTrace>(thetas, [n](const Direction& d) { return run_expansion(d, n); });
}

std::vector<ExpansionTrace> run_expansions_serial(const std::vector<Direction>& thetas, std::size_t n) {
  std::vector<ExpansionTrace> out;
  for (const Direction& d : thetas) out.push_back(run_expansion(d, n));
  return out;
}

}  // namespace octocf::octagon
