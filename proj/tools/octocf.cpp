// Command-line front end. Every command prints JSON on stdout (or to --out).
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 I/O failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "octocf/classical.hpp"
#include "octocf/json_io.hpp"
#include "octocf/octagon.hpp"
#include "octocf/render.hpp"

using namespace octocf;
using json_io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedU {
  ProjVal u = ProjVal::infinity();
  bool approximate = false;
};

ParsedU parse_u(const std::string& text) {
  if (text == "inf" || text == "∞" || text == "infinity") return {ProjVal::infinity(), false};
  try {
    return {parse_quadnum(text), false};
  } catch (const ParseError&) {
    // Fall through to decimals.
  }
  const Rational r = limit_denominator(Rational::parse_decimal(text), Integer(1000000));
  return {QuadNum(r), true};
}

farey::Direction direction_of(const ParsedU& p, const std::string& side) {
  if (side != "pos" && side != "neg") throw ParseError("--side must be pos or neg");
  return farey::Direction::from_projective(p.u, side == "neg");
}

farey::TiePolicy parse_policy(const std::string& s) {
  if (s == "low") return farey::TiePolicy::Low;
  if (s == "high") return farey::TiePolicy::High;
  throw ParseError("--policy must be low or high");
}

std::vector<int> parse_prefix(std::string text) {
  for (char& c : text) {
    if (c == '[' || c == ']' || c == ';' || c == ',') c = ' ';
  }
  std::istringstream is(text);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad prefix entry: " + tok);
    }
    if (used != tok.size()) throw ParseError("bad prefix entry: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty prefix");
  return out;
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot write " + out);
  f << text;
  if (!f) throw IoError("write failed for " + out);
}

void emit(const json& j, const std::string& out) { emit(j.dump(2) + "\n", out); }

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("OCTOCF_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError("OCTOCF_SEED must be an unsigned integer");
    }
  }
  return 20240611;
}

// Uniform point of ℚ(√2) strictly inside sector i (1..7).
farey::Direction random_direction(int i, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(1, (1L << 40) - 1);
  const QuadNum t(Rational(pick(rng), 1L << 40));
  if (i == 7) return farey::Direction::from_u(-(QuadNum(1) + QuadNum::root()) - QuadNum(8) * t);
  const QuadNum hi = farey::boundary_direction(i).u().value();
  const QuadNum lo = farey::boundary_direction(i + 1).u().value();
  return farey::Direction::from_u(lo + t * (hi - lo));
}

json convergents_json(const classical::ConvergentRun& run) {
  auto vec = [](const classical::IntVec2& v) { return json{v.p.get_str(), v.q.get_str()}; };
  json conv = json::array(), inter = json::array(), digits = json::array();
  for (std::size_t n = 0; n < run.convergents.size(); ++n) {
    conv.push_back(vec(run.convergents[n]));
    digits.push_back(run.digits[n].get_str());
    json step = json::array();
    for (const auto& v : run.intermediates[n]) step.push_back(vec(v));
    inter.push_back(std::move(step));
  }
  return {{"convergents", conv}, {"digits", digits}, {"intermediates", inter}, {"halted", run.halted}};
}

std::string convergents_text(const classical::ConvergentRun& run) {
  std::ostringstream os;
  for (std::size_t n = 0; n < run.convergents.size(); ++n) {
    os << "e" << n << " = (" << run.convergents[n].p << ", " << run.convergents[n].q << ")  a=" << run.digits[n]
       << "\n";
  }
  if (run.halted) os << "halted: alpha is rational\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact octagon Farey expansions and diagonal changes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("--out", out, "Write output to this file instead of stdout");

  // expand
  auto* expand = app.add_subcommand("expand", "Octagon Farey expansion of a direction");
  std::string u_text = "inf", side = "pos", policy = "low";
  std::size_t depth = 20;
  expand->add_option("--u", u_text, "u = cot(theta): p/q+r/s√2, inf, or a decimal")->required();
  expand->add_option("--side", side, "For u = inf: pos (theta = 0) or neg (theta = pi)");
  expand->add_option("--depth", depth, "Number of entries");
  expand->add_option("--policy", policy, "Tie policy on sector boundaries: low or high");

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Interval of directions with a given expansion prefix");
  std::string prefix_text;
  recon->add_option("--prefix", prefix_text, "Prefix such as \"[3;2,1]\"")->required();

  // convergents
  auto* conv = app.add_subcommand("convergents", "Classical geometric convergents of alpha");
  std::string alpha = "sqrt2", format = "json";
  std::size_t conv_n = 10;
  conv->add_option("--alpha", alpha, "sqrt2, golden, or an element of ℚ(√2)");
  conv->add_option("--n", conv_n, "Number of convergents");
  conv->add_option("--format", format, "json or text");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Greedy diagonal changes on a quadrangulation");
  std::string sim_input, sim_u;
  std::size_t sim_steps = 10;
  sim->add_option("--input", sim_input, "Quadrangulation JSON file (- for stdin); default Q'");
  sim->add_option("--u", sim_u, "Reference direction u, replacing the input's");
  sim->add_option("--steps", sim_steps, "Maximum number of staircase moves");

  // trace
  auto* trace = app.add_subcommand("trace", "Step-by-step quadrangulations for the renderer");
  int trace_sector = 0;
  std::string trace_u;
  std::size_t trace_steps = 5;
  trace->add_option("--u", trace_u, "Direction u = cot(theta)")->required();
  trace->add_option("--sector", trace_sector, "Run one sector word from Q' (1..7)");
  trace->add_option("--steps", trace_steps, "Renormalization steps when no sector is given");

  // verify
  auto* verify = app.add_subcommand("verify", "Check every sector word against the Farey branches");
  std::vector<int> sectors;
  std::size_t samples = 3, random_samples = 0;
  std::string expected_file;
  bool serial = false;
  verify->add_option("--sector", sectors, "Restrict to these sectors");
  verify->add_option("--samples", samples, "Grid samples per sector");
  verify->add_option("--random-samples", random_samples, "Extra random samples per sector (seed: OCTOCF_SEED)");
  verify->add_option("--expected-matrices", expected_file, "JSON list of seven 6x6 matrices replacing A_1..A_7");
  verify->add_flag("--serial", serial, "Use the serial reference implementation");

  // dump-matrices
  auto* dump = app.add_subcommand("dump-matrices", "All move matrices and A_1..A_7");

  // render
  auto* rend = app.add_subcommand("render", "SVG of a trace or quadrangulation");
  std::string render_input, render_dir, scale_text = "60";
  bool no_labels = false;
  std::size_t per_row = 3;
  rend->add_option("--input", render_input, "Trace or quadrangulation JSON (- for stdin)")->required();
  rend->add_option("--scale", scale_text, "Pixels per unit length");
  rend->add_option("--direction-u", render_dir, "Overlay this direction instead of each panel's own");
  rend->add_option("--per-row", per_row, "Panels per row");
  rend->add_flag("--no-labels", no_labels, "Omit quadrilateral labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*expand) {
      const ParsedU p = parse_u(u_text);
      const auto e = farey::expand(direction_of(p, side), depth, parse_policy(policy));
      json j = json_io::to_json(e);
      j["u"] = p.u.str();
      j["approximate"] = p.approximate;
      j["text"] = e.str();
      emit(j, out);
    } else if (*recon) {
      const auto prefix = parse_prefix(prefix_text);
      json j = json_io::to_json(farey::reconstruct(prefix));
      j["prefix"] = prefix;
      emit(j, out);
    } else if (*conv) {
      classical::ConvergentRun run;
      if (alpha == "golden") {
        run = classical::geometric_convergents(classical::golden_ratio(), conv_n);
      } else {
        run = classical::geometric_convergents(alpha == "sqrt2" ? QuadNum::root() : parse_quadnum(alpha), conv_n);
      }
      if (format == "text") {
        emit(convergents_text(run), out);
      } else if (format == "json") {
        emit(convergents_json(run), out);
      } else {
        throw ParseError("--format must be json or text");
      }
    } else if (*sim) {
      diagch::LabeledQuadrangulation q = sim_input.empty() ? octagon::qprime()
                                                           : json_io::quadrangulation_from_json(read_json(sim_input));
      if (!sim_u.empty()) q = q.with_ref_dir(direction_of(parse_u(sim_u), "pos"));
      const auto run = diagch::run_diagonal_changes(q, sim_steps);
      json steps = json::array();
      for (const auto& s : run.steps) {
        steps.push_back({{"move", json_io::to_json(s.move)}, {"quadrangulation", json_io::to_json(s.after)}});
      }
      emit(json{{"initial", json_io::to_json(run.initial)},
                {"steps", steps},
                {"halt", diagch::to_string(run.halt)},
                {"total_area", json_io::to_json(diagch::total_area(run.initial))}},
           out);
    } else if (*trace) {
      const farey::Direction d = direction_of(parse_u(trace_u), "pos");
      if (trace_sector != 0) {
        if (trace_sector < 1 || trace_sector > 7) throw ParseError("--sector must be in 1..7");
        emit(json_io::sector_trace(octagon::run_sector_word(trace_sector, d)), out);
      } else {
        emit(json_io::expansion_trace(octagon::run_expansion(d, trace_steps)), out);
      }
    } else if (*verify) {
      octagon::TheoremOptions opt;
      if (!sectors.empty()) {
        for (int s : sectors) {
          if (s < 1 || s > 7) throw ParseError("--sector must be in 1..7");
        }
        opt.sectors = sectors;
      }
      opt.samples = samples;
      if (!expected_file.empty()) {
        const json j = read_json(expected_file);
        if (!j.is_array() || j.size() != 7) throw ParseError("--expected-matrices needs a list of seven matrices");
        std::array<IntMatrix, 7> m;
        for (std::size_t i = 0; i < 7; ++i) m[i] = json_io::matrix_from_json(j[i]);
        opt.expected = m;
      }
      octagon::TheoremReport r = serial ? octagon::verify_theorem_serial(opt) : octagon::verify_theorem(opt);
      if (random_samples > 0) {
        std::mt19937_64 rng(seed_from_env());
        for (int i : opt.sectors) {
          const IntMatrix* e = opt.expected ? &(*opt.expected)[static_cast<std::size_t>(i - 1)] : nullptr;
          for (std::size_t j = 0; j < random_samples; ++j) {
            r.samples.push_back(octagon::verify_sector(i, random_direction(i, rng), e));
          }
        }
      }
      json j = json_io::to_json(r);
      j["sectors"] = opt.sectors;
      emit(j, out);
      return r.ok() ? kOk : kFail;
    } else if (*dump) {
      json moves = json::object();
      for (auto m : {h2moves::ReducedMove::RR_LtoR, h2moves::ReducedMove::RR_RtoL, h2moves::ReducedMove::RDOT,
                     h2moves::ReducedMove::LLL_RELABEL, h2moves::ReducedMove::SYM_RELABEL}) {
        moves[h2moves::to_string(m)] = json_io::to_json(h2moves::move_matrix(m));
      }
      json sectors_j = json::array();
      for (int i = 1; i <= 7; ++i) {
        json raw = json::array();
        for (const auto& m : h2moves::sector_raw_word(i)) raw.push_back(m.str());
        json s = {{"sector", i}, {"matrix", json_io::to_json(h2moves::sector_matrix(i))}, {"raw_word", raw}};
        if (auto w = h2moves::sector_word(i)) {
          json red = json::array();
          for (auto m : w->moves) red.push_back(h2moves::to_string(m));
          s["reduced_word"] = red;
        }
        sectors_j.push_back(std::move(s));
      }
      emit(json{{"moves", moves}, {"sectors", sectors_j}}, out);
    } else if (*rend) {
      render::RenderSpec spec;
      spec.scale = Rational::parse_decimal(scale_text);
      spec.show_labels = !no_labels;
      spec.panels_per_row = per_row;
      if (!render_dir.empty()) spec.direction_overlay = direction_of(parse_u(render_dir), "pos");
      emit(render::render_svg(render::panels_from_json(read_json(render_input)), spec), out);
    }
  } catch (const IoError& e) {
    std::cerr << "octocf: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "octocf: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
