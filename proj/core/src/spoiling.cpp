#include "codedomain/spoiling.hpp"

#include <algorithm>
#include <array>

#include "codedomain/errors.hpp"

namespace codedomain {

const char* to_string(SpoilKind kind) {
  switch (kind) {
    case SpoilKind::Lengthen:
      return "lengthen";
    case SpoilKind::Puncture:
      return "puncture";
    case SpoilKind::Shorten:
      return "shorten";
  }
  return "unknown";
}

namespace {

using Rows = std::vector<std::vector<Symbol>>;

Rows rows_of(const Code& c) {
  Rows rows;
  rows.reserve(c.size());
  for (std::size_t w = 0; w < c.size(); ++w) rows.emplace_back(c.row(w).begin(), c.row(w).end());
  return rows;
}

void begin_trace(SpoilTrace* trace, const Code& c) {
  if (trace && trace->steps.empty()) {
    trace->initial = params(c);
    trace->final_params = trace->initial;
  }
}

void record(SpoilTrace* trace, const SpoilStep& step, const CodeParams& after) {
  if (!trace) return;
  trace->steps.push_back(step);
  trace->final_params = after;
}

Code lengthen_raw(const Code& c, Symbol symbol) {
  Rows rows = rows_of(c);
  for (auto& r : rows) r.push_back(symbol);
  return Code::from_rows(c.q(), rows);
}

Code delete_coordinate(const Code& c, std::size_t coordinate, std::optional<Symbol> keep) {
  Rows rows;
  rows.reserve(c.size());
  for (std::size_t w = 0; w < c.size(); ++w) {
    auto r = c.row(w);
    if (keep && r[coordinate] != *keep) continue;
    std::vector<Symbol> out;
    out.reserve(r.size() - 1);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != coordinate) out.push_back(r[i]);
    }
    rows.push_back(std::move(out));
  }
  return Code::from_rows(c.q(), rows);
}

std::optional<std::size_t> lowest_nonconstant_coordinate(const Code& c) {
  for (std::size_t i = 0; i < c.length(); ++i) {
    Symbol first = c.row(0)[i];
    for (std::size_t w = 1; w < c.size(); ++w) {
      if (c.row(w)[i] != first) return i;
    }
  }
  return std::nullopt;
}

Symbol largest_fiber(const Code& c, std::size_t coordinate) {
  std::array<std::size_t, kMaxAlphabet> counts{};
  for (std::size_t w = 0; w < c.size(); ++w) ++counts[c.row(w)[coordinate]];
  Symbol best = 0;
  for (unsigned s = 1; s < c.q(); ++s) {
    if (counts[s] > counts[best]) best = static_cast<Symbol>(s);
  }
  return best;
}

}  // namespace

Code lengthen(const Code& c, SpoilTrace* trace) {
  begin_trace(trace, c);
  Code out = lengthen_raw(c, 0);
  if (trace) {
    const CodeParams& before = trace->final_params;
    record(trace, SpoilStep{SpoilKind::Lengthen, c.length(), 0},
           CodeParams(before.q, before.n + 1, before.m, before.d));
  }
  return out;
}

Code puncture(const Code& c, SpoilTrace* trace) {
  if (c.length() < 2) throw ContractViolation("puncture requires n > 1");
  MinDistance md = min_distance(c);
  if (md.d < 2) throw DistanceTooSmall("puncture requires minimum distance >= 2");
  begin_trace(trace, c);
  auto a = c.row(md.witness->first);
  auto b = c.row(md.witness->second);
  std::size_t coordinate = 0;
  while (a[coordinate] == b[coordinate]) ++coordinate;
  Code out = delete_coordinate(c, coordinate, std::nullopt);
  record(trace, SpoilStep{SpoilKind::Puncture, coordinate, 0},
         CodeParams(c.q(), static_cast<unsigned>(c.length() - 1), BigInt(static_cast<unsigned long>(c.size())),
                    md.d - 1));
  return out;
}

Code shorten(const Code& c, SpoilTrace* trace) {
  if (c.length() < 2) throw ContractViolation("shorten requires n > 1");
  auto coordinate = lowest_nonconstant_coordinate(c);
  if (!coordinate) throw DegenerateInput("shorten: every coordinate is constant (singleton code)");
  begin_trace(trace, c);
  Symbol keep = largest_fiber(c, *coordinate);
  Code out = delete_coordinate(c, *coordinate, keep);
  if (trace) record(trace, SpoilStep{SpoilKind::Shorten, *coordinate, keep}, params(out));
  return out;
}

Code apply_step(const Code& c, const SpoilStep& step) {
  switch (step.kind) {
    case SpoilKind::Lengthen:
      if (step.coordinate != c.length() || step.symbol >= c.q()) {
        throw ContractViolation("lengthen step does not match the code");
      }
      return lengthen_raw(c, step.symbol);
    case SpoilKind::Puncture: {
      if (step.coordinate >= c.length() || c.length() < 2) {
        throw ContractViolation("puncture step does not match the code");
      }
      Code out = delete_coordinate(c, step.coordinate, std::nullopt);
      if (out.size() != c.size()) throw ContractViolation("puncture step merged words");
      return out;
    }
    case SpoilKind::Shorten: {
      if (step.coordinate >= c.length() || c.length() < 2 || step.symbol >= c.q()) {
        throw ContractViolation("shorten step does not match the code");
      }
      bool any = false;
      for (std::size_t w = 0; w < c.size() && !any; ++w) any = c.row(w)[step.coordinate] == step.symbol;
      if (!any) throw ContractViolation("shorten step keeps an empty fiber");
      return delete_coordinate(c, step.coordinate, step.symbol);
    }
  }
  throw ContractViolation("unknown spoil step");
}

Code replay(const Code& initial, const SpoilTrace& trace) {
  if (!(params(initial) == trace.initial)) {
    throw InternalContractError("trace replay: initial parameters differ from the recorded ones");
  }
  Code c = initial;
  for (const auto& step : trace.steps) c = apply_step(c, step);
  if (!(params(c) == trace.final_params)) {
    throw InternalContractError("trace replay: final parameters differ from the recorded ones");
  }
  return c;
}

Code reduce_distance_exact(const Code& c, unsigned d_target, SpoilTrace* trace) {
  if (d_target < 1) throw ContractViolation("reduce_distance_exact: target distance must be >= 1");
  unsigned d = min_distance(c).d;
  if (d < d_target) throw ContractViolation("reduce_distance_exact: code distance is below the target");
  begin_trace(trace, c);
  Code cur = c;
  for (; d > d_target; --d) {
    cur = puncture(cur, trace);
    cur = lengthen(cur, trace);
  }
  return cur;
}

Code reduce_floor_logcard(const Code& c, unsigned t_target, SpoilTrace* trace) {
  unsigned t = floor_log_q(BigInt(static_cast<unsigned long>(c.size())), c.q());
  if (t < t_target) throw ContractViolation("reduce_floor_logcard: cardinality already below the target");
  begin_trace(trace, c);
  const std::size_t cap = c.length() * c.q();
  Code cur = c;
  for (std::size_t round = 0; t > t_target; ++round) {
    if (round >= cap) {
      throw InternalContractError("reduce_floor_logcard: iteration cap n*q reached");
    }
    cur = shorten(cur, trace);
    cur = lengthen(cur, trace);
    t = floor_log_q(BigInt(static_cast<unsigned long>(cur.size())), cur.q());
  }
  return cur;
}

LinearCode lengthen(const LinearCode& c) {
  const auto& g = c.generator();
  std::vector<FieldElement> entries;
  entries.reserve(g.rows() * (g.cols() + 1));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    auto row = g.row(r);
    entries.insert(entries.end(), row.begin(), row.end());
    entries.push_back(0);
  }
  return LinearCode(GeneratorMatrix(g.field_ptr(), g.rows(), g.cols() + 1, std::move(entries)));
}

LinearCode puncture(const LinearCode& c) {
  const auto& g = c.generator();
  if (g.cols() < 2) throw ContractViolation("puncture requires n > 1");
  MinWeightWord mw = c.min_weight_word();
  if (mw.weight < 2) throw DistanceTooSmall("puncture requires minimum distance >= 2");
  std::size_t coordinate = 0;
  while (mw.codeword[coordinate] == 0) ++coordinate;
  std::vector<FieldElement> entries;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t col = 0; col < g.cols(); ++col) {
      if (col != coordinate) entries.push_back(g.at(r, col));
    }
  }
  return LinearCode(GeneratorMatrix(g.field_ptr(), g.rows(), g.cols() - 1, std::move(entries)));
}

LinearCode shorten(const LinearCode& c) {
  const auto& g = c.generator();
  const FiniteField& f = g.field();
  if (g.cols() < 2 || g.rows() < 2) throw ContractViolation("linear shorten requires n > 1 and k > 1");
  std::size_t col = 0;
  std::size_t pivot = g.rows();
  for (; col < g.cols(); ++col) {
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (g.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot != g.rows()) break;
  }
  FieldElement pivot_inv = f.inv(g.at(pivot, col));
  std::vector<FieldElement> entries;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r == pivot) continue;
    FieldElement factor = f.mul(g.at(r, col), pivot_inv);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (j == col) continue;
      entries.push_back(f.sub(g.at(r, j), f.mul(factor, g.at(pivot, j))));
    }
  }
  return LinearCode(GeneratorMatrix(g.field_ptr(), g.rows() - 1, g.cols() - 1, std::move(entries)));
}

std::vector<RealizedCode> realize_point(const RealizeTarget& target, unsigned q, std::size_t count,
                                        const SeedSource& seeds, const SearchBudget& budget) {
  if (!(target.k > 0 && target.k < target.n && target.d > 0 && target.d < target.n)) {
    throw ContractViolation("realize_point: target (k/n, d/n) must lie strictly inside the unit square");
  }
  std::vector<RealizedCode> out;
  std::vector<std::string> log;
  for (unsigned a = 1; a <= count; ++a) {
    SeedRequest request{q, a * target.n, a * target.d, a * target.k};
    auto seed = seeds.find(request, budget, log);
    if (!seed) {
      throw SeedNotFound("no seed of length <= " + std::to_string(request.length) + " with d >= " +
                             std::to_string(request.min_distance) + " and floor log >= " +
                             std::to_string(request.min_floor_log),
                         log);
    }
    CodeParams sp = params(seed->code);
    if (sp.q != q || sp.n > request.length || sp.d < request.min_distance ||
        floor_log_q(sp.m, q) < request.min_floor_log) {
      throw InternalContractError("seed source returned a seed that does not meet the request");
    }

    SpoilTrace trace;
    begin_trace(&trace, seed->code);
    Code c = seed->code;
    while (c.length() < request.length) c = lengthen(c, &trace);
    c = reduce_distance_exact(c, request.min_distance, &trace);
    c = reduce_floor_logcard(c, request.min_floor_log, &trace);
    // Shortening keeps a sub-fiber, which can raise the distance again.
    if (trace.final_params.d > request.min_distance) c = reduce_distance_exact(c, request.min_distance, &trace);

    CodeParams fp = params(c);
    if (!(fp == trace.final_params) || fp.n != request.length || fp.d != request.min_distance ||
        floor_log_q(fp.m, q) != request.min_floor_log) {
      throw InternalContractError("realize_point: spoiled code misses the target parameters");
    }
    out.push_back(RealizedCode{a, seed->code, seed->origin, std::move(c), std::move(trace)});
  }
  return out;
}

MultiplicityWitness multiplicity_witness(const Code& c, std::size_t count) {
  MultiplicityWitness out;
  out.limit = CodePoint{Rational(0), Rational(0)};
  CodeParams base = params(c);
  Code cur = c;
  for (std::size_t j = 1; j <= count; ++j) {
    cur = lengthen(cur);
    CodeParams p(base.q, base.n + static_cast<unsigned>(j), base.m, base.d);
    out.codes.push_back(cur);
    out.points.push_back(code_point(p));
    out.params.push_back(std::move(p));
  }
  return out;
}

}  // namespace codedomain
