#include "burst/serialization.hpp"

#include <cmath>

namespace burst {
namespace {

using nlohmann::json;

double round4(double v) { return std::round(v * 1e4) / 1e4; }

struct ParamsToJson {
  json operator()(const NoParams&) const { return json::object(); }
  json operator()(const VtParams& p) const { return {{"a", p.a}}; }
  json operator()(const Lev2Params& p) const { return {{"a", p.a}}; }
  json operator()(const C21Params& p) const { return {{"a", p.a}, {"b", p.b}}; }
  json operator()(const C21RllParams& p) const {
    return {{"a", p.a}, {"b", p.b}, {"f", p.f}};
  }
  json operator()(const Svt21Params& p) const {
    return {{"c", p.c}, {"d", p.d}, {"P", p.P}};
  }
  json operator()(const CtsParams& p) const {
    json rows = json::array();
    for (std::size_t i = 2; i <= p.row_count(); ++i) {
      rows.push_back({{"row", i}, {"c", p.row(i).c}, {"d", p.row(i).d}});
    }
    return {{"n", p.n()}, {"t", p.t()},           {"s", p.s()},
            {"a", p.a()}, {"b", p.b()},           {"f", p.rll_bound()},
            {"P", p.window_bound()}, {"rows", rows}};
  }
  json operator()(const C31Params& p) const {
    return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
  }
};

}  // namespace

nlohmann::json to_json(const Ball& ball) {
  json members = json::array();
  for (const Word& w : ball.members) members.push_back(w.to_string());
  return {{"center", ball.center.to_string()},
          {"t", ball.t},
          {"s", ball.s},
          {"size", ball.members.size()},
          {"members", members}};
}

nlohmann::json to_json(const SyndromeParams& params) {
  return std::visit(ParamsToJson{}, params);
}

nlohmann::json to_json(const Codebook& book, std::size_t member_limit) {
  json out = {{"family", std::string(to_string(book.family))},
              {"n", book.n},
              {"t", book.t},
              {"s", book.s},
              {"params", to_json(book.params)},
              {"size", book.size()}};
  const double r = book.redundancy();
  out["redundancy"] = std::isfinite(r) ? json(round4(r)) : json(nullptr);
  if (book.size() <= member_limit) {
    json members = json::array();
    for (const Word& w : book.members) members.push_back(w.to_string());
    out["members"] = members;
  }
  return out;
}

nlohmann::json to_json(const DecodeOutcome& outcome) {
  json out = {{"codeword", outcome.codeword.to_string()},
              {"classification", std::string(to_string(outcome.classification))}};
  out["location"] = outcome.location
                        ? json::array({outcome.location->lo, outcome.location->hi})
                        : json(nullptr);
  return out;
}

nlohmann::json to_json(const CtsDecodeTrace& trace) {
  json received = json::array();
  for (const Word& w : trace.received_rows.rows) received.push_back(w.to_string());
  json windows = json::array();
  for (const Interval& w : trace.windows) windows.push_back({w.lo, w.hi});
  json decoded = json::array();
  for (const Word& w : trace.decoded_rows) decoded.push_back(w.to_string());
  return {{"codeword", trace.codeword.to_string()},
          {"received_rows", received},
          {"first_row", to_json(trace.first_row)},
          {"windows", windows},
          {"decoded_rows", decoded}};
}

nlohmann::json to_json(const C31DecodeTrace& trace) {
  return {{"codeword", trace.codeword.to_string()},
          {"delta_odd", trace.deltas.odd},
          {"delta_even", trace.deltas.even},
          {"delta_runs", trace.deltas.runs},
          {"classification", std::string(to_string(trace.classification))},
          {"candidates", trace.candidates},
          {"survivors_without_runs", trace.survivors_without_runs},
          {"survivors", trace.survivors}};
}

}  // namespace burst
