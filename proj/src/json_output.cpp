#include "splitegh/json_output.hpp"

namespace splitegh {

using nlohmann::json;

json to_json(const HilbertFunction& h) { return json(h.values()); }

json to_json(const DegreeStep& step) {
  json slices = json::array();
  for (const auto& s : step.slices)
    slices.push_back({{"index", s.index},
                      {"hilbert", to_json(s.hilbert)},
                      {"segment_sizes", s.segment_sizes},
                      {"image_vars", s.image_vars},
                      {"image_sequence", s.image_sequence},
                      {"certified", s.certified}});
  return {{"degree", step.degree},
          {"factor_order", step.factor_order},
          {"chain_dims", step.chain_dims},
          {"j_hilbert", to_json(step.j_hilbert)},
          {"k_hilbert", to_json(step.k_hilbert)},
          {"k_generators", step.k_generators},
          {"gluing",
           {{"input_at_d", step.input_at_d},
            {"k_at_d", step.k_at_d},
            {"input_at_next", step.input_at_next},
            {"k_at_next", step.k_at_next}}},
          {"lpp_segment_sizes", step.lpp_segment_sizes},
          {"slices", slices}};
}

json to_json(const VerificationReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  json swaps = json::array();
  for (const auto& l : r.lemma20) swaps.push_back({{"j", l.j}, {"holds", l.holds}, {"hilbert", l.hilbert}});
  return {{"ok", r.ok},
          {"truncation", r.truncation},
          {"input_dims", r.input_dims},
          {"output_dims", r.output_dims},
          {"input_hilbert", to_json(r.input_hilbert)},
          {"output_hilbert", to_json(r.output_hilbert)},
          {"hilbert_equal", r.hilbert_equal},
          {"first_divergence", r.first_divergence ? json(*r.first_divergence) : json(nullptr)},
          {"contains_powers", r.contains_powers},
          {"missing_powers", r.missing_powers},
          {"closed", r.closed},
          {"closure_failure", r.closure_failure ? json(*r.closure_failure) : json(nullptr)},
          {"lex_plus_powers", r.lex_plus_powers},
          {"factor_swaps", swaps},
          {"steps", steps},
          {"problems", r.problems}};
}

json egh_json(const EghResult& result) {
  json gens = json::array();
  for (const auto& g : result.generators()) gens.push_back(g.to_string());
  return {{"schema", 1},
          {"hilbert", to_json(result.hilbert)},
          {"generators", gens},
          {"verified", result.report.ok},
          {"report", to_json(result.report)}};
}

}  // namespace splitegh
