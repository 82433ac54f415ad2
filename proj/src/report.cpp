#include "hindman/report.hpp"

#include <cstdio>  // for snprintf

namespace hindman {

  namespace {
    json check_json(RelationCheck const& c) {
      json j = {{"pass", c.pass}};
      if (!c.pass) {
        j["counterexample"] = c.counterexample;
      }
      return j;
    }

    json opt(std::optional<std::size_t> const& x) {
      return x ? json(*x) : json(nullptr);
    }
  }  // namespace

  json summary_json(FiniteSemigroup const& S) {
    return {{"size", S.size()},
            {"labels", S.labels()},
            {"idempotents", idempotents(S)},
            {"square_size", square(S).size()}};
  }

  json to_json(Orbit const& o) {
    return {{"base", o.base},
            {"elements", o.elements},
            {"index_h", o.index_h},
            {"period_d", o.period_d},
            {"group_part", o.group_part}};
  }

  json to_json(SubgroupInfo const& g) {
    return {{"idempotent", g.idempotent},
            {"elements", g.elements},
            {"exponent_le_2", g.exponent_le_2}};
  }

  json to_json(MonoVerdict const& v) {
    return {{"is_mono", v.is_mono},
            {"majority", v.majority_color},
            {"exceptions", v.exceptions}};
  }

  json to_json(HDReport const& r) {
    return {{"hd1", check_json(r.hd1)},
            {"hd2", check_json(r.hd2)},
            {"hd3", check_json(r.hd3)},
            {"hd4", check_json(r.hd4)},
            {"generators_outside_s2", check_json(r.generators_outside_s2)},
            {"pass", r.all_pass()}};
  }

  json to_json(S2Report const& r) {
    return {{"size_s", r.size_s},
            {"size_s2", r.size_s2},
            {"bound", r.bound},
            {"generators_disjoint", r.generators_disjoint},
            {"within_bound", r.within_bound},
            {"pass", r.generators_disjoint && r.within_bound}};
  }

  json to_json(SheReport const& r) {
    json j = {{"generates", r.generates},
              {"premise_a", r.premise_a},
              {"premise_a_witness", nullptr},
              {"premise_b", r.premise_b},
              {"h", r.h},
              {"d", r.d}};
    if (r.premise_a_witness) {
      j["premise_a_witness"] = *r.premise_a_witness;
    }
    if (r.premises_hold()) {
      j["conclusions"] = {
          {"s3_equals_orbit_cube", r.c1_cube_is_orbit_cube},
          {"s3_finite", r.c2_s3_finite},
          {"s3_size", r.s3_size},
          {"unique_idempotent", r.c3_unique_idempotent},
          {"idempotent", r.idempotent ? json(*r.idempotent) : json(nullptr)},
          {"ae_equal", r.c4_ae_equal}};
    }
    j["pass"] = r.all_pass();
    return j;
  }

  json to_json(NcolorReport const& r) {
    json rows = json::array();
    for (auto const& row : r.rows) {
      json jr = {{"n", row.n},
                 {"blocks_checked", row.blocks_checked},
                 {"pass", row.pass}};
      if (row.failure) {
        jr["failure"] = {row.failure->first, row.failure->second};
      }
      rows.push_back(std::move(jr));
    }
    return {{"N", r.N}, {"rows", std::move(rows)}, {"pass", r.all_pass()}};
  }

  json to_json(BooleanBasis const& b) {
    return {{"basis", b.basis},
            {"rank", b.basis.size()},
            {"commutative", b.commutative}};
  }

  json to_json(FpWitness const& w) {
    return {{"seq", w.seq}, {"color", w.color}, {"exceptions", w.exceptions}};
  }

  json to_json(MonoSubsemigroup const& m) {
    return {{"generators", m.generators},
            {"elements", m.elements},
            {"verdict", to_json(m.verdict)}};
  }

  json to_json(Refinement const& r) {
    return {{"positions", r.positions},
            {"subsequence", r.subsequence},
            {"fphat_values", r.fphat_values},
            {"verdict", to_json(r.verdict)}};
  }

  json to_json(TypeHDCertificate const& c) {
    auto const& a = c.audit;
    return {
        {"source", c.source},
        {"prefix_length", c.prefix_length},
        {"positions", c.positions},
        {"subsequence", c.subsequence},
        {"color",
         {{"cube", c.color[0]},
          {"square", c.color[1]},
          {"ab", c.color[2]},
          {"ba", c.color[3]}}},
        {"h", c.h},
        {"d", c.d},
        {"relations",
         {{"hd1", c.relations.hd1.pass},
          {"hd2", c.relations.hd2.pass},
          {"hd3", c.relations.hd3.pass},
          {"hd4", c.relations.hd4.pass},
          {"generators_outside_s2", c.relations.generators_outside_s2.pass},
          {"pair_identities", c.pair_identities},
          {"hd3_cases",
           {{"i<j", c.hd3_cases[0]},
            {"i>j", c.hd3_cases[1]},
            {"i=j", c.hd3_cases[2]}}}}},
        {"structure_set", c.structure_set},
        {"closure", c.closure_set},
        {"structure_matches", c.structure_matches},
        {"idempotent", c.idempotent},
        {"unique_idempotent", c.unique_idempotent},
        {"equality_audit",
         {{"square", a.sq},
          {"ab", a.ab},
          {"ba", a.ba},
          {"be_squared", a.be2},
          {"ab_eq_ba", a.ab_eq_ba},
          {"ab_eq_square", a.ab_eq_sq},
          {"ab_eq_be_squared", a.ab_eq_be2},
          {"ba_eq_square", a.ba_eq_sq},
          {"ba_eq_be_squared", a.ba_eq_be2},
          {"square_eq_be_squared", a.sq_eq_be2},
          {"ab_power", opt(a.ab_power)},
          {"ba_power", opt(a.ba_power)},
          {"ab_biconditional", a.ab_biconditional},
          {"ba_biconditional", a.ba_biconditional}}},
        {"pass", c.all_pass()}};
  }

  json to_json(PatternReport const& p) {
    auto pat = [](Pattern const& x) {
      return json{{"size", x.size}, {"witness", x.witness}};
    };
    return {{"right_zero", pat(p.right_zero)},
            {"left_zero", pat(p.left_zero)},
            {"max_chain", pat(p.max_chain)},
            {"min_chain", pat(p.min_chain)},
            {"fan", pat(p.fan)},
            {"subgroup", pat(p.subgroup)},
            {"square_size", p.square_size}};
  }

  json to_json(Thm35Report const& r) {
    return {{"case", r.which == Thm35Case::finsync ? "finsync" : "z2sum"},
            {"exception_set", r.exception_set},
            {"ambient_size", r.ambient.size()},
            {"rank", r.rank},
            {"generators", r.generators},
            {"subsemigroup", r.subsemigroup},
            {"verdict", to_json(r.verdict)},
            {"pass", r.pass}};
  }

  json to_json(TrueColorAudit const& a) {
    return {{"long_orbit", a.long_orbit},
            {"orbits_selected", a.orbits_selected},
            {"disjoint", a.disjoint},
            {"pattern", a.pattern},
            {"sub_orbits", a.sub_orbits},
            {"inverse_pairs", a.inverse_pairs},
            {"witness", a.witness ? json(*a.witness) : json(nullptr)},
            {"pass", a.all_pass()}};
  }

  json to_json(WhyModFinReport const& r) {
    return {{"k", r.k},
            {"M", r.M},
            {"subsets_checked", r.subsets_checked},
            {"failure", r.failure ? json(*r.failure) : json(nullptr)},
            {"missing_colors", r.missing},
            {"pass", r.pass()}};
  }

  json fp_report(FpFamily const& family, Coloring const* c) {
    json words = json::array();
    for (std::size_t i = 0; i < family.words.size(); ++i) {
      json w = {{"word", family.words[i]},
                {"value", family.values[i]},
                {"color", nullptr}};
      if (c) {
        w["color"] = (*c)(family.values[i]);
      }
      words.push_back(std::move(w));
    }
    json j = {{"seq", family.seq},
              {"hat", family.hat},
              {"word_count", family.words.size()},
              {"value_set", family.value_set},
              {"words", std::move(words)},
              {"exceptions", nullptr},
              {"majority", nullptr}};
    if (c) {
      auto const v    = mono_check(family.value_set, *c);
      j["exceptions"] = v.exceptions;
      j["majority"]   = v.majority_color;
    }
    return j;
  }

  std::uint64_t digest(json const& j) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : j.dump()) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::string digest_hex(json const& j) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(digest(j)));
    return buf;
  }

}  // namespace hindman
