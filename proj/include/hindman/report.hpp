#ifndef HINDMAN_REPORT_HPP_
#define HINDMAN_REPORT_HPP_

#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string

#include "json.hpp"  // for nlohmann::ordered_json

#include "hindman/coloring.hpp"
#include "hindman/families.hpp"
#include "hindman/fpsets.hpp"
#include "hindman/semigroup.hpp"
#include "hindman/shevrin.hpp"

namespace hindman {

  //! Reports keep key insertion order so that dumps are byte-stable.
  using json = nlohmann::ordered_json;

  json summary_json(FiniteSemigroup const& S);
  json to_json(Orbit const& o);
  json to_json(SubgroupInfo const& g);
  json to_json(MonoVerdict const& v);
  json to_json(HDReport const& r);
  json to_json(S2Report const& r);
  json to_json(SheReport const& r);
  json to_json(NcolorReport const& r);
  json to_json(BooleanBasis const& b);
  json to_json(FpWitness const& w);
  json to_json(MonoSubsemigroup const& m);
  json to_json(Refinement const& r);
  json to_json(TypeHDCertificate const& c);
  json to_json(PatternReport const& p);
  json to_json(Thm35Report const& r);
  json to_json(TrueColorAudit const& a);
  json to_json(WhyModFinReport const& r);

  //! {seq, words: [{word, value, color}], exceptions, majority}; the color
  //! fields are null without a coloring.
  json fp_report(FpFamily const& family, Coloring const* c);

  //! FNV-1a 64 over the compact dump.
  std::uint64_t digest(json const& j);
  std::string   digest_hex(json const& j);

}  // namespace hindman

#endif  // HINDMAN_REPORT_HPP_
