// hindman-lab: command-line front end for the hindman library.
//
// Every command prints one report (JSON by default). Exit codes: 0 pass,
// 1 verification failure or empty search, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hindman/cayley_io.hpp"
#include "hindman/coloring.hpp"
#include "hindman/errors.hpp"
#include "hindman/families.hpp"
#include "hindman/fpsets.hpp"
#include "hindman/report.hpp"
#include "hindman/shevrin.hpp"

using namespace hindman;

namespace {

  struct Options {
    std::string family;
    std::string coloring;
    std::string seq;
    std::string exceptions;  // F for search refine
    std::string out;
    std::string export_path;
    std::string format = "json";
    std::string lemma;
    std::string which = "finsync";
    std::size_t target     = 6;
    std::size_t n          = 3;
    std::size_t budget     = 0;
    std::size_t N          = 10000;
    std::size_t maxn       = 50;
    std::size_t k          = 5;
    std::size_t M          = 40;
    std::size_t bound      = 16;
    std::size_t truncation = 64;
    std::size_t long_orbit = 3;
    std::size_t max_gens   = 3;
    std::size_t min_length = 1;
    bool        hat        = false;
  };

  struct Loaded {
    FiniteSemigroup            S;
    std::optional<FamilySpec>  spec;
    std::optional<TypeHDModel> model;
  };

  bool looks_like_file(std::string const& s) {
    return s.find('/') != std::string::npos
           || (s.size() > 4 && s.compare(s.size() - 4, 4, ".cay") == 0);
  }

  Loaded load_family(Options const& o) {
    if (o.family.empty()) {
      throw BadSpec("--family is required");
    }
    if (looks_like_file(o.family)) {
      return {read_cayley_file(o.family), std::nullopt, std::nullopt};
    }
    auto spec = parse_family_spec(o.family);
    if (spec.kind == FamilyKind::type_hd) {
      auto model = build_typehd(spec.h, spec.d, spec.m, spec.pattern);
      auto S     = model.semigroup;
      return {std::move(S), spec, std::move(model)};
    }
    return {materialize(spec, o.truncation), spec, std::nullopt};
  }

  std::size_t parse_count(std::string const& text) {
    std::size_t pos   = 0;
    auto const  value = std::stoul(text, &pos);
    if (pos != text.size()) {
      throw BadSpec("bad number '" + text + "'");
    }
    return value;
  }

  // "3,5,7" -> ids, checked against the semigroup size.
  std::vector<element_index> parse_ids(std::string const& text, std::size_t n) {
    std::vector<element_index> ids;
    std::stringstream           ss(text);
    std::string                 item;
    while (std::getline(ss, item, ',')) {
      std::size_t value;
      try {
        value = parse_count(item);
      } catch (std::logic_error const&) {
        throw BadSpec("bad element id '" + item + "'");
      }
      if (value >= n) {
        throw BadSpec("element id " + item + " out of range");
      }
      ids.push_back(static_cast<element_index>(value));
    }
    return ids;
  }

  Coloring load_coloring(Options const& o, Loaded const& L) {
    auto const& spec = o.coloring;
    auto const  n    = L.S.size();
    if (spec.empty()) {
      throw BadSpec("--coloring is required");
    }
    if (spec.rfind("builtin:", 0) != 0) {
      std::ifstream is(spec);
      if (!is) {
        throw BadSpec("cannot open coloring file " + spec);
      }
      return read_coloring(is, n);
    }
    auto const body  = spec.substr(8);
    auto const colon = body.find(':');
    auto const name  = body.substr(0, colon);
    std::optional<std::size_t> param;
    if (colon != std::string::npos) {
      try {
        param = parse_count(body.substr(colon + 1));
      } catch (std::logic_error const&) {
        throw BadSpec("bad coloring parameter in '" + spec + "'");
      }
    }
    if (name == "ncolor") {
      return ncolor(n);
    }
    if (name == "truecolor") {
      return truecolor(L.S, param.value_or(o.long_orbit)).coloring;
    }
    if (name == "mod") {
      if (!param) {
        if (!L.spec || L.spec->kind != FamilyKind::why_mod_fin) {
          throw BadSpec("builtin:mod needs a modulus outside whymodfin");
        }
        param = L.spec->n;
      }
      return mod_coloring(L.S, *param);
    }
    if (name == "gcolor") {
      std::vector<color_index> assign;
      for (auto const& c : gcolor(L.S)) {
        assign.push_back(c.value_or(red));
      }
      return Coloring(std::move(assign), 2);
    }
    if (name == "constant") {
      auto const c = param.value_or(0);
      return Coloring::constant(n, color_index(c), c + 1);
    }
    throw BadSpec("unknown builtin coloring '" + name + "'");
  }

  void render_text(std::ostream& os, json const& j, std::string const& prefix) {
    if (j.is_object() && !j.empty()) {
      for (auto const& [key, value] : j.items()) {
        render_text(os, value, prefix.empty() ? key : prefix + "." + key);
      }
    } else {
      os << prefix << ": " << j.dump() << '\n';
    }
  }

  struct Outcome {
    json result;
    json verdict;  // bool, or null when the command has no verdict
    json inputs = json::object();
  };

  json input_digest(Loaded const* L, Coloring const* c) {
    json in = json::object();
    if (L) {
      in["cayley"] = to_cayley(L->S);
    }
    if (c) {
      in["coloring"] = to_coloring_text(*c);
    }
    return digest_hex(in);
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  Outcome cmd_family(Options const& o) {
    if (o.family.empty()) {
      throw BadSpec("family needs a spec");
    }
    if (!looks_like_file(o.family)) {
      auto const spec = parse_family_spec(o.family);
      if (spec.kind == FamilyKind::nat_plus) {
        if (!o.export_path.empty()) {
          throw BadSpec("natplus is a lazy family without a closed "
                        "truncation; refusing to export");
        }
        auto const fam = nat_plus();
        auto const T   = fam.truncate(o.truncation);
        auto const p   = is_periodic(fam, o.truncation);
        json       result = {
            {"family", "natplus"},
            {"lazy", true},
            {"notice", "natplus is infinite and has no closed truncation; "
                       "products leaving the first N elements are marked"},
            {"truncation", {{"size", T.size()},
                            {"closed", T.closed()},
                            {"escape_count", T.escape_count()}}},
            {"periodic", p.verdict == Periodicity::periodic ? "periodic"
                         : p.verdict == Periodicity::not_periodic
                             ? "not_periodic"
                             : "unknown_at_bound"}};
        return {std::move(result), true, input_digest(nullptr, nullptr)};
      }
    }
    auto const L      = load_family(o);
    json       result = summary_json(L.S);
    result["associative"] = true;
    result["patterns"]    = to_json(classify_patterns(L.S, o.bound));
    if (L.model) {
      result["hd"] = to_json(verify_hd(*L.model));
      result["s2"] = to_json(verify_s2_finite(*L.model));
    }
    if (!o.export_path.empty()) {
      std::ofstream os(o.export_path);
      if (!os) {
        throw BadSpec("cannot write " + o.export_path);
      }
      write_cayley(os, L.S);
      result["exported"] = o.export_path;
    }
    return {std::move(result), true, input_digest(&L, nullptr)};
  }

  Outcome cmd_color(Options const& o) {
    auto const               L = load_family(o);
    auto const               c = load_coloring(o, L);
    std::vector<std::size_t> counts(c.palette_size(), 0);
    for (auto x : c.assignment()) {
      ++counts[x];
    }
    json result = {{"palette", c.palette_size()},
                   {"counts", counts},
                   {"assignment", c.assignment()}};
    if (!o.export_path.empty()) {
      std::ofstream os(o.export_path);
      if (!os) {
        throw BadSpec("cannot write " + o.export_path);
      }
      write_coloring(os, c);
      result["exported"] = o.export_path;
    }
    return {std::move(result), nullptr, input_digest(&L, &c)};
  }

  Outcome cmd_fp(Options const& o) {
    auto const L = load_family(o);
    if (o.seq.empty()) {
      throw BadSpec("fp needs --seq");
    }
    auto const seq = parse_ids(o.seq, L.S.size());
    auto const fam = o.hat ? fphat(L.S, seq) : fp(L.S, seq);
    if (o.coloring.empty()) {
      return {fp_report(fam, nullptr), nullptr, input_digest(&L, nullptr)};
    }
    auto const c = load_coloring(o, L);
    return {fp_report(fam, &c), nullptr, input_digest(&L, &c)};
  }

  Outcome cmd_search_fp(Options const& o) {
    auto const L = load_family(o);
    auto const c = load_coloring(o, L);
    auto const w = search_fp_mod_finite(L.S, c, o.n, o.budget);
    json       result = {{"n", o.n}, {"budget", o.budget},
                         {"witness", w ? to_json(*w) : json(nullptr)}};
    return {std::move(result), w.has_value(), input_digest(&L, &c)};
  }

  Outcome cmd_search_mono(Options const& o) {
    auto const L = load_family(o);
    auto const c = load_coloring(o, L);
    std::vector<element_index> universe;
    if (!o.seq.empty()) {
      universe = parse_ids(o.seq, L.S.size());
    }
    auto const m = search_mono_subsemigroup(L.S, c, o.budget, o.max_gens, universe);
    json       result = {{"budget", o.budget},
                         {"max_gens", o.max_gens},
                         {"subsemigroup", m ? to_json(*m) : json(nullptr)}};
    return {std::move(result), m.has_value(), input_digest(&L, &c)};
  }

  Outcome cmd_search_refine(Options const& o) {
    auto const L = load_family(o);
    auto const c = load_coloring(o, L);
    if (o.seq.empty()) {
      throw BadSpec("search refine needs --seq");
    }
    auto const seq = parse_ids(o.seq, L.S.size());
    std::vector<element_index> F;
    if (!o.exceptions.empty()) {
      F = parse_ids(o.exceptions, L.S.size());
    }
    auto const r      = refine_fphat(L.S, c, seq, F, o.min_length);
    bool       avoids = true;
    for (auto f : F) {
      avoids &= !std::binary_search(r.fphat_values.begin(),
                                    r.fphat_values.end(), f);
    }
    json result       = to_json(r);
    result["avoids_F"] = avoids;
    return {std::move(result), avoids && r.verdict.is_mono, input_digest(&L, &c)};
  }

  Outcome cmd_extract(Options const& o) {
    auto const L   = load_family(o);
    auto const seq = o.seq.empty() || o.seq == "auto"
                         ? non_products(L.S)
                         : parse_ids(o.seq, L.S.size());
    auto const cert = extract_typehd(L.S, seq, o.target);
    return {to_json(cert), cert.all_pass(), input_digest(&L, nullptr)};
  }

  Outcome cmd_classify(Options const& o) {
    auto const L = load_family(o);
    return {to_json(classify_patterns(L.S, o.bound)), nullptr,
            input_digest(&L, nullptr)};
  }

  // Generators for she/hd: --seq, else the non-products, else everything.
  std::vector<element_index> generators(Options const& o, Loaded const& L) {
    if (!o.seq.empty()) {
      return parse_ids(o.seq, L.S.size());
    }
    if (L.model) {
      return L.model->generators;
    }
    auto g = non_products(L.S);
    if (g.empty()) {
      g.resize(L.S.size());
      std::iota(g.begin(), g.end(), 0);
    }
    return g;
  }

  Outcome cmd_verify(Options const& o) {
    auto const& lemma = o.lemma;
    if (lemma == "ncolor") {
      auto const r = verify_ncolor_property(o.N, o.maxn);
      return {to_json(r), r.all_pass()};
    }
    if (lemma == "whymodfin") {
      auto const r = verify_why_mod_fin(o.k, o.M);
      return {to_json(r), r.pass()};
    }
    if (lemma == "she") {
      auto const L = load_family(o);
      auto const r = verify_lemma_she(L.S, generators(o, L));
      return {to_json(r), r.all_pass(), input_digest(&L, nullptr)};
    }
    if (lemma == "hd") {
      auto const L = load_family(o);
      if (L.model && o.seq.empty()) {
        auto const r = verify_hd(*L.model);
        return {to_json(r), r.all_pass(), input_digest(&L, nullptr)};
      }
      auto const gens = generators(o, L);
      if (gens.size() < 2) {
        throw BadSpec("hd needs at least two generators");
      }
      auto const b = orbit(L.S, gens[0]);
      auto const r = verify_hd(L.S, gens, b.index_h, b.period_d);
      json       result = to_json(r);
      result["h"] = b.index_h;
      result["d"] = b.period_d;
      return {std::move(result), r.all_pass(), input_digest(&L, nullptr)};
    }
    if (lemma == "s2") {
      auto const L = load_family(o);
      if (!L.model) {
        throw BadSpec("s2 needs a typehd family");
      }
      auto const r = verify_s2_finite(*L.model);
      return {to_json(r), r.generators_disjoint && r.within_bound,
              input_digest(&L, nullptr)};
    }
    if (lemma == "truecolor-invariants") {
      auto const L = load_family(o);
      auto const a = audit_truecolor(L.S, o.long_orbit);
      return {to_json(a), a.all_pass(), input_digest(&L, nullptr)};
    }
    if (lemma == "thm35") {
      auto const L = load_family(o);
      auto const c = load_coloring(o, L);
      Thm35Case  which;
      if (o.which == "finsync") {
        which = Thm35Case::finsync;
      } else if (o.which == "z2sum") {
        which = Thm35Case::z2sum;
      } else {
        throw BadSpec("--case must be finsync or z2sum");
      }
      auto const r = verify_thm35_direction3to1(L.S, c, which);
      return {to_json(r), r.pass, input_digest(&L, &c)};
    }
    throw UnknownLemma("unknown lemma '" + lemma
                       + "' (ncolor, she, hd, s2, whymodfin, "
                         "truecolor-invariants, thm35)");
  }

  int emit(Options const& o, std::string const& command,
           std::vector<std::string> const& args, Outcome outcome,
           double wall_ms) {
    json report = {{"command", command},
                   {"args", args},
                   {"input_digest", outcome.inputs.is_string()
                                        ? outcome.inputs
                                        : json(digest_hex(json::object()))},
                   {"result", std::move(outcome.result)},
                   {"verdict", outcome.verdict}};
    report["digest"]       = digest_hex(report);
    report["wall_time_ms"] = wall_ms;

    std::ostringstream text;
    if (o.format == "text") {
      render_text(text, report, "");
    } else {
      text << report.dump(2) << '\n';
    }
    if (o.out.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream os(o.out);
      if (!os) {
        std::cerr << "error: cannot write " << o.out << '\n';
        return 2;
      }
      os << text.str();
    }
    return outcome.verdict.is_boolean() && !outcome.verdict.get<bool>() ? 1 : 0;
  }

}  // namespace

int main(int argc, char** argv) {
  Options  o;
  CLI::App app{"hindman-lab: finite semigroup colorings, FP sets and "
               "type [h,d] extraction"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "Write the report to a file");
  app.add_option("--truncate", o.truncation,
                 "Truncation size for natplus")
      ->check(CLI::PositiveNumber);
  app.add_option("--family", o.family, "Family spec or cayley file");
  app.add_option("--coloring", o.coloring,
                 "Coloring file or builtin:ncolor|truecolor[:L]|mod[:k]|"
                 "gcolor|constant[:c]");
  app.add_option("--seq", o.seq, "Comma-separated element ids");

  auto* family = app.add_subcommand("family", "Build a family and summarize it");
  family->add_option("spec", o.family, "Family spec");
  family->add_option("--export", o.export_path, "Write a cayley v1 file");
  family->add_option("--bound", o.bound, "Pattern size bound");

  auto* color = app.add_subcommand("color", "Materialize a coloring");
  color->add_option("--export", o.export_path, "Write a coloring v1 file");

  auto* fpcmd = app.add_subcommand("fp", "Enumerate FP or FP-hat of a sequence");
  fpcmd->add_flag("--hat", o.hat, "Duplicate-free words in any order");
  auto* fp_search = fpcmd->add_subcommand("search", "Same as 'search fp'");

  auto* search = app.add_subcommand("search", "Searches over sequences");
  search->require_subcommand(1);
  auto* search_fp   = search->add_subcommand("fp", "FP set monochromatic mod F");
  auto* search_mono = search->add_subcommand("mono", "Almost-monochromatic subsemigroup");
  auto* search_ref  = search->add_subcommand("refine", "FP-hat refinement avoiding F");
  for (auto* s : {search_fp, fp_search}) {
    s->add_option("--n", o.n, "Sequence length");
    s->add_option("--budget", o.budget, "Exception budget");
  }
  search_mono->add_option("--budget", o.budget, "Exception budget");
  search_mono->add_option("--max-gens", o.max_gens, "Generator set size bound");
  search_ref->add_option("--F", o.exceptions, "Exception set, comma-separated ids");
  search_ref->add_option("--min-length", o.min_length, "Least admissible length");

  auto* extract = app.add_subcommand("extract", "Type [h,d] certificate by Ramsey extraction");
  auto* shevrin = app.add_subcommand("shevrin", "Alias group for extract");
  shevrin->require_subcommand(1);
  auto* shevrin_extract = shevrin->add_subcommand("extract", "Same as 'extract'");
  for (auto* s : {extract, shevrin_extract}) {
    s->add_option("--target", o.target, "Clique size");
  }

  auto* verify = app.add_subcommand("verify", "Run a named verification");
  verify->add_option("lemma", o.lemma, "ncolor, she, hd, s2, whymodfin, "
                                       "truecolor-invariants, thm35")
      ->required();
  verify->add_option("--N", o.N, "ncolor range");
  verify->add_option("--maxn", o.maxn, "ncolor largest n");
  verify->add_option("--k", o.k, "whymodfin modulus");
  verify->add_option("--M", o.M, "whymodfin tail length");
  verify->add_option("--L", o.long_orbit, "truecolor long-orbit threshold");
  verify->add_option("--case", o.which, "thm35 case: finsync or z2sum");

  auto* classify = app.add_subcommand("classify", "Largest pattern instances");
  classify->add_option("--bound", o.bound, "Pattern size bound");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  std::string              command;
  auto const               start = std::chrono::steady_clock::now();
  try {
    Outcome outcome;
    if (*family) {
      command = "family";
      outcome = cmd_family(o);
    } else if (*color) {
      command = "color";
      outcome = cmd_color(o);
    } else if (*fpcmd && *fp_search) {
      command = "search fp";
      outcome = cmd_search_fp(o);
    } else if (*fpcmd) {
      command = "fp";
      outcome = cmd_fp(o);
    } else if (*search_fp) {
      command = "search fp";
      outcome = cmd_search_fp(o);
    } else if (*search_mono) {
      command = "search mono";
      outcome = cmd_search_mono(o);
    } else if (*search_ref) {
      command = "search refine";
      outcome = cmd_search_refine(o);
    } else if (*extract || *shevrin) {
      command = "extract";
      outcome = cmd_extract(o);
    } else if (*verify) {
      command = "verify " + o.lemma;
      outcome = cmd_verify(o);
    } else {
      command = "classify";
      outcome = cmd_classify(o);
    }
    auto const ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return emit(o, command, args, std::move(outcome), ms);
  } catch (RamseyFail const& e) {
    // A failed search is a result, not a usage error.
    std::cerr << "error: " << e.what() << '\n';
    return emit(o, command, args,
                {json{{"error", e.what()}, {"target", e.target}}, false}, 0.0);
  } catch (StuckAt const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return emit(o, command, args,
                {json{{"error", e.what()}, {"step", e.step}}, false}, 0.0);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
