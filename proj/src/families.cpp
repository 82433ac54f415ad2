#include "hindman/families.hpp"

#include <algorithm>  // for sort, find, all_of
#include <charconv>   // for from_chars
#include <numeric>    // for iota, lcm

#include "hindman/errors.hpp"

namespace hindman {

  namespace {

    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto const pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return out;
    }

    std::size_t parse_size(std::string_view text, std::string_view spec) {
      std::size_t value = 0;
      auto const [ptr, ec]
          = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw BadSpec("bad integer '" + std::string(text) + "' in family spec '"
                      + std::string(spec) + "'");
      }
      return value;
    }

    HDToken parse_token(std::string_view text) {
      if (text == "SQ") {
        return HDToken::SQ;
      } else if (text == "AB") {
        return HDToken::AB;
      } else if (text == "BA") {
        return HDToken::BA;
      } else if (text == "X1E2") {
        return HDToken::X1E2;
      }
      throw BadSpec("unknown pattern token '" + std::string(text) + "'");
    }

    EqPattern parse_pattern(std::string_view text) {
      EqPattern         pattern;
      std::vector<char> seen(4, 0);
      for (auto block : split(text, ';')) {
        if (block.empty()) {
          continue;
        }
        auto& tokens = pattern.emplace_back();
        for (auto tok : split(block, '=')) {
          auto const t = parse_token(tok);
          if (seen[static_cast<int>(t)]++) {
            throw BadSpec("token " + std::string(tok)
                          + " appears twice in pattern");
          }
          tokens.push_back(t);
        }
      }
      return pattern;
    }

    void require_args(std::vector<std::string_view> const& args,
                      std::size_t                          lo,
                      std::size_t                          hi,
                      std::string_view                     spec) {
      if (args.size() < lo || args.size() > hi) {
        throw BadSpec("wrong number of parameters in family spec '"
                      + std::string(spec) + "'");
      }
    }

    std::vector<std::vector<element_index>>
    make_table(std::size_t n, auto&& op) {
      std::vector<std::vector<element_index>> table(
          n, std::vector<element_index>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table[a][b] = static_cast<element_index>(op(a, b));
        }
      }
      return table;
    }

    std::vector<std::string> numeric_labels(std::size_t n, std::size_t first) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(first + i));
      }
      return labels;
    }

  }  // namespace

  std::string to_string(HDToken t) {
    switch (t) {
      case HDToken::SQ:
        return "SQ";
      case HDToken::AB:
        return "AB";
      case HDToken::BA:
        return "BA";
      case HDToken::X1E2:
        return "X1E2";
    }
    return "?";
  }

  FamilySpec parse_family_spec(std::string_view text) {
    auto const colon = text.find(':');
    auto const name  = text.substr(0, colon);
    std::vector<std::string_view> args;
    if (colon != std::string_view::npos) {
      args = split(text.substr(colon + 1), ',');
    }
    FamilySpec spec{FamilyKind::nat_plus};
    auto       one = [&](FamilyKind kind) {
      require_args(args, 1, 1, text);
      spec.kind = kind;
      spec.n    = parse_size(args[0], text);
    };
    if (name == "natplus") {
      require_args(args, 0, 0, text);
      spec.kind = FamilyKind::nat_plus;
    } else if (name == "natmax") {
      one(FamilyKind::nat_max);
    } else if (name == "natmin") {
      one(FamilyKind::nat_min);
    } else if (name == "rzero") {
      one(FamilyKind::right_zero);
    } else if (name == "lzero") {
      one(FamilyKind::left_zero);
    } else if (name == "fan") {
      one(FamilyKind::fan);
    } else if (name == "z2sum") {
      one(FamilyKind::z2_sum);
    } else if (name == "zero") {
      one(FamilyKind::zero);
    } else if (name == "cyclic") {
      one(FamilyKind::cyclic);
    } else if (name == "whymodfin") {
      require_args(args, 2, 2, text);
      spec.kind  = FamilyKind::why_mod_fin;
      spec.n     = parse_size(args[0], text);
      spec.count = parse_size(args[1], text);
    } else if (name == "monogenic") {
      require_args(args, 2, 2, text);
      spec.kind = FamilyKind::monogenic;
      spec.h    = parse_size(args[0], text);
      spec.d    = parse_size(args[1], text);
    } else if (name == "typehd") {
      require_args(args, 3, 4, text);
      spec.kind = FamilyKind::type_hd;
      spec.h    = parse_size(args[0], text);
      spec.d    = parse_size(args[1], text);
      spec.m    = parse_size(args[2], text);
      if (args.size() == 4) {
        spec.pattern = parse_pattern(args[3]);
      }
    } else {
      throw BadSpec("unknown family '" + std::string(name) + "'");
    }
    return spec;
  }

  std::string to_string(FamilySpec const& spec) {
    auto const n = std::to_string(spec.n);
    switch (spec.kind) {
      case FamilyKind::nat_plus:
        return "natplus";
      case FamilyKind::nat_max:
        return "natmax:" + n;
      case FamilyKind::nat_min:
        return "natmin:" + n;
      case FamilyKind::right_zero:
        return "rzero:" + n;
      case FamilyKind::left_zero:
        return "lzero:" + n;
      case FamilyKind::fan:
        return "fan:" + n;
      case FamilyKind::z2_sum:
        return "z2sum:" + n;
      case FamilyKind::zero:
        return "zero:" + n;
      case FamilyKind::cyclic:
        return "cyclic:" + n;
      case FamilyKind::why_mod_fin:
        return "whymodfin:" + n + "," + std::to_string(spec.count);
      case FamilyKind::monogenic:
        return "monogenic:" + std::to_string(spec.h) + ","
               + std::to_string(spec.d);
      case FamilyKind::type_hd: {
        auto out = "typehd:" + std::to_string(spec.h) + ","
                   + std::to_string(spec.d) + "," + std::to_string(spec.m);
        if (!spec.pattern.empty()) {
          out += ",";
          for (std::size_t i = 0; i < spec.pattern.size(); ++i) {
            out += i ? ";" : "";
            for (std::size_t j = 0; j < spec.pattern[i].size(); ++j) {
              out += (j ? "=" : "") + to_string(spec.pattern[i][j]);
            }
          }
        }
        return out;
      }
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Lazy families. Encoding: the natural number itself, enumerated 1, 2, ...
  ////////////////////////////////////////////////////////////////////////

  LazyFamily nat_plus() {
    return LazyFamily(
        "natplus",
        [](std::size_t i) { return static_cast<LazyFamily::value_type>(i + 1); },
        [](auto a, auto b) { return a + b; });
  }

  LazyFamily nat_max() {
    return LazyFamily(
        "natmax",
        [](std::size_t i) { return static_cast<LazyFamily::value_type>(i + 1); },
        [](auto a, auto b) { return std::max(a, b); });
  }

  LazyFamily nat_min() {
    return LazyFamily(
        "natmin",
        [](std::size_t i) { return static_cast<LazyFamily::value_type>(i + 1); },
        [](auto a, auto b) { return std::min(a, b); });
  }

  LazyFamily fan() {
    return LazyFamily(
        "fan",
        [](std::size_t i) { return static_cast<LazyFamily::value_type>(i + 1); },
        [](auto a, auto b) { return a == b ? a : LazyFamily::value_type(1); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite families
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup right_zero(std::size_t n) {
    if (n == 0) {
      throw BadSpec("rzero needs n >= 1");
    }
    return build_cayley(numeric_labels(n, 0),
                        make_table(n, [](auto, auto b) { return b; }));
  }

  FiniteSemigroup left_zero(std::size_t n) {
    if (n == 0) {
      throw BadSpec("lzero needs n >= 1");
    }
    return build_cayley(numeric_labels(n, 0),
                        make_table(n, [](auto a, auto) { return a; }));
  }

  FiniteSemigroup z2_sum(std::size_t k) {
    if (k == 0 || k > 12) {
      throw BadSpec("z2sum needs 1 <= k <= 12");
    }
    std::size_t const        n = std::size_t(1) << k;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
      std::string l = "(";
      for (std::size_t i = 0; i < k; ++i) {
        l += (i ? "," : "") + std::to_string((x >> i) & 1);
      }
      labels.push_back(l + ")");
    }
    return build_cayley(std::move(labels),
                        make_table(n, [](auto a, auto b) { return a ^ b; }));
  }

  FiniteSemigroup why_mod_fin(std::size_t k, std::size_t M) {
    if (k < 2 || M == 0) {
      throw BadSpec("whymodfin needs k >= 2 and M >= 1");
    }
    // ids 0..k-1 are the residues, id k-1+j is kj+1.
    auto labels = numeric_labels(k, 0);
    for (std::size_t j = 1; j <= M; ++j) {
      labels.push_back(std::to_string(k * j + 1));
    }
    auto const value = [k](std::size_t id) { return id < k ? id : 1; };
    return build_cayley(
        std::move(labels), make_table(k + M, [&](auto a, auto b) {
          return (value(a) + value(b)) % k;
        }));
  }

  FiniteSemigroup zero_semigroup(std::size_t n) {
    if (n == 0) {
      throw BadSpec("zero needs n >= 1");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
      labels.push_back("x" + std::to_string(i));
    }
    labels.emplace_back("z");
    return build_cayley(std::move(labels),
                        make_table(n + 1, [n](auto, auto) { return n; }));
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw BadSpec("cyclic needs n >= 1");
    }
    return build_cayley(numeric_labels(n, 0), make_table(n, [n](auto a, auto b) {
                          return (a + b) % n;
                        }));
  }

  FiniteSemigroup monogenic(std::size_t h, std::size_t d) {
    if (h == 0 || d == 0) {
      throw BadSpec("monogenic needs h >= 1 and d >= 1");
    }
    std::size_t const        n = h + d - 1;
    std::vector<std::string> labels{"b"};
    for (std::size_t p = 2; p <= n; ++p) {
      labels.push_back("b^" + std::to_string(p));
    }
    // id i is b^(i+1).
    return build_cayley(std::move(labels), make_table(n, [&](auto a, auto b) {
                          return reduce_power(a + b + 2, h, d) - 1;
                        }));
  }

  FamilyInstance build_family(FamilySpec const& spec) {
    switch (spec.kind) {
      case FamilyKind::nat_plus:
        return nat_plus();
      case FamilyKind::nat_max:
        return nat_max();
      case FamilyKind::nat_min:
        return nat_min();
      case FamilyKind::fan:
        return fan();
      case FamilyKind::right_zero:
        return right_zero(spec.n);
      case FamilyKind::left_zero:
        return left_zero(spec.n);
      case FamilyKind::z2_sum:
        return z2_sum(spec.n);
      case FamilyKind::why_mod_fin:
        return why_mod_fin(spec.n, spec.count);
      case FamilyKind::zero:
        return zero_semigroup(spec.n);
      case FamilyKind::cyclic:
        return cyclic_group(spec.n);
      case FamilyKind::monogenic:
        return monogenic(spec.h, spec.d);
      case FamilyKind::type_hd:
        return build_typehd(spec.h, spec.d, spec.m, spec.pattern).semigroup;
    }
    throw BadSpec("unknown family kind");
  }

  FiniteSemigroup materialize(FamilySpec const& spec,
                              std::size_t       natplus_truncation) {
    auto instance = build_family(spec);
    if (auto* S = std::get_if<FiniteSemigroup>(&instance)) {
      return std::move(*S);
    }
    auto const& fam = std::get<LazyFamily>(instance);
    auto const  n
        = spec.kind == FamilyKind::nat_plus ? natplus_truncation : spec.n;
    if (n == 0) {
      throw BadSpec("truncation size must be positive for " + fam.name());
    }
    return fam.truncate(n).semigroup();
  }

  ////////////////////////////////////////////////////////////////////////
  // Type [h,d]
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Raw (unquotiented) normal forms: m generators, then Pow(2), AB, BA,
    // then Pow(3) .. Pow(h+d-1).
    struct RawHD {
      std::size_t h, d, m;

      std::size_t size() const {
        return m + 3 + (h + d - 1 - 2);
      }
      std::size_t pow_id(std::size_t p) const {
        return p == 2 ? m : m + 3 + (p - 3);
      }
      std::size_t ab_id() const {
        return m + 1;
      }
      std::size_t ba_id() const {
        return m + 2;
      }
      std::size_t length(std::size_t id) const {
        if (id < m) {
          return 1;
        } else if (id == m) {
          return 2;
        } else if (id == ab_id() || id == ba_id()) {
          return 2;
        }
        return id - (m + 3) + 3;
      }
      std::size_t product(std::size_t a, std::size_t b) const {
        if (a < m && b < m) {
          return a == b ? pow_id(2) : (a < b ? ab_id() : ba_id());
        }
        return pow_id(reduce_power(length(a) + length(b), h, d));
      }
    };

  }  // namespace

  TypeHDModel build_typehd(std::size_t      h,
                           std::size_t      d,
                           std::size_t      m,
                           EqPattern const& pattern) {
    if (h <= 1 || d == 0 || m < 2) {
      throw BadSpec("typehd needs h > 1, d >= 1, m >= 2");
    }
    RawHD const raw{h, d, m};
    auto const  n   = raw.size();
    auto const  e_p = idempotent_power(h, d);
    auto const  q   = reduce_power(2 * (e_p + 1), h, d);

    auto token_id = [&](HDToken t) -> std::size_t {
      switch (t) {
        case HDToken::SQ:
          return raw.pow_id(2);
        case HDToken::AB:
          return raw.ab_id();
        case HDToken::BA:
          return raw.ba_id();
        case HDToken::X1E2:
          return raw.pow_id(q);
      }
      return 0;
    };

    // Union-find over raw ids.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& block : pattern) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        auto a = find(token_id(block[0]));
        auto b = find(token_id(block[i]));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }

    // Classes numbered by least raw member; raw order puts the
    // generators first.
    std::vector<std::size_t> cls(n);
    std::vector<std::size_t> rep;
    std::vector<std::size_t> class_of_root(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      auto const r = find(x);
      if (class_of_root[r] == n) {
        class_of_root[r] = rep.size();
        rep.push_back(x);
      }
      cls[x] = class_of_root[r];
    }
    auto const k = rep.size();

    std::vector<std::vector<element_index>> table(
        k, std::vector<element_index>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        table[a][b] = static_cast<element_index>(cls[raw.product(rep[a], rep[b])]);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (cls[raw.product(a, b)] != table[cls[a]][cls[b]]) {
          throw BadPattern("identifications are not compatible with the "
                           "multiplication");
        }
      }
    }

    std::vector<std::vector<std::string>> tokens(k);
    auto raw_name = [&](std::size_t x) -> std::vector<std::string> {
      if (x < m) {
        return {"x" + std::to_string(x + 1)};
      } else if (x == raw.ab_id()) {
        return {"AB"};
      } else if (x == raw.ba_id()) {
        return {"BA"};
      }
      auto const p = raw.length(x);
      std::vector<std::string> out{"Pow(" + std::to_string(p) + ")"};
      if (p == 2) {
        out.emplace_back("SQ");
      }
      if (p == q) {
        out.emplace_back("X1E2");
      }
      return out;
    };
    auto label_of = [&](std::size_t x) -> std::string {
      if (x < m) {
        return "x" + std::to_string(x + 1);
      } else if (x == raw.ab_id()) {
        return "x1x2";
      } else if (x == raw.ba_id()) {
        return "x2x1";
      }
      return "x1^" + std::to_string(raw.length(x));
    };
    std::vector<std::string> labels(k);
    for (std::size_t x = 0; x < n; ++x) {
      auto const c = cls[x];
      for (auto& t : raw_name(x)) {
        tokens[c].push_back(std::move(t));
      }
      labels[c] += (labels[c].empty() ? "" : "=") + label_of(x);
    }

    std::optional<FiniteSemigroup> S;
    try {
      S.emplace(std::move(labels), table);
    } catch (AssocViolation const& e) {
      throw BadPattern(std::string("pattern breaks associativity: ") + e.what());
    }
    TypeHDModel model{std::move(*S), h, d, pattern, {}, std::move(tokens),
                      {},            0, 0, 0,       q};
    for (std::size_t i = 0; i < m; ++i) {
      model.generators.push_back(static_cast<element_index>(cls[i]));
    }
    auto const sq = square(model.semigroup);
    for (auto g : model.generators) {
      if (std::binary_search(sq.begin(), sq.end(), g)) {
        throw BadPattern("pattern collapses generator "
                         + model.semigroup.label(g) + " into S^2");
      }
    }
    model.powers.assign(h + d, 0);
    model.powers[1] = model.generators[0];
    for (std::size_t p = 2; p < h + d; ++p) {
      model.powers[p] = static_cast<element_index>(cls[raw.pow_id(p)]);
    }
    model.ab         = static_cast<element_index>(cls[raw.ab_id()]);
    model.ba         = static_cast<element_index>(cls[raw.ba_id()]);
    model.idempotent = model.powers[e_p];
    return model;
  }

  HDReport verify_hd(FiniteSemigroup const&         S,
                     std::span<element_index const> gens,
                     std::size_t                    h,
                     std::size_t                    d) {
    HDReport report;
    if (gens.size() < 2) {
      throw PrecondViolation("verify_hd needs at least two generators");
    }
    auto const& L    = S.labels();
    auto const  x1   = gens[0];
    auto const  x2   = gens[1];
    auto const  sq   = S.product(x1, x1);
    auto const  ab   = S.product(x1, x2);
    auto const  ba   = S.product(x2, x1);
    auto const  cube = S.product(sq, x1);
    auto fail = [](RelationCheck& check, std::string msg) {
      if (check.pass) {
        check.pass           = false;
        check.counterexample = std::move(msg);
      }
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const xi = gens[i];
      if (S.product(xi, xi) != sq) {
        fail(report.hd1, L[xi] + "^2 = " + L[S.product(xi, xi)] + " != " + L[sq]);
      }
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        auto const xj = gens[j];
        if (S.product(xi, xj) != ab) {
          fail(report.hd2, L[xi] + L[xj] + " != x1x2");
        }
        if (S.product(xj, xi) != ba) {
          fail(report.hd2, L[xj] + L[xi] + " != x2x1");
        }
      }
      for (auto xj : gens) {
        for (auto xk : gens) {
          if (S.product(S.product(xi, xj), xk) != cube) {
            fail(report.hd3, L[xi] + "*" + L[xj] + "*" + L[xk] + " != x1^3");
          }
        }
      }
      if (S.power(xi, h) != S.power(xi, h + d)) {
        fail(report.hd4, L[xi] + "^" + std::to_string(h) + " != " + L[xi] + "^"
                             + std::to_string(h + d));
      }
    }
    auto const s2 = square(S);
    for (auto g : gens) {
      if (std::binary_search(s2.begin(), s2.end(), g)) {
        fail(report.generators_outside_s2, L[g] + " lies in S^2");
      }
    }
    return report;
  }

  HDReport verify_hd(TypeHDModel const& model) {
    return verify_hd(model.semigroup, model.generators, model.h, model.d);
  }

  S2Report verify_s2_finite(TypeHDModel const& model) {
    auto const s2 = square(model.semigroup);
    S2Report   report{model.semigroup.size(), s2.size(),
                    3 + (model.h + model.d - 2), true, false};
    for (auto g : model.generators) {
      if (std::binary_search(s2.begin(), s2.end(), g)) {
        report.generators_disjoint = false;
      }
    }
    report.within_bound = report.size_s2 <= report.bound;
    return report;
  }

  SheReport verify_lemma_she(FiniteSemigroup const&         S,
                             std::span<element_index const> A) {
    if (A.empty()) {
      throw PrecondViolation("generating set must be nonempty");
    }
    SheReport report;
    report.generates = closure(S, A).size() == S.size();

    auto const abc0 = S.product(S.product(A[0], A[0]), A[0]);
    report.premise_a = true;
    for (auto a : A) {
      for (auto b : A) {
        for (auto c : A) {
          if (report.premise_a && S.product(S.product(a, b), c) != abc0) {
            report.premise_a         = false;
            report.premise_a_witness = {a, b, c};
          }
        }
      }
    }

    // In a finite semigroup every a has a^h = a^(h+d) for h = max index
    // (at least 2) and d = lcm of the periods.
    std::size_t h = 2, d = 1;
    for (auto a : A) {
      auto const o = orbit(S, a);
      h            = std::max(h, o.index_h);
      d            = std::lcm(d, o.period_d);
    }
    report.h         = h;
    report.d         = d;
    report.premise_b = std::all_of(A.begin(), A.end(), [&](auto a) {
      return S.power(a, h) == S.power(a, h + d);
    });
    if (!report.premises_hold()) {
      return report;
    }

    // (1) S^3 = <a>^3 for each a in A.
    std::vector<char> in_s3(S.size(), 0);
    for (element_index x = 0; x < S.size(); ++x) {
      for (element_index y = 0; y < S.size(); ++y) {
        auto const xy = S.product(x, y);
        for (element_index z = 0; z < S.size(); ++z) {
          in_s3[S.product(xy, z)] = 1;
        }
      }
    }
    element_set s3;
    for (element_index x = 0; x < S.size(); ++x) {
      if (in_s3[x]) {
        s3.push_back(x);
      }
    }
    report.s3_size               = s3.size();
    report.c2_s3_finite          = true;
    report.c1_cube_is_orbit_cube = true;
    for (auto a : A) {
      auto const  o = orbit(S, a);
      element_set cube;
      for (std::size_t k = 3; k <= 3 + o.index_h + o.period_d; ++k) {
        cube.push_back(S.power(a, k));
      }
      std::sort(cube.begin(), cube.end());
      cube.erase(std::unique(cube.begin(), cube.end()), cube.end());
      if (cube != s3 && report.c1_cube_is_orbit_cube) {
        report.c1_cube_is_orbit_cube = false;
        report.c1_witness            = a;
      }
    }

    // (3) unique idempotent.
    auto const E                = idempotents(S);
    report.c3_unique_idempotent = E.size() == 1;
    if (!report.c3_unique_idempotent) {
      return report;
    }
    report.idempotent = E.front();

    // (4) ae = be.
    auto const e       = E.front();
    report.c4_ae_equal = true;
    for (auto a : A) {
      for (auto b : A) {
        if (report.c4_ae_equal && S.product(a, e) != S.product(b, e)) {
          report.c4_ae_equal = false;
          report.c4_witness  = {a, b};
        }
      }
    }
    return report;
  }

}  // namespace hindman
