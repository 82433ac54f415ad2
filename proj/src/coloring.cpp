#include "hindman/coloring.hpp"

#include <algorithm>  // for max_element, sort
#include <charconv>   // for from_chars
#include <cmath>      // for sqrt
#include <sstream>    // for istringstream, ostringstream

#include "hindman/errors.hpp"

namespace hindman {

  Coloring::Coloring(std::vector<color_index> assign, std::size_t palette_size)
      : assign_(std::move(assign)), palette_(palette_size) {
    if (palette_ == 0) {
      throw RangeError("palette must be nonempty");
    }
    for (auto c : assign_) {
      if (c >= palette_) {
        throw RangeError("color " + std::to_string(c) + " outside palette of "
                         + std::to_string(palette_));
      }
    }
  }

  Coloring Coloring::constant(std::size_t n, color_index c,
                              std::size_t palette_size) {
    return Coloring(std::vector<color_index>(n, c),
                    std::max<std::size_t>(palette_size, c + 1));
  }

  MonoVerdict mono_check(std::span<element_index const> A, Coloring const& c) {
    std::vector<std::size_t> count(c.palette_size(), 0);
    for (auto x : A) {
      ++count[c(x)];
    }
    auto const majority = static_cast<color_index>(
        std::max_element(count.begin(), count.end()) - count.begin());
    MonoVerdict verdict{true, majority, {}};
    for (auto x : A) {
      if (c(x) != majority) {
        verdict.exceptions.push_back(x);
      }
    }
    std::sort(verdict.exceptions.begin(), verdict.exceptions.end());
    verdict.exceptions.erase(
        std::unique(verdict.exceptions.begin(), verdict.exceptions.end()),
        verdict.exceptions.end());
    verdict.is_mono = verdict.exceptions.empty();
    return verdict;
  }

  bool almost_mono_check(std::span<element_index const> A,
                         Coloring const&                c,
                         std::size_t                    budget) {
    return mono_check(A, c).exceptions.size() <= budget;
  }

  ////////////////////////////////////////////////////////////////////////
  // Interval coloring of N
  ////////////////////////////////////////////////////////////////////////

  std::size_t ncolor_block(std::size_t t) {
    if (t == 0) {
      throw RangeError("ncolor is defined on t >= 1");
    }
    // Start from the floating-point estimate and correct it.
    auto j = static_cast<std::size_t>(
        (std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
    while (j * (j + 1) / 2 < t) {
      ++j;
    }
    while (j > 1 && (j - 1) * j / 2 >= t) {
      --j;
    }
    return j;
  }

  color_index ncolor_color(std::size_t t) {
    return static_cast<color_index>((ncolor_block(t) - 1) % 2);
  }

  Coloring ncolor(std::size_t N) {
    if (N == 0) {
      throw RangeError("ncolor needs N >= 1");
    }
    std::vector<color_index> assign;
    assign.reserve(N);
    color_index color = red;
    for (std::size_t len = 1; assign.size() < N; ++len, color ^= 1) {
      for (std::size_t i = 0; i < len && assign.size() < N; ++i) {
        assign.push_back(color);
      }
    }
    return Coloring(std::move(assign), 2);
  }

  bool NcolorReport::all_pass() const noexcept {
    return std::all_of(
        rows.begin(), rows.end(), [](Row const& r) { return r.pass; });
  }

  NcolorReport verify_ncolor_property(std::size_t N, std::size_t maxn) {
    if (maxn > N) {
      throw PrecondViolation("maxn must not exceed N");
    }
    // One extra element decides whether the run ending at N is maximal.
    auto const c = ncolor(N + 1);
    struct Block {
      std::size_t start, length;
    };
    std::vector<Block> blocks;
    std::size_t        start = 1;
    for (std::size_t t = 2; t <= N + 1; ++t) {
      if (c(t - 1) != c(t - 2)) {
        blocks.push_back({start, t - start});
        start = t;
      }
    }

    NcolorReport report{N, {}};
    for (std::size_t n = 1; n <= maxn; ++n) {
      NcolorReport::Row row{n, 0, true, std::nullopt};
      for (auto const& b : blocks) {
        if (b.length < n) {
          continue;
        }
        ++row.blocks_checked;
        auto const last = b.start + b.length - 1;
        if (last / n < (b.start + n - 1) / n && row.pass) {
          row.pass    = false;
          row.failure = std::make_pair(b.start, b.length);
        }
      }
      report.rows.push_back(row);
    }
    return report;
  }

  bool multiples_meet_all_colors(Coloring const& c, std::size_t n) {
    if (n == 0) {
      throw PrecondViolation("n must be positive");
    }
    std::vector<char> seen(c.palette_size(), 0);
    for (std::size_t t = n; t <= c.size(); t += n) {
      seen[c(static_cast<element_index>(t - 1))] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Group and semigroup colorings
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Pair off the elements of G(e) of order > 2 with their inverses,
    // leaving already-colored elements alone.
    void color_inverse_pairs(FiniteSemigroup const& S,
                             SubgroupInfo const&    G,
                             PartialColoring&       colors) {
      auto const e = G.idempotent;
      for (auto g : G.elements) {
        if (S.product(g, g) == e) {
          continue;  // order <= 2
        }
        auto const inv = *inverse(S, e, g);
        auto&      cg  = colors[g];
        auto&      ci  = colors[inv];
        if (!cg && !ci) {
          cg = g < inv ? red : green;
          ci = g < inv ? green : red;
        } else if (cg && !ci) {
          ci = *cg ^ 1;
        } else if (!cg && ci) {
          cg = *ci ^ 1;
        }
      }
    }

  }  // namespace

  PartialColoring gcolor(FiniteSemigroup const& G) {
    auto const e = group_identity(G);
    if (!e) {
      throw NotAGroup("gcolor needs a group");
    }
    PartialColoring colors(G.size());
    color_inverse_pairs(G, maximal_subgroup(G, *e), colors);
    return colors;
  }

  TrueColoring truecolor(FiniteSemigroup const& S, std::size_t long_orbit) {
    PartialColoring            colors(S.size());
    std::vector<char>          used(S.size(), 0);
    std::vector<element_index> bases;
    for (element_index s = 0; s < S.size(); ++s) {
      auto const o = orbit(S, s);
      if (o.elements.size() < long_orbit) {
        continue;
      }
      if (std::any_of(o.elements.begin(), o.elements.end(),
                      [&](auto x) { return used[x] != 0; })) {
        continue;
      }
      bases.push_back(s);
      for (std::size_t i = 0; i < o.elements.size(); ++i) {
        used[o.elements[i]]   = 1;
        colors[o.elements[i]] = ncolor_color(i + 1);
      }
    }
    for (auto e : idempotents(S)) {
      color_inverse_pairs(S, maximal_subgroup(S, e), colors);
    }
    std::vector<color_index> assign(S.size());
    for (std::size_t x = 0; x < S.size(); ++x) {
      assign[x] = colors[x].value_or(red);
    }
    return {Coloring(std::move(assign), 2), std::move(bases)};
  }

  TrueColorAudit audit_truecolor(FiniteSemigroup const& S,
                                 std::size_t            long_orbit) {
    auto const     t = truecolor(S, long_orbit);
    TrueColorAudit audit;
    audit.long_orbit      = long_orbit;
    audit.orbits_selected = t.orbit_bases.size();
    auto fail = [&](bool& flag, element_index x) {
      flag = false;
      if (!audit.witness) {
        audit.witness = x;
      }
    };

    std::vector<char> on_orbit(S.size(), 0);
    for (auto b : t.orbit_bases) {
      auto const o = orbit(S, b);
      auto const n = o.elements.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto const x = o.elements[i];
        if (on_orbit[x]) {
          fail(audit.disjoint, x);
        }
        on_orbit[x] = 1;
        if (t.coloring(x) != ncolor_color(i + 1)) {
          fail(audit.pattern, x);
        }
      }
      for (std::size_t j = 1; (j + 1) * (j + 2) / 2 <= n; ++j) {
        bool seen[2] = {false, false};
        for (std::size_t m = j; m <= n; m += j) {
          seen[t.coloring(o.elements[m - 1])] = true;
        }
        if (!seen[0] || !seen[1]) {
          fail(audit.sub_orbits, o.elements[j - 1]);
        }
      }
    }

    for (auto e : idempotents(S)) {
      for (auto g : maximal_subgroup(S, e).elements) {
        auto const h = *inverse(S, e, g);
        if (g != h && !(on_orbit[g] && on_orbit[h])
            && t.coloring(g) == t.coloring(h)) {
          fail(audit.inverse_pairs, g);
        }
      }
    }
    return audit;
  }

  Coloring mod_coloring(FiniteSemigroup const& S, std::size_t k) {
    if (k == 0) {
      throw PrecondViolation("modulus must be positive");
    }
    std::vector<color_index> assign;
    for (auto const& label : S.labels()) {
      long long  value = 0;
      auto const [ptr, ec]
          = std::from_chars(label.data(), label.data() + label.size(), value);
      if (ec != std::errc() || ptr != label.data() + label.size()) {
        throw PrecondViolation("label '" + label + "' is not an integer");
      }
      auto const m = static_cast<long long>(k);
      assign.push_back(static_cast<color_index>(((value % m) + m) % m));
    }
    return Coloring(std::move(assign), k);
  }

  ////////////////////////////////////////////////////////////////////////
  // File format
  ////////////////////////////////////////////////////////////////////////

  void write_coloring(std::ostream& os, Coloring const& c) {
    os << "coloring v1\n";
    os << "palette=" << c.palette_size() << "\n";
    for (std::size_t x = 0; x < c.size(); ++x) {
      os << x << ' ' << c(static_cast<element_index>(x)) << '\n';
    }
  }

  std::string to_coloring_text(Coloring const& c) {
    std::ostringstream os;
    write_coloring(os, c);
    return os.str();
  }

  Coloring read_coloring(std::istream& is, std::size_t n) {
    std::string               raw;
    std::size_t               lineno = 0;
    std::size_t               stage  = 0;
    std::size_t               palette = 0;
    std::vector<std::optional<color_index>> assign(n);
    while (std::getline(is, raw)) {
      ++lineno;
      if (auto pos = raw.find('#'); pos != std::string::npos) {
        raw.erase(pos);
      }
      std::istringstream ss(raw);
      std::string        first;
      if (!(ss >> first)) {
        continue;
      }
      if (stage == 0) {
        std::string version;
        if (first != "coloring" || !(ss >> version) || version != "v1") {
          throw ParseError(lineno, "expected header 'coloring v1'");
        }
        stage = 1;
      } else if (stage == 1) {
        if (first.rfind("palette=", 0) != 0) {
          throw ParseError(lineno, "expected 'palette=<p>'");
        }
        auto const text = std::string_view(first).substr(8);
        auto const [ptr, ec]
            = std::from_chars(text.data(), text.data() + text.size(), palette);
        if (ec != std::errc() || ptr != text.data() + text.size()
            || palette == 0) {
          throw ParseError(lineno, "bad palette size");
        }
        stage = 2;
      } else {
        std::size_t id = 0;
        long long   color = 0;
        std::string rest;
        std::istringstream line(raw);
        if (!(line >> id >> color) || (line >> rest)) {
          throw ParseError(lineno, "expected '<element-id> <color>'");
        }
        if (id >= n) {
          throw ParseError(lineno, "element id " + std::to_string(id)
                                       + " out of range");
        }
        if (color < 0 || static_cast<std::size_t>(color) >= palette) {
          throw ParseError(lineno, "color out of palette");
        }
        if (assign[id]) {
          throw ParseError(lineno, "element " + std::to_string(id)
                                       + " colored twice");
        }
        assign[id] = static_cast<color_index>(color);
      }
    }
    if (stage < 2) {
      throw ParseError(lineno, "incomplete coloring header");
    }
    std::vector<color_index> out;
    for (std::size_t x = 0; x < n; ++x) {
      if (!assign[x]) {
        throw ParseError(lineno, "element " + std::to_string(x)
                                     + " has no color");
      }
      out.push_back(*assign[x]);
    }
    return Coloring(std::move(out), palette);
  }

}  // namespace hindman
