#include "hindman/cayley_io.hpp"

#include <fstream>  // for ifstream
#include <sstream>  // for istringstream, ostringstream

#include "hindman/errors.hpp"

namespace hindman {

  namespace {

    // Next non-blank line with comments stripped; false at end of input.
    bool next_line(std::istream& is, std::string& out, std::size_t& lineno) {
      std::string raw;
      while (std::getline(is, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) {
          raw.erase(pos);
        }
        auto const first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
          continue;
        }
        auto const last = raw.find_last_not_of(" \t\r");
        out             = raw.substr(first, last - first + 1);
        return true;
      }
      return false;
    }

    std::string expect_line(std::istream& is, std::size_t& lineno,
                            char const* what) {
      std::string line;
      if (!next_line(is, line, lineno)) {
        throw ParseError(lineno, std::string("unexpected end of input, expected ")
                                     + what);
      }
      return line;
    }

  }  // namespace

  void write_cayley(std::ostream& os, FiniteSemigroup const& S) {
    os << "cayley v1\n";
    os << "n=" << S.size() << "\n";
    os << "labels";
    for (auto const& l : S.labels()) {
      os << ' ' << l;
    }
    os << '\n';
    for (element_index a = 0; a < S.size(); ++a) {
      os << "row " << a << ':';
      for (auto x : S.row(a)) {
        os << ' ' << x;
      }
      os << '\n';
    }
  }

  std::string to_cayley(FiniteSemigroup const& S) {
    std::ostringstream os;
    write_cayley(os, S);
    return os.str();
  }

  FiniteSemigroup read_cayley(std::istream& is) {
    std::size_t lineno = 0;
    if (expect_line(is, lineno, "header") != "cayley v1") {
      throw ParseError(lineno, "expected header 'cayley v1'");
    }

    auto        line = expect_line(is, lineno, "n=<int>");
    std::size_t n    = 0;
    {
      if (line.rfind("n=", 0) != 0) {
        throw ParseError(lineno, "expected 'n=<int>'");
      }
      std::istringstream ss(line.substr(2));
      std::string        rest;
      if (!(ss >> n) || (ss >> rest) || n == 0) {
        throw ParseError(lineno, "bad element count");
      }
    }

    line = expect_line(is, lineno, "labels");
    std::vector<std::string> labels;
    {
      std::istringstream ss(line);
      std::string        word;
      ss >> word;
      if (word != "labels") {
        throw ParseError(lineno, "expected 'labels ...'");
      }
      while (ss >> word) {
        labels.push_back(word);
      }
      if (labels.size() != n) {
        throw ParseError(lineno,
                         "expected " + std::to_string(n) + " labels, got "
                             + std::to_string(labels.size()));
      }
    }

    std::vector<std::vector<element_index>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
      line = expect_line(is, lineno, "row");
      std::istringstream ss(line);
      std::string        word;
      ss >> word;
      if (word != "row") {
        throw ParseError(lineno, "expected 'row <i>: ...'");
      }
      std::size_t index = 0;
      char        colon = 0;
      if (!(ss >> index >> colon) || colon != ':' || index != i) {
        throw ParseError(lineno, "expected 'row " + std::to_string(i) + ":'");
      }
      long long x = 0;
      while (ss >> x) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw RangeError("line " + std::to_string(lineno) + ": entry "
                           + std::to_string(x) + " out of range");
        }
        table[i].push_back(static_cast<element_index>(x));
      }
      if (!ss.eof()) {
        throw ParseError(lineno, "non-integer entry in row");
      }
      if (table[i].size() != n) {
        throw ParseError(lineno, "row " + std::to_string(i) + " has "
                                     + std::to_string(table[i].size())
                                     + " entries, expected "
                                     + std::to_string(n));
      }
    }
    if (next_line(is, line, lineno)) {
      throw ParseError(lineno, "trailing content after table");
    }
    return build_cayley(std::move(labels), std::move(table));
  }

  FiniteSemigroup read_cayley_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    return read_cayley(in);
  }

}  // namespace hindman
