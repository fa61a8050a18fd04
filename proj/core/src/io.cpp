#include "quandelier/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "quandelier/error.hpp"

namespace quandelier {

  std::optional<std::vector<std::string>> const& LineReader::peek() {
    if (!has_peeked_) {
      peeked_.reset();
      std::string text;
      while (std::getline(in_, text)) {
        ++line_;
        std::istringstream       ss(text);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) {
          tokens.push_back(t);
        }
        if (!tokens.empty() && tokens.front()[0] != '#') {
          peeked_ = std::move(tokens);
          break;
        }
      }
      has_peeked_ = true;
    }
    return peeked_;
  }

  std::optional<std::vector<std::string>> LineReader::next() {
    peek();
    has_peeked_ = false;
    return std::move(peeked_);
  }

  std::vector<std::string> LineReader::expect(std::string const& what) {
    auto tokens = next();
    if (!tokens) {
      throw ParseError("unexpected end of input, expected " + what, line_);
    }
    return std::move(*tokens);
  }

  std::size_t parse_count(std::string const& token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("expected a nonnegative integer, got '" + token + "'",
                       line);
    }
    return value;
  }

  std::size_t parse_index(std::string const& token, std::size_t n,
                          std::size_t line) {
    std::size_t v = parse_count(token, line);
    if (v < 1 || v > n) {
      throw ParseError("index " + token + " outside 1.." + std::to_string(n),
                       line);
    }
    return v - 1;
  }

  namespace {

    std::size_t header(LineReader& in, std::string const& keyword,
                       std::size_t min_tokens = 2) {
      auto        t    = in.expect("'" + keyword + "' header");
      std::size_t line = in.line_number();
      if (t.size() < min_tokens || t[0] != keyword) {
        throw ParseError("expected '" + keyword + " <n>'", line);
      }
      if (min_tokens == 2 && t.size() != 2) {
        throw ParseError("expected '" + keyword + " <n>'", line);
      }
      std::size_t n = parse_count(t[1], line);
      if (n == 0) {
        throw ParseError(keyword + " size must be positive", line);
      }
      return n;
    }

    SquareTable read_square(LineReader& in, std::size_t n,
                            std::string const& what) {
      SquareTable table(n);
      for (std::size_t r = 0; r < n; ++r) {
        auto t = in.expect(what + " row");
        if (t.size() != n) {
          throw ParseError(what + " row must have " + std::to_string(n)
                               + " entries",
                           in.line_number());
        }
        for (std::size_t c = 0; c < n; ++c) {
          table(r, c) = parse_index(t[c], n, in.line_number());
        }
      }
      return table;
    }

    void write_row(std::ostream& out, std::span<std::size_t const> row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? " " : "") << row[i] + 1;
      }
      out << '\n';
    }

  }  // namespace

  FiniteQuandle read_quandle(LineReader& in) {
    std::size_t const n     = header(in, "quandle");
    SquareTable       table = read_square(in, n, "quandle");
    FiniteQuandle     q     = FiniteQuandle::validate(std::move(table));
    auto const&       next  = in.peek();
    if (next && next->front() == "basepoints") {
      auto                     t    = in.expect("basepoints");
      std::size_t              line = in.line_number();
      std::vector<std::size_t> points;
      for (std::size_t i = 1; i < t.size(); ++i) {
        points.push_back(parse_index(t[i], n, line));
      }
      try {
        q = q.with_basepoints(points);
      } catch (InvalidArgument const& e) {
        throw ParseError(e.what(), line);
      }
    }
    return q;
  }

  FiniteQuandle read_quandle(std::istream& in) {
    LineReader r(in);
    return read_quandle(r);
  }

  void write_quandle(std::ostream& out, FiniteQuandle const& q,
                     bool with_basepoints) {
    std::size_t const n = q.size();
    out << "quandle " << n << '\n';
    for (std::size_t a = 0; a < n; ++a) {
      write_row(out, q.table().data().subspan(a * n, n));
    }
    if (with_basepoints) {
      out << "basepoints ";
      write_row(out, q.basepoints());
    }
  }

  std::vector<std::size_t> read_map(LineReader& in) {
    std::size_t const n = header(in, "map");
    auto              t = in.expect("map targets");
    if (t.size() != n) {
      throw ParseError("map must list " + std::to_string(n) + " targets",
                       in.line_number());
    }
    std::vector<std::size_t> map;
    for (std::string const& s : t) {
      std::size_t v = parse_count(s, in.line_number());
      if (v == 0) {
        throw ParseError("map targets are 1-based", in.line_number());
      }
      map.push_back(v - 1);
    }
    return map;
  }

  std::vector<std::size_t> read_map(std::istream& in) {
    LineReader r(in);
    return read_map(r);
  }

  void write_map(std::ostream& out, std::span<std::size_t const> map) {
    out << "map " << map.size() << '\n';
    write_row(out, map);
  }

  bool is_abelian_spec(std::string const& spec) {
    static std::regex const pattern("Z[0-9]+(xZ[0-9]+)*");
    return std::regex_match(spec, pattern);
  }

  GroupTable parse_abelian_spec(std::string const& spec) {
    if (!is_abelian_spec(spec)) {
      throw ParseError("bad group spec '" + spec + "'");
    }
    std::vector<std::size_t> factors;
    std::size_t              pos = 0;
    while (pos < spec.size()) {
      std::size_t end = spec.find('x', pos);
      if (end == std::string::npos) {
        end = spec.size();
      }
      std::size_t d = parse_count(spec.substr(pos + 1, end - pos - 1), 0);
      if (d < 2) {
        throw ParseError("cyclic factors must have order at least 2");
      }
      factors.push_back(d);
      pos = end + 1;
    }
    return GroupTable::abelian(std::move(factors));
  }

  std::string abelian_spec(GroupTable const& g) {
    if (!g.has_factors()) {
      throw InvalidArgument("abelian_spec: group has no invariant factors");
    }
    std::string s;
    for (std::size_t d : g.factors()) {
      s += (s.empty() ? "Z" : "xZ") + std::to_string(d);
    }
    return s;
  }

  GroupTable read_group(LineReader& in) {
    std::size_t const n     = header(in, "group");
    SquareTable       table = read_square(in, n, "group");
    auto              t     = in.expect("'identity <k>'");
    if (t.size() != 2 || t[0] != "identity") {
      throw ParseError("expected 'identity <k>'", in.line_number());
    }
    std::size_t id = parse_index(t[1], n, in.line_number());
    try {
      return GroupTable::from_table(std::move(table), id);
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what(), in.line_number());
    }
  }

  GroupTable read_group(std::istream& in) {
    LineReader r(in);
    return read_group(r);
  }

  void write_group(std::ostream& out, GroupTable const& g) {
    std::size_t const n = g.order();
    out << "group " << n << '\n';
    for (std::size_t a = 0; a < n; ++a) {
      write_row(out, g.table().data().subspan(a * n, n));
    }
    out << "identity " << g.identity() + 1 << '\n';
  }

  std::string format_element(GroupTable const& g, std::size_t x) {
    if (!g.has_factors()) {
      return std::to_string(x + 1);
    }
    std::string s;
    for (std::size_t e : g.exponents(x)) {
      s += (s.empty() ? "" : ",") + std::to_string(e);
    }
    return s;
  }

  std::size_t parse_element(GroupTable const& g, std::string const& token,
                            std::size_t line) {
    if (!g.has_factors()) {
      return parse_index(token, g.order(), line);
    }
    std::vector<std::size_t> e;
    std::size_t              pos = 0;
    for (;;) {
      std::size_t end = token.find(',', pos);
      e.push_back(parse_count(token.substr(pos, end - pos), line));
      if (end == std::string::npos) {
        break;
      }
      pos = end + 1;
    }
    if (e.size() != g.factors().size()) {
      throw ParseError("element '" + token + "' needs "
                           + std::to_string(g.factors().size())
                           + " exponents",
                       line);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= g.factors()[i]) {
        throw ParseError("exponent out of range in '" + token + "'", line);
      }
    }
    return g.from_exponents(e);
  }

  namespace {
    std::pair<std::size_t, std::string>
    spec_header(LineReader& in, std::string const& keyword, bool sized) {
      auto        t    = in.expect("'" + keyword + "' header");
      std::size_t line = in.line_number();
      std::size_t over = sized ? 2 : 1;
      if (t.size() != over + 2 || t[0] != keyword || t[over] != "over") {
        throw ParseError("expected '" + keyword + (sized ? " <n>" : "")
                             + " over <group>'",
                         line);
      }
      std::size_t n = sized ? parse_count(t[1], line) : 0;
      return {n, t[over + 1]};
    }

    GroupTable resolve_at(GroupResolver const& resolve,
                          std::string const& spec, std::size_t line) {
      try {
        return resolve(spec);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), line);
      }
    }
  }  // namespace

  CocycleFile read_cocycle(LineReader& in, GroupResolver const& resolve) {
    auto [n, spec] = spec_header(in, "cocycle", true);
    if (n == 0) {
      throw ParseError("cocycle size must be positive", in.line_number());
    }
    CocycleFile out;
    out.group_spec = spec;
    out.group      = resolve_at(resolve, spec, in.line_number());
    out.cocycle    = Cocycle2{n, std::vector<std::size_t>(n * n)};
    for (std::size_t a = 0; a < n; ++a) {
      auto t = in.expect("cocycle row");
      if (t.size() != n) {
        throw ParseError("cocycle row must have " + std::to_string(n)
                             + " entries",
                         in.line_number());
      }
      for (std::size_t b = 0; b < n; ++b) {
        out.cocycle.at(a, b) = parse_element(out.group, t[b], in.line_number());
      }
      if (out.cocycle(a, a) != out.group.identity()) {
        throw ParseError("cocycle diagonal must be the identity",
                         in.line_number());
      }
    }
    return out;
  }

  CocycleFile read_cocycle(std::istream& in, GroupResolver const& resolve) {
    LineReader r(in);
    return read_cocycle(r, resolve);
  }

  void write_cocycle(std::ostream& out, std::string const& group_spec,
                     GroupTable const& g, Cocycle2 const& f) {
    out << "cocycle " << f.n << " over " << group_spec << '\n';
    for (std::size_t a = 0; a < f.n; ++a) {
      for (std::size_t b = 0; b < f.n; ++b) {
        out << (b ? " " : "") << format_element(g, f(a, b));
      }
      out << '\n';
    }
  }

  ExtensionFile read_extension(LineReader& in, FiniteQuandle const& base,
                               GroupResolver const& resolve) {
    auto [unused, spec] = spec_header(in, "extension", false);
    (void)unused;
    ExtensionFile out;
    out.group_spec         = spec;
    GroupTable const group = resolve_at(resolve, spec, in.line_number());
    FiniteQuandle    total = read_quandle(in);
    auto             map   = read_map(in);
    if (map.size() != total.size()) {
      throw ParseError("map size differs from the extension size",
                       in.line_number());
    }
    for (std::size_t t : map) {
      if (t >= base.size()) {
        throw ParseError("map target outside the base quandle",
                         in.line_number());
      }
    }
    auto t = in.expect("'action <N> <m>'");
    if (t.size() != 3 || t[0] != "action"
        || parse_count(t[1], in.line_number()) != total.size()
        || parse_count(t[2], in.line_number()) != group.order()) {
      throw ParseError("expected 'action " + std::to_string(total.size())
                           + " " + std::to_string(group.order()) + "'",
                       in.line_number());
    }
    Extension& e   = out.extension;
    e.coefficients = Coefficients::uniform(base, group);
    for (std::size_t x = 0; x < total.size(); ++x) {
      auto row = in.expect("action row");
      if (row.size() != group.order()) {
        throw ParseError("action row must have "
                             + std::to_string(group.order()) + " entries",
                         in.line_number());
      }
      std::vector<std::size_t> r;
      for (std::string const& s : row) {
        r.push_back(parse_index(s, total.size(), in.line_number()));
      }
      e.action.push_back(std::move(r));
    }
    try {
      e.projection = QuandleHom(std::move(total), base, std::move(map));
    } catch (NotAHomomorphism const& err) {
      throw ParseError(std::string("projection: ") + err.what(),
                       in.line_number());
    }
    return out;
  }

  ExtensionFile read_extension(std::istream& in, FiniteQuandle const& base,
                               GroupResolver const& resolve) {
    LineReader r(in);
    return read_extension(r, base, resolve);
  }

  void write_extension(std::ostream& out, std::string const& group_spec,
                       Extension const& e) {
    std::size_t const m = e.coefficients.at(0).order();
    for (GroupTable const& g : e.coefficients.groups) {
      if (!(g == e.coefficients.at(0))) {
        throw InvalidArgument("write_extension: coefficients must be uniform");
      }
    }
    out << "extension over " << group_spec << '\n';
    write_quandle(out, e.total());
    write_map(out, e.projection.map());
    out << "action " << e.total().size() << ' ' << m << '\n';
    for (auto const& row : e.action) {
      write_row(out, row);
    }
  }

}  // namespace quandelier
