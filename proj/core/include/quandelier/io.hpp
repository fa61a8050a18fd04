#ifndef QUANDELIER_IO_HPP_
#define QUANDELIER_IO_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandelier/cohomology.hpp"
#include "quandelier/quandle.hpp"

// Plain-text formats.  Indices are 1-based in files and 0-based in memory.
// Blank lines and lines starting with '#' are ignored.
//
//   quandle <n>            map <n>             group <n>
//   <n rows of n>          <n targets>         <n rows of n>
//   [basepoints ...]                           identity <k>
//
//   cocycle <n> over <group spec>
//   <n rows of n entries: exponent tuples "e1,e2,..." for Z<d1>x...;
//    1-based element indices for table groups>
//
//   extension over <group spec>
//   <quandle block> <map block>
//   action <N> <m>
//   <N rows of m: row x, column l holds l . x>

namespace quandelier {

  class LineReader {
   public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next significant line split on whitespace, or nullopt at the end.
    std::optional<std::vector<std::string>> next();
    std::optional<std::vector<std::string>> const& peek();
    std::size_t line_number() const noexcept {
      return line_;
    }

    // next() that fails with ParseError at the end of input.
    std::vector<std::string> expect(std::string const& what);

   private:
    std::istream&                           in_;
    std::size_t                             line_ = 0;
    std::optional<std::vector<std::string>> peeked_;
    bool                                    has_peeked_ = false;
  };

  // Strict decimal parse; throws ParseError.
  std::size_t parse_count(std::string const& token, std::size_t line);
  // 1-based index in [1, n], returned 0-based.
  std::size_t parse_index(std::string const& token, std::size_t n,
                          std::size_t line);

  // Parses and validates; NotAQuandle propagates.
  FiniteQuandle read_quandle(LineReader& in);
  FiniteQuandle read_quandle(std::istream& in);
  void write_quandle(std::ostream& out, FiniteQuandle const& q,
                     bool with_basepoints = false);

  std::vector<std::size_t> read_map(LineReader& in);
  std::vector<std::size_t> read_map(std::istream& in);
  void write_map(std::ostream& out, std::span<std::size_t const> map);

  // True for strings of the form Z<d1>x...xZ<dk>.
  bool is_abelian_spec(std::string const& spec);
  // Z<d1>x...xZ<dk>, every d_i >= 2.
  GroupTable parse_abelian_spec(std::string const& spec);
  std::string abelian_spec(GroupTable const& g);

  GroupTable read_group(LineReader& in);
  GroupTable read_group(std::istream& in);
  void write_group(std::ostream& out, GroupTable const& g);

  // Turns the text after "over" into a group.
  using GroupResolver = std::function<GroupTable(std::string const&)>;

  struct CocycleFile {
    std::string group_spec;
    GroupTable  group;
    Cocycle2    cocycle;
  };

  CocycleFile read_cocycle(LineReader& in, GroupResolver const& resolve);
  CocycleFile read_cocycle(std::istream& in, GroupResolver const& resolve);
  void write_cocycle(std::ostream& out, std::string const& group_spec,
                     GroupTable const& g, Cocycle2 const& f);

  std::string format_element(GroupTable const& g, std::size_t x);
  std::size_t parse_element(GroupTable const& g, std::string const& token,
                            std::size_t line);

  struct ExtensionFile {
    std::string group_spec;
    Extension   extension;
  };

  // `base` is the quandle the map points into; the group is the same for
  // every component.
  ExtensionFile read_extension(LineReader& in, FiniteQuandle const& base,
                               GroupResolver const& resolve);
  ExtensionFile read_extension(std::istream& in, FiniteQuandle const& base,
                               GroupResolver const& resolve);
  void write_extension(std::ostream& out, std::string const& group_spec,
                       Extension const& e);

}  // namespace quandelier

#endif  // QUANDELIER_IO_HPP_
