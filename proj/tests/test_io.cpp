#include <gtest/gtest.h>

#include <sstream>

#include "quandelier/error.hpp"
#include "quandelier/io.hpp"
#include "support/corpus.hpp"

using namespace quandelier;
using namespace quandelier::testing;

namespace {

  GroupTable resolve(std::string const& spec) {
    return parse_abelian_spec(spec);
  }

}  // namespace

TEST(QuandleFile, ReadsDihedralThree) {
  std::istringstream in(
      "# dihedral quandle\n"
      "quandle 3\n"
      "1 3 2\n"
      "\n"
      "3 2 1\n"
      "2 1 3\n");
  EXPECT_EQ(read_quandle(in), dihedral(3));
}

TEST(QuandleFile, RoundTripsCorpus) {
  for (auto const& [name, q] : full_corpus()) {
    std::ostringstream out;
    write_quandle(out, q, true);
    std::istringstream in(out.str());
    FiniteQuandle      back = read_quandle(in);
    EXPECT_EQ(back, q) << name;
    EXPECT_EQ(back.basepoints(), q.basepoints()) << name;
  }
}

TEST(QuandleFile, Basepoints) {
  std::istringstream in("quandle 2\n1 1\n2 2\nbasepoints 2 1\n");
  FiniteQuandle      q = read_quandle(in);
  EXPECT_EQ(q.basepoints(), (std::vector<std::size_t>{0, 1}));
  std::istringstream bad("quandle 2\n1 1\n2 2\nbasepoints 1 1\n");
  EXPECT_THROW(read_quandle(bad), Error);
}

TEST(QuandleFile, Errors) {
  std::istringstream header("quandel 2\n1 1\n2 2\n");
  EXPECT_THROW(read_quandle(header), ParseError);
  std::istringstream short_row("quandle 2\n1 1\n2\n");
  EXPECT_THROW(read_quandle(short_row), ParseError);
  std::istringstream range("quandle 2\n1 3\n2 2\n");
  EXPECT_THROW(read_quandle(range), ParseError);
  std::istringstream zero("quandle 2\n0 1\n2 2\n");
  EXPECT_THROW(read_quandle(zero), ParseError);
  std::istringstream junk("quandle 2\n1 x\n2 2\n");
  EXPECT_THROW(read_quandle(junk), ParseError);
  std::istringstream truncated("quandle 3\n1 3 2\n");
  EXPECT_THROW(read_quandle(truncated), ParseError);
  std::istringstream axiom("quandle 2\n2 1\n1 2\n");
  EXPECT_THROW(read_quandle(axiom), NotAQuandle);
}

TEST(QuandleFile, ParseErrorsCarryLineNumbers) {
  std::istringstream in("quandle 2\n\n1 1\n2 9\n");
  try {
    read_quandle(in);
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(MapFile, RoundTrip) {
  std::vector<std::size_t> map{0, 1, 0, 1};
  std::ostringstream       out;
  write_map(out, map);
  EXPECT_EQ(out.str(), "map 4\n1 2 1 2\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_map(in), map);
  std::istringstream bad("map 3\n1 2\n");
  EXPECT_THROW(read_map(bad), ParseError);
}

TEST(GroupSpec, Abelian) {
  EXPECT_TRUE(is_abelian_spec("Z2"));
  EXPECT_TRUE(is_abelian_spec("Z2xZ4"));
  EXPECT_FALSE(is_abelian_spec("Z2x"));
  EXPECT_FALSE(is_abelian_spec("group.txt"));
  EXPECT_EQ(parse_abelian_spec("Z2xZ3").order(), 6U);
  EXPECT_THROW(parse_abelian_spec("Z1"), ParseError);
  EXPECT_EQ(abelian_spec(GroupTable::abelian({2, 4})), "Z2xZ4");
}

TEST(GroupSpec, TableRoundTrip) {
  GroupTable         s3 = GroupTable::from_group(symmetric_group(3));
  std::ostringstream out;
  write_group(out, s3);
  std::istringstream in(out.str());
  EXPECT_EQ(read_group(in), s3);

  std::istringstream not_group("group 2\n1 1\n1 2\nidentity 1\n");
  EXPECT_THROW(read_group(not_group), Error);
}

TEST(CocycleFile, RoundTrip) {
  FiniteQuandle q = dihedral(3);
  GroupTable    g = parse_abelian_spec("Z2xZ2");
  Cocycle2      f = coboundary(q, Coefficients::uniform(q, g), {1, 2, 3});
  std::ostringstream out;
  write_cocycle(out, "Z2xZ2", g, f);
  std::istringstream in(out.str());
  CocycleFile        back = read_cocycle(in, resolve);
  EXPECT_EQ(back.group_spec, "Z2xZ2");
  EXPECT_EQ(back.group, g);
  EXPECT_EQ(back.cocycle, f);
}

TEST(CocycleFile, RejectsNonIdentityDiagonal) {
  std::istringstream in("cocycle 2 over Z2\n1 0\n0 0\n");
  EXPECT_THROW(read_cocycle(in, resolve), ParseError);
  std::istringstream arity("cocycle 2 over Z2xZ2\n0,0 1\n0,0 0,0\n");
  EXPECT_THROW(read_cocycle(arity, resolve), ParseError);
}

TEST(Elements, Formatting) {
  GroupTable v = parse_abelian_spec("Z2xZ3");
  std::size_t const e[] = {1, 2};
  std::size_t x = v.from_exponents(e);
  EXPECT_EQ(format_element(v, x), "1,2");
  EXPECT_EQ(parse_element(v, "1,2", 1), x);
  EXPECT_THROW(parse_element(v, "2,0", 1), ParseError);
  GroupTable s3 = GroupTable::from_group(symmetric_group(3));
  EXPECT_EQ(format_element(s3, 4), "5");
  EXPECT_EQ(parse_element(s3, "5", 1), 4U);
}

TEST(ExtensionFile, RoundTrip) {
  FiniteQuandle q  = dihedral(3);
  GroupTable    z3 = GroupTable::cyclic(3);
  Coefficients  c  = Coefficients::uniform(q, z3);
  Extension     e  = extension_from_cocycle(q, c, coboundary(q, c, {1, 0, 2}));
  std::ostringstream out;
  write_extension(out, "Z3", e);
  std::istringstream in(out.str());
  ExtensionFile      back = read_extension(in, q, resolve);
  EXPECT_EQ(back.group_spec, "Z3");
  EXPECT_EQ(back.extension.total(), e.total());
  EXPECT_EQ(back.extension.projection.map(), e.projection.map());
  EXPECT_EQ(back.extension.action, e.action);
}
