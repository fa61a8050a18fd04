#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "quandelier/cohomology.hpp"
#include "quandelier/error.hpp"
#include "quandelier/fundamental.hpp"
#include "quandelier/io.hpp"

namespace quandelier::cli {

  namespace {

    namespace fs = std::filesystem;

    std::ifstream open(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open '" + path + "'");
      }
      return in;
    }

    FiniteQuandle load_quandle(std::string const& path) {
      std::ifstream in = open(path);
      return read_quandle(in);
    }

    // Abelian specs are parsed directly; anything else names a group file,
    // relative to `dir` unless absolute.
    GroupResolver resolver(fs::path dir) {
      return [dir](std::string const& spec) {
        if (is_abelian_spec(spec)) {
          return parse_abelian_spec(spec);
        }
        fs::path p(spec);
        if (p.is_relative() && !fs::exists(p)) {
          p = dir / p;
        }
        std::ifstream in = open(p.string());
        return read_group(in);
      };
    }

    fs::path parent_of(std::string const& path) {
      return fs::path(path).parent_path();
    }

    std::string one_based(std::vector<std::size_t> const& xs,
                          std::vector<std::string> const& names) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? " " : "") + names.at(i) + "=" + std::to_string(xs[i] + 1);
      }
      return out;
    }

    std::string violation(NotAQuandle const& e) {
      static std::vector<std::string> const q1{"a"}, q2{"a", "a'", "b"},
          q3{"a", "b", "c"};
      auto const& names = e.axiom() == Axiom::Q1   ? q1
                          : e.axiom() == Axiom::Q2 ? q2
                                                   : q3;
      return to_string(e.axiom()) + " violated at "
             + one_based(e.witness(), names);
    }

    struct Settings {
      Budgets budgets;
    };

    // ---------------------------------------------------------------
    // Commands

    int cmd_validate(std::string const& path, std::ostream& out) {
      std::ifstream in = open(path);
      FiniteQuandle q;
      try {
        q = read_quandle(in);
      } catch (NotAQuandle const& e) {
        out << violation(e) << "\n";
        return semantic;
      }
      out << "ok n=" << q.size() << " components=" << q.component_count()
          << " connected=" << (q.is_connected() ? "true" : "false") << "\n";
      return ok;
    }

    int cmd_pi1(std::string const& path, std::vector<std::size_t> bases,
                Settings const& s, std::ostream& out) {
      FiniteQuandle q = load_quandle(path);
      if (bases.empty()) {
        for (std::size_t b : q.basepoints()) {
          bases.push_back(b + 1);
        }
      }
      int code = ok;
      for (std::size_t base : bases) {
        if (base < 1 || base > q.size()) {
          throw InvalidArgument("basepoint " + std::to_string(base)
                                + " outside 1.." + std::to_string(q.size()));
        }
        FundamentalGroup g = fundamental_group(q, base - 1, s.budgets.cosets);
        out << "pi1 order=";
        if (auto n = g.order()) {
          if (g.presentation_order && *g.presentation_order != *n) {
            throw Error("coset and presentation orders disagree");
          }
          out << *n;
        } else {
          out << "unknown(budget)";
          code = budget;
        }
        out << " ab=" << to_string(g.abelian) << "\n";
      }
      return code;
    }

    int cmd_h2(std::string const& path, std::ostream& out) {
      FiniteQuandle q  = load_quandle(path);
      auto          h2 = h2_integral(q);
      for (std::size_t i = 0; i < h2.size(); ++i) {
        out << "component " << i + 1 << ": " << to_string(h2[i]) << "\n";
      }
      return ok;
    }

    int cmd_h2c(std::string const& path, std::string const& spec, bool verify,
                Settings const& s, std::ostream& out) {
      FiniteQuandle q = load_quandle(path);
      GroupTable    g = resolver(fs::current_path())(spec);
      Coefficients  c = Coefficients::uniform(q, g);
      std::vector<std::string> counts;
      if (g.is_abelian()) {
        for (H2Component const& h : h2_with_coefficients(q, c)) {
          counts.push_back(h.classes.str());
        }
      } else {
        for (std::size_t i = 0; i < q.component_count(); ++i) {
          counts.push_back(std::to_string(
              h2_brute_force(q, c, i, s.budgets.cochains)
                  .representatives.size()));
        }
      }
      int code = ok;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (q.component_count() > 1) {
          out << "component " << i + 1 << ": ";
        }
        out << "classes=" << counts[i];
        if (verify && g.is_abelian()) {
          try {
            auto h = h2_brute_force(q, c, i, s.budgets.cochains);
            bool same = std::to_string(h.representatives.size()) == counts[i];
            out << " brute-force=" << h.representatives.size();
            code = same ? code : semantic;
          } catch (BudgetExceeded const&) {
            out << " brute-force=unknown(budget)";
          }
        }
        out << "\n";
      }
      return code;
    }

    int cmd_cover_universal(std::string const& path, Settings const& s,
                            std::ostream& out) {
      FiniteQuandle  q = load_quandle(path);
      UniversalCover u = universal_cover(q, s.budgets.cosets);
      write_quandle(out, u.cover());
      write_map(out, u.projection.map());
      return ok;
    }

    int cmd_cover_enumerate(std::string const& path, Settings const& s,
                            std::ostream& out) {
      FiniteQuandle q = load_quandle(path);
      if (!q.is_connected()) {
        throw InvalidArgument("--enumerate needs a connected quandle");
      }
      auto en = enumerate_connected_coverings(q, q.basepoint(0), s.budgets);
      for (std::size_t j = 0; j < en.coverings.size(); ++j) {
        ConnectedCovering const& c = en.coverings[j];
        out << "covering " << j + 1 << ": fibre=" << c.fibre
            << " galois=" << (c.galois ? "true" : "false") << "\n";
      }
      return ok;
    }

    int cmd_cover_check(std::string const& path, std::string const& map_path,
                        std::string const& source_path, std::ostream& out) {
      FiniteQuandle q   = load_quandle(path);
      FiniteQuandle src = load_quandle(source_path);
      std::ifstream in  = open(map_path);
      auto          map = read_map(in);
      if (map.size() != src.size()) {
        throw ParseError("map has " + std::to_string(map.size())
                         + " entries, source has " + std::to_string(src.size()));
      }
      for (std::size_t x : map) {
        if (x >= q.size()) {
          throw ParseError("map target outside the base quandle");
        }
      }
      CoveringCheck c = is_covering(QuandleHom(src, q, map));
      if (c) {
        out << "covering=true\n";
        return ok;
      }
      out << "covering=false witness=";
      if (c.failure == CoveringCheck::Failure::not_surjective) {
        out << "missed=" << c.witness.at(0) + 1 << "\n";
      } else {
        out << c.witness.at(0) + 1 << "," << c.witness.at(1) + 1 << ","
            << c.witness.at(2) + 1 << "\n";
      }
      return semantic;
    }

    int cmd_ext_from_cocycle(std::string const& path,
                             std::string const& cocycle_path,
                             std::ostream&      out) {
      FiniteQuandle q  = load_quandle(path);
      std::ifstream in = open(cocycle_path);
      CocycleFile   f  = read_cocycle(in, resolver(parent_of(cocycle_path)));
      if (f.cocycle.n != q.size()) {
        throw ParseError("cocycle size does not match the quandle");
      }
      Coefficients c = Coefficients::uniform(q, f.group);
      CocycleCheck check = is_cocycle(q, c, f.cocycle);
      if (!check) {
        std::string w;
        for (std::size_t x : check.witness) {
          w += (w.empty() ? "" : ",") + std::to_string(x + 1);
        }
        throw Error("not a cocycle at (" + w + ")");
      }
      write_extension(out, f.group_spec,
                      extension_from_cocycle(q, c, f.cocycle));
      return ok;
    }

    ExtensionFile load_extension(std::string const& path,
                                 FiniteQuandle const& base) {
      std::ifstream in = open(path);
      ExtensionFile e  = read_extension(in, base, resolver(parent_of(path)));
      if (auto defect = extension_defect(e.extension)) {
        throw Error(path + ": " + *defect);
      }
      return e;
    }

    int cmd_ext_extract(std::string const& path, std::string const& bundle,
                        std::ostream& out) {
      FiniteQuandle q = load_quandle(path);
      ExtensionFile e = load_extension(bundle, q);
      Cocycle2      f =
          cocycle_from_extension(e.extension, canonical_section(e.extension));
      write_cocycle(out, e.group_spec, e.extension.coefficients.at(0), f);
      return ok;
    }

    int cmd_ext_equiv(std::string const& path, std::string const& first,
                      std::string const& second, Settings const& s,
                      std::ostream& out) {
      FiniteQuandle q  = load_quandle(path);
      ExtensionFile e1 = load_extension(first, q);
      ExtensionFile e2 = load_extension(second, q);
      if (!(e1.extension.coefficients.at(0) == e2.extension.coefficients.at(0))) {
        throw InvalidArgument("the bundles use different groups");
      }
      auto phi = are_equivalent_extensions(e1.extension, e2.extension,
                                           s.budgets.propagations);
      out << "equivalent=" << (phi ? "true" : "false") << "\n";
      return phi ? ok : semantic;
    }

    std::size_t parse_budget(std::string const& text) {
      std::size_t value = 0;
      try {
        value = parse_count(text, 0);
      } catch (ParseError const&) {
        throw ParseError("budget must be a positive integer, got '" + text + "'");
      }
      if (value == 0) {
        throw ParseError("budget must be a positive integer");
      }
      return value;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err, std::optional<std::string> const& env_budget) {
    CLI::App app{"Finite quandles: fundamental groups, coverings, cohomology",
                 "quandelier"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string budget_text;
    std::string format = "plain";
    app.add_option("--budget", budget_text,
                   "bound on cosets, cochains and propagations");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain"}));

    std::string path;
    auto        add_path = [&path](CLI::App* sub) {
      sub->add_option("file", path, "quandle file")->required();
    };

    auto* validate = app.add_subcommand("validate", "check the quandle axioms");
    add_path(validate);

    auto* pi1 = app.add_subcommand("pi1", "fundamental group at basepoints");
    add_path(pi1);
    std::vector<std::size_t> bases;
    pi1->add_option("--base", bases, "1-based basepoint (repeatable)");

    auto* h2 = app.add_subcommand("h2", "integral H2 per component");
    add_path(h2);

    auto* h2c = app.add_subcommand("h2c", "second cohomology with coefficients");
    add_path(h2c);
    std::string coeff;
    bool        verify = false;
    h2c->add_option("--coeff", coeff, "Z<d1>x...xZ<dk> or a group file")
        ->required();
    h2c->add_flag("--verify", verify, "cross-check by brute force");

    auto* cover = app.add_subcommand("cover", "coverings of the quandle");
    add_path(cover);
    bool        universal = false, enumerate = false;
    std::string check_map, source;
    auto* o_universal = cover->add_flag("--universal", universal,
                                        "print the universal cover and its projection");
    auto* o_enumerate = cover->add_flag("--enumerate", enumerate,
                                        "list the connected coverings");
    auto* o_check = cover->add_option("--check", check_map,
                                      "map file to test as a covering");
    auto* o_source = cover->add_option("--source", source,
                                       "source quandle of the --check map");
    o_check->needs(o_source);
    o_universal->excludes(o_enumerate)->excludes(o_check);
    o_enumerate->excludes(o_check);

    auto* ext = app.add_subcommand("ext", "principal extensions");
    add_path(ext);
    std::string              from_cocycle, extract;
    std::vector<std::string> equiv;
    auto* o_from = ext->add_option("--from-cocycle", from_cocycle,
                                   "cocycle file to build an extension from");
    auto* o_extract = ext->add_option("--extract", extract,
                                      "extension bundle to read a cocycle from");
    auto* o_equiv = ext->add_option("--equiv", equiv,
                                    "two extension bundles to compare")
                        ->expected(2);
    o_from->excludes(o_extract)->excludes(o_equiv);
    o_extract->excludes(o_equiv);

    std::vector<char const*> argv;
    for (std::string const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : parse;
    }

    try {
      Settings s;
      std::optional<std::string> budget_source =
          !budget_text.empty() ? std::optional(budget_text) : env_budget;
      if (budget_source) {
        std::size_t b           = parse_budget(*budget_source);
        s.budgets.cosets        = b;
        s.budgets.cochains      = b;
        s.budgets.propagations  = b;
      }
      if (validate->parsed()) {
        return cmd_validate(path, out);
      }
      if (pi1->parsed()) {
        return cmd_pi1(path, bases, s, out);
      }
      if (h2->parsed()) {
        return cmd_h2(path, out);
      }
      if (h2c->parsed()) {
        return cmd_h2c(path, coeff, verify, s, out);
      }
      if (cover->parsed()) {
        if (universal) {
          return cmd_cover_universal(path, s, out);
        }
        if (enumerate) {
          return cmd_cover_enumerate(path, s, out);
        }
        if (!check_map.empty()) {
          return cmd_cover_check(path, check_map, source, out);
        }
        err << "cover: one of --universal, --enumerate, --check is required\n";
        return parse;
      }
      if (ext->parsed()) {
        if (!from_cocycle.empty()) {
          return cmd_ext_from_cocycle(path, from_cocycle, out);
        }
        if (!extract.empty()) {
          return cmd_ext_extract(path, extract, out);
        }
        if (equiv.size() == 2) {
          return cmd_ext_equiv(path, equiv[0], equiv[1], s, out);
        }
        err << "ext: one of --from-cocycle, --extract, --equiv is required\n";
        return parse;
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return parse;
    } catch (NotAQuandle const& e) {
      err << violation(e) << "\n";
      return semantic;
    } catch (BudgetExceeded const& e) {
      err << "budget: " << e.what() << "\n";
      return budget;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return semantic;
    }
    return parse;
  }

}  // namespace quandelier::cli
