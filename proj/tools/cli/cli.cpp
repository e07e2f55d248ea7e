#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wordprob/cayley.hpp"
#include "wordprob/dehn.hpp"
#include "wordprob/errors.hpp"
#include "wordprob/presentations.hpp"
#include "wordprob/reductions.hpp"
#include "wordprob/rewriting.hpp"
#include "wordprob/sequences.hpp"
#include "wordprob/terms.hpp"
#include "wordprob/words.hpp"

namespace wordprob::cli {

  namespace {

    // Raised for bad combinations of otherwise well-formed options.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    // Records are "key: value" for humans and "key value" with --format lines.
    class Printer {
     public:
      Printer(std::ostream& os, bool lines) : _os(os), _lines(lines) {}

      template <typename T>
      void field(std::string_view key, T const& value) {
        _os << key << (_lines ? " " : ": ") << value << '\n';
      }
      void raw(std::string_view text) { _os << text; }

     private:
      std::ostream& _os;
      bool          _lines;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot open " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    struct CatalogOptions {
      int              genus     = 2;
      int              rank      = 2;
      std::vector<int> exponents = {1};

      void add_to(CLI::App* app) {
        app->add_option("--genus", genus, "surface genus")->capture_default_str();
        app->add_option("--rank", rank, "free abelian rank")->capture_default_str();
        app->add_option("--exponents", exponents, "Higman exponents")->delimiter(',');
      }
      catalog::Entry lookup(std::string const& name) const {
        return catalog::lookup(name, {genus, rank, exponents});
      }
    };

    struct GroupSource {
      std::string    file;
      std::string    preset;
      CatalogOptions params;

      void add_to(CLI::App* app) {
        auto f = app->add_option("--pres", file, "presentation file");
        auto p = app->add_option("--preset", preset, "catalog presentation");
        f->excludes(p);
        p->excludes(f);
        params.add_to(app);
      }
      GroupPresentation load() const {
        if (file.empty() == preset.empty()) {
          throw UsageError("give exactly one of --pres or --preset");
        }
        catalog::Entry e = file.empty() ? params.lookup(preset)
                                        : parse_presentation(read_file(file));
        if (auto* g = std::get_if<GroupPresentation>(&e)) {
          return *g;
        }
        throw UsageError("expected a group presentation, got a semigroup one");
      }
    };

    struct SystemSource {
      std::string file;
      std::string preset;

      void add_to(CLI::App* app) {
        auto f = app->add_option("--sys", file, "rewriting system file");
        auto p = app->add_option("--preset", preset, "catalog semigroup presentation");
        f->excludes(p);
        p->excludes(f);
      }
      RewriteSystem load() const {
        if (file.empty() == preset.empty()) {
          throw UsageError("give exactly one of --sys or --preset");
        }
        if (!file.empty()) {
          return parse_rewrite_system(read_file(file));
        }
        auto e = catalog::lookup(preset);
        if (auto* s = std::get_if<SemigroupPresentation>(&e)) {
          return to_rewrite_system(*s);
        }
        throw UsageError("expected a semigroup presentation, got a group one");
      }
    };

    struct MachineSource {
      std::string file;
      std::string preset;

      void add_to(CLI::App* app) {
        auto f = app->add_option("--machine", file, "machine file");
        auto p = app->add_option("--preset", preset, "catalog machine");
        f->excludes(p);
        p->excludes(f);
      }
      TuringMachine load() const {
        if (file.empty() == preset.empty()) {
          throw UsageError("give exactly one of --machine or --preset");
        }
        return file.empty() ? machines::lookup(preset) : parse_machine(read_file(file));
      }
    };

    Ratio parse_ratio(std::string const& s) {
      auto slash = s.find('/');
      try {
        if (slash == std::string::npos) {
          return Ratio(std::stoll(s), 1);
        }
        return Ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
      } catch (std::logic_error const&) {
        throw UsageError("expected a ratio like 1/6, got \"" + s + "\"");
      }
    }

    std::string dir_name(RuleDirection d) {
      return d == RuleDirection::Forward ? "fwd" : "bwd";
    }

    int search_exit(SearchStatus s) {
      return s == SearchStatus::BudgetExhausted ? undecided : ok;
    }

    void print_stats(Printer& p, SearchStats const& s) {
      p.field("expanded", s.expanded);
      p.field("frontier-peak", s.frontier_peak);
      p.field("depth", s.depth);
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Word problems: free groups, Dehn's algorithm, rewriting, "
                 "sequences, Cayley graphs, Turing machines"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "human";
    app.add_option("--format", format, "output style")
        ->check(CLI::IsMember({"human", "lines"}))
        ->capture_default_str();

    std::function<int(Printer&)> action;

    // reduce
    auto*       reduce = app.add_subcommand("reduce", "free (and cyclic) reduction");
    std::string reduce_word;
    bool        reduce_cyclic = false;
    reduce->add_option("word", reduce_word, "word over a..z, uppercase for inverses")
        ->required();
    reduce->add_flag("--cyclic", reduce_cyclic, "also cyclically reduce");
    reduce->callback([&] {
      action = [&](Printer& p) {
        auto names = GeneratorNames::standard(26);
        auto w     = parse_word(reduce_word, names);
        p.field("reduced", to_string(free_reduce(w), names));
        if (reduce_cyclic) {
          auto cr = cyclic_reduce(w);
          p.field("core", to_string(cr.core, names));
          p.field("conjugator", to_string(cr.conjugator, names));
        }
        return ok;
      };
    });

    // dehn-solve
    auto*       dehn = app.add_subcommand("dehn-solve", "Dehn's algorithm");
    GroupSource dehn_src;
    std::string dehn_word;
    dehn_src.add_to(dehn);
    dehn->add_option("word", dehn_word)->required();
    dehn->callback([&] {
      action = [&](Printer& p) {
        auto pres = dehn_src.load();
        auto w    = parse_word(dehn_word, pres.names());
        auto sym  = symmetrize(pres);
        auto r    = dehn_solve(w, sym, satisfies_small_cancellation(pres, Ratio(1, 6)));
        auto const& names = pres.names();
        p.field("verdict", to_string(r.verdict));
        p.field("start", to_string(r.start, names));
        GroupWord cur = r.start;
        for (auto const& s : r.trace) {
          cur = replay_dehn_trace(cur, sym, {s});
          std::ostringstream line;
          line << "step " << s.relator << " @" << s.position << " +" << s.length
               << " => " << to_string(cur, names) << '\n';
          p.raw(line.str());
        }
        p.field("final", to_string(r.final_word, names));
        return r.verdict == DehnVerdict::Inconclusive ? undecided : ok;
      };
    });

    // small-cancel
    auto*       sc = app.add_subcommand("small-cancel", "piece ratio and C'(lambda)");
    GroupSource sc_src;
    std::string sc_lambda = "1/6";
    sc_src.add_to(sc);
    sc->add_option("--lambda", sc_lambda)->capture_default_str();
    sc->callback([&] {
      action = [&](Printer& p) {
        auto pres   = sc_src.load();
        auto lambda = parse_ratio(sc_lambda);
        auto sym    = symmetrize(pres);
        p.field("relators", pres.relators().size());
        p.field("symmetrized", sym.size());
        if (!sym.empty()) {
          p.field("max-piece-ratio", max_piece_ratio(sym).to_string());
        }
        p.field("lambda", lambda.to_string());
        p.field("small-cancellation",
                satisfies_small_cancellation(pres, lambda) ? "holds" : "fails");
        return ok;
      };
    });

    // rewrite
    auto*        rw = app.add_subcommand("rewrite", "apply the first applicable rule repeatedly");
    SystemSource rw_src;
    std::string  rw_word;
    std::size_t  rw_steps = 1000;
    rw_src.add_to(rw);
    rw->add_option("word", rw_word)->required();
    rw->add_option("--steps", rw_steps, "step budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rw->callback([&] {
      action = [&](Printer& p) {
        auto            sys = rw_src.load();
        DerivationTrace t;
        t.start = parse_word(rw_word, sys);
        t.end   = t.start;
        bool irreducible = false;
        while (t.steps.size() < rw_steps) {
          auto next = successors(t.end, sys);
          if (next.empty()) {
            irreducible = true;
            break;
          }
          t.steps.push_back({next.front().rule, next.front().pos});
          t.end = next.front().word;
        }
        irreducible = irreducible || successors(t.end, sys).empty();
        p.field("start", render(t.start, sys));
        p.raw(format_trace(t, sys));
        p.field("end", render(t.end, sys));
        p.field("irreducible", irreducible ? "yes" : "no");
        return irreducible ? ok : undecided;
      };
    });

    // equiv
    auto*        eq = app.add_subcommand("equiv", "bounded equivalence search");
    SystemSource eq_src;
    std::string  eq_from, eq_to;
    std::size_t  eq_budget = 10000;
    eq_src.add_to(eq);
    eq->add_option("--from", eq_from)->required();
    eq->add_option("--to", eq_to)->required();
    eq->add_option("--budget", eq_budget, "maximum expanded states")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eq->callback([&] {
      action = [&](Printer& p) {
        auto sys = eq_src.load();
        auto r   = search_equivalence(parse_word(eq_from, sys), parse_word(eq_to, sys), sys,
                                    eq_budget);
        p.field("status", to_string(r.status));
        print_stats(p, r.stats);
        if (r.trace) {
          p.field("length", r.trace->steps.size());
          p.field("start", render(r.trace->start, sys));
          p.raw(format_trace(*r.trace, sys));
        }
        return search_exit(r.status);
      };
    });

    // tree-equiv
    auto*       te = app.add_subcommand("tree-equiv", "bounded tree-rewriting search");
    std::string te_rules, te_from, te_to;
    std::size_t te_budget = 10000;
    te->add_option("--rules", te_rules, "tree rules file")->required();
    te->add_option("--from", te_from)->required();
    te->add_option("--to", te_to)->required();
    te->add_option("--budget", te_budget, "maximum expanded terms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    te->callback([&] {
      action = [&](Printer& p) {
        auto rules = parse_tree_rules(read_file(te_rules));
        auto r = search_tree_equivalence(parse_term(te_from), parse_term(te_to), rules,
                                         te_budget);
        p.field("status", to_string(r.status));
        print_stats(p, r.stats);
        if (r.trace) {
          p.field("length", r.trace->steps.size());
          p.field("start", to_string(r.trace->start));
          TreeTrace partial{r.trace->start, {}, r.trace->start};
          for (auto const& s : r.trace->steps) {
            partial.steps.push_back(s);
            std::ostringstream line;
            line << "step " << s.rule << ' ' << dir_name(s.direction) << " @"
                 << to_string(s.path) << " => " << to_string(replay(partial, rules))
                 << '\n';
            p.raw(line.str());
          }
        }
        return search_exit(r.status);
      };
    });

    // seq
    auto*       seq = app.add_subcommand("seq", "Thue sequences and power-freeness");
    std::string seq_kind;
    std::size_t seq_n     = 0;
    std::size_t seq_check = 0;
    seq->add_option("--kind", seq_kind)->required()->check(CLI::IsMember({"tm", "sf3"}));
    seq->add_option("--n", seq_n, "prefix length")->required();
    seq->add_option("--check", seq_check, "test for k-th powers")->check(CLI::Range(2, 64));
    seq->callback([&] {
      action = [&](Printer& p) {
        Word w = seq_kind == "tm" ? thue_morse_prefix(seq_n) : square_free_ternary_prefix(seq_n);
        p.field("word", to_digits(w));
        if (seq_check != 0) {
          auto r = is_power_free(w, seq_check);
          p.field("power-free", r.power_free ? "yes" : "no");
          if (r.witness) {
            p.field("witness-position", r.witness->position);
            p.field("witness-block", r.witness->block);
          }
        }
        return ok;
      };
    });

    // cayley
    auto*       cay = app.add_subcommand("cayley", "coset enumeration and Cayley graph");
    GroupSource cay_src;
    std::size_t cay_max = 1000;
    std::string cay_export = "lines";
    std::vector<std::string> cay_words;
    bool        cay_delta = false;
    cay_src.add_to(cay);
    cay->add_option("--max-cosets", cay_max, "live coset budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cay->add_option("--export", cay_export)
        ->check(CLI::IsMember({"lines", "dot", "none"}))
        ->capture_default_str();
    cay->add_option("--word", cay_words, "decide whether a word is trivial");
    cay->add_flag("--delta", cay_delta, "estimate the hyperbolicity constant");
    cay->callback([&] {
      action = [&](Printer& p) {
        auto pres  = cay_src.load();
        auto table = todd_coxeter(pres, cay_max);
        p.field("status", table.complete() ? "complete" : "budget-exceeded");
        p.field("cosets-defined", table.cosets_defined);
        if (!table.complete()) {
          return undecided;
        }
        p.field("order", table.size());
        auto g = to_cayley_graph(table);
        for (auto const& text : cay_words) {
          p.field("word " + text,
                  word_problem_finite(parse_word(text, pres.names()), g) ? "trivial"
                                                                          : "nontrivial");
        }
        if (cay_delta) {
          p.field("delta", estimate_delta(g));
        }
        if (cay_export == "lines") {
          p.raw(to_lines(g));
        } else if (cay_export == "dot") {
          p.raw(to_dot(g));
        }
        return ok;
      };
    });

    // tm-run
    auto*         tmr = app.add_subcommand("tm-run", "run a Turing machine");
    MachineSource tmr_src;
    std::string   tmr_input;
    std::size_t   tmr_steps = 1000;
    tmr_src.add_to(tmr);
    tmr->add_option("--input", tmr_input, "initial tape");
    tmr->add_option("--max-steps", tmr_steps)->capture_default_str();
    tmr->callback([&] {
      action = [&](Printer& p) {
        auto m = tmr_src.load();
        auto r = tm_run(m, parse_tape(tmr_input, m), tmr_steps);
        p.field("halted", r.halted ? "yes" : "no");
        p.field("steps", r.steps);
        p.field("config", to_string(r.final, m));
        return r.halted ? ok : undecided;
      };
    });

    // tm-encode
    auto*         tme = app.add_subcommand("tm-encode", "emit the simulating semi-Thue system");
    MachineSource tme_src;
    std::string   tme_input;
    bool          tme_has_input = false;
    tme_src.add_to(tme);
    tme->add_option("--input", tme_input, "also print the start word for this tape");
    tme->callback([&] {
      tme_has_input = tme->count("--input") > 0;
      action        = [&](Printer& p) {
        auto m   = tme_src.load();
        auto enc = encode(m);
        p.raw(to_string(enc.system));
        // Comment lines keep the output loadable as a system file.
        if (tme_has_input) {
          auto config = initial_configuration(parse_tape(tme_input, m));
          p.raw("# start " + render(enc.word_of_config(config), enc.system) + "\n");
        }
        p.raw("# halt " + render(enc.halt_word, enc.system) + "\n");
        return ok;
      };
    });

    // catalog
    auto*          cat = app.add_subcommand("catalog", "print a catalog presentation");
    std::string    cat_name;
    CatalogOptions cat_params;
    cat->add_option("name", cat_name, "entry name; omit to list entries");
    cat_params.add_to(cat);
    cat->callback([&] {
      action = [&](Printer& p) {
        if (cat_name.empty()) {
          for (auto const& n : catalog::names()) {
            p.raw(n + "\n");
          }
          for (auto const& n : machines::names()) {
            p.raw(n + " (machine)\n");
          }
          return ok;
        }
        if (std::ranges::find(machines::names(), cat_name) != machines::names().end()) {
          p.raw(to_string(machines::lookup(cat_name)));
          return ok;
        }
        std::visit([&](auto const& e) { p.raw(to_string(e)); }, cat_params.lookup(cat_name));
        return ok;
      };
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : failure;
    }

    Printer printer(out, format == "lines");
    try {
      return action(printer);
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::domain_error const& e) {
      err << "error: " << e.what() << '\n';
    }
    return failure;
  }

}  // namespace wordprob::cli
