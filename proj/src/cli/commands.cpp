#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "pdm/cli.hpp"
#include "pdm/diagram.hpp"
#include "pdm/engine.hpp"
#include "pdm/error.hpp"
#include "pdm/interface.hpp"
#include "pdm/oracle.hpp"
#include "pdm/seeds.hpp"
#include "pdm/stats.hpp"
#include "reference.hpp"
#include "table.hpp"

namespace pdm::cli {

  namespace {
    using nlohmann::json;

    struct Args {
      std::string                monoid = "jones";
      std::optional<std::size_t> n;
      std::optional<std::size_t> n_max;
      std::string                method   = "fibre";
      bool                       by_rank  = false;
      bool                       by_depth = false;
      std::size_t                threads  = 1;
      std::string                format   = "table";
      std::string                out;
      bool                       force = false;
      std::string                suite = "all";
      std::optional<std::size_t> rank;
      std::string                command_line;
    };

    // Degrees to report: a single n, or a range up to n_max.
    std::vector<std::size_t> degrees(Args const& a, std::size_t first) {
      if (a.n && a.n_max) {
        throw ValidationError("give --n or --n-max, not both");
      }
      if (a.n) {
        return {*a.n};
      }
      if (!a.n_max) {
        throw ValidationError("--n or --n-max is required");
      }
      std::vector<std::size_t> result;
      for (std::size_t n = first; n <= *a.n_max; ++n) {
        result.push_back(n);
      }
      return result;
    }

    void emit(Args const& a, std::string const& text, std::ostream& out,
              std::ostream& err) {
      if (a.out.empty()) {
        out << text;
        return;
      }
      std::ofstream file(a.out);
      if (!file) {
        throw ValidationError("cannot write " + a.out);
      }
      file << text;
      err << "wrote " << a.out << '\n';
    }

    std::string render(Args const& a, Table const& t, json const& j) {
      if (a.format == "json") {
        return j.dump(2) + "\n";
      }
      if (a.format == "csv") {
        return t.csv();
      }
      return t.text();
    }

    std::vector<std::string> strings(std::vector<Count> const& v) {
      std::vector<std::string> result;
      for (auto const& c : v) {
        result.push_back(to_string(c));
      }
      return result;
    }

    // count

    struct CountRow {
      CountReport          report;
      bool                 has_total = true;
      std::optional<Count> lower_bound;
      std::optional<Count> zero_variant;
      std::optional<Count> size;
    };

    EngineOptions engine_options(Args const& a) {
      EngineOptions o;
      o.threads = a.threads;
      if (a.force) {
        o.max_degree = max_scan_degree;
      }
      return o;
    }

    CountRow count_one(Monoid m, Method method, std::size_t n,
                       Args const& a) {
      auto const options = engine_options(a);
      OracleOptions const oracle{a.force};
      CountRow row;
      switch (m) {
        case Monoid::motzkin:
        case Monoid::jones:
          row.report = method == Method::fibre
                           ? count_idempotents(m, n, options)
                           : brute_count(m, n, oracle);
          row.size = monoid_size(m, n);
          break;
        case Monoid::kauffman:
          row.report = method == Method::fibre ? count_kauffman(n, options)
                                               : brute_count(m, n, oracle);
          row.zero_variant = row.report.total + 1;
          break;
        case Monoid::planar_partition: {
          if (method == Method::fibre) {
            row.report = count_idempotents(Monoid::jones, 2 * n, options);
          } else {
            row.report = brute_count(Monoid::jones, 2 * n, oracle);
          }
          row.report.monoid = m;
          row.report.n      = n;
          row.report.by_rank.clear();
          row.report.kauffman_total.reset();
          break;
        }
        case Monoid::pjones: {
          row.report.monoid  = m;
          row.report.n       = n;
          row.report.method  = Method::brute;
          row.lower_bound    = pj_lower_bound(n);
          if (a.force || n <= brute_limit(Monoid::pjones)) {
            row.report.total      = brute_pj_count(n, oracle);
            row.report.work_items = monoid_size(Monoid::motzkin, n);
          } else {
            row.has_total = false;
          }
          break;
        }
      }
      return row;
    }

    json count_json(CountRow const& row, Args const& a) {
      auto const& r = row.report;
      json j;
      j["schema"]  = 1;
      j["command"] = a.command_line;
      j["monoid"]  = std::string(name(r.monoid));
      j["n"]       = r.n;
      j["method"]  = std::string(name(r.method));
      j["total"]   = row.has_total ? json(to_string(r.total)) : json(nullptr);
      j["by_rank"] = strings(r.by_rank);
      j["work_items"]
          = row.has_total ? json(to_string(r.work_items)) : json(nullptr);
      if (a.by_depth) {
        std::vector<std::string> depth;
        for (std::size_t d = 0; 2 * d <= r.n; ++d) {
          depth.push_back(to_string(r.by_rank[r.n - 2 * d]));
        }
        j["by_depth"] = depth;
      }
      if (row.size) {
        j["size"]     = to_string(*row.size);
        j["fraction"] = fraction(r.total, *row.size);
      }
      if (row.zero_variant) {
        j["zero_variant"] = to_string(*row.zero_variant);
      }
      if (row.lower_bound) {
        j["lower_bound"] = to_string(*row.lower_bound);
      }
      return j;
    }

    int run_count(Args const& a, std::ostream& out, std::ostream& err) {
      auto const m      = parse_monoid(a.monoid);
      auto const method = parse_method(a.method);
      if (a.by_depth && m != Monoid::jones && m != Monoid::kauffman) {
        throw ValidationError("--by-depth needs jones or kauffman");
      }
      bool const parity = m == Monoid::jones || m == Monoid::kauffman;
      std::size_t const first
          = m == Monoid::kauffman || m == Monoid::pjones ? 1 : 0;

      std::vector<CountRow> rows;
      for (std::size_t n : degrees(a, first)) {
        rows.push_back(count_one(m, method, n, a));
      }

      Table t;
      t.corner = "n";
      std::size_t top = 0;
      for (auto const& row : rows) {
        t.columns.push_back(std::to_string(row.report.n));
        top = std::max(top, row.report.n);
      }
      auto add = [&](std::string label,
                     std::function<std::string(CountRow const&)> const& f) {
        std::vector<std::string> cells;
        for (auto const& row : rows) {
          cells.push_back(f(row));
        }
        t.add_row(std::move(label), std::move(cells));
      };
      if (a.by_rank && !rows.front().report.by_rank.empty()) {
        for (std::size_t r = 0; r <= top; ++r) {
          add("r=" + std::to_string(r), [&](CountRow const& row) {
            auto const n = row.report.n;
            if (r > n || (parity && (n - r) % 2 != 0)) {
              return std::string();
            }
            return to_string(row.report.by_rank[r]);
          });
        }
      }
      if (a.by_depth) {
        for (std::size_t d = 0; 2 * d <= top; ++d) {
          add("d=" + std::to_string(d), [&](CountRow const& row) {
            auto const n = row.report.n;
            return 2 * d > n ? std::string()
                             : to_string(row.report.by_rank[n - 2 * d]);
          });
        }
      }
      add("total", [](CountRow const& row) {
        return row.has_total ? to_string(row.report.total)
                             : std::string("n/a");
      });
      if (m == Monoid::pjones) {
        add("lower_bound",
            [](CountRow const& row) { return to_string(*row.lower_bound); });
      }
      if (m == Monoid::kauffman) {
        add("xi=0",
            [](CountRow const& row) { return to_string(*row.zero_variant); });
      }
      if (m == Monoid::motzkin || m == Monoid::jones) {
        add("fraction", [](CountRow const& row) {
          return fraction(row.report.total, *row.size);
        });
      }
      add("work_items", [](CountRow const& row) {
        return row.has_total ? to_string(row.report.work_items)
                             : std::string("n/a");
      });

      json j;
      if (a.n) {
        j = count_json(rows.front(), a);
      } else {
        j["schema"]  = 1;
        j["command"] = a.command_line;
        j["monoid"]  = std::string(name(m));
        j["method"]  = std::string(name(method));
        j["n_max"]   = *a.n_max;
        j["results"] = json::array();
        for (auto const& row : rows) {
          j["results"].push_back(count_json(row, a));
        }
      }
      std::string text = render(a, t, j);
      if (a.format == "table" && m == Monoid::pjones) {
        text = "pjones: total is the brute force count, lower_bound the fibre "
               "sum over partial Jones seeds\n"
               + text;
      }
      emit(a, text, out, err);
      return Exit::ok;
    }

    // verify

    struct Check {
      std::string              name;
      std::size_t              checked = 0;
      std::vector<std::string> failures{};

      void expect(bool ok, std::string const& what) {
        ++checked;
        if (!ok) {
          failures.push_back(what);
        }
      }
    };

    std::string at(std::size_t n) {
      return "n=" + std::to_string(n);
    }

    std::vector<Count> widen(std::vector<std::uint64_t> const& v) {
      return {v.begin(), v.end()};
    }

    std::vector<Check> suite_tables(std::size_t n_max, Args const& a) {
      auto const options = engine_options(a);
      std::vector<Check> result;
      Check motz{"Motzkin idempotents by rank"};
      for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 8); ++n) {
        motz.expect(count_idempotents(Monoid::motzkin, n, options).by_rank
                        == widen(reference::motzkin_by_rank[n]),
                    at(n));
      }
      result.push_back(motz);
      Check jones{"Jones idempotents by rank"};
      for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 9); ++n) {
        jones.expect(count_idempotents(Monoid::jones, n, options).by_rank
                         == widen(reference::jones_by_rank[n]),
                     at(n));
      }
      result.push_back(jones);
      if (n_max >= 10) {
        Check totals{"Jones idempotent totals"};
        for (std::size_t n = 10; n <= std::min<std::size_t>(n_max, 24);
             ++n) {
          totals.expect(count_idempotents(Monoid::jones, n, options).total
                            == reference::jones_total[n - 1],
                        at(n));
        }
        result.push_back(totals);
      }
      Check kauffman{"Kauffman idempotents"};
      for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 6); ++n) {
        kauffman.expect(count_kauffman(n, options).total
                            == reference::kauffman[n - 1],
                        at(n));
      }
      result.push_back(kauffman);
      Check pj{"partial Jones idempotents (brute force)"};
      auto const pj_max = std::min<std::size_t>(
          n_max, a.force ? reference::pj_total.size()
                         : brute_limit(Monoid::pjones));
      for (std::size_t n = 1; n <= pj_max; ++n) {
        pj.expect(brute_pj_count(n, {a.force}) == reference::pj_total[n - 1],
                  at(n));
      }
      result.push_back(pj);
      return result;
    }

    std::vector<Check> suite_recurrences(std::size_t n_max) {
      std::vector<Check> result;
      for (auto const& r : verify_identities(std::max<std::size_t>(n_max, 3))) {
        Check c{r.name, r.checked, r.failures};
        result.push_back(c);
      }
      return result;
    }

    std::vector<Check> suite_oracle(Monoid m, std::size_t n_max,
                                    Args const& a) {
      if (!a.force && n_max > brute_limit(m)) {
        throw ResourceLimitError("brute force " + std::string(name(m))
                                 + " is limited to n <= "
                                 + std::to_string(brute_limit(m))
                                 + " (use --force)");
      }
      OracleOptions const oracle{a.force};
      auto const options = engine_options(a);
      std::vector<Check> result;
      Check counts{"fibre and brute counts agree (" + std::string(name(m))
                   + ")"};
      for (std::size_t n = 0; n <= n_max; ++n) {
        auto const brute = brute_count(m, n, oracle);
        auto const fibre = m == Monoid::kauffman
                               ? count_kauffman(n, options)
                               : count_idempotents(m, n, options);
        counts.expect(brute.total == fibre.total
                          && brute.by_rank == fibre.by_rank,
                      at(n));
      }
      result.push_back(counts);
      if (m == Monoid::kauffman) {
        return result;
      }
      Check blocks{"hat fibres have the predicted sizes ("
                   + std::string(name(m)) + ")"};
      for (std::size_t n = 0; n <= n_max; ++n) {
        auto const part  = brute_fibre_partition(m, n, oracle);
        auto const seeds = seed_stream(m, n);
        blocks.expect(part.size() == seeds.size(), at(n) + " block count");
        for (auto const& s : seeds) {
          auto const it = part.find(s);
          blocks.expect(it != part.end()
                            && it->second.size() == profile(s).fibre_size,
                        at(n) + " seed " + s.str());
        }
      }
      result.push_back(blocks);
      return result;
    }

    std::vector<Check> suite_structure(std::size_t n_max, Args const& a) {
      for (Monoid m : {Monoid::motzkin, Monoid::jones}) {
        if (!a.force && n_max > brute_limit(m)) {
          throw ResourceLimitError("structure checks are limited to n <= "
                                   + std::to_string(brute_limit(m))
                                   + " (use --force)");
        }
      }
      std::vector<Check> result;
      for (Monoid m : {Monoid::motzkin, Monoid::jones}) {
        auto const label = " (" + std::string(name(m)) + ")";
        Check idem{"interface criterion matches squaring" + label};
        Check trip{"word and semi-word round trips" + label};
        Check classes{"rank class sizes are squares" + label};
        auto const alphabet
            = m == Monoid::jones ? Alphabet::no_flat : Alphabet::with_flat;
        for (std::size_t n = 0; n <= n_max; ++n) {
          std::vector<Count> by_rank(n + 1, 0);
          Count              elements = 0;
          for_each_element(m, n, [&](Diagram const& d) {
            ++elements;
            by_rank[rank(d)] += 1;
            auto const sq = multiply(d, d);
            idem.expect(is_idempotent(d) == (sq.diagram == d),
                        at(n) + " " + d.str());
            trip.expect(diagram_of(word_of(d)) == d
                            && diagram_of_pair(pair_of(d)) == d,
                        at(n) + " " + d.str());
          });
          classes.expect(elements == monoid_size(m, n), at(n) + " size");
          for (std::size_t k = 0; k <= n; ++k) {
            Count const side = semiwords(n, k, alphabet).size();
            classes.expect(by_rank[k] == side * side,
                           at(n) + " rank " + std::to_string(k));
          }
        }
        result.push_back(idem);
        result.push_back(trip);
        result.push_back(classes);
      }
      return result;
    }

    int run_verify(Args const& a, std::ostream& out, std::ostream& err) {
      static std::vector<std::string> const suites{
          "tables", "recurrences", "oracle", "structure"};
      std::vector<std::string> chosen;
      if (a.suite == "all") {
        chosen = suites;
      } else if (std::ranges::find(suites, a.suite) != suites.end()) {
        chosen = {a.suite};
      } else {
        throw ValidationError("unknown suite " + a.suite);
      }
      if (a.n) {
        throw ValidationError("verify takes --n-max");
      }
      std::vector<Check> checks;
      auto append = [&](std::vector<Check> more) {
        for (auto& c : more) {
          checks.push_back(std::move(c));
        }
      };
      for (auto const& s : chosen) {
        if (s == "tables") {
          append(suite_tables(a.n_max.value_or(9), a));
        } else if (s == "recurrences") {
          append(suite_recurrences(a.n_max.value_or(10)));
        } else if (s == "oracle") {
          if (a.suite == "all") {
            for (Monoid m : {Monoid::motzkin, Monoid::jones, Monoid::kauffman}) {
              append(suite_oracle(m, a.n_max.value_or(6), a));
            }
          } else {
            append(suite_oracle(parse_monoid(a.monoid), a.n_max.value_or(6), a));
          }
        } else {
          append(suite_structure(a.n_max.value_or(5), a));
        }
      }

      bool  all_pass = true;
      Table t;
      t.corner  = "check";
      t.columns = {"verdict", "checked", "first failure"};
      json j;
      j["schema"]  = 1;
      j["command"] = a.command_line;
      j["suite"]   = a.suite;
      j["checks"]  = json::array();
      for (auto const& c : checks) {
        bool const pass = c.failures.empty();
        all_pass        = all_pass && pass;
        t.add_row(c.name, {pass ? "PASS" : "FAIL", std::to_string(c.checked),
                           pass ? "" : c.failures.front()});
        j["checks"].push_back({{"name", c.name},
                               {"pass", pass},
                               {"checked", c.checked},
                               {"failures", c.failures}});
      }
      j["pass"] = all_pass;
      emit(a, render(a, t, j), out, err);
      return all_pass ? Exit::ok : Exit::failed;
    }

    // stats

    int run_stats(Args const& a, std::ostream& out, std::ostream& err) {
      if (parse_monoid(a.monoid) != Monoid::jones) {
        throw ValidationError("stats covers the Jones monoid");
      }
      if (a.n && !a.n_max) {
        auto const n = *a.n;
        auto const g = stats_grid(n);
        Table t;
        t.corner = "stat c\\p";
        for (std::size_t p = 0; p <= n; ++p) {
          t.columns.push_back(std::to_string(p));
        }
        json j;
        j["schema"]  = 1;
        j["command"] = a.command_line;
        j["monoid"]  = "jones";
        j["n"]       = n;
        for (auto const& [label, m] :
             {std::pair{"e", &g.e}, {"s1", &g.s1}, {"s2", &g.s2}}) {
          json rows = json::array();
          for (std::size_t c = 0; c < m->size(); ++c) {
            std::vector<std::string> cells;
            for (std::size_t p = 0; p <= n; ++p) {
              bool const blank = 2 * c + p > n || (n - p) % 2 != 0;
              cells.push_back(blank ? "" : to_string((*m)[c][p]));
            }
            t.add_row(std::string(label) + " " + std::to_string(c), cells);
            rows.push_back(strings((*m)[c]));
          }
          j[label] = rows;
        }
        emit(a, render(a, t, j), out, err);
        return Exit::ok;
      }
      if (a.n || !a.n_max) {
        throw ValidationError("stats takes --n for a grid or --n-max for a "
                              "summary");
      }
      auto const n_max = std::max<std::size_t>(*a.n_max, 2);
      auto const stars = d_star_report(n_max);
      auto const meanders = meandric(n_max);
      // Motzkin counts past degree 10 take minutes.
      auto const diagonal
          = motzkin_diagonal_report(std::min<std::size_t>(n_max, 10));

      Table t;
      t.corner = "n";
      for (auto const& s : stars) {
        t.columns.push_back(std::to_string(s.n));
      }
      std::vector<std::string> total, star, star_rank, frac, meander;
      json jstars = json::array();
      for (auto const& s : stars) {
        total.push_back(to_string(s.total));
        star.push_back(to_string(s.d_star));
        star_rank.push_back(std::to_string(s.rank));
        frac.push_back(fraction(s.d_star, s.total));
        meander.push_back(s.n >= 2 ? to_string(meanders[s.n - 2]) : "");
        jstars.push_back({{"n", s.n},
                          {"rank", s.rank},
                          {"d_star", to_string(s.d_star)},
                          {"total", to_string(s.total)},
                          {"fraction", frac.back()}});
      }
      t.add_row("e_n", total);
      t.add_row("d_star", star);
      t.add_row("d_star rank", star_rank);
      t.add_row("d_star/e_n", frac);
      t.add_row("meandric", meander);
      json jdiag = json::array();
      for (auto const& d : diagonal) {
        // The d-th difference first exists at n = 2d.
        std::vector<std::string> cells;
        for (auto const& s : stars) {
          std::size_t const i = s.n - 2 * d.d;
          cells.push_back(s.n >= 2 * d.d && i < d.differences.size()
                              ? to_string(d.differences[i])
                              : "");
        }
        t.add_row("motzkin diag " + std::to_string(d.d), cells);
        jdiag.push_back({{"d", d.d},
                         {"from_n", 2 * d.d},
                         {"differences", strings(d.differences)},
                         {"all_one", d.all_one()}});
      }
      json j;
      j["schema"]           = 1;
      j["command"]          = a.command_line;
      j["monoid"]           = "jones";
      j["n_max"]            = n_max;
      j["d_star"]           = jstars;
      j["meandric"]         = strings(meanders);
      j["motzkin_diagonal"] = jdiag;
      std::string text      = render(a, t, j);
      if (a.format == "table") {
        text += "motzkin diag rows are observed differences, not a proved "
                "law\n";
      }
      emit(a, text, out, err);
      return Exit::ok;
    }

    // eggbox

    struct PublishedCell {
      std::size_t row;
      std::size_t col;
      Diagram     element;
    };

    // The three rank 1 examples of degree 4 placed in the published 12x12
    // figure, whose rows are lower graphs and columns upper graphs.
    std::vector<PublishedCell> published_cells() {
      return {
          {2, 10, Diagram::from_edges(4, {{2, 3}, {-1, -2}, {1, -4}})},
          {6, 10, Diagram::from_edges(4, {{2, 3}, {-1, -2}, {1, -3}})},
          {11, 10, Diagram::from_edges(4, {{2, 3}, {-2, -4}, {1, -1}})},
      };
    }

    int run_eggbox(Args const& a, std::ostream& out, std::ostream& err) {
      auto const m = parse_monoid(a.monoid);
      if (!a.n || !a.rank) {
        throw ValidationError("eggbox needs --n and --rank");
      }
      auto const box = eggbox(m, *a.n, *a.rank, a.force);
      auto const engine
          = count_idempotents(m, *a.n, engine_options(a)).by_rank[*a.rank];
      bool const agrees = engine == box.set_count();

      std::ostringstream report;
      report << "eggbox " << name(m) << " n=" << *a.n << " rank " << *a.rank
             << ": " << box.rows.size() << "x" << box.cols.size() << ", "
             << box.set_count() << " idempotent cells; engine count "
             << to_string(engine) << (agrees ? " (agrees)" : " (DIFFERS)")
             << '\n';
      report << "rows are left semi-words, columns right semi-words, both in "
                "lexicographic order U < F < D\n";
      if (m == Monoid::motzkin && *a.n == 4 && *a.rank == 1) {
        report << "published figure uses rows = lower graphs, columns = upper "
                  "graphs in its own order; its cells map to:\n";
        for (auto const& cell : published_cells()) {
          auto const p = pair_of(cell.element);
          auto const r = std::ranges::find(box.rows, p.left) - box.rows.begin();
          auto const c = std::ranges::find(box.cols, p.right) - box.cols.begin();
          report << "  (" << cell.row << "," << cell.col << ") -> (" << r + 1
                 << "," << c + 1 << ") "
                 << (box.idempotent[r][c] ? "idempotent" : "not idempotent")
                 << '\n';
        }
      }
      if (a.out.empty()) {
        out << box.pbm();
        err << report.str();
      } else {
        std::ofstream file(a.out);
        if (!file) {
          throw ValidationError("cannot write " + a.out);
        }
        file << box.pbm();
        out << report.str() << "wrote " << a.out << '\n';
      }
      return agrees ? Exit::ok : Exit::failed;
    }

    void add_common(CLI::App* sub, Args& a) {
      sub->add_option("--monoid", a.monoid,
                      "motzkin, jones, kauffman, pjones or planar-partition")
          ->capture_default_str();
      sub->add_option("--n", a.n, "degree");
      sub->add_option("--n-max", a.n_max, "largest degree of a range");
      sub->add_option("--threads", a.threads, "worker threads")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
      sub->add_option("--format", a.format, "table, json or csv")
          ->capture_default_str()
          ->check(CLI::IsMember({"table", "json", "csv"}));
      sub->add_option("--out", a.out, "write the report to this file");
      sub->add_flag("--force", a.force, "ignore the resource guards");
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    Args a;
    for (auto const& s : args) {
      a.command_line += (a.command_line.empty() ? "" : " ") + s;
    }
    CLI::App app{"Idempotent counts for planar diagram monoids", "pdm"};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "count idempotents");
    add_common(count, a);
    count->add_option("--method", a.method, "fibre or brute")
        ->capture_default_str();
    count->add_flag("--by-rank", a.by_rank, "split by rank");
    count->add_flag("--by-depth", a.by_depth, "split by depth (n - r) / 2");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, a);
    verify->add_option("--suite", a.suite,
                       "tables, recurrences, oracle, structure or all")
        ->capture_default_str();

    auto* stats = app.add_subcommand("stats", "cycle and path statistics");
    add_common(stats, a);

    auto* box = app.add_subcommand("eggbox", "bitmap of one rank class");
    add_common(box, a);
    box->add_option("--rank", a.rank, "rank of the class");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return Exit::ok;
      }
      err << "error: " << e.what() << '\n';
      return Exit::usage;
    }

    try {
      if (count->parsed()) {
        return run_count(a, out, err);
      }
      if (verify->parsed()) {
        return run_verify(a, out, err);
      }
      if (stats->parsed()) {
        return run_stats(a, out, err);
      }
      return run_eggbox(a, out, err);
    } catch (ValidationError const& e) {
      err << "error: " << e.what() << '\n';
      return Exit::usage;
    } catch (ResourceLimitError const& e) {
      err << "resource limit: " << e.what() << '\n';
      return Exit::resource;
    }
  }

}  // namespace pdm::cli
