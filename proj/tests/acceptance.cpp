// One PASS/FAIL line per acceptance criterion. Set PDM_ACCEPT_LONG=1 to add
// Jones n = 17..20 to criterion 3 and PDM_ACCEPT_STRETCH=1 for n = 24 (both
// use every hardware thread).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "paper_tables.hpp"
#include "pdm/cli.hpp"
#include "pdm/diagram.hpp"
#include "pdm/engine.hpp"
#include "pdm/interface.hpp"
#include "pdm/oracle.hpp"
#include "pdm/seeds.hpp"
#include "pdm/stats.hpp"

using namespace pdm;
using nlohmann::json;

namespace {
  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        detail = what;
      }
      pass = pass && ok;
    }
  };

  json cli_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream out, err;
    if (cli::run(args, out, err) != 0) {
      throw std::runtime_error("command failed: " + err.str());
    }
    return json::parse(out.str());
  }

  std::string str(std::uint64_t v) {
    return std::to_string(v);
  }

  bool env(char const* name) {
    auto const* v = std::getenv(name);
    return v != nullptr && std::string(v) == "1";
  }

  std::size_t all_threads() {
    return std::max(1u, std::thread::hardware_concurrency());
  }

  Outcome motzkin_table() {
    Outcome    o;
    auto const j = cli_json(
        {"count", "--monoid", "motzkin", "--n-max", "8", "--by-rank"});
    for (auto const& row : j["results"]) {
      auto const n = row["n"].get<std::size_t>();
      o.require(row["total"] == str(tables::motzkin_total[n]),
                "total n=" + std::to_string(n));
      for (std::size_t r = 0; r <= n; ++r) {
        o.require(row["by_rank"][r] == str(tables::motzkin_by_rank[n][r]),
                  "n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
    o.require(j["results"].size() == 9, "row count");
    return o;
  }

  Outcome jones_table() {
    Outcome    o;
    auto const j = cli_json(
        {"count", "--monoid", "jones", "--n-max", "9", "--by-rank"});
    for (auto const& row : j["results"]) {
      auto const n = row["n"].get<std::size_t>();
      o.require(row["total"] == str(tables::jones_total[n]),
                "total n=" + std::to_string(n));
      for (std::size_t r = 0; r <= n; ++r) {
        o.require(row["by_rank"][r] == str(tables::jones_by_rank[n][r]),
                  "n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
    return o;
  }

  Outcome jones_totals() {
    Outcome o;
    for (std::size_t n = 10; n <= 16; ++n) {
      o.require(count_idempotents(Monoid::jones, n).total
                    == tables::jones_long[n - 1],
                "n=" + std::to_string(n));
    }
    EngineOptions wide;
    wide.threads = all_threads();
    if (env("PDM_ACCEPT_LONG")) {
      for (std::size_t n = 17; n <= 20; ++n) {
        o.require(count_idempotents(Monoid::jones, n, wide).total
                      == tables::jones_long[n - 1],
                  "n=" + std::to_string(n));
      }
      o.detail += o.pass ? "n = 10..20" : "";
    } else {
      o.detail += o.pass ? "n = 10..16 (n = 17..20 with PDM_ACCEPT_LONG=1)"
                         : "";
    }
    if (env("PDM_ACCEPT_STRETCH")) {
      bool const ok = count_idempotents(Monoid::jones, 24, wide).total
                      == tables::jones_long[23];
      std::cout << "     stretch n = 24: " << (ok ? "matches" : "DIFFERS")
                << '\n';
    }
    return o;
  }

  Outcome kauffman() {
    Outcome o;
    for (std::size_t n = 1; n <= 6; ++n) {
      o.require(count_kauffman(n).total == tables::kauffman[n - 1],
                "n=" + std::to_string(n));
      o.require(count_kauffman_zero(n) == tables::kauffman[n - 1] + 1,
                "zero variant n=" + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      o.require(brute_count(Monoid::kauffman, n).total
                    == count_kauffman(n).total,
                "oracle n=" + std::to_string(n));
    }
    return o;
  }

  Outcome oracle_equivalence() {
    Outcome o;
    for (std::size_t n = 0; n <= 8; ++n) {
      o.require(brute_count(Monoid::motzkin, n).total
                    == count_idempotents(Monoid::motzkin, n).total,
                "motzkin n=" + std::to_string(n));
    }
    for (std::size_t n = 0; n <= 12; ++n) {
      o.require(brute_count(Monoid::jones, n).total
                    == count_idempotents(Monoid::jones, n).total,
                "jones n=" + std::to_string(n));
    }
    auto blocks = [&](Monoid m, std::size_t n_max) {
      for (std::size_t n = 0; n <= n_max; ++n) {
        auto const part  = brute_fibre_partition(m, n);
        auto const seeds = seed_stream(m, n);
        o.require(part.size() == seeds.size(),
                  std::string(name(m)) + " blocks n=" + std::to_string(n));
        if (m == Monoid::motzkin && n == 7) {
          o.require(part.size() == tables::motzkin_7_fibres, "25171 fibres");
        }
        for (auto const& s : seeds) {
          auto const it = part.find(s);
          o.require(it != part.end()
                        && it->second.size() == profile(s).fibre_size,
                    "block of " + s.str());
        }
      }
    };
    blocks(Monoid::motzkin, 7);
    blocks(Monoid::jones, 10);
    return o;
  }

  Outcome partial_jones() {
    Outcome o;
    for (std::size_t n = 1; n <= 6; ++n) {
      o.require(brute_pj_count(n) == tables::pj_total[n - 1],
                "truth n=" + std::to_string(n));
    }
    std::string computed;
    bool        bounds = true;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const b = pj_lower_bound(n);
      computed += (n == 1 ? "" : ", ") + to_string(b);
      bounds = bounds && b == tables::pj_bound[n - 1];
    }
    o.require(bounds, "fibre bounds " + computed
                          + " against published 2, 7, 21, 98;"
                            " truths for n <= 6 pass");
    return o;
  }

  Outcome identities() {
    Outcome o;
    for (auto const& r : verify_identities(12)) {
      o.require(r.checked > 0 && r.pass(),
                r.name + (r.failures.empty() ? "" : ": " + r.failures[0]));
    }
    if (o.pass) {
      o.detail = "k-th differences taken at n >= 4k-1 so every term has "
                 "n >= 3k-1; taken at n = 3k-1 itself they fail (k=2, n=5)";
    }
    return o;
  }

  Outcome structure() {
    Outcome o;
    for (std::size_t n = 0; n <= 8; ++n) {
      for (bool jones : {false, true}) {
        auto const m = jones ? Monoid::jones : Monoid::motzkin;
        std::vector<std::uint64_t> by_rank(n + 1, 0);
        std::uint64_t              size = 0;
        bool const square_check = jones ? n <= 8 : n <= 5;
        for_each_element(m, n, [&](Diagram const& d) {
          ++size;
          ++by_rank[rank(d)];
          if (square_check) {
            o.require(is_idempotent(d) == (multiply(d, d).diagram == d),
                      "idempotency of " + d.str());
          }
          if (n <= 5) {
            o.require(diagram_of(word_of(d)) == d
                          && diagram_of_pair(pair_of(d)) == d,
                      "round trip of " + d.str());
          }
        });
        o.require(size == (jones ? oracle::catalan(n)
                                 : oracle::motzkin(2 * n)),
                  "size n=" + std::to_string(n));
        for (std::size_t k = 0; k <= n; ++k) {
          auto const side = oracle::paths(n, k, !jones);
          o.require(by_rank[k] == side * side,
                    "class size n=" + std::to_string(n));
        }
      }
    }
    return o;
  }

  Outcome work_items() {
    Outcome    o;
    auto const fibre = count_idempotents(Monoid::jones, 12);
    auto const brute = brute_count(Monoid::jones, 12);
    auto const c6    = oracle::catalan(6);
    o.require(fibre.work_items == c6 * c6, "jones 12 fibre work items");
    o.require(brute.work_items == oracle::catalan(12),
              "jones 12 brute work items");
    for (std::size_t n = 0; n <= 8; ++n) {
      o.require(count_idempotents(Monoid::motzkin, n).work_items
                    == seed_stream(Monoid::motzkin, n).size(),
                "motzkin fibre work items");
      o.require(brute_count(Monoid::motzkin, n).work_items
                    == oracle::motzkin(2 * n),
                "motzkin brute work items");
    }
    if (o.pass) {
      o.detail = to_string(fibre.work_items) + "/"
                 + to_string(brute.work_items) + " at jones 12";
    }
    return o;
  }

  Outcome determinism() {
    Outcome o;
    for (auto [m, n] : {std::pair{Monoid::jones, std::size_t{12}},
                        std::pair{Monoid::motzkin, std::size_t{8}}}) {
      auto const base = partitioned_count(m, n, 1);
      for (std::size_t k : {2, 4, 8}) {
        auto const r = partitioned_count(m, n, k);
        o.require(r.total == base.total && r.by_rank == base.by_rank
                      && r.kauffman_total == base.kauffman_total
                      && r.work_items == base.work_items,
                  std::string(name(m)) + " with " + std::to_string(k)
                      + " workers");
      }
    }
    return o;
  }

  Outcome eggbox() {
    Outcome o;
    auto run = [](std::vector<std::string> const& args, std::string& out,
                  std::string& err) {
      std::ostringstream os, es;
      int const          code = cli::run(args, os, es);
      out                     = os.str();
      err                     = es.str();
      return code;
    };
    std::string out, err;
    o.require(run({"eggbox", "--monoid", "motzkin", "--n", "4", "--rank",
                   "1"},
                  out, err)
                  == 0,
              "motzkin eggbox");
    auto const m41 = cli::eggbox(Monoid::motzkin, 4, 1);
    o.require(out == m41.pbm() && out.starts_with("P1\n12 12\n")
                  && m41.set_count() == 48,
              "motzkin 4 rank 1 bitmap");
    // The report maps the published cells to this ordering.
    o.require(err.find("(2,10) -> (2,7) not idempotent") != std::string::npos
                  && err.find("(6,10) -> (2,6) idempotent")
                         != std::string::npos
                  && err.find("(11,10) -> (2,1) idempotent")
                         != std::string::npos,
              "published cell mapping");
    std::string jout;
    o.require(run({"eggbox", "--monoid", "jones", "--n", "4", "--rank", "2"},
                  jout, err)
                  == 0,
              "jones eggbox");
    o.require(jout.starts_with("P1\n3 3\n")
                  && cli::eggbox(Monoid::jones, 4, 2).set_count() == 7,
              "jones 4 rank 2 bitmap");
    if (o.pass) {
      o.detail = "ordering differs from the figure; mapping printed";
    }
    return o;
  }
}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const
      criteria{
          {"Motzkin table by rank, n = 0..8", motzkin_table},
          {"Jones table by rank, n = 1..9", jones_table},
          {"Jones totals", jones_totals},
          {"Kauffman counts and oracle", kauffman},
          {"fibre and brute force agree", oracle_equivalence},
          {"partial Jones counts and bounds", partial_jones},
          {"cycle and path identities", identities},
          {"structural soundness", structure},
          {"work item ratio", work_items},
          {"parallel determinism", determinism},
          {"eggbox bitmaps", eggbox},
      };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> const took
        = std::chrono::steady_clock::now() - start;
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ". "
              << criteria[i].first;
    if (!o.detail.empty()) {
      std::cout << " [" << o.detail << "]";
    }
    std::cout << " (" << std::fixed;
    std::cout.precision(1);
    std::cout << took.count() << "s)\n";
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
