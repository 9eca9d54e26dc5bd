// eqdom: recognizers, exact oracles, tree family and grid guarding from the command line.
//
// Every processed input yields one JSON object on stdout; diagnostics go to
// stderr. Exit status: 0 when every input produced a verdict, 2 on an input
// error, 1 on an internal failure.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eqdom/eqdom.hpp"

using namespace eqdom;

namespace {

struct outcome {
  std::string out;
  std::string err;
  int status = 0;
};

bool timing = false;

class stopwatch {
public:
  stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string emit(const verdict_report& r) { return json(r).dump() + "\n"; }

verdict_report recognize_file(const std::string& path, const std::string& klass) {
  stopwatch sw;
  auto gf = parse_graph(slurp(path));
  verdict v = klass == "B" ? recognize_b_class(gf.g) : recognize_cgb_poly(gf.g);
  auto r = report_of("recognize", klass, v);
  r.labels = gf.labels;
  r.details = {{"input", path}, {"n", gf.g.order()}, {"m", gf.g.size()}};
  if (timing) r.stats.elapsed_ms = sw.ms();
  return r;
}

verdict_report oracle_file(const std::string& path, std::size_t cap) {
  stopwatch sw;
  auto gf = parse_graph(slurp(path));
  const oracle_options opt{cap};
  const auto g = gamma(gf.g, opt), b = beta(gf.g, opt), a = alpha(gf.g, opt);
  if (a.value + b.value != gf.g.order()) throw std::logic_error("alpha + beta != n");
  verdict_report r;
  r.command = "oracle";
  r.klass = "Cgb";
  r.member = g.value == b.value;
  if (r.member) r.cert = witness_gamma_set{g.witness};
  r.stats.oracle_nodes = g.explored + b.explored + a.explored;
  r.labels = gf.labels;
  auto entry = [](const oracle_result& x) { return json{{"value", x.value}, {"witness", x.witness}}; };
  r.details = {{"input", path},   {"n", gf.g.order()},   {"m", gf.g.size()}, {"gamma", entry(g)},
               {"beta", entry(b)}, {"alpha", entry(a)}, {"gallai", true}};
  if (timing) r.stats.elapsed_ms = sw.ms();
  return r;
}

json script_json(const build_script& s) {
  json ops = json::array();
  for (const auto& op : s.ops) ops.push_back({{"op", op_name(op.kind)}, {"attacher", op.attacher}});
  return ops;
}

verdict_report tree_gen(std::size_t steps, std::uint64_t seed) {
  stopwatch sw;
  auto [t, script] = generate_tmax(steps, seed);
  const auto dp = tree_gamma(t);
  verdict_report r;
  r.command = "tree gen";
  r.klass = "Tmax";
  r.member = dp.value == t.side_a().size();
  r.cert = witness_gamma_set{r.member ? t.side_a() : dp.witness};
  if (!r.member) r.cert.reset();
  r.details = {{"steps", steps},     {"seed", seed},          {"n", t.order()},
               {"a", t.side_a()},    {"b", t.side_b()},       {"gamma", dp.value},
               {"script", script_json(script)}, {"script_text", format_script(script)},
               {"graph", format_graph(t.tree())}};
  if (timing) r.stats.elapsed_ms = sw.ms();
  return r;
}

verdict_report tree_file(const std::string& path, bool deconstruct_it) {
  stopwatch sw;
  auto gf = parse_graph(slurp(path));
  const rooted_tree_view t(gf.g);
  const auto dp = tree_gamma(t);
  const auto cond = check_tree_conditions(t);
  verdict_report r;
  r.command = deconstruct_it ? "tree deconstruct" : "tree check";
  r.klass = "Tmax";
  r.labels = gf.labels;
  r.stats.pair_checks = cond.pair_checks;
  r.details = {{"input", path}, {"n", t.order()}, {"a", t.side_a()}, {"b", t.side_b()}, {"gamma", dp.value}};
  if (deconstruct_it) {
    auto d = deconstruct(t);
    r.member = d.has_value();
    if (d) {
      r.cert = witness_gamma_set{t.side_a()};
      r.details["script"] = script_json(d->script);
      r.details["script_text"] = format_script(d->script);
      r.details["original_ids"] = d->original_ids;
    } else if (!cond.member) {
      r.cert = cond.cert;
    }
  } else {
    r.member = cond.member;
    r.cert = cond.cert;
  }
  if (timing) r.stats.elapsed_ms = sw.ms();
  return r;
}

// Validation errors name segments by index; report their source lines.
error with_lines(const error& e, const grid_file& gf) {
  if (e.code() == errc::parse_error || e.items().empty()) return e;
  std::vector<std::size_t> lines;
  std::string where;
  for (auto i : e.items()) {
    if (i >= gf.lines.size()) continue;
    lines.push_back(gf.lines[i]);
    where += (where.empty() ? "" : ", ") + std::to_string(gf.lines[i]);
  }
  return error(e.code(), std::string(e.what()).substr(to_string(e.code()).size() + 2) + " (line " + where + ")", lines);
}

verdict_report grid_path(const std::string& path, bool exact, std::size_t cap) {
  stopwatch sw;
  auto gf = parse_grid(slurp(path));
  grid gr;
  try {
    gr = validate_grid(gf.segments);
  } catch (const error& e) {
    throw with_lines(e, gf);
  }
  const auto gg = intersection_graph(gr);
  const auto v = is_extremal(gg);
  auto r = report_of("grid", "extremal-grid", v);
  r.details = {{"input", path},
               {"vertical", gr.vertical_ids.size()},
               {"horizontal", gr.horizontal_ids.size()},
               {"m", gg.g.size()},
               {"a_is_vertical", gg.a_is_vertical},
               {"a", gg.side_a},
               {"scale", gf.scale},
               {"lines", gf.lines},
               {"sweep",
                {{"queries", gg.stats.queries},
                 {"reported", gg.stats.reported},
                 {"scanned", gg.stats.scanned},
                 {"log_work", gg.stats.log_work}}}};
  if (exact) {
    const auto p = gamma(gg.g, oracle_options{cap});
    r.stats.oracle_nodes = p.explored;
    r.details["patrolling"] = {{"value", p.value}, {"witness", p.witness}};
  }
  if (timing) r.stats.elapsed_ms = sw.ms();
  return r;
}

template <class F>
outcome guarded(const std::string& label, F&& f) {
  outcome o;
  try {
    o.out = emit(f());
  } catch (const error& e) {
    o.err = label + ": " + e.what() + "\n";
    o.status = 2;
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    o.err = label + ": internal error: " + e.what() + "\n";
    o.status = 1;
  }
  return o;
}

// Runs f over the inputs on up to `jobs` threads; output keeps input order.
template <class F>
int batch(const std::vector<std::string>& inputs, std::size_t jobs, F f) {
  std::vector<outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < inputs.size();)
      results[i] = guarded(inputs[i], [&] { return f(inputs[i]); });
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  int status = 0;
  for (const auto& r : results) {
    std::cout << r.out;
    std::cerr << r.err;
    status = std::max(status, r.status);
  }
  return status;
}

int bench(const std::string& family, const std::vector<std::size_t>& sizes) {
  if (family != "worstcase") {
    std::cerr << "bench: unknown family '" << family << "'\n";
    return 2;
  }
  int status = 0;
  std::ostringstream table;
  table << "      n      p   pair_checks   elapsed_ms  member\n";
  for (auto n : sizes) {
    auto o = guarded("bench n=" + std::to_string(n), [&] {
      const auto g = gen_worstcase(n);
      stopwatch sw;
      std::size_t positive = 0;
      const auto v = recognize_b_class(g, {pair_multiplicity_map::default_dense_limit, &positive});
      auto r = report_of("bench", "B", v);
      r.stats.elapsed_ms = sw.ms();
      r.details = {{"family", family}, {"n", n}, {"p", worstcase_side(n)}, {"m", g.size()}, {"positive_pairs", positive}};
      char row[128];
      std::snprintf(row, sizeof row, "%7zu %6zu %13llu %12.3f  %s\n", n, worstcase_side(n),
                    static_cast<unsigned long long>(v.pair_checks), r.stats.elapsed_ms, v.member ? "true" : "false");
      table << row;
      return r;
    });
    std::cout << o.out;
    std::cerr << o.err;
    status = std::max(status, o.status);
  }
  std::cerr << table.str();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal domination and covering numbers: recognizers, oracles, trees and grids"};
  app.require_subcommand(1);
  std::size_t jobs = 1;
  std::size_t cap = default_oracle_cap;
  app.add_flag("--timing", timing, "Record elapsed_ms (otherwise 0, keeping output reproducible)");

  std::vector<std::string> inputs;
  std::string klass;
  auto* rec = app.add_subcommand("recognize", "Class membership for edge-list graphs");
  rec->add_option("--class", klass, "B or Cgb")->required()->check(CLI::IsMember({"B", "Cgb"}));
  rec->add_option("--jobs", jobs, "Files processed concurrently")->check(CLI::PositiveNumber);
  rec->add_option("files", inputs, "Graph files ('-' for stdin)")->required();

  auto* orc = app.add_subcommand("oracle", "Exact gamma, beta and alpha");
  orc->add_option("--cap", cap, "Largest order accepted")->check(CLI::Range(std::size_t{1}, max_oracle_cap));
  orc->add_option("--jobs", jobs, "Files processed concurrently")->check(CLI::PositiveNumber);
  orc->add_option("files", inputs, "Graph files ('-' for stdin)")->required();

  auto* tree = app.add_subcommand("tree", "Tree family");
  tree->require_subcommand(1);
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  auto* gen = tree->add_subcommand("gen", "Grow a random member tree from K2");
  gen->add_option("--steps", steps, "Number of operations")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  auto* check = tree->add_subcommand("check", "Check the tree conditions");
  auto* dec = tree->add_subcommand("deconstruct", "Recover a build script");
  for (auto* sub : {check, dec}) {
    sub->add_option("--jobs", jobs, "Files processed concurrently")->check(CLI::PositiveNumber);
    sub->add_option("files", inputs, "Tree files ('-' for stdin)")->required();
  }

  bool exact = false;
  auto* grd = app.add_subcommand("grid", "Extremal guard cover for segment grids");
  grd->add_flag("--exact", exact, "Also compute a minimum patrolling set with the exact oracle");
  grd->add_option("--cap", cap, "Largest grid accepted by --exact")->check(CLI::Range(std::size_t{1}, max_oracle_cap));
  grd->add_option("--jobs", jobs, "Files processed concurrently")->check(CLI::PositiveNumber);
  grd->add_option("files", inputs, "Grid files ('-' for stdin)")->required();

  std::string family = "worstcase";
  std::vector<std::size_t> sizes;
  auto* bch = app.add_subcommand("bench", "Pair-check counts on the worst-case family");
  bch->add_option("--family", family, "Instance family")->check(CLI::IsMember({"worstcase"}));
  bch->add_option("--sizes", sizes, "Orders, comma separated")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (rec->parsed()) return batch(inputs, jobs, [&](const std::string& p) { return recognize_file(p, klass); });
  if (orc->parsed()) return batch(inputs, jobs, [&](const std::string& p) { return oracle_file(p, cap); });
  if (gen->parsed()) {
    auto o = guarded("tree gen", [&] { return tree_gen(steps, seed); });
    std::cout << o.out;
    std::cerr << o.err;
    return o.status;
  }
  if (check->parsed()) return batch(inputs, jobs, [](const std::string& p) { return tree_file(p, false); });
  if (dec->parsed()) return batch(inputs, jobs, [](const std::string& p) { return tree_file(p, true); });
  if (grd->parsed()) return batch(inputs, jobs, [&](const std::string& p) { return grid_path(p, exact, cap); });
  if (bch->parsed()) return bench(family, sizes);
  return 2;
}
