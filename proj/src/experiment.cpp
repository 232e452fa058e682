#include "bandmatch/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "bandmatch/io.hpp"

namespace bandmatch {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string item = trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

double parse_double_or_throw(const std::string& tok, int line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw Error("config line " + std::to_string(line) + ": bad number '" + tok + "'");
  return v;
}

long long parse_int_or_throw(const std::string& tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw Error("config line " + std::to_string(line) + ": bad integer '" + tok + "'");
  return v;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  ExperimentConfig cfg;
  cfg.solvers = {"greedy"};

  struct Pending {
    InstanceSpec spec;
    int count = 1;
    bool has_kind = false, has_n = false, has_m = false;
    int start_line = 0;
  };
  std::vector<Pending> pending;
  bool in_instance = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line == "[instance]") {
      Pending p;
      p.spec.dist = WeightDist::parse("uniform(1,1000000)");
      p.spec.seed = 1;
      p.start_line = line_no;
      pending.push_back(p);
      in_instance = true;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (!in_instance) {
      if (key == "eps") {
        for (const std::string& item : split_list(value))
          cfg.eps_grid.push_back(parse_double_or_throw(item, line_no));
      } else if (key == "solvers" || key == "solver") {
        cfg.solvers = split_list(value);
      } else if (key == "oracle_cap") {
        cfg.oracle_cap = static_cast<int>(parse_int_or_throw(value, line_no));
      } else if (key == "jobs") {
        cfg.jobs = static_cast<int>(parse_int_or_throw(value, line_no));
        if (cfg.jobs < 1) throw Error("config line " + std::to_string(line_no) + ": jobs must be >= 1");
      } else {
        throw Error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
      continue;
    }

    Pending& p = pending.back();
    if (key == "kind") {
      p.spec.kind = instance_kind_from(value);
      p.has_kind = true;
    } else if (key == "n") {
      p.spec.n = static_cast<int>(parse_int_or_throw(value, line_no));
      p.has_n = true;
    } else if (key == "m") {
      p.spec.m = static_cast<int>(parse_int_or_throw(value, line_no));
      p.has_m = true;
    } else if (key == "s") {
      p.spec.s = static_cast<int>(parse_int_or_throw(value, line_no));
    } else if (key == "dist") {
      p.spec.dist = WeightDist::parse(value);
    } else if (key == "seed") {
      p.spec.seed = static_cast<std::uint64_t>(parse_int_or_throw(value, line_no));
    } else if (key == "count") {
      p.count = static_cast<int>(parse_int_or_throw(value, line_no));
      if (p.count < 1) throw Error("config line " + std::to_string(line_no) + ": count must be >= 1");
    } else {
      throw Error("config line " + std::to_string(line_no) + ": unknown instance key '" + key + "'");
    }
  }

  if (cfg.eps_grid.empty()) throw Error("config sets no eps values");
  if (cfg.solvers.empty()) throw Error("config sets no solvers");
  if (pending.empty()) throw Error("config lists no [instance] blocks");
  for (const Pending& p : pending) {
    if (!p.has_kind || !p.has_n || !p.has_m)
      throw Error("instance block at line " + std::to_string(p.start_line) +
                  " needs at least kind, n and m");
    for (int i = 0; i < p.count; ++i) {
      InstanceSpec spec = p.spec;
      spec.seed = p.spec.seed + static_cast<std::uint64_t>(i);
      cfg.instances.push_back(spec);
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse(in);
}

const char* const kExperimentCsvHeader =
    "instance,n,m,s,eps,solver,cascade_weight,solver_alone_weight,greedy_weight,"
    "opt_weight,ratio,transform_us,partition_us,solve_us,status";

std::string to_csv_row(const ExperimentRecord& rec) {
  std::string out;
  out += csv_quote(rec.instance);
  out += "," + std::to_string(rec.n) + "," + std::to_string(rec.m) + "," + std::to_string(rec.s);
  out += "," + format_double(rec.eps);
  out += "," + csv_quote(rec.solver);
  out += "," + format_double(rec.cascade_weight);
  out += "," + format_double(rec.solver_alone_weight);
  out += "," + format_double(rec.greedy_weight);
  out += "," + format_double(rec.opt_weight);
  out += "," + format_double(rec.ratio);
  out += "," + std::to_string(rec.transform_us);
  out += "," + std::to_string(rec.partition_us);
  out += "," + std::to_string(rec.solve_us);
  out += "," + csv_quote(rec.status);
  return out;
}

namespace {

ExperimentRecord compute_row(const InstanceSpec& spec, double eps, const std::string& solver_name,
                             int oracle_cap, Execution exec) {
  ExperimentRecord rec;
  rec.instance = spec.id();
  rec.eps = eps;
  rec.solver = solver_name;
  try {
    const WeightedHypergraph h = generate_instance(spec);
    rec.n = h.n;
    rec.m = h.edge_count();
    rec.s = h.s;

    const Solver& solver = find_solver(solver_name);

    CascadeOptions warmup;
    warmup.execution = exec;
    reduce_and_solve(h, eps, solver, warmup);  // warm-up, untimed

    PhaseTimes times;
    CascadeOptions timed;
    timed.execution = exec;
    timed.times = &times;
    const CascadeResult res = reduce_and_solve(h, eps, solver, timed);
    rec.cascade_weight = matching_weight(h, res.best);
    rec.transform_us = times.transform_us;
    rec.partition_us = times.partition_us;
    rec.solve_us = times.solve_us;

    try {
      Matching alone = solver.solve(h, h.max_weight());
      rec.solver_alone_weight = matching_weight(h, alone);
    } catch (const Error&) {
      rec.solver_alone_weight = -1.0;  // black box refused the full instance
    }
    rec.greedy_weight = matching_weight(h, greedy_matching(h));

    if (rec.m <= oracle_cap) {
      rec.opt_weight = matching_weight(h, exact_matching_bruteforce(h, oracle_cap));
      rec.ratio = rec.opt_weight > 0.0 ? rec.cascade_weight / rec.opt_weight : 1.0;
    }
  } catch (const std::exception& ex) {
    rec.status = ex.what();
  }
  return rec;
}

}  // namespace

std::string run_experiment(const ExperimentConfig& config) {
  struct RowSpec {
    const InstanceSpec* spec;
    double eps;
    const std::string* solver;
  };
  std::vector<RowSpec> rows;
  for (const InstanceSpec& spec : config.instances)
    for (double eps : config.eps_grid)
      for (const std::string& solver : config.solvers) rows.push_back({&spec, eps, &solver});

  std::vector<std::string> lines(rows.size());
  const Execution exec = config.jobs > 1 ? Execution::serial : Execution::parallel;
  const long long total = static_cast<long long>(rows.size());
  if (config.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
    for (long long i = 0; i < total; ++i)
      lines[i] = to_csv_row(
          compute_row(*rows[i].spec, rows[i].eps, *rows[i].solver, config.oracle_cap, exec));
  } else {
    for (long long i = 0; i < total; ++i)
      lines[i] = to_csv_row(
          compute_row(*rows[i].spec, rows[i].eps, *rows[i].solver, config.oracle_cap, exec));
  }

  std::string csv = std::string(kExperimentCsvHeader) + "\n";
  for (const std::string& line : lines) csv += line + "\n";
  return csv;
}

namespace {

std::int64_t median_of(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  if (v.empty()) return 0;
  if (v.size() % 2) return v[h];
  return (v[h - 1] + v[h]) / 2;
}

}  // namespace

std::vector<ScalingRow> run_scaling_bench(const ScalingOptions& options) {
  if (options.runs < 1) throw Error("bench needs at least one run");
  const Solver& solver = find_solver(options.solver);

  std::vector<ScalingRow> rows;
  std::int64_t previous = 0;
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    InstanceSpec spec;
    spec.kind = InstanceKind::graph;
    spec.m = options.sizes[i];
    spec.n = std::max(spec.m / std::max(options.avg_degree, 1), 64);
    spec.dist = WeightDist::parse("uniform(1,1000000)");
    spec.seed = options.seed + i;
    const WeightedHypergraph h = generate_instance(spec);

    ScalingRow row;
    row.m = spec.m;
    row.n = spec.n;

    auto lane = [&](Execution exec) {
      CascadeOptions warmup;
      warmup.execution = exec;
      reduce_and_solve(h, options.eps, solver, warmup);  // warm-up, untimed
      std::vector<std::int64_t> samples;
      for (int r = 0; r < options.runs; ++r) {
        PhaseTimes times;
        CascadeOptions timed;
        timed.execution = exec;
        timed.times = &times;
        const CascadeResult res = reduce_and_solve(h, options.eps, solver, timed);
        samples.push_back(times.solve_us);
        row.weight = matching_weight(h, res.best);
      }
      return median_of(std::move(samples));
    };

    row.serial_solve_us = lane(Execution::serial);
    row.parallel_solve_us = lane(Execution::parallel);
    row.factor_vs_previous =
        previous > 0 ? static_cast<double>(row.parallel_solve_us) / static_cast<double>(previous) : 0.0;
    previous = row.parallel_solve_us;
    rows.push_back(row);
  }
  return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::string csv = "m,n,serial_solve_us,parallel_solve_us,weight,factor_vs_previous\n";
  for (const ScalingRow& r : rows) {
    csv += std::to_string(r.m) + "," + std::to_string(r.n) + "," +
           std::to_string(r.serial_solve_us) + "," + std::to_string(r.parallel_solve_us) + "," +
           format_double(r.weight) + "," + format_double(r.factor_vs_previous) + "\n";
  }
  return csv;
}

}  // namespace bandmatch
