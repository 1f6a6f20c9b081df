#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowkit/chow.hpp"
#include "chowkit/errors.hpp"
#include "chowkit/hurwitz.hpp"
#include "chowkit/multiproj.hpp"
#include "chowkit/poly_text.hpp"
#include "chowkit/polydet.hpp"
#include "chowkit/polymatroid.hpp"
#include "chowkit/problem.hpp"
#include "chowkit/resultant.hpp"

namespace ck::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::uint64_t seed = 0;
  int retries = 3;
  bool seed_given = false, retries_given = false;
  bool json = false;
  bool bounds_only = false;
};

struct Meta {
  std::vector<int> degrees;
  std::size_t bitsize = 0;
  std::string algorithm;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

RandomGrid grid_for(const Options& o, const ProblemFile& p) {
  RandomGrid g;
  g.seed = o.seed_given ? o.seed : p.seed.value_or(0);
  g.retries = o.retries_given ? o.retries : p.retries.value_or(3);
  return g;
}

std::string join(const std::vector<mpz_class>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

void print_chow_bounds(std::ostream& out, const ChowBounds& b) {
  out << "per_block " << b.per_block.get_str() << "\n";
  out << "macaulay_dim " << b.macaulay_dim.get_str() << "\n";
  out << "bezout " << join(b.bezout) << "\n";
}

void print_multi_bounds(std::ostream& out, const MultiBounds& b) {
  out << "total_degree " << b.total_degree.get_str() << "\n";
  out << "variables " << b.variables << "\n";
  out << "bezout " << join(b.bezout) << "\n";
}

int projective_r(const ProblemFile& p, const ProjectiveVariety& V, const RandomGrid& g) {
  if (p.dim) return *p.dim;
  int r = projective_dimension(V, g);
  if (r < 0) throw PreconditionError("the variety is empty");
  return r;
}

DimTable table_of(const ProblemFile& p, const MultiprojVariety& V, const RandomGrid& g, std::string& how) {
  if (p.dims) {
    how = "given-dims";
    return *p.dims;
  }
  how = "monte-carlo-dims";
  return dim_table(V, g);
}

SubmodularFn parse_table(const json& j, std::size_t l) {
  SubmodularFn f(l);
  if (!j.is_object()) throw UsageError("rank must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    unsigned mask = 0;
    for (char c : it.key()) {
      if (c < '1' || c > '9' || static_cast<std::size_t>(c - '0') > l) throw UsageError("bad subset key " + it.key());
      mask |= 1u << (c - '1');
    }
    if (!it.value().is_number_integer()) throw UsageError("rank values must be integers");
    f[mask] = it.value().get<long long>();
  }
  return f;
}

int polymatroid_cmd(const std::string& op, const std::string& text, std::ostream& out) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
  if (!j.contains("box") || !j.contains("rank")) throw UsageError("polymatroid input needs box and rank");
  auto box = j.at("box").get<std::vector<int>>();
  SubmodularFn f = parse_table(j.at("rank"), box.size());
  if (op == "check") {
    out << (is_submodular(f) ? "submodular" : "not submodular") << "\n";
    return 0;
  }
  Polymatroid P = make_polymatroid(f, box);
  if (op == "bases") {
    out << to_string(bases(P)) << "\n";
  } else if (op == "points") {
    out << to_string(points(P)) << "\n";
  } else if (op == "dual" || op == "truncate" || op == "elongate") {
    Polymatroid Q = op == "dual" ? dual(P) : op == "truncate" ? truncate(P) : elongate(P);
    out << to_string(bases(Q)) << "\n";
  } else {
    throw UsageError("unknown polymatroid operation " + op);
  }
  return 0;
}

MPoly det_of(const PolyMatrix& m) {
  if (m.dim() <= 4) return det_cofactor(m);
  return det_kronecker(m, default_det_caps(m));
}

int dispatch(const std::string& cmd, const std::vector<std::string>& rest, const Options& o, std::ostream& out,
             Meta& meta, std::uint64_t& seed) {
  if (cmd == "polymatroid") {
    if (rest.size() != 2) throw UsageError("usage: polymatroid <bases|points|dual|truncate|elongate|check> <file>");
    meta.algorithm = "polymatroid-" + rest[0];
    return polymatroid_cmd(rest[0], read_input(rest[1]), out);
  }
  if (rest.size() != 1) throw UsageError("expected exactly one input file");
  ProblemFile p = parse_problem(read_input(rest[0]));
  RandomGrid g = grid_for(o, p);
  seed = g.seed;

  if (cmd == "chow" || cmd == "chow-ci" || cmd == "hurwitz") {
    ProjectiveVariety V = as_projective(p);
    int r = cmd == "hurwitz" && !p.dim ? static_cast<int>(V.n() - V.polys.size()) : projective_r(p, V, g);
    if (o.bounds_only) {
      print_chow_bounds(out, chow_bounds(V, r));
      meta.algorithm = "bounds";
      return 0;
    }
    ChowForm cf = cmd == "chow" ? chow_form(V, r, g) : cmd == "chow-ci" ? chow_form_ci(V, r, g.seed) : hurwitz_form(V, r, g);
    out << to_string(cf.poly) << "\n";
    meta.degrees = cf.degrees;
    meta.bitsize = cf.bitsize;
    meta.algorithm = cmd == "hurwitz" ? "hurwitz-u-resultant-discriminant" : "chow-" + cf.provenance;
    return 0;
  }
  if (cmd == "multichow") {
    MultiprojVariety V = as_multiproj(p);
    if (!p.format) throw UsageError("multichow needs a format line");
    if (o.bounds_only) {
      print_multi_bounds(out, multi_bounds(V, *p.format));
      meta.algorithm = "bounds";
      return 0;
    }
    std::string how;
    DimTable t = table_of(p, V, g, how);
    int r = p.dim ? *p.dim : t.at((1u << V.blocks.size()) - 1);
    MultiChowForm cf = multi_chow_form(V, r, *p.format, g, &t);
    out << to_string(cf.poly) << "\n";
    meta.degrees = cf.degrees;
    meta.bitsize = cf.bitsize;
    meta.algorithm = "multichow-" + cf.provenance + "-" + how;
    return 0;
  }
  if (cmd == "support" || cmd == "formats") {
    MultiprojVariety V = as_multiproj(p);
    std::string how;
    DimTable t = table_of(p, V, g, how);
    auto n = V.block_dims();
    if (cmd == "support") {
      out << to_string(support(n, t)) << "\n";
    } else {
      out << "chow " << to_string(chow_hypersurface_formats(n, t)) << "\n";
      auto mdeg = [&](const Format& a) { return multidegree(V, a, g, &t); };
      out << "hurwitz " << to_string(hurwitz_hypersurface_formats(n, t, mdeg)) << "\n";
    }
    meta.algorithm = cmd + "-" + how;
    return 0;
  }
  if (cmd == "resultant") {
    if (p.polys.empty()) throw UsageError("no polynomials");
    MacaulaySystem sys{p.polys, p.vars->block(0)};
    if (o.bounds_only) {
      out << "bezout " << [&] {
        std::string s;
        for (auto v : bezout_bounds(sys)) s += (s.empty() ? "" : " ") + std::to_string(v);
        return s;
      }() << "\n";
      meta.algorithm = "bounds";
      return 0;
    }
    ResultantOptions ro;
    ro.seed = g.seed;
    ro.retries = g.retries;
    MPoly R;
    try {
      R = resultant_dense(sys, ro);
      meta.algorithm = "macaulay";
    } catch (const DegenerateQuotient&) {
      R = gcp_resultant(sys, ro);
      meta.algorithm = "macaulay-gcp";
    }
    out << to_string(R) << "\n";
    meta.degrees = block_degrees(R);
    meta.bitsize = bitsize(R);
    return 0;
  }
  if (cmd == "det") {
    PolyMatrix m = as_matrix(p);
    MPoly D = det_of(m);
    out << to_string(D) << "\n";
    meta.degrees = block_degrees(D);
    meta.bitsize = bitsize(D);
    meta.algorithm = m.dim() <= 4 ? "cofactor" : "kronecker";
    return 0;
  }
  if (cmd == "bounds") {
    if (p.vars->block_count() > 1) {
      if (!p.format) throw UsageError("multiprojective bounds need a format line");
      print_multi_bounds(out, multi_bounds(as_multiproj(p), *p.format));
    } else {
      ProjectiveVariety V = as_projective(p);
      print_chow_bounds(out, chow_bounds(V, projective_r(p, V, g)));
    }
    meta.algorithm = "bounds";
    return 0;
  }
  throw UsageError("unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resultants, Chow forms and Hurwitz forms over the integers", "chowkit"};
  Options o;
  std::string cmd;
  std::vector<std::string> rest;
  auto* seed_opt = app.add_option("--seed", o.seed, "random seed (default 0)");
  auto* retries_opt = app.add_option("--retries", o.retries, "Monte Carlo retry budget (default 3)")->check(CLI::Range(1, 1000));
  app.add_flag("--json", o.json, "metadata as JSON on stderr");
  app.add_flag("--bounds-only", o.bounds_only, "print degree bounds instead of computing");
  app.add_option("command", cmd,
                 "chow | chow-ci | hurwitz | multichow | support | formats | resultant | det | polymatroid | bounds")
      ->required();
  app.add_option("args", rest, "input file (polymatroid: operation and JSON file)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  o.seed_given = seed_opt->count() > 0;
  o.retries_given = retries_opt->count() > 0;

  Meta meta;
  std::uint64_t seed = o.seed;
  const auto t0 = std::chrono::steady_clock::now();
  int status = 0;
  try {
    std::ostringstream buf;
    status = dispatch(cmd, rest, o, buf, meta, seed);
    out << buf.str();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  json m = {{"degrees_per_block", meta.degrees},
            {"bitsize", meta.bitsize},
            {"seed", seed},
            {"wall_ms", ms},
            {"algorithm", meta.algorithm}};
  if (o.json) {
    err << m.dump() << "\n";
  } else {
    for (auto it = m.begin(); it != m.end(); ++it) err << "# " << it.key() << ": " << it.value().dump() << "\n";
  }
  return status;
}

}  // namespace ck::cli
