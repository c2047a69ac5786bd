// Command-line front end: ideal constructions, dimension/degree reports,
// Hadamard decompositions and the generic-rank table. Identical command and
// seed give byte-identical output.

#include <fstream>
#include <map>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minkhad/decompose.hpp"
#include "minkhad/hrank.hpp"
#include "minkhad/parse.hpp"
#include "minkhad/variety.hpp"

namespace {

using namespace minkhad;

FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q") return FieldSpec::q();
  if (s.rfind("fp:", 0) == 0) return FieldSpec::fp(std::stoull(s.substr(3)));
  throw CLI::ValidationError("--field", "expected q or fp:<prime>");
}

MonomialOrder parse_order_flag(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::Grevlex();
  if (s == "lex") return MonomialOrder::Lex();
  throw CLI::ValidationError("--order", "expected lex or grevlex");
}

VarietyIdeal load_ideal(const std::string& path, FieldSpec field, MonomialOrder order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file: " + path);
  IdealFileData data = read_ideal_file(in, order);
  std::vector<Polynomial> gens;
  for (auto& g : data.gens) gens.push_back(change_field(g, field));
  RingPtr ring = gens.empty() ? Ring::make(data.ring->names, field) : gens[0].ring();
  return data.projective ? VarietyIdeal::projective(data.n, ring, std::move(gens))
                         : VarietyIdeal::affine(data.n, ring, std::move(gens));
}

void print_ideal(const VarietyIdeal& v) {
  IdealFileData out{v.space == Space::projective, v.ambient, v.ring,
                    buchberger(v.gens, MonomialOrder::Grevlex()).elements};
  write_ideal_file(std::cout, out);
}

void note_probabilistic(FieldSpec f) {
  if (!f.rational())
    std::cout << "# probabilistic certificate: computed over F_" << f.p << "\n";
}

/// Seeded generic dilation scale from {2, ..., 10^6}.
Scalar generic_alpha(std::uint64_t seed, FieldSpec f) {
  Rng rng(mix_seed(seed, 0xa1fa));
  return Scalar::of(static_cast<std::int64_t>(rng.in_range(2, 1000000)), f);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    std::size_t n = std::stoul(s);
    return {n, n};
  }
  return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
}

int run(int argc, char** argv) {
  CLI::App app{"Minkowski sums, Hadamard products and decompositions of varieties and matrices"};
  app.require_subcommand(1);

  std::string field_flag;  // per-command default
  std::string order_flag = "grevlex";
  std::string x_path, y_path, ideal_path, matrix_text, range_text = "3..9", out_csv;
  std::uint64_t seed = 0;
  std::size_t trials = 3, m_flag = 0, n_flag = 0, r_flag = 0;
  bool want_deg = false, want_dim = false, csv = false;

  // One shared flag variable per option; each subcommand's field default is
  // resolved after parsing (fp:32003 for ideal computations, q otherwise).
  std::map<const CLI::App*, std::string> field_defaults;
  auto add_common = [&](CLI::App* c, const std::string& field_default) {
    field_defaults[c] = field_default;
    c->add_option("--field", field_flag, "coefficient field: q or fp:<prime>");
    c->add_option("--order", order_flag, "term order: lex or grevlex");
    c->add_option("--seed", seed, "RNG seed");
  };
  auto add_xy = [&](CLI::App* c) {
    c->add_option("--x", x_path, "first ideal file")->required();
    c->add_option("--y", y_path, "second ideal file")->required();
  };
  auto add_reports = [&](CLI::App* c) {
    c->add_flag("--deg", want_deg, "also print the degree");
    c->add_flag("--dim", want_dim, "also print the dimension");
  };

  auto* c_sum = app.add_subcommand("sum", "Minkowski sum of two affine ideals");
  add_common(c_sum, "fp:32003");
  add_xy(c_sum);
  add_reports(c_sum);

  auto* c_had = app.add_subcommand("hadamard", "Hadamard product of two affine ideals");
  add_common(c_had, "fp:32003");
  add_xy(c_had);
  add_reports(c_had);

  auto* c_hadp = app.add_subcommand("hadamard-proj", "Hadamard product of two projective ideals");
  add_common(c_hadp, "fp:32003");
  add_xy(c_hadp);
  add_reports(c_hadp);

  auto* c_join = app.add_subcommand("join", "join of two projective ideals");
  add_common(c_join, "fp:32003");
  add_xy(c_join);
  add_reports(c_join);

  auto* c_cayley = app.add_subcommand(
      "cayley-degree", "degree of the join of the lifted pair vs the dilated Minkowski sum");
  add_common(c_cayley, "fp:32003");
  add_xy(c_cayley);

  auto* c_dim = app.add_subcommand("dim", "dimension of the variety of an ideal file");
  add_common(c_dim, "fp:32003");
  c_dim->add_option("--ideal", ideal_path, "ideal file")->required();

  auto* c_deg = app.add_subcommand("deg", "degree of the variety of an ideal file");
  add_common(c_deg, "fp:32003");
  c_deg->add_option("--ideal", ideal_path, "ideal file")->required();

  auto* c_inf = app.add_subcommand("disjoint-at-infinity",
                                   "whether two affine ideals have disjoint points at infinity");
  add_common(c_inf, "fp:32003");
  add_xy(c_inf);

  auto* c_dec = app.add_subcommand("decompose", "Hadamard decomposition into rank-<=r factors");
  add_common(c_dec, "q");
  c_dec->add_option("--matrix", matrix_text, "matrix literal a,b;c,d")->required();
  c_dec->add_option("--r", r_flag, "rank cap")->required();

  auto* c_table = app.add_subcommand("hrank-table", "generic Hadamard ranks of n x n matrices");
  add_common(c_table, "fp:32003");
  c_table->add_option("--n", range_text, "size range lo..hi")->default_val("3..9");
  c_table->add_option("--trials", trials, "Monte Carlo trials per candidate")->default_val(3);
  c_table->add_flag("--csv", csv, "CSV instead of aligned text");

  auto* c_exp = app.add_subcommand("expected-rank", "dimension-count generic Hadamard rank");
  c_exp->add_option("--m", m_flag, "rows")->required();
  c_exp->add_option("--n", n_flag, "columns")->required();
  c_exp->add_option("--r", r_flag, "rank cap")->required();

  auto* c_bounds = app.add_subcommand("bounds", "bounds on the generic Hadamard rank");
  c_bounds->add_option("--m", m_flag, "rows")->required();
  c_bounds->add_option("--n", n_flag, "columns")->required();
  c_bounds->add_option("--r", r_flag, "rank cap")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage text
    return 2;
  }

  if (field_flag.empty()) {
    CLI::App* active = app.get_subcommands().front();
    auto it = field_defaults.find(active);
    field_flag = it == field_defaults.end() ? "q" : it->second;
  }
  FieldSpec field = parse_field_flag(field_flag);
  MonomialOrder order = parse_order_flag(order_flag);
  (void)order;  // ideals are loaded and printed in grevlex; --order picks the parse order

  auto report = [&](const VarietyIdeal& v) {
    note_probabilistic(field);
    print_ideal(v);
    if (want_dim) std::cout << "dimension: " << dimension(v) << "\n";
    if (want_deg) std::cout << "degree: " << degree(v) << "\n";
  };

  if (*c_sum) {
    report(minkowski_sum(load_ideal(x_path, field, order), load_ideal(y_path, field, order)));
  } else if (*c_had) {
    report(hadamard_affine(load_ideal(x_path, field, order), load_ideal(y_path, field, order)));
  } else if (*c_hadp) {
    report(
        hadamard_projective(load_ideal(x_path, field, order), load_ideal(y_path, field, order)));
  } else if (*c_join) {
    report(join(load_ideal(x_path, field, order), load_ideal(y_path, field, order)));
  } else if (*c_cayley) {
    VarietyIdeal x = load_ideal(x_path, field, order);
    VarietyIdeal y = load_ideal(y_path, field, order);
    note_probabilistic(field);
    auto [lx, ly] = cayley_lift(x, y, Scalar::zero(field), Scalar::one(field));
    std::cout << "join degree: " << degree(join(lx, ly)) << "\n";
    Scalar alpha = generic_alpha(seed, field);
    std::cout << "alpha: " << alpha.str() << "\n";
    std::cout << "dilated sum degree: " << degree(minkowski_sum(dilate(x, alpha), y)) << "\n";
  } else if (*c_dim) {
    VarietyIdeal v = load_ideal(ideal_path, field, order);
    note_probabilistic(field);
    std::cout << "dimension: " << dimension(v) << "\n";
  } else if (*c_deg) {
    VarietyIdeal v = load_ideal(ideal_path, field, order);
    note_probabilistic(field);
    std::cout << "degree: " << degree(v) << "\n";
  } else if (*c_inf) {
    VarietyIdeal x = load_ideal(x_path, field, order);
    VarietyIdeal y = load_ideal(y_path, field, order);
    note_probabilistic(field);
    std::cout << (disjoint_at_infinity(x, y) ? "true" : "false") << "\n";
  } else if (*c_dec) {
    Matrix m = parse_matrix(matrix_text, field);
    HadamardDecomposition d = (m.rows() == 3 && r_flag == 2) ? decompose_two_factors_3xn(m)
                                                             : decompose_blocks(m, r_flag);
    if (!valid_decomposition(d)) throw std::runtime_error("internal error: invalid decomposition");
    std::cout << "factors: " << d.factors.size() << "\n";
    for (auto& f : d.factors) std::cout << f.str() << "\n";
  } else if (*c_table) {
    auto [lo, hi] = parse_range(range_text);
    note_probabilistic(field);
    auto rows = rank_table(lo, hi, trials, seed, field);
    std::cout << (csv ? rank_table_csv(rows) : rank_table_text(rows));
  } else if (*c_exp) {
    std::cout << "expected rank: " << expected_generic_rank(m_flag, n_flag, r_flag) << "\n";
  } else if (*c_bounds) {
    HrankBounds b = hrank_bounds(m_flag, n_flag, r_flag);
    std::cout << "lower: " << b.lower << "\nupper: " << b.upper << "\n";
    if (b.exact) std::cout << "exact: " << *b.exact << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
