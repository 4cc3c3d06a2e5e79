#include "k3lat/catalog.hpp"
#include "k3lat/error.hpp"
#include "k3lat/expr.hpp"
#include "k3lat/families.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/lefschetz.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace k3lat;

namespace {

// Exit codes: 0 computed (even when the mathematical verdict is negative),
// 1 usage error, 2 computation/domain error.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDomain = 2;

struct Output {
  bool as_json = false;

  void emit(const json& payload, const std::string& plain) const {
    if (as_json)
      std::cout << payload.dump(2) << "\n";
    else
      std::cout << plain;
  }
};

json lattice_info_json(const Lattice& l) {
  json j;
  j["expr"] = l.name_expr();
  j["rank"] = l.rank();
  auto sig = l.signature();
  j["signature"] = {sig.first, sig.second};
  j["det"] = int_str(l.det());
  DiscriminantGroup g = discriminant_group(l);
  json factors = json::array();
  for (const Int& d : g.invariant_factors) factors.push_back(int_str(d));
  j["invariant_factors"] = factors;
  j["length"] = g.invariant_factors.size();

  // p-elementary data
  json pel;
  bool elementary = !g.invariant_factors.empty();
  for (const Int& d : g.invariant_factors)
    if (d != g.invariant_factors.front()) elementary = false;
  if (elementary && is_prime(g.invariant_factors.front())) {
    pel["p"] = int_str(g.invariant_factors.front());
    pel["a"] = g.invariant_factors.size();
    if (g.invariant_factors.front() == 2) {
      PElementaryInvariants inv = two_elementary_invariants(l);
      pel["delta"] = *inv.delta;
    }
    j["p_elementary"] = pel;
  } else if (g.invariant_factors.empty()) {
    j["p_elementary"] = {{"unimodular", true}};
  } else {
    j["p_elementary"] = nullptr;
  }
  return j;
}

std::string lattice_info_plain(const json& j) {
  std::ostringstream os;
  os << "expr:              " << j["expr"].get<std::string>() << "\n";
  os << "rank:              " << j["rank"] << "\n";
  os << "signature:         (" << j["signature"][0] << "," << j["signature"][1] << ")\n";
  os << "det:               " << j["det"].get<std::string>() << "\n";
  os << "invariant factors: ";
  if (j["invariant_factors"].empty()) os << "(trivial)";
  for (const auto& d : j["invariant_factors"]) os << d.get<std::string>() << " ";
  os << "\n";
  if (j["p_elementary"].is_object() && j["p_elementary"].contains("p")) {
    os << "p-elementary:      p=" << j["p_elementary"]["p"].get<std::string>()
       << " a=" << j["p_elementary"]["a"];
    if (j["p_elementary"].contains("delta")) os << " delta=" << j["p_elementary"]["delta"];
    os << "\n";
  }
  return os.str();
}

json verdict_json(const EmbeddingVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  if (v.witness)
    j["witness"] = *v.witness;
  else
    j["witness"] = nullptr;
  return j;
}

json solutions_json(const std::vector<Solution>& sols) {
  json arr = json::array();
  for (const auto& s : sols) {
    json o;
    for (const auto& [k, v] : s) o[k] = v;
    arr.push_back(o);
  }
  return arr;
}

int run_info(const std::string& expr_src, const Output& out) {
  Lattice l = make_named(expr_src);
  json j;
  j["verb"] = "info";
  json info = lattice_info_json(l);
  for (auto& [k, v] : info.items()) j[k] = v;
  out.emit(j, lattice_info_plain(info));
  return kOk;
}

int run_embed(const std::string& s_src, const std::string& w_src, const Output& out) {
  Expr se = parse_expr(s_src);
  Expr we = parse_expr(w_src);
  Lattice s = eval_expr(se);
  Lattice w = eval_expr(we);

  json tests;
  EmbeddingVerdict direct{EmbedStatus::Inconclusive, "not an expression over catalog blocks", std::nullopt};
  try {
    direct = direct_summand_embedding(se, we);
  } catch (const Error& e) {
    if (e.code() != "NotExpression") throw;
  }
  tests["direct_summand"] = verdict_json(direct);

  EmbeddingVerdict length = primitive_embedding_length_obstruction(LatticeInvariants::of(s),
                                                                   LatticeInvariants::of(w));
  tests["length_obstruction"] = verdict_json(length);

  if (s.is_unimodular()) {
    SplitOffResult split = split_off_unimodular(s, w);
    json sj;
    sj["complement_rank"] = split.complement.rank;
    sj["complement_signature"] = {split.complement.sig->first, split.complement.sig->second};
    json cf = json::array();
    for (const Int& d : split.complement.invariant_factors) cf.push_back(int_str(d));
    sj["complement_factors"] = cf;
    sj["existence"] = to_string(split.existence);
    sj["reason"] = split.reason;
    tests["split_off_unimodular"] = sj;
  } else {
    tests["split_off_unimodular"] = nullptr;
  }

  const char* overall = "Inconclusive";
  if (direct.status == EmbedStatus::EmbeddedByConstruction)
    overall = "EmbeddedByConstruction";
  else if (length.status == EmbedStatus::Obstructed)
    overall = "Obstructed";
  else if (s.is_unimodular() && tests["split_off_unimodular"]["existence"] == "No")
    overall = "Obstructed";

  json j;
  j["verb"] = "embed";
  j["S"] = s_src;
  j["W"] = w_src;
  j["tests"] = tests;
  j["verdict"] = overall;

  std::ostringstream os;
  os << "S = " << s_src << "\nW = " << w_src << "\n";
  os << "direct summand:     " << tests["direct_summand"]["status"].get<std::string>() << " ("
     << tests["direct_summand"]["reason"].get<std::string>() << ")\n";
  os << "length obstruction: " << tests["length_obstruction"]["status"].get<std::string>() << " ("
     << tests["length_obstruction"]["reason"].get<std::string>() << ")\n";
  if (!tests["split_off_unimodular"].is_null())
    os << "split off:          " << tests["split_off_unimodular"]["existence"].get<std::string>()
       << " (" << tests["split_off_unimodular"]["reason"].get<std::string>() << ")\n";
  os << "verdict:            " << overall << "\n";
  out.emit(j, os.str());
  return kOk;
}

int run_overlattices(const std::string& expr_src, long index, const Output& out) {
  Lattice l = make_named(expr_src);
  std::vector<Lattice> ws = overlattices(l, Int(index));
  json j;
  j["verb"] = "overlattices";
  j["expr"] = expr_src;
  j["index"] = index;
  j["count"] = ws.size();
  json arr = json::array();
  for (const Lattice& w : ws) {
    json o;
    json gram = json::array();
    for (std::size_t i = 0; i < w.gram().rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < w.gram().cols(); ++c)
        row.push_back(static_cast<long>(w.gram().at(i, c).convert_to<long long>()));
      gram.push_back(row);
    }
    o["gram"] = gram;
    o["det"] = int_str(w.det());
    json factors = json::array();
    for (const Int& d : discriminant_group(w).invariant_factors) factors.push_back(int_str(d));
    o["invariant_factors"] = factors;
    arr.push_back(o);
  }
  j["overlattices"] = arr;

  std::ostringstream os;
  os << "even overlattices of index " << index << ": " << ws.size() << "\n";
  for (const Lattice& w : ws) {
    os << "  det " << w.det() << ", factors";
    for (const Int& d : discriminant_group(w).invariant_factors) os << " " << d;
    os << "\n";
  }
  out.emit(j, os.str());
  return kOk;
}

int run_involution(long r, long a, long delta, const Output& out) {
  InvolutionInvariants inv{r, a, static_cast<int>(delta)};
  bool admits = admits_symplectic_involution(inv);
  FixedLocusP2 fl = involution_invariants_to_fixed_locus(inv);
  json j;
  j["verb"] = "involution";
  j["r"] = r;
  j["a"] = a;
  j["delta"] = delta;
  j["admits_symplectic"] = admits;
  json flj;
  flj["kind"] = fl.kind == FixedLocusP2::Kind::Empty        ? "empty"
                : fl.kind == FixedLocusP2::Kind::TwoElliptic ? "two_elliptic"
                                                             : "curves";
  flj["k"] = fl.k;
  flj["g"] = fl.g;
  j["fixed_locus"] = flj;

  std::ostringstream os;
  os << "(r,a,delta) = (" << r << "," << a << "," << delta << ")\n";
  os << "admits symplectic involution: " << (admits ? "yes" : "no") << "\n";
  os << "fixed locus: " << flj["kind"].get<std::string>() << ", k=" << fl.k << ", g=" << fl.g
     << "\n";
  out.emit(j, os.str());
  return kOk;
}

int run_order3(long n, long k, const Output& out) {
  bool admits = admits_symplectic_order3({n, k});
  json j;
  j["verb"] = "order3";
  j["n"] = n;
  j["k"] = k;
  j["admits_symplectic"] = admits;
  std::ostringstream os;
  os << "fixed locus (" << n << "," << k << ")\n";
  os << "admits symplectic automorphism of order 3: " << (admits ? "yes" : "no") << "\n";
  out.emit(j, os.str());
  return kOk;
}

std::vector<long> parse_types(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stol(item));
  }
  return out;
}

int run_lefschetz(long order, const std::string& types_csv, const std::string& h_str,
                  const std::string& h_range_str, long bound, const std::string& convention,
                  const Output& out) {
  FixedLocusHypothesis hyp;
  hyp.m = order;
  hyp.unknown_types = parse_types(types_csv);
  if (!h_range_str.empty()) {
    auto parts = parse_types(h_range_str);
    if (parts.size() != 2) throw Error("BadHypothesis", "--h-range wants LO,HI");
    hyp.h = std::make_pair(parts[0], parts[1]);
  } else {
    hyp.h = h_str.empty() ? 0L : std::stol(h_str);
  }
  PointConvention conv =
      convention == "fraction" ? PointConvention::Fraction : PointConvention::Matrix;

  LefschetzSystem sys = build_system(hyp, conv);
  std::vector<Solution> sols = solve_nonneg(sys, bound);

  json j;
  j["verb"] = "lefschetz";
  j["m"] = order;
  json ts = json::array();
  for (long t : hyp.unknown_types) ts.push_back(t);
  j["types"] = ts;
  if (hyp.h_is_free()) {
    auto r = std::get<std::pair<long, long>>(hyp.h);
    j["h"] = {{"range", {r.first, r.second}}};
  } else {
    j["h"] = std::get<long>(hyp.h);
  }
  j["convention"] = convention.empty() ? "matrix" : convention;
  j["equations"] = sys.a.rows();
  j["solution_count"] = sols.size();
  j["solutions"] = solutions_json(sols);

  std::ostringstream os;
  os << "order " << order << ", " << sys.a.rows() << " equations, " << sys.unknowns.size()
     << " unknowns\n";
  os << "nonnegative integer solutions in the box: " << sols.size() << "\n";
  for (const auto& s : sols) {
    os << "  {";
    bool first = true;
    for (const auto& [kk, v] : s) {
      if (!first) os << ", ";
      os << kk << "=" << v;
      first = false;
    }
    os << "}\n";
  }
  out.emit(j, os.str());
  return kOk;
}

int run_lefschetz_fixture(const std::string& which, const std::string& data_dir, long bound,
                          const Output& out) {
  if (which != "m14" && which != "m22")
    throw Error("UnknownFixture", "fixtures available: m14, m22");
  PrintedSystem sys = load_printed_system(data_dir + "/lefschetz_" + which + ".json");
  std::vector<Solution> sols = solve_printed(sys, bound);
  json j;
  j["verb"] = "lefschetz-fixture";
  j["which"] = which;
  j["order"] = sys.order;
  j["unknowns"] = sys.unknowns;
  j["equations"] = sys.rows.size();
  j["solution_count"] = sols.size();
  j["solutions"] = solutions_json(sols);

  std::ostringstream os;
  os << "fixture " << which << ": " << sys.rows.size() << " equations over";
  for (const auto& u : sys.unknowns) os << " " << u;
  os << "\nnonnegative integer solutions: " << sols.size() << "\n";
  out.emit(j, os.str());
  return kOk;
}

json tablerank_row_json(const TableRankRow& row) {
  json j;
  j["m"] = row.m;
  if (row.bounds_form) {
    j["rho_min"] = row.rho_min;
    j["rankT_max"] = row.rank_t_max;
    j["moduli_max"] = row.moduli_max;
  } else {
    j["rho"] = row.rho;
    j["rankT"] = row.rank_t;
    j["moduli"] = row.moduli;
  }
  return j;
}

std::string tablerank_row_plain(const TableRankRow& row) {
  std::ostringstream os;
  os << row.m << "  ";
  auto list = [&](const std::vector<long>& v) {
    if (v.empty()) {
      os << "-";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << v[i];
    }
  };
  if (row.bounds_form) {
    os << ">=" << row.rho_min << "  <=" << row.rank_t_max << "  <=" << row.moduli_max;
  } else {
    list(row.rho);
    os << "  ";
    list(row.rank_t);
    os << "  ";
    list(row.moduli);
  }
  os << "\n";
  return os.str();
}

int run_table_rank(long m, bool have_m, const Output& out) {
  if (have_m) {
    TableRankRow row = tablerank_row(m);
    json j = tablerank_row_json(row);
    j["verb"] = "table-rank";
    out.emit(j, std::string("m  rank(NS)  rank(T)  moduli\n") + tablerank_row_plain(row));
    return kOk;
  }
  json j;
  j["verb"] = "table-rank";
  json rows = json::array();
  std::string plain = "m  rank(NS)  rank(T)  moduli\n";
  for (long mm = 2; mm <= 8; ++mm) {
    TableRankRow row = tablerank_row(mm);
    rows.push_back(tablerank_row_json(row));
    plain += tablerank_row_plain(row);
  }
  j["rows"] = rows;
  out.emit(j, plain);
  return kOk;
}

int run_family(long order, const std::string& key, const std::string& data_dir,
               const Output& out) {
  Registry reg = Registry::load(data_dir + "/registry.json");
  const FamilyDescriptor& fd = reg.lookup(order, key);
  json j;
  j["verb"] = "family";
  j["order"] = order;
  j["fixed"] = key;
  j["descriptor"] = fd.record;

  std::ostringstream os;
  os << "family: " << fd.record.value("name", key) << "\n";
  os << "  rank NS = " << fd.record["ns_rank"] << ", rank T = " << fd.record["t_rank"]
     << ", moduli = " << fd.record["moduli"] << "\n";
  if (fd.record.contains("ns_expr") && fd.record["ns_expr"].is_string())
    os << "  NS = " << fd.record["ns_expr"].get<std::string>() << "\n";
  if (fd.record.contains("t_expr") && fd.record["t_expr"].is_string())
    os << "  T  = " << fd.record["t_expr"].get<std::string>() << "\n";
  if (fd.record["admits_symplectic_same_order"].is_boolean())
    os << "  admits symplectic automorphism of the same order: "
       << (fd.record["admits_symplectic_same_order"].get<bool>() ? "yes" : "no") << "\n";
  out.emit(j, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice and fixed-point computations for K3 automorphism families"};
  app.set_help_flag("--help", "print help");  // keep --h free for the curve term
  app.require_subcommand(1);

  Output out;
  std::string data_flag;
  app.add_flag("--json", out.as_json, "machine-readable JSON output");
  app.add_option("--data", data_flag, "data directory (overrides K3LAT_DATA)");

  // info EXPR
  auto* info = app.add_subcommand("info", "rank, signature, determinant and discriminant data");
  std::vector<std::string> info_expr;
  info->add_option("expr", info_expr, "lattice expression")->required()->expected(-1);

  // embed S W
  auto* embed = app.add_subcommand("embed", "primitive-embedding tests S -> W");
  std::string embed_s, embed_w;
  embed->add_option("S", embed_s, "sublattice expression")->required();
  embed->add_option("W", embed_w, "ambient expression")->required();

  // overlattices EXPR --index N
  auto* over = app.add_subcommand("overlattices", "even overlattices of a given index");
  std::vector<std::string> over_expr;
  long over_index = 2;
  over->add_option("expr", over_expr, "lattice expression")->required()->expected(-1);
  over->add_option("--index", over_index, "index of the overlattice")->required();

  // involution classify R A DELTA
  auto* invo = app.add_subcommand("involution", "non-symplectic involution classifiers");
  auto* invo_classify = invo->add_subcommand("classify", "same-order coexistence from (r,a,delta)");
  long invo_r = 0, invo_a = 0, invo_d = 0;
  invo_classify->add_option("r", invo_r)->required();
  invo_classify->add_option("a", invo_a)->required();
  invo_classify->add_option("delta", invo_d)->required();
  invo->require_subcommand(1);

  // order3 classify N K
  auto* ord3 = app.add_subcommand("order3", "order-3 classifiers");
  auto* ord3_classify = ord3->add_subcommand("classify", "same-order coexistence from (n,k)");
  long o3_n = 0, o3_k = 0;
  ord3_classify->add_option("n", o3_n)->required();
  ord3_classify->add_option("k", o3_k)->required();
  ord3->require_subcommand(1);

  // lefschetz [--order ...] | lefschetz fixture WHICH
  auto* lef = app.add_subcommand("lefschetz", "holomorphic fixed-point systems");
  long lef_order = 0;
  std::string lef_types, lef_h, lef_hrange, lef_conv = "matrix";
  long lef_bound = 24;
  lef->add_option("--order", lef_order, "automorphism order m");
  lef->add_option("--types", lef_types, "comma-separated isolated types with free multiplicity");
  lef->add_option("--h", lef_h, "fixed curve term h");
  lef->add_option("--h-range", lef_hrange, "LO,HI range for a free h");
  lef->add_option("--bound", lef_bound, "enumeration box bound (default 24)");
  lef->add_option("--convention", lef_conv, "matrix | fraction")
      ->check(CLI::IsMember({"matrix", "fraction"}));
  auto* lef_fixture = lef->add_subcommand("fixture", "solve a stored verbatim system");
  std::string fixture_which;
  lef_fixture->add_option("which", fixture_which, "m14 or m22")->required();

  // table rank [--m M]
  auto* table = app.add_subcommand("table", "rank/moduli tables");
  auto* table_rank = table->add_subcommand("rank", "possible rank NS / rank T / moduli");
  long table_m = 0;
  auto* table_m_opt = table_rank->add_option("--m", table_m, "single order 2..8");
  table->require_subcommand(1);

  // family --order M --fixed KEY
  auto* family = app.add_subcommand("family", "registry lookup");
  long family_order = 0;
  std::string family_key;
  family->add_option("--order", family_order, "automorphism order")->required();
  family->add_option("--fixed", family_key, "fixed-locus key")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += " ";
      s += parts[i];
    }
    return s;
  };

  try {
    std::string data_dir = resolve_data_dir(data_flag);
    if (*info) return run_info(join(info_expr), out);
    if (*embed) return run_embed(embed_s, embed_w, out);
    if (*over) return run_overlattices(join(over_expr), over_index, out);
    if (*invo) return run_involution(invo_r, invo_a, invo_d, out);
    if (*ord3) return run_order3(o3_n, o3_k, out);
    if (*lef) {
      if (*lef_fixture) return run_lefschetz_fixture(fixture_which, data_dir, lef_bound, out);
      if (lef_order < 2) throw CLI::ValidationError("lefschetz", "--order is required");
      return run_lefschetz(lef_order, lef_types, lef_h, lef_hrange, lef_bound, lef_conv, out);
    }
    if (*table) return run_table_rank(table_m, table_m_opt->count() > 0, out);
    if (*family) return run_family(family_order, family_key, data_dir, out);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    if (e.position() >= 0) err["error"]["position"] = e.position();
    if (out.as_json)
      std::cout << err.dump(2) << "\n";
    else
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
