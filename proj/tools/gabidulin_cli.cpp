#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gabidulin/bench.hpp"
#include "gabidulin/constructions.hpp"
#include "gabidulin/io.hpp"
#include "gabidulin/random.hpp"
#include "gabidulin/residue.hpp"
#include "gabidulin/trace.hpp"

#ifndef GABIDULIN_DATA_DIR
#define GABIDULIN_DATA_DIR "data"
#endif

using namespace gabidulin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

/// A word file is either a bare array or an object holding "received" or "codeword".
const Json& word_of(const Json& j) {
  if (j.is_array()) return j;
  if (j.contains("received")) return j.at("received");
  if (j.contains("codeword")) return j.at("codeword");
  throw UsageError("word file needs an array, \"received\" or \"codeword\"");
}

const Json& message_of(const Json& j) {
  if (j.is_array()) return j;
  if (j.contains("message")) return j.at("message");
  if (j.contains("f")) return j.at("f");
  throw UsageError("message file needs an array, \"message\" or \"f\"");
}

template <class S>
std::vector<Element<S>> minus(std::vector<Element<S>> a, const std::vector<Element<S>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// ---------------------------------------------------------------- gen-code

struct GenCodeArgs {
  int cyclotomic = 0;
  std::uint32_t finite = 0;
  int degree = 0;
  std::string field_file;
  std::int64_t theta_exp = 0;
  int k = 0;
  int n = 0;
  std::optional<std::uint64_t> seed;
  int bound = 1;
  std::string out;
};

template <class S>
Json gen_code_json(const typename Automorphism<S>::Ptr& th, const GenCodeArgs& a) {
  std::vector<Element<S>> g;
  if (a.seed) {
    if (a.n > th->m()) throw InvalidCode("n ≤ m required (n = " + std::to_string(a.n) + ", m = " + std::to_string(th->m()) + ")");
    Rng rng(*a.seed);
    g = random_independent(*th, a.n, rng, a.bound);
  } else {
    const Element<S> x = th->tower().gen(th->top());
    for (int i = 0; i < a.n; ++i) g.push_back(x.pow(i));
  }
  GabidulinCode<S> code(th, g, a.k);
  Json j = encode_code(code);
  if (a.seed) j["seed"] = *a.seed;
  return j;
}

int cmd_gen_code(const GenCodeArgs& a) {
  const int sources = (a.cyclotomic != 0) + (a.finite != 0) + !a.field_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --cyclotomic, --finite, --field");
  Json out;
  if (a.cyclotomic) {
    if (a.theta_exp == 0) throw UsageError("--cyclotomic needs --theta-exp");
    auto t = cyclotomic_tower(a.cyclotomic);
    out = gen_code_json<Rational>(power_automorphism<Rational>(t, static_cast<std::uint64_t>(a.theta_exp)), a);
  } else if (a.finite) {
    if (a.degree < 1) throw UsageError("--finite needs --degree");
    auto t = finite_tower(a.finite, a.degree);
    auto th = a.theta_exp ? power_automorphism<Fp>(t, static_cast<std::uint64_t>(a.theta_exp)) : frobenius(t);
    out = gen_code_json<Fp>(th, a);
  } else {
    if (a.theta_exp == 0) throw UsageError("--field needs --theta-exp");
    Json f = read_json(a.field_file);
    if (field_is_rational(f))
      out = gen_code_json<Rational>(power_automorphism<Rational>(parse_field<Rational>(f), a.theta_exp), a);
    else
      out = gen_code_json<Fp>(power_automorphism<Fp>(parse_field<Fp>(f), a.theta_exp), a);
  }
  write_json(a.out, out);
  return kExitOk;
}

// ------------------------------------------------------------------ encode

struct EncodeArgs {
  std::string code;
  std::string message;
  std::optional<std::uint64_t> seed;
  int bound = 1;
  std::string out;
};

template <class S>
int encode_typed(const Json& cj, const EncodeArgs& a) {
  GabidulinCode<S> code = parse_code<S>(cj);
  SkewPoly<S> f(&code.theta());
  Json out;
  if (!a.message.empty()) {
    f = parse_poly(code.theta(), message_of(read_json(a.message)));
  } else {
    Rng rng(*a.seed);
    f = random_message(code.theta(), code.k(), rng, a.bound);
    out["seed"] = *a.seed;
  }
  out["message"] = encode_poly(f);
  out["codeword"] = encode_elements(encode(code, f));
  write_json(a.out, out);
  return kExitOk;
}

int cmd_encode(const EncodeArgs& a) {
  if (a.message.empty() == !a.seed) throw UsageError("give exactly one of --message and --seed");
  Json cj = read_json(a.code);
  return field_is_rational(cj.at("field")) ? encode_typed<Rational>(cj, a) : encode_typed<Fp>(cj, a);
}

// ----------------------------------------------------------------- corrupt

struct CorruptArgs {
  std::string code;
  std::string word;
  int rank = 0;
  std::uint64_t seed = 0;
  int bound = 1;
  std::string model = "none";
  int row_erasures = 0;
  int col_erasures = 0;
  std::string erasures_out;
  std::string out;
};

template <class S>
int corrupt_typed(const Json& cj, const CorruptArgs& a) {
  GabidulinCode<S> code = parse_code<S>(cj);
  const auto& th = code.theta();
  auto c = parse_elements(code.tower(), th.top(), word_of(read_json(a.word)));
  if (static_cast<int>(c.size()) != code.n()) throw UsageError("word length does not match the code");
  if (a.rank < 0 || a.rank > std::min(code.n(), th.m())) throw UsageError("--rank out of range");
  Rng rng(a.seed);
  auto e = random_rank_vector(th, code.n(), a.rank, rng, a.bound);
  std::vector<Element<S>> y = c;
  for (int j = 0; j < code.n(); ++j) y[j] += e[j];
  Json out{{"seed", a.seed}, {"rank", a.rank}, {"error", encode_elements(e)}};
  const auto basis = power_basis(code.tower());
  if (a.model == "line") {
    Json p = encode_line_pattern(random_line_erasures(y, basis, a.row_erasures, a.col_erasures, rng));
    p["model"] = "line";
    write_json(a.erasures_out, p);
  } else if (a.model == "network") {
    auto nc = random_network_erasures(th, y, basis, a.row_erasures, a.col_erasures, rng);
    y = nc.y;
    Json p = encode_network_pattern(nc.pattern);
    p["model"] = "network";
    write_json(a.erasures_out, p);
  }
  out["received"] = encode_elements(y);
  write_json(a.out, out);
  return kExitOk;
}

int cmd_corrupt(const CorruptArgs& a) {
  if (a.model != "none" && a.erasures_out.empty()) throw UsageError("erasure models need --erasures-out");
  if (a.model == "none" && (a.row_erasures || a.col_erasures)) throw UsageError("erasure counts need --model");
  if (a.model != "none" && a.erasures_out == a.out) throw UsageError("--erasures-out must differ from --out");
  Json cj = read_json(a.code);
  return field_is_rational(cj.at("field")) ? corrupt_typed<Rational>(cj, a) : corrupt_typed<Fp>(cj, a);
}

// ------------------------------------------------------------------ decode

struct DecodeArgs {
  std::string code;
  std::string word;
  std::string method = "wb";
  std::string erasures;
  std::string model;
  std::string mod_prime;
  std::string lift_alphabet;
  std::string lift;
  long bound = -1;
  bool trace = false;
  std::string trace_out;
  std::string out;
};

struct Erasures {
  std::string model;  // "", "line" or "network"
  Json pattern;
};

Erasures load_erasures(const DecodeArgs& a) {
  Erasures er;
  if (a.erasures.empty()) {
    if (!a.model.empty()) throw UsageError("--model needs --erasures");
    return er;
  }
  er.pattern = read_json(a.erasures);
  std::string declared = er.pattern.value("model", std::string());
  er.model = a.model.empty() ? declared : a.model;
  if (er.model != "line" && er.model != "network") throw UsageError("erasure model must be line or network");
  if (!declared.empty() && declared != er.model) throw UsageError("--model disagrees with the erasure file");
  return er;
}

void emit_trace(const DecodeArgs& a, const std::string& text) {
  if (!a.trace) return;
  if (a.trace_out.empty())
    std::cerr << text;
  else
    write_text(a.trace_out, text);
}

/// Decodes in the field of the code itself.
template <class S>
int decode_direct(const GabidulinCode<S>& code, const DecodeArgs& a, DecodeMethod method, const Erasures& er) {
  const int top = code.theta().top();
  std::optional<std::vector<Element<S>>> y;
  if (!a.word.empty()) y = parse_elements(code.tower(), top, word_of(read_json(a.word)));
  if (y && static_cast<int>(y->size()) != code.n()) throw UsageError("word length does not match the code");
  if (!y && er.model != "line") throw UsageError("--word is required unless the line model supplies the matrix");
  WbTrace<S> wb;
  ErasureTrace<S> et;
  WbOptions<S> opt;
  opt.variant = method == DecodeMethod::gauss ? WbVariant::standard : variant_of(method);
  if (a.trace) opt.trace = &wb;
  std::optional<SkewPoly<S>> f;
  const auto basis = power_basis(code.tower());
  if (er.model == "line") {
    f = decode_line_erasures(code, basis, parse_line_pattern(code.tower(), er.pattern), method, opt, &et);
  } else if (er.model == "network") {
    f = decode_network_erasures(code, basis, *y, parse_network_pattern(code.tower(), er.pattern), method, opt, &et);
  } else {
    auto r = decode(code, *y, method, opt);
    if (r) f = r->f;
  }
  if (a.trace) {
    std::vector<std::string> lines;
    if (er.model != "line") lines.push_back("y = " + format_elements(*y));
    if (!er.model.empty()) append_erasure_trace(lines, et);
    append_wb_trace(lines, wb);
    append_result(lines, wb);
    if (f && !er.model.empty()) lines.push_back("F = " + et.F.to_string());
    lines.push_back(f ? "f = " + f->to_string() : "fail");
    emit_trace(a, join_lines(lines));
  }
  Json out{{"method", to_string(method)}};
  if (!f) {
    out["status"] = "fail";
    write_json(a.out, out);
    return kExitFail;
  }
  out["status"] = "ok";
  out["f"] = encode_poly(*f);
  if (y) out["e"] = encode_elements(minus(*y, encode(code, *f)));
  write_json(a.out, out);
  return kExitOk;
}

std::vector<long> parse_alphabet(const std::string& s) {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --lift-alphabet entry '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError("empty --lift-alphabet");
  return v;
}

/// Decodes modulo an inert prime and lifts the message back.
int decode_residue(const GabidulinCode<Rational>& code, const DecodeArgs& a, DecodeMethod method,
                   const Erasures& er) {
  std::uint32_t q = 0;
  if (a.mod_prime == "auto") {
    q = find_inert_prime(code.tower());
  } else {
    try {
      q = static_cast<std::uint32_t>(std::stoul(a.mod_prime));
    } catch (const std::exception&) {
      throw UsageError("--mod-prime takes a prime or 'auto'");
    }
  }
  if (a.lift_alphabet.empty() == a.lift.empty()) throw UsageError("give exactly one of --lift-alphabet and --lift");
  if (!a.lift.empty() && (a.lift != "centered" || a.bound < 0))
    throw UsageError("--lift accepts 'centered' together with --bound");
  auto ctx = make_residue_context(code.theta_ptr(), q);
  const Lifter lifter = a.lift.empty() ? Lifter::alphabet(parse_alphabet(a.lift_alphabet), q)
                                       : Lifter::centered(a.bound, q);
  const int top = code.theta().top();
  std::vector<Element<Rational>> y;
  if (!a.word.empty()) y = parse_elements(code.tower(), top, word_of(read_json(a.word)));
  else if (er.model != "line") throw UsageError("--word is required unless the line model supplies the matrix");
  if (!a.word.empty() && static_cast<int>(y.size()) != code.n())
    throw UsageError("word length does not match the code");
  ResidueJob job;
  job.method = method;
  if (er.model == "line") job.line = parse_line_pattern(code.tower(), er.pattern);
  if (er.model == "network") job.network = parse_network_pattern(code.tower(), er.pattern);
  std::optional<SkewPoly<Rational>> f;
  Json out{{"method", to_string(method)}, {"mod_prime", q}};
  try {
    if (a.trace) {
      std::string text;
      f = residue_decode_traced(code, y, ctx, lifter, job, text);
      emit_trace(a, text);
    } else {
      f = residue_decode_and_lift(code, y, ctx, lifter, job);
    }
  } catch (const ReductionError& ex) {
    out["reason"] = ex.what();
  }
  if (!f) {
    out["status"] = "fail";
    write_json(a.out, out);
    return kExitFail;
  }
  out["status"] = "ok";
  out["f"] = encode_poly(*f);
  if (!a.word.empty()) out["e"] = encode_elements(minus(y, encode(code, *f)));
  write_json(a.out, out);
  return kExitOk;
}

int cmd_decode(const DecodeArgs& a) {
  DecodeMethod method;
  try {
    method = parse_method(a.method);
  } catch (const std::exception&) {
    throw UsageError("unknown method '" + a.method + "'");
  }
  if (a.trace && method == DecodeMethod::gauss) throw UsageError("--trace needs a reconstruction method");
  if (!a.trace_out.empty() && !a.trace) throw UsageError("--trace-out needs --trace");
  const Erasures er = load_erasures(a);
  Json cj = read_json(a.code);
  if (field_is_rational(cj.at("field"))) {
    GabidulinCode<Rational> code = parse_code<Rational>(cj);
    if (!a.mod_prime.empty()) return decode_residue(code, a, method, er);
    if (!a.lift_alphabet.empty() || !a.lift.empty()) throw UsageError("lifting options need --mod-prime");
    return decode_direct(code, a, method, er);
  }
  if (!a.mod_prime.empty()) throw UsageError("--mod-prime applies to codes over Q only");
  return decode_direct(parse_code<Fp>(cj), a, method, er);
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::string rows;
  std::string sizes;
  int repeats = 5;
  std::string mode = "both";
  double timeout = 60.0;
  std::uint64_t seed = 1;
  std::string direct_method = "wb-df";
  std::string csv;
};

std::vector<std::pair<int, int>> parse_sizes(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("sizes are written n:k");
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "'");
    }
  }
  return out;
}

int cmd_bench(const BenchArgs& a) {
  BenchConfig c;
  if (!a.rows.empty() && !a.sizes.empty()) throw UsageError("give one of --rows and --sizes");
  if (a.rows == "paper" || (a.rows.empty() && a.sizes.empty()))
    c.sizes = reference_sizes();
  else if (!a.rows.empty())
    throw UsageError("--rows accepts 'paper'");
  else
    c.sizes = parse_sizes(a.sizes);
  for (auto [n, k] : c.sizes) {
    field_for_length(n);
    if (k < 1 || k > n) throw UsageError("k must lie in [1, n]");
  }
  if (a.repeats < 0) throw UsageError("--repeats must be non-negative");
  if (a.mode != "direct" && a.mode != "residue" && a.mode != "both") throw UsageError("--mode is direct|residue|both");
  c.repeats = a.repeats;
  c.direct = a.mode != "residue";
  c.residue = a.mode != "direct";
  c.timeout_s = a.timeout;
  c.seed = a.seed;
  c.direct_method = parse_method(a.direct_method);
  auto rows = run_bench(c);
  std::string table = "field and inert prime per length\n";
  for (const auto& f : reference_fields())
    table += "  n = " + std::to_string(f.n) + ": Phi_" + std::to_string(f.p) + " (degree " + std::to_string(f.p - 1) +
             "), q = " + std::to_string(f.prime) + "\n";
  table += "\n" + bench_table(rows);
  bool recovered = true;
  for (const auto& r : rows) recovered = recovered && r.all_recovered;
  if (a.csv.empty()) {
    std::cout << table << bench_csv(rows);
  } else {
    std::cout << table;
    write_text(a.csv, bench_csv(rows));
  }
  if (!recovered) std::cerr << "warning: some benchmark decodings did not recover the message\n";
  return recovered ? kExitOk : kExitFail;
}

// -------------------------------------------------------------------- demo

struct DemoArgs {
  std::string job = std::string(GABIDULIN_DATA_DIR) + "/golden/cyclotomic7_network_job.json";
  std::string golden = std::string(GABIDULIN_DATA_DIR) + "/golden/cyclotomic7_network_trace.txt";
};

int cmd_demo(const DemoArgs& a) {
  Json job = read_json(a.job);
  GabidulinCode<Rational> code = parse_code<Rational>(job.at("code"));
  auto y = parse_elements(code.tower(), code.theta().top(), job.at("received"));
  const auto q = job.at("mod_prime").get<std::uint32_t>();
  auto ctx = make_residue_context(code.theta_ptr(), q);
  ResidueJob rj;
  rj.network = parse_network_pattern(code.tower(), job.at("erasures"));
  std::string text;
  auto f = residue_decode_traced(code, y, ctx, Lifter::alphabet(job.at("lift_alphabet").get<std::vector<long>>(), q),
                                 rj, text);
  std::cout << text;
  const std::string golden = read_text(a.golden);
  if (text == golden && f && *f == parse_poly(code.theta(), job.at("expected_f"))) {
    std::cout << "golden trace: match\n";
    return kExitOk;
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return lines;
  };
  const auto got = split(text), want = split(golden);
  for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
    const std::string lg = i < got.size() ? got[i] : "", lw = i < want.size() ? want[i] : "";
    if (lg != lw) std::cout << "line " << i + 1 << ":\n  expected: " << lw << "\n  got:      " << lg << "\n";
  }
  std::cout << "golden trace: MISMATCH\n";
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Gabidulin codes: construction, encoding, corruption and decoding"};
  app.require_subcommand(1);

  GenCodeArgs gen;
  auto* g = app.add_subcommand("gen-code", "Write a code description");
  g->add_option("--cyclotomic", gen.cyclotomic, "Prime p: field Q(zeta_p)");
  g->add_option("--finite", gen.finite, "Prime p: field F_p^m");
  g->add_option("--degree", gen.degree, "Degree m for --finite");
  g->add_option("--field", gen.field_file, "Field description file");
  g->add_option("--theta-exp", gen.theta_exp, "theta maps the generator a to a^r (default Frobenius for --finite)");
  g->add_option("--k", gen.k, "Dimension")->required();
  g->add_option("--n", gen.n, "Length")->required();
  g->add_option("--seed", gen.seed, "Draw a random support from this seed");
  g->add_option("--bound", gen.bound, "Coordinate bound of random elements over Q");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  EncodeArgs enc;
  auto* e = app.add_subcommand("encode", "Encode a message");
  e->add_option("--code", enc.code)->required();
  e->add_option("--message", enc.message, "Message file");
  e->add_option("--seed", enc.seed, "Encode a random message drawn from this seed");
  e->add_option("--bound", enc.bound, "Coordinate bound of random elements over Q");
  e->add_option("--out", enc.out);

  CorruptArgs cor;
  auto* c = app.add_subcommand("corrupt", "Add a rank error and optional erasures");
  c->add_option("--code", cor.code)->required();
  c->add_option("--word", cor.word)->required();
  c->add_option("--rank", cor.rank, "Rank of the added error");
  c->add_option("--seed", cor.seed)->required();
  c->add_option("--bound", cor.bound, "Coordinate bound of random elements over Q");
  c->add_option("--model", cor.model, "Erasure model")->check(CLI::IsMember({"none", "line", "network"}));
  c->add_option("--row-erasures", cor.row_erasures);
  c->add_option("--col-erasures", cor.col_erasures);
  c->add_option("--erasures-out", cor.erasures_out, "Erasure pattern file");
  c->add_option("--out", cor.out);

  DecodeArgs dec;
  auto* d = app.add_subcommand("decode", "Decode a received word");
  d->add_option("--code", dec.code)->required();
  d->add_option("--word", dec.word, "Received word file");
  d->add_option("--method", dec.method, "gauss|wb|wb-df|wb-lowdeg");
  d->add_option("--erasures", dec.erasures, "Erasure pattern file");
  d->add_option("--model", dec.model, "line|network");
  d->add_option("--mod-prime", dec.mod_prime, "Decode modulo this inert prime, or 'auto'");
  d->add_option("--lift-alphabet", dec.lift_alphabet, "Admissible integer coordinates, e.g. 0,1");
  d->add_option("--lift", dec.lift, "centered");
  d->add_option("--bound", dec.bound, "Bound for centered lifting");
  d->add_flag("--trace", dec.trace, "Print the reconstruction rounds");
  d->add_option("--trace-out", dec.trace_out, "Trace file (default stderr)");
  d->add_option("--out", dec.out);

  BenchArgs ben;
  auto* b = app.add_subcommand("bench", "Time decoding over the number field and modulo an inert prime");
  b->add_option("--rows", ben.rows, "paper");
  b->add_option("--sizes", ben.sizes, "Comma separated n:k pairs");
  b->add_option("--repeats", ben.repeats);
  b->add_option("--mode", ben.mode, "direct|residue|both");
  b->add_option("--timeout", ben.timeout, "Seconds per cell");
  b->add_option("--seed", ben.seed);
  b->add_option("--direct-method", ben.direct_method);
  b->add_option("--csv", ben.csv, "CSV output file (default stdout after the tables)");

  DemoArgs dem;
  auto* m = app.add_subcommand("demo", "Decode the bundled network erasure example modulo 3 and compare its trace");
  m->add_option("--job", dem.job);
  m->add_option("--golden", dem.golden);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return cmd_gen_code(gen);
    if (*e) return cmd_encode(enc);
    if (*c) return cmd_corrupt(cor);
    if (*d) return cmd_decode(dec);
    if (*b) return cmd_bench(ben);
    if (*m) return cmd_demo(dem);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
