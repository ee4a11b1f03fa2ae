#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "shortbasis/shortbasis.hpp"

namespace shortbasis::cli {

namespace {

using nlohmann::ordered_json;

// Raised for bad user input; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// String-valued flags of one subcommand, parsed lazily into integers.
class Flags {
 public:
  void add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, values_[name], help);
  }
  bool has(const std::string& name) const {
    auto it = values_.find(name);
    return it != values_.end() && !it->second.empty();
  }
  const std::string& text(const std::string& name) const {
    if (!has(name)) throw UsageError("missing required flag --" + name);
    return values_.at(name);
  }
  Int integer(const std::string& name) const {
    try {
      return parse_int(text(name));
    } catch (const MathError&) {
      throw UsageError("--" + name + " expects a decimal integer, got '" + text(name) + "'");
    }
  }
  Int integer_or(const std::string& name, const Int& fallback) const {
    return has(name) ? integer(name) : fallback;
  }
  int unit(const std::string& name) const {
    const Int v = integer(name);
    if (v != 1 && v != -1) throw UsageError("--" + name + " must be 1 or -1");
    return static_cast<int>(v);
  }
  // Rejects flags that were given but mean nothing for the chosen scheme.
  void only(const std::set<std::string>& allowed, const std::string& scheme) const {
    for (const auto& [name, value] : values_) {
      if (!value.empty() && !allowed.contains(name)) {
        throw UsageError("flag --" + name + " is not used by scheme " + scheme);
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
};

std::vector<Int> parse_csv(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_int(item));
    } catch (const MathError&) {
      throw UsageError("bad integer '" + item + "' in list");
    }
  }
  return out;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixed(double value, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

double to_double(const Int& v) { return v.convert_to<double>(); }
double to_double(const Rat& v) { return to_double(v.num()) / to_double(v.den()); }

QuadraticGenerator phi_from(const Flags& f) {
  return {f.integer("tphi"), f.integer("nphi")};
}

// --- basis -------------------------------------------------------------------

SchemeDescriptor scheme_from_flags(const std::string& scheme, const Flags& f) {
  if (scheme == "glv") {
    if (f.has("curve")) {
      f.only({"scheme", "curve", "p", "a"}, scheme);
      const Int p = f.integer("p");
      std::mt19937_64 rng(0x61);
      const std::string id = f.text("curve");
      const CurveInstance curve = catalog_curve(id, Field::prime(p), f.integer_or("a", 1));
      const Endomorphism phi = catalog_endo(id, curve);
      const OrderInclusion inc = recover_frobenius(curve, phi, rng);
      return GlvScheme{p, id, inc.b, inc.c, phi.char_poly()};
    }
    f.only({"scheme", "p", "b", "c", "tphi", "nphi"}, scheme);
    return GlvScheme{f.integer_or("p", 0), "", f.integer("b"), f.integer("c"), phi_from(f)};
  }
  if (scheme == "gls") {
    f.only({"scheme", "p", "t0"}, scheme);
    return GlsScheme{f.integer("p"), f.integer("t0")};
  }
  if (scheme == "qcurve") {
    f.only({"scheme", "p", "d", "eps", "r"}, scheme);
    return QCurveScheme{f.integer("p"), f.integer("d"), f.unit("eps"), f.integer("r")};
  }
  if (scheme == "glvgls") {
    f.only({"scheme", "p", "t0", "tphi", "nphi", "b", "c"}, scheme);
    const Int p = f.integer("p");
    const Int t0 = f.integer("t0");
    const QuadraticGenerator phi = phi_from(f);
    OrderInclusion inc;
    if (f.has("b") || f.has("c")) {
      inc = {f.integer("b"), f.integer("c")};
    } else {
      inc = glvgls_inclusion(p, t0, phi);
    }
    return GlvGlsScheme{p, t0, inc.b, inc.c, phi};
  }
  if (scheme == "gi") {
    f.only({"scheme", "b", "c", "tphi", "nphi", "d", "sign"}, scheme);
    return GiScheme{f.integer("b"), f.integer("c"), phi_from(f), f.integer("d"), f.unit("sign")};
  }
  if (scheme == "g2rm") {
    f.only({"scheme", "q", "b", "c", "tphi", "nphi", "s", "npi"}, scheme);
    const QuadraticGenerator phi = phi_from(f);
    const Int b = f.integer("b");
    const Int c = f.integer("c");
    const QuadraticGenerator rm = image_generator({b, c}, phi);
    return G2rmScheme{f.integer("q"), f.integer_or("s", rm.trace), f.integer_or("npi", rm.norm),
                      b, c, phi};
  }
  throw UsageError("unknown scheme '" + scheme + "'");
}

int cmd_basis(const std::string& scheme, const Flags& f, std::ostream& out) {
  const Basis basis = build_basis(scheme_from_flags(scheme, f));
  out << basis_to_json(basis) << "\n";
  return kExitOk;
}

// --- decompose / reduce / shrink -------------------------------------------

BasisDocument load_document(const Flags& f) { return parse_basis_json(read_text(f.text("basis"))); }

DecompositionProblem problem_for(const Flags& f, const BasisDocument& doc) {
  if (!f.has("modulus") && !f.has("eigenvalues") && doc.problem) return *doc.problem;
  const Int N = f.integer("modulus");
  std::vector<Int> eigen = parse_csv(f.text("eigenvalues"));
  if (eigen.size() + 1 != doc.basis.dimension()) {
    throw UsageError("need " + std::to_string(doc.basis.dimension() - 1) + " eigenvalues for a " +
                     std::to_string(doc.basis.dimension()) + "-dimensional basis");
  }
  return DecompositionProblem(N, std::move(eigen));
}

int cmd_decompose(const Flags& f, std::ostream& out) {
  const BasisDocument doc = load_document(f);
  const DecompositionProblem problem = problem_for(f, doc);
  if (!rows_in_lattice(doc.basis, problem)) {
    throw UsageError("basis rows are not in the lattice of the given modulus and eigenvalues");
  }
  const Decomposition d = babai_decompose(doc.basis, problem, f.integer("m"));
  ordered_json arr = ordered_json::array();
  for (const Int& a : d.coefficients) arr.push_back(to_decimal(a));
  out << arr.dump() << "\n";
  return kExitOk;
}

int cmd_reduce(const Flags& f, std::ostream& out) {
  const BasisDocument doc = load_document(f);
  out << basis_to_json(gauss_reduce(doc.basis), doc.problem) << "\n";
  return kExitOk;
}

int cmd_shrink(const Flags& f, std::ostream& out) {
  const BasisDocument doc = load_document(f);
  const DecompositionProblem problem = problem_for(f, doc);
  out << basis_to_json(shrink_to_fit(doc.basis, problem), problem) << "\n";
  return kExitOk;
}

int cmd_count(const Flags& f, std::ostream& out) {
  const Field F = Field::prime(f.integer("p"));
  const CurveInstance curve(F, F.from_int(f.integer("a4")), F.from_int(f.integer("a6")));
  out << to_decimal(naive_count(curve)) << "\n";
  return kExitOk;
}

// --- verify --------------------------------------------------------------------

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << "\n";
    failed_ = failed_ || !ok;
  }
  void note(const std::string& text) { out_ << "NOTE " << text << "\n"; }
  int exit_code() const { return failed_ ? kExitVerifyFailed : kExitOk; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

void verify_decompositions(Report& report, const Basis& basis,
                           const DecompositionProblem& problem, int samples,
                           std::mt19937_64& rng) {
  const Int bound = basis.dimension() * basis.rows.max_abs_entry();
  bool congruent = true;
  bool bounded = true;
  for (int i = 0; i < samples; ++i) {
    const Int m = random_below(rng, problem.modulus());
    const Decomposition d = babai_decompose(basis, problem, m);
    congruent = congruent && problem.evaluate(d.coefficients) == m;
    bounded = bounded && 2 * d.max_abs() <= bound;
  }
  const std::string n = "N=" + to_decimal(problem.modulus());
  report.check("decomposition congruence (" + n + ")", congruent);
  report.check("Babai bound |a|_inf <= (r/2) max|b_i|_inf (" + n + ")", bounded);
}

void verify_lattice(Report& report, const Basis& basis, const DecompositionProblem& problem,
                    int samples, std::mt19937_64& rng) {
  const std::string n = "N=" + to_decimal(problem.modulus());
  report.check("rows in lattice (" + n + ")", rows_in_lattice(basis, problem));
  if (basis.dimension() == 2) {
    const Basis shrunk = shrink_to_fit(basis, problem);
    report.check("shrink to |det| = N (" + n + ")",
                 abs(basis_det(shrunk)) == problem.modulus() && rows_in_lattice(shrunk, problem));
    report.check("HNF of shrunk basis equals HNF of long basis (" + n + ")",
                 same_lattice(shrunk, long_basis(problem)));
    verify_decompositions(report, shrunk, problem, samples, rng);
  } else {
    verify_decompositions(report, basis, problem, samples, rng);
  }
}

void verify_curve(Report& report, const CurveBackedInstance& ci, int samples,
                  std::mt19937_64& rng) {
  const CurveInstance& E = ci.curve;
  const LatticeInstance& L = ci.lattice;
  for (std::size_t i = 0; i < ci.endos.size(); ++i) {
    report.check("endomorphism " + std::to_string(i + 1) + " satisfies its polynomial",
                 check_char_poly(E, ci.endos[i], rng, std::max(samples, 20)));
  }
  bool order_ok = true;
  for (int i = 0; i < 20; ++i) order_ok = order_ok && E.scalar_mul(L.group_order, E.random_point(rng)).infinity;
  report.check("[|det|]R = infinity on random points", order_ok);
  report.check("|det| equals the group order",
               abs(basis_det(L.basis)) == L.group_order);
  verify_lattice(report, L.basis, L.problem, samples, rng);
  const Basis basis = L.basis.dimension() == 2 ? shrink_to_fit(L.basis, L.problem) : L.basis;
  bool mul_ok = true;
  for (int i = 0; i < samples; ++i) {
    const Int m = random_below(rng, L.problem.modulus());
    mul_ok = mul_ok && decomposed_mul(E, m, ci.point, basis, L.problem, ci.endos) ==
                           E.scalar_mul(m, ci.point);
  }
  report.check("decomposed_mul equals scalar_mul", mul_ok);
}

CurveInstance gls_base_curve(const Flags& f, const Field& F) {
  if (f.has("a4") || f.has("a6")) {
    return CurveInstance(F, F.from_int(f.integer("a4")), F.from_int(f.integer("a6")));
  }
  const Int t0 = f.integer("t0");
  const Int p = F.characteristic();
  if (p >= 4096) throw UsageError("give --a4/--a6 explicitly for p >= 4096");
  for (Int a4 = 0; a4 < p; ++a4) {
    for (Int a6 = 0; a6 < p; ++a6) {
      if (4 * a4 * a4 * a4 + 27 * a6 * a6 == 0) continue;
      try {
        const CurveInstance E(F, F.from_int(a4), F.from_int(a6));
        if (p + 1 - naive_count(E) == t0) return E;
      } catch (const MathError&) {
      }
    }
  }
  throw UsageError("no curve over F_" + to_decimal(p) + " has trace " + to_decimal(t0));
}

int cmd_verify(const std::string& scheme, const Flags& f, int samples, std::uint64_t seed,
               std::ostream& out) {
  std::mt19937_64 rng(seed);
  Report report(out);
  const auto curve_backed = [&](std::optional<CurveBackedInstance> ci) {
    if (!ci) throw UsageError("the group order has no usable prime subgroup (N < 3 or N^2 | #E)");
    report.note("N = " + to_decimal(ci->lattice.problem.modulus()) + ", cofactor " +
                to_decimal(ci->cofactor));
    verify_curve(report, *ci, samples, rng);
  };
  if (scheme == "glv") {
    f.only({"scheme", "curve", "p", "a"}, scheme);
    const Int p = f.integer("p");
    auto ci = glv_curve_instance(f.text("curve"), p, rng, f.integer_or("a", 1));
    if (ci && p < (Int(1) << 26)) {
      report.check("|det ec2d_basis| equals naive point count",
                   ci->lattice.group_order == naive_count(ci->curve));
    }
    curve_backed(std::move(ci));
  } else if (scheme == "gls") {
    f.only({"scheme", "p", "t0", "a4", "a6"}, scheme);
    const CurveInstance base = gls_base_curve(f, Field::prime(f.integer("p")));
    auto ci = gls_curve_instance(base, rng);
    if (ci) {
      const auto& gls = std::get<GlsScheme>(ci->lattice.scheme);
      if (f.has("t0")) report.check("base curve trace equals --t0", gls.t0 == f.integer("t0"));
      report.note("base curve y^2 = x^3 + " + to_decimal(base.a4().c0) + "x + " +
                  to_decimal(base.a6().c0) + ", t0 = " + to_decimal(gls.t0));
      const Basis B = ci->lattice.basis;
      report.check("rows orthogonal", dot(B.rows.row(0), B.rows.row(1)) == 0);
      bool psi_sq = true;
      for (int i = 0; i < 20; ++i) {
        const Point P = ci->curve.random_point(rng);
        psi_sq = psi_sq && ci->curve.add(ci->endos[0](ci->endos[0](P)), P).infinity;
      }
      report.check("psi^2 = -1 on random points", psi_sq);
    }
    curve_backed(std::move(ci));
  } else if (scheme == "glvgls") {
    f.only({"scheme", "p", "a"}, scheme);
    curve_backed(glvgls_curve_instance(f.integer("p"), f.integer_or("a", 1), rng));
  } else if (scheme == "qcurve" || scheme == "gi" || scheme == "g2rm") {
    const SchemeDescriptor desc = scheme_from_flags(scheme, f);
    const Basis basis = build_basis(desc);
    const Int det = abs(basis_det(basis));
    std::function<std::optional<std::vector<Int>>(const Int&)> eigen;
    if (const auto* q = std::get_if<QCurveScheme>(&desc)) {
      const Int tE = qcurve_trace(q->p, q->d, q->eps, q->r_param);
      report.check("|det| = p^2 + 1 - t_E", det == q->p * q->p + 1 - tE);
      eigen = [q](const Int& N) -> std::optional<std::vector<Int>> {
        if ((q->r_param * q->d) % N == 0) return std::nullopt;
        const Int l = floor_mod((1 + q->eps * q->p) * mod_inv(q->r_param, N), N);
        return std::vector<Int>{l};
      };
    } else if (const auto* g = std::get_if<GiScheme>(&desc)) {
      report.check("|det| = |Norm(psi^2 - sign*d)|", det == abs(gi_norm(g->b, g->c, g->phi, g->d, g->sign)));
      eigen = [g](const Int& N) -> std::optional<std::vector<Int>> {
        if (g->c % N == 0) return std::nullopt;
        return four_dim_eigenvalues(g->b, g->c, g->phi, g->sign * g->d, N);
      };
    } else {
      const auto& rm = std::get<G2rmScheme>(desc);
      report.check("|det| = (q+1)^2 - s(q+1) + n_pi", det == g2_cardinality(rm.q, rm.s, rm.n_pi));
      eigen = [rm](const Int& N) -> std::optional<std::vector<Int>> {
        if (rm.c % N == 0) return std::nullopt;
        return std::vector<Int>{transfer_eigenvalue({rm.b, rm.c}, rm.q + 1, N)};
      };
    }
    int tested = 0;
    std::vector<std::pair<Int, unsigned>> primes = factor(det);
    std::sort(primes.rbegin(), primes.rend());
    for (const auto& [N, e] : primes) {
      if (N < 3 || tested == 3) continue;
      if (auto l = eigen(N)) {
        verify_lattice(report, basis, DecompositionProblem(N, std::move(*l)), samples, rng);
        ++tested;
      }
    }
    if (tested == 0) report.note("no admissible prime N divides |det|; only identities checked");
  } else {
    throw UsageError("unknown scheme '" + scheme + "'");
  }
  return report.exit_code();
}

// --- bench ---------------------------------------------------------------------

struct TrialResult {
  std::vector<std::size_t> coefficient_bits;
  std::size_t basis_bits = 0;
  std::optional<double> csq;
  std::optional<double> trivial;
};

std::optional<double> trivial_bits(const Int& q, const Int& tE, const QuadraticGenerator& phi) {
  try {
    const TrivialBound t = bound_trivial(q, tE, phi);
    const double c = to_double(t.c_abs);
    const double b = to_double(t.b_bound);
    return std::log2(std::max({c, b, 1.0}));
  } catch (const MathError&) {
    return std::nullopt;
  }
}

Int random_prime_with(std::mt19937_64& rng, unsigned bits, const std::function<bool(const Int&)>& ok) {
  for (;;) {
    const Int p = random_prime(rng, Int(1) << (bits - 1), (Int(1) << bits) - 1);
    if (ok(p)) return p;
  }
}

TrialResult bench_trial(const std::string& scheme, const Flags& f, unsigned bits,
                        std::mt19937_64& rng) {
  LatticeInstance L = [&]() -> LatticeInstance {
    if (scheme == "gls") return random_gls_lattice(rng, bits);
    if (scheme == "qcurve") return random_qcurve_lattice(rng, bits);
    if (scheme == "gi") return random_gi_lattice(rng, bits);
    if (scheme == "g2rm") return random_g2rm_lattice(rng, bits);
    if (scheme == "glv") {
      const std::string id = f.has("curve") ? f.text("curve") : "j1728";
      const Int D = catalog_entry(id).needed_square;
      for (;;) {
        const Int p = random_prime_with(rng, bits, [&](const Int& p) { return legendre(D, p) == 1; });
        if (auto ci = glv_curve_instance(id, p, rng)) return ci->lattice;
      }
    }
    if (scheme == "glvgls") {
      if (bits > 25) throw UsageError("glvgls bench needs --bits <= 25 (naive point count)");
      for (;;) {
        const Int p = random_prime_with(rng, bits, [](const Int& p) { return p % 4 == 1; });
        if (auto ci = glvgls_curve_instance(p, 1, rng)) return ci->lattice;
      }
    }
    throw UsageError("unknown scheme '" + scheme + "'");
  }();

  TrialResult result;
  const Basis basis = L.basis.dimension() == 2 ? shrink_to_fit(L.basis, L.problem) : L.basis;
  result.basis_bits = norm_bits(basis);
  for (int i = 0; i < 16; ++i) {
    const Int m = random_below(rng, L.problem.modulus());
    result.coefficient_bits.push_back(babai_decompose(basis, L.problem, m).max_bits());
  }
  try {
    result.csq = to_double(bound_csq(L.problem.modulus(), L.phi));
  } catch (const MathError&) {
  }
  if (const auto* g = std::get_if<GlvScheme>(&L.scheme)) {
    result.trivial = trivial_bits(g->p, 2 * g->b + g->c * g->phi.trace, g->phi);
  } else if (const auto* g = std::get_if<GlsScheme>(&L.scheme)) {
    result.trivial = trivial_bits(g->p * g->p, 2 * g->p - g->t0 * g->t0, {g->t0, g->p});
  } else if (const auto* g = std::get_if<QCurveScheme>(&L.scheme)) {
    result.trivial = trivial_bits(g->p * g->p, qcurve_trace(g->p, g->d, g->eps, g->r_param), L.phi);
  } else if (const auto* g = std::get_if<GlvGlsScheme>(&L.scheme)) {
    result.trivial = trivial_bits(g->p * g->p, 2 * g->p - g->t0 * g->t0, g->phi);
  }
  return result;
}

int cmd_bench(const std::string& scheme, const Flags& f, unsigned bits, int trials,
              std::uint64_t seed, std::ostream& out) {
  if (bits < 8 || bits > 256) throw UsageError("--bits must be in [8, 256]");
  if (trials < 1) throw UsageError("--trials must be positive");
  std::mt19937_64 rng(seed);
  std::vector<TrialResult> results;
  for (int t = 0; t < trials; ++t) results.push_back(bench_trial(scheme, f, bits, rng));

  double sum = 0;
  std::size_t count = 0, max_bits = 0, max_basis = 0;
  std::optional<double> csq_sum, trivial_sum;
  int csq_count = 0, trivial_count = 0;
  for (const TrialResult& r : results) {
    for (std::size_t b : r.coefficient_bits) {
      sum += static_cast<double>(b);
      max_bits = std::max(max_bits, b);
      ++count;
    }
    max_basis = std::max(max_basis, r.basis_bits);
    if (r.csq) {
      csq_sum = csq_sum.value_or(0) + *r.csq;
      ++csq_count;
    }
    if (r.trivial) {
      trivial_sum = trivial_sum.value_or(0) + *r.trivial;
      ++trivial_count;
    }
  }
  // Bounds are averaged over the trials where the formula applies.
  const auto mean = [&](const std::optional<double>& s, int n) {
    return s ? ordered_json(fixed(*s / n)) : ordered_json();
  };
  ordered_json doc;
  doc["scheme"] = scheme;
  doc["bits"] = std::to_string(bits);
  doc["trials"] = std::to_string(trials);
  doc["mean_coefficient_bits"] = fixed(sum / static_cast<double>(count));
  doc["max_coefficient_bits"] = std::to_string(max_bits);
  doc["max_basis_bits"] = std::to_string(max_basis);
  doc["bound_csq"] = mean(csq_sum, csq_count);
  doc["bound_trivial"] = mean(trivial_sum, trivial_count);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short lattice bases for endomorphism scalar decomposition", "shortbasis"};
  app.require_subcommand(1);

  static const std::vector<std::pair<std::string, std::string>> kSchemeFlags{
      {"p", "field characteristic"},
      {"q", "field size (genus 2)"},
      {"t0", "Frobenius trace of the GLS base curve"},
      {"curve", "catalog curve id (j1728, j0, j-3375, j8000, j32768, j54000)"},
      {"a", "parameter of the j1728 / j0 catalog curves"},
      {"b", "inclusion constant b"},
      {"c", "inclusion constant c"},
      {"tphi", "trace of phi"},
      {"nphi", "norm of phi"},
      {"d", "Q-curve degree / GI parameter"},
      {"eps", "Q-curve sign (+1 or -1)"},
      {"r", "Q-curve integer r"},
      {"sign", "GI sign (+1 or -1)"},
      {"s", "trace of pi + pi^ (genus 2)"},
      {"npi", "norm of pi + pi^ (genus 2)"}};

  std::string scheme;
  Flags basis_flags, decompose_flags, verify_flags, reduce_flags, shrink_flags, count_flags,
      bench_flags;
  int samples = 50;
  int trials = 10;
  unsigned bits = 64;
  std::uint64_t seed = 1;

  auto* basis = app.add_subcommand("basis", "print a ready-made basis as JSON");
  basis->add_option("--scheme", scheme, "glv|gls|qcurve|glvgls|gi|g2rm")->required();
  for (const auto& [name, help] : kSchemeFlags) basis_flags.add(basis, name, help);

  auto* decompose = app.add_subcommand("decompose", "Babai-decompose a scalar");
  for (const char* name : {"basis", "modulus", "eigenvalues", "m"}) {
    decompose_flags.add(decompose, name, name);
  }

  auto* verify = app.add_subcommand("verify", "run the property suite of a scheme instance");
  verify->add_option("--scheme", scheme, "glv|gls|qcurve|glvgls|gi|g2rm")->required();
  verify->add_option("--samples", samples, "random scalars per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  for (const auto& [name, help] : kSchemeFlags) verify_flags.add(verify, name, help);
  verify_flags.add(verify, "a4", "GLS base curve coefficient a4");
  verify_flags.add(verify, "a6", "GLS base curve coefficient a6");

  auto* reduce = app.add_subcommand("reduce", "Gauss-reduce a 2-dimensional basis");
  reduce_flags.add(reduce, "basis", "basis JSON path or -");

  auto* shrink = app.add_subcommand("shrink", "shrink a basis to index 1");
  for (const char* name : {"basis", "modulus", "eigenvalues"}) shrink_flags.add(shrink, name, name);

  auto* count = app.add_subcommand("count", "naive point count of y^2 = x^3 + a4 x + a6");
  for (const char* name : {"p", "a4", "a6"}) count_flags.add(count, name, name);

  auto* bench = app.add_subcommand("bench", "decomposition statistics against both bounds");
  bench->add_option("--scheme", scheme, "glv|gls|qcurve|glvgls|gi|g2rm")->required();
  bench->add_option("--bits", bits, "bitlength of p (or q)");
  bench->add_option("--trials", trials, "number of random instances");
  bench->add_option("--seed", seed, "random seed");
  bench_flags.add(bench, "curve", "catalog curve for --scheme glv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (basis->parsed()) return cmd_basis(scheme, basis_flags, out);
    if (decompose->parsed()) return cmd_decompose(decompose_flags, out);
    if (verify->parsed()) return cmd_verify(scheme, verify_flags, samples, seed, out);
    if (reduce->parsed()) return cmd_reduce(reduce_flags, out);
    if (shrink->parsed()) return cmd_shrink(shrink_flags, out);
    if (count->parsed()) return cmd_count(count_flags, out);
    if (bench->parsed()) return cmd_bench(scheme, bench_flags, bits, trials, seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace shortbasis::cli
